from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from axialpc import reference as ref
from axialpc.errors import NotEnumerated, Singular, UnsupportedCharacteristic
from axialpc.linalg import ExactMatrix
from axialpc.matgroup import (
    CATALOG,
    bfs_closure,
    bounded_infinite_probe,
    catalog_matches,
    derived_analysis,
    psl3_order,
    psu3_order,
)
from axialpc.pc_core import miyamoto, subalgebra_table, universal_table, specialize_table
from axialpc.repro import point_table, taus
from axialpc.scalars import PrimeField

from oracles import load

Q = Fraction
F5 = PrimeField(5)


def dihedral_generators():
    sub = subalgebra_table(universal_table(), [0, 1, 3])
    sub = specialize_table(sub, {"alpha": Q(-1, 8), "beta": Q(0), "gamma": Q(0), "psi": Q(0)}, check=False)
    return [miyamoto(sub, sub["a"]), miyamoto(sub, sub["b"])]


def f5_generators(point):
    return taus(point_table(point, F5))


def test_dihedral_group():
    r = bfs_closure(dihedral_generators())
    assert r.order == 6
    assert "D3" in r.catalog
    assert derived_analysis(r) == (False, True, 2)


def test_single_identity_generator():
    r = bfs_closure([ExactMatrix.identity(3)])
    assert r.order == 1


def test_psl27_over_f5():
    r = bfs_closure(f5_generators((3, 3, 4, 4)))
    assert r.order == 168 == load()["group_f5"]["PSL(2,7)"]
    assert r.perfect and not r.solvable and r.center_order == 1
    assert r.catalog == ["PSL(2,7)"]
    assert derived_analysis(r)[:2] == (True, False)
    assert sum(r.order_histogram.values()) == 168


@pytest.mark.parametrize("name", ["A6", "A7"])
def test_engine_against_plain_bfs(name):
    r = bfs_closure(f5_generators(ref.CHAR5_ROWS[[row[1] for row in ref.CHAR5_ROWS].index(name)][0]))
    assert r.order == load()["group_f5"][name]
    assert name in r.catalog


def test_five_to_the_five_by_s5():
    r = bfs_closure(f5_generators((3, 0, 4, 4)))
    assert r.order == 375000
    assert "5^5:S5" in r.catalog


def test_errors():
    with pytest.raises(Singular):
        bfs_closure([ExactMatrix([[Q(1), Q(2)], [Q(2), Q(4)]])])
    r = bfs_closure(f5_generators((3, 3, 1, 0)), 1000)
    assert r.exceeded and r.order is None and r.solvable is None
    with pytest.raises(NotEnumerated):
        derived_analysis(r)
    with pytest.raises(UnsupportedCharacteristic):
        bounded_infinite_probe(f5_generators((3, 3, 4, 4)))


def test_psl27_over_rationals_completes():
    gens = taus(point_table(ref.PSL27_POINT))
    r = bounded_infinite_probe(gens, 20_000)
    assert not r.exceeded and r.order == 168 == load()["group_psl27_q"]


def test_plane_motion_group_exceeds():
    r = bounded_infinite_probe(taus(point_table([Q(-1, 8)] * 3 + [Q(0)])), 20_000)
    assert r.exceeded
    assert r.layers == sorted(r.layers)


def test_catalog_constants():
    orders = {e.name: e.order for e in CATALOG}
    assert orders["A6"] == 360 and orders["A7"] == 2520 and orders["PSL(2,7)"] == 168
    assert orders["PSL(3,5)"] == 372000 and orders["PSU(3,5)"] == 126000
    assert orders["5^5:A5"] == 187500 and orders["5^5:S5"] == 375000
    assert orders["5^2:(5^2:(SL(2,5):2))"] == 150000
    assert psl3_order(7) == 1876896 and psu3_order(7) == 5663616
    assert catalog_matches(360, False, True, 1) == ["A6"]


def _random_pairs(arr, rng, count):
    i = rng.integers(0, arr.shape[0], count)
    j = rng.integers(0, arr.shape[0], count)
    return arr[i], arr[j]


@pytest.mark.parametrize("point", [(3, 3, 4, 4), (3, 3, 1, 1), (3, 4, 1, 1)])
def test_completed_closures_are_groups(point):
    r = bfs_closure(f5_generators(point), analyze=False)
    arr, p = r.element_array(), r.modulus
    rng = np.random.default_rng(0)
    x, y = _random_pairs(arr, rng, 1000)
    prod = np.mod(np.matmul(x.astype(np.int64), y.astype(np.int64)), p).astype(arr.dtype)
    assert r.contains_array(prod).all()
    inv = np.stack([np.array(ExactMatrix([[F5(int(v)) for v in row] for row in m]).inverse().to_strings(), dtype=np.int64)
                    for m in x[:50]]).astype(arr.dtype)
    assert r.contains_array(inv).all()
    assert r.contains_array(np.eye(8, dtype=arr.dtype)[None]).all()


@given(st.permutations([0, 1, 2]), st.integers(0, 359))
def test_order_invariant_under_reordering_and_conjugation(perm, idx):
    gens = f5_generators((3, 3, 1, 1))
    base = bfs_closure(gens, analyze=False)
    g = base.element_array()[idx]
    conj = ExactMatrix([[F5(int(v)) for v in row] for row in g])
    moved = [conj @ gens[i] @ conj.inverse() for i in perm]
    assert bfs_closure(moved, analyze=False).order == base.order


@pytest.mark.parametrize("psi,k", ref.PROP4_POINTS)
def test_prop4_order_divides(psi, k):
    r = bfs_closure(taus(point_table([Q(-1, 8)] * 3 + [psi])))
    assert (6 * k * k) % r.order == 0
    assert r.order == load()[f"group_conj_k{k}"]


def test_report_json_schema():
    data = bfs_closure(f5_generators((3, 3, 4, 4))).to_json()
    for key in ("generators", "domain", "outcome", "order", "solvable", "perfect", "center_order", "catalog", "layers"):
        assert key in data
