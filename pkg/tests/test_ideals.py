from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axialpc import reference as ref
from axialpc.errors import ImproperIdeal, NotAutomorphism
from axialpc.ideals import (
    fixed_point_defect,
    gram_rank,
    ideal_closure,
    induced_matrix,
    is_invariant,
    quotient,
    radical,
)
from axialpc.linalg import ExactMatrix, element_order
from axialpc.repro import point_table, prop3_setup, taus
from axialpc.scalars import PrimeField

from oracles import load

Q = Fraction
F5 = PrimeField(5)

small_coords = st.lists(st.integers(-3, 3), min_size=8, max_size=8)


@pytest.fixture(scope="module")
def setup():
    return prop3_setup()


def test_defect_ideal_dimension(setup):
    t, m, ideal = setup
    assert ideal.dim == 4
    assert all(is_invariant(ideal, x) for x in taus(t))


def test_identifications_grow_the_ideal(setup):
    t, _, ideal = setup
    b_c = ideal_closure(t, ideal.elements() + [t["b"] - t["c"]])
    assert b_c.dim == 5 and b_c.contains_ideal(ideal)


def test_empty_and_axis_seeds(setup):
    t = setup[0]
    assert ideal_closure(t, []).dim == 0
    assert ideal_closure(t, [t["a"]]).dim == 8


def test_any_ideal_containing_an_axis_is_everything(setup):
    # c alone already generates the algebra, so extra seeds change nothing
    t, _, ideal = setup
    for seeds in ([t["c"]], ideal.elements() + [t["c"]], ideal.elements() + [t["ab"], t["c"]]):
        full = ideal_closure(t, seeds)
        assert full.dim == 8
        with pytest.raises(ImproperIdeal):
            quotient(t, full)


@settings(max_examples=10)
@given(st.tuples(*[st.integers(-4, 4).map(lambda n: Q(n, 8))] * 4))
def test_axis_generates_whole_algebra_at_rational_points(point):
    t = point_table(list(point))
    assert ideal_closure(t, [t["c"]]).dim == 8


def test_defect_of_identity_power_is_zero(setup):
    t, m, _ = setup
    k = element_order(m)
    assert all(v.is_zero() for v in fixed_point_defect(t, m, k))


def test_defect_rejects_non_automorphism(setup):
    t = setup[0]
    bad = ExactMatrix([[Q(2) if i == j == 0 else Q(int(i == j)) for j in range(8)] for i in range(8)])
    with pytest.raises(NotAutomorphism):
        fixed_point_defect(t, bad, 1)


@given(small_coords, small_coords)
def test_projection_is_multiplicative(x, y):
    t, _, ideal = prop3_setup_cached()
    q, project = quotient(t, ideal)
    xs, ys = tuple(Q(v) for v in x), tuple(Q(v) for v in y)
    assert project(t.multiply(xs, ys)) == q.multiply(project(xs), project(ys))


@given(st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_ideal_invariant_under_involution_words(word):
    t, _, ideal = prop3_setup_cached()
    gens = taus(t)
    m = ExactMatrix.identity(8)
    for i in word:
        m = m @ gens[i]
    assert is_invariant(ideal, m)


def test_quotient_order_divides(setup):
    t, m, ideal = setup
    q = element_order(induced_matrix(t, ideal, m))
    assert q == 2
    assert element_order(m) % q == 0


@pytest.mark.parametrize("point", [(3, 4, 1, 1), (3, 0, 4, 4), (3, 3, 4, 4)])
def test_gram_rank_f5(point):
    t = point_table(point, F5)
    assert gram_rank(t) == load()["gram_rank_f5"][str(point)]
    rad = radical(t)
    assert rad.dim == 8 - gram_rank(t)
    for r in rad.rows:
        for k in range(8):
            assert rad.contains(t.multiply(r, t.basis(k).coords))


def test_gram_rank_rational():
    assert gram_rank(point_table(ref.PSL27_POINT)) == 8 == load()["gram_rank_psl27_q"]


def test_ideal_json(setup):
    data = setup[2].to_json()
    assert data["dim"] == 4 and len(data["rows"]) == 4 and len(data["basis"]) == 8


_CACHE = {}


def prop3_setup_cached():
    if "s" not in _CACHE:
        _CACHE["s"] = prop3_setup()
    return _CACHE["s"]
