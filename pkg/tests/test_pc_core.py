import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from axialpc import reference as ref
from axialpc.errors import ClosureFailure, MixedDomains, NotAnAxis, NotAutomorphism, UnsupportedCharacteristic
from axialpc.linalg import ExactMatrix, kernel, rank
from axialpc.pc_core import (
    AlgebraTable,
    build_universal_table,
    conjugate_axis,
    is_automorphism,
    is_idempotent,
    left_mult,
    load_golden_table,
    miyamoto,
    preserves_form,
    specialize_table,
    subalgebra_table,
    universal_table,
)
from axialpc.polynomials import ParamPoly
from axialpc.scalars import PrimeField

from oracles import load

PARAMS = ("alpha", "beta", "gamma", "psi")
P = ParamPoly.from_text
T = universal_table()
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 16))
points = st.tuples(rationals, rationals, rationals, rationals).map(lambda v: dict(zip(PARAMS, v)))


def elem(t, **coords):
    return t.element([coords.get(lab.replace("(", "_").replace(")", ""), 0) * t.one for lab in t.labels])


def test_basis_and_given_form():
    assert T.labels == ("a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)")
    g = T.gram
    assert g[0][0] == g[1][1] == g[2][2] == 1
    assert (g[0][1], g[1][2], g[0][2]) == (P("alpha"), P("beta"), P("gamma"))
    assert g[3][2] == g[0][4] == g[1][5] == P("psi")


def test_product_examples():
    assert T["a"] * T["a"] == T["a"]
    assert (T["a"] * T["ab"]).coords == (P("alpha"), P("1/2"), P("0"), P("-1/2"), P("0"), P("0"), P("0"), P("0"))
    expected = [P("beta"), P("gamma"), P("alpha"), P("0"), P("0"), P("0"), P("-1"), P("-1")]
    assert list((T["ab"] * T["c"]).coords) == expected
    assert T.form(T["ab"].coords, T["ab"].coords) == P("alpha^2 - alpha/2 + 1/2")


def test_denominators_are_powers_of_two():
    for row in T.products:
        for vec in row:
            for c in vec:
                for q in ParamPoly.coerce(c).coefficients():
                    d = Fraction(q).denominator
                    assert d & (d - 1) == 0


def test_universal_identities_hold_symbolically():
    T.check_identities()
    for i in range(8):
        for j in range(8):
            assert T.products[i][j] == T.products[j][i]
            assert T.gram[i][j] == T.gram[j][i]


def test_golden_dump_matches_fresh_derivation():
    assert build_universal_table() == load_golden_table()
    assert AlgebraTable.from_json(json.loads(T.dump())) == T


def test_golden_involutions():
    ta, tb, tc = (miyamoto(T, T[x]) for x in "abc")
    assert ta == ref.matrix(ref.TAU_A)
    assert tb == ref.matrix(ref.TAU_B)
    assert tc == ref.matrix(ref.TAU_C)
    assert ta @ tb == ref.matrix(ref.TAU_AB_8)
    # tau_a(b) = 1/3 (8 alpha a - b - 4 ab)
    assert ta.column(1) == [P("8/3*alpha"), P("-1/3"), P("0"), P("-4/3"), P("0"), P("0"), P("0"), P("0")]
    for i, j in ref.TAU_C_FLAGGED:
        assert tc[i, j] == P(ref.XI)


def test_two_generated_matrix_against_oracle():
    sub = subalgebra_table(T, [0, 1, 3])
    m = miyamoto(sub, sub["a"]) @ miyamoto(sub, sub["b"])
    assert m == ref.matrix(ref.TAU_AB_3)
    oracle = load()["tau_ab_3x3"]
    alpha = sp.Symbol("alpha")
    for i in range(3):
        for j in range(3):
            mine = sp.sympify(m[i, j].to_text().replace("^", "**"))
            assert sp.expand(mine - sp.sympify(oracle[i][j])) == 0
    assert [m[i, 0] for i in range(3)] == [P("(64*alpha^2 - 16*alpha - 3)/9"), P("(8 - 8*alpha)/9"), P("(-32*alpha - 4)/9")]


def test_left_mult_columns():
    la = left_mult(T, T["a"])
    assert la.column(1) == list(T["ab"].coords)
    assert la.column(3) == list((T["a"] * T["ab"]).coords)
    assert (la @ la).scale(Fraction(8, 3)) - ExactMatrix.identity(8, T.one).scale(Fraction(5, 3)) == miyamoto(T, T["a"])


def test_idempotents():
    assert is_idempotent(T, T["a"])
    assert not is_idempotent(T, T["a"] + T["b"])
    F = PrimeField(5)
    t5 = specialize_table(T, dict(zip(PARAMS, map(F, (3, 3, 1, 1)))))
    assert is_idempotent(t5, t5["b(ac)"])


def test_miyamoto_errors():
    with pytest.raises(NotAnAxis):
        miyamoto(T, T["ab"])
    with pytest.raises(UnsupportedCharacteristic):
        specialize_table(T, dict(zip(PARAMS, map(PrimeField(3), (1, 1, 1, 1)))))


def test_specialize_examples():
    F = PrimeField(5)
    t = specialize_table(T, dict(zip(PARAMS, map(F, (3, 3, 1, 4)))))
    assert t.domain == "Fp:5"
    assert specialize_table(T, {p: P(p) for p in PARAMS}, check=False) == T
    with pytest.raises(MixedDomains):
        specialize_table(T, dict(zip(PARAMS, (F(1), PrimeField(7)(1), F(1), F(1)))))


def test_conjugate_axis():
    tc = miyamoto(T, T["c"])
    assert conjugate_axis(T, T["b"], ExactMatrix.identity(8, T.one)) == T["b"]
    t = specialize_table(T, dict(zip(PARAMS, ref.PSL27_POINT)))
    d = conjugate_axis(t, t["b"], miyamoto(t, t["c"]))
    assert is_idempotent(t, d)
    bad = ExactMatrix.identity(8, T.one).scale(Fraction(2))
    with pytest.raises(NotAutomorphism):
        conjugate_axis(T, T["b"], bad)
    assert is_automorphism(T, tc) and preserves_form(T, tc)


@given(points, st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_pseudo_composition_identity(point, coords):
    t = specialize_table(T, point, check=False)
    x = t.element([Fraction(c) for c in coords])
    assert (x * x) * x == x.phi(x) * x


@given(points)
def test_involutions_are_form_preserving_automorphisms(point):
    t = specialize_table(T, point, check=False)
    for axis in "abc":
        m = miyamoto(t, t[axis])
        assert (m @ m).is_identity()
        assert is_automorphism(t, m) and preserves_form(t, m)


@given(points)
def test_fusion_grading(point):
    t = specialize_table(T, point, check=False)
    eye = ExactMatrix.identity(8, t.one)
    for axis in "abc":
        lm = left_mult(t, t[axis])
        proj = (eye - miyamoto(t, t[axis])).scale(Fraction(1, 2))
        half = lm - eye.scale(Fraction(1, 2))
        assert (half @ proj).is_zero()
        assert rank(proj) == len(kernel(half))
        assert ((lm - eye) @ (lm + eye) @ half).is_zero()
