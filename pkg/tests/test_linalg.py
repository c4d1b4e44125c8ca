from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from axialpc import reference as ref
from axialpc.errors import Singular
from axialpc.linalg import (
    ExactMatrix,
    Exceeded,
    char_poly,
    char_poly_berkowitz,
    char_poly_faddeev,
    det_bareiss,
    echelon,
    element_order,
    kernel,
    min_poly,
    rank,
)
from axialpc.pc_core import miyamoto, specialize_table, universal_table
from axialpc.polynomials import ParamPoly, UniPoly
from axialpc.roots import tau_word
from axialpc.scalars import NumberField, PrimeField

Q = Fraction
small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(ExactMatrix)


matrices = st.integers(1, 5).flatmap(square)


def test_char_poly_small_examples():
    x = UniPoly.x()
    assert char_poly(ExactMatrix.identity(2)) == (x - 1) ** 2
    assert char_poly(ExactMatrix([[Q(0), Q(1)], [Q(1), Q(0)]])) == x**2 - 1


def test_char_poly_depends_on_alpha_only():
    f = char_poly(tau_word("ab"))
    assert f.degree() == 8
    assert all(ParamPoly.coerce(c).variables() <= {"alpha"} for c in f.coeffs)
    assert f.is_palindromic()


def test_char_poly_methods_agree_symbolically():
    m = tau_word("ab")
    assert char_poly_faddeev(m) == char_poly_berkowitz(m)


def test_min_poly_identity():
    assert min_poly(ExactMatrix.identity(4)) == UniPoly.from_text("x - 1")


def test_conjugate_minpoly_factors():
    point = {p: Q(-1, 8) for p in ("alpha", "beta", "gamma")}
    f = min_poly(tau_word("ab^c").map(lambda x: x.specialize(point)))
    assert f.degree() == 5
    one = ParamPoly.const(1)
    assert f(one) == 0
    # the quadratic with roots (-(16 psi + 2) +/- sqrt(256 psi^2 + 64 psi - 77)) / 9
    psi = ParamPoly.var("psi")
    quad = UniPoly([one, (psi * 32 + 4) * Q(1, 9), one])
    assert (f % quad).is_zero()


def test_rank_examples():
    t = specialize_table(universal_table(), dict(zip(("alpha", "beta", "gamma", "psi"), ref.PSL27_POINT)))
    assert rank(t.gram_matrix()) == 8
    F = PrimeField(5)
    t5 = specialize_table(universal_table(), dict(zip(("alpha", "beta", "gamma", "psi"), map(F, (3, 1, 3, 2)))))
    assert rank(t5.gram_matrix()) == 5
    assert rank(ExactMatrix.zeros(3)) == 0


def test_element_order_examples():
    m3 = tau_word("ab", 3)
    assert element_order(m3.map(lambda x: x.specialize({"alpha": Q(-1, 8)}))) == 3
    F = PrimeField(7)
    assert element_order(m3.map(lambda x: x.specialize({"alpha": F(1)}))) == 7
    assert element_order(ExactMatrix.identity(5)) == 1
    K = NumberField([Q(-5), Q(0), Q(1)])
    s = K.gen
    point = {"alpha": Q(-1, 8), "beta": Q(-1, 8), "gamma": Q(1, 16) - 3 * s / 16, "psi": -(10 + 3 * s) / 32}
    t = specialize_table(universal_table(), point)
    ta, tb, tc = (miyamoto(t, t[x]) for x in "abc")
    assert element_order(ta @ (tc @ tb @ tc)) == 10


def test_element_order_cutoff_and_singular():
    F = PrimeField(101)
    gen = ExactMatrix([[F(3)]])  # 3 generates F_101^*, order 100
    assert element_order(gen, 50) == Exceeded(50, False)
    assert element_order(gen, 100) == 100
    with pytest.raises(Singular):
        element_order(ExactMatrix([[Q(1), Q(2)], [Q(2), Q(4)]]))
    shear = ExactMatrix([[Q(1), Q(1)], [Q(0), Q(1)]])
    assert element_order(shear).proven_infinite


def test_echelon_and_kernel():
    m = [[Q(1), Q(2), Q(3)], [Q(2), Q(4), Q(6)], [Q(1), Q(0), Q(1)]]
    rows, pivots = echelon(m)
    assert pivots == [0, 1]
    ker = kernel(m)
    assert len(ker) == 1
    assert all(sum(a * b for a, b in zip(r, ker[0])) == 0 for r in m)


def test_inverse_and_power():
    m = tau_word("ab", 3).map(lambda x: x.specialize({"alpha": Q(1, 3)}))
    assert (m @ m.inverse()).is_identity()
    assert (m**-2 @ m**2).is_identity()


@given(matrices)
def test_cayley_hamilton(m):
    assert char_poly(m).eval_matrix(m).is_zero()


@given(matrices)
def test_min_poly_divides_char_poly(m):
    f, g = min_poly(m), char_poly(m)
    assert (g % f).is_zero()
    assert f.eval_matrix(m).is_zero()


@given(matrices)
def test_determinant_is_char_poly_constant(m):
    f = char_poly(m)
    assert det_bareiss(m) == (-1) ** m.n * f.coeffs[0]
    assert char_poly_faddeev(m) == char_poly_berkowitz(m)


@given(st.integers(0, 12))
def test_alpha_point_char_poly_is_palindromic(k):
    a = Q(k - 6, 8)
    m = tau_word("ab").map(lambda x: x.specialize({"alpha": a}))
    assert char_poly(m).is_palindromic()
