from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from axialpc.errors import MixedDomains
from axialpc.polynomials import (
    AlgebraicNumber,
    ParamPoly,
    UniPoly,
    factor_rational,
    is_irreducible,
    roots_mod_p,
    specialize,
    squarefree_part,
    sturm_isolate,
    uni_gcd,
)
from axialpc.scalars import NumberField, PrimeField

X = UniPoly.x()
SQRT5 = NumberField([Fraction(-5), Fraction(0), Fraction(1)])
small = st.builds(Fraction, st.integers(-64, 64), st.integers(1, 8))
unipolys = st.lists(small, min_size=1, max_size=5).map(UniPoly)


def test_gcd_examples():
    assert uni_gcd(X**2 - 1, X**3 - 1) == X - 1
    assert squarefree_part((X - 2) ** 2 * (X + 1)) == ((X - 2) * (X + 1)).monic()


def test_sturm_examples():
    assert sturm_isolate(X**2 + 1) == []
    assert len(sturm_isolate(UniPoly.from_text("x^3 - 3/8*x^2 - 9/32*x + 13/512"))) == 3
    assert len(sturm_isolate(UniPoly.from_text("32*x^2 - 16*x - 7"))) == 2


def test_specialize_examples():
    p = ParamPoly.from_text("(64*alpha^2 - 16*alpha - 3)/9")
    assert p.specialize({"alpha": Fraction(1, 4)}) == Fraction(-1, 3)
    assert ParamPoly.from_text("alpha + beta").specialize({"alpha": 1}) == ParamPoly.from_text("1 + beta")
    s = SQRT5.gen
    angle = ParamPoly.from_text("-4/3*psi").specialize({"psi": -(1 + 3 * s) / 32}) + (3 * s + 1) / 48
    assert angle == Fraction(1, 16) + 3 * s / 16


def test_specialize_mixed_domains():
    with pytest.raises(MixedDomains):
        specialize(ParamPoly.from_text("alpha + beta"), {"alpha": PrimeField(5)(1), "beta": PrimeField(7)(1)})


def test_text_round_trip():
    text = "x^3 - 3/8*x^2 - 9/32*x + 13/512"
    assert UniPoly.from_text(UniPoly.from_text(text).to_text()) == UniPoly.from_text(text)
    p = ParamPoly.from_text("8/3*beta*gamma + 1/3*alpha - 2/3*psi")
    assert ParamPoly.from_text(p.to_text()) == p


def test_irreducibility_and_factoring():
    assert is_irreducible(UniPoly.from_text("x^2 - 5"))
    assert not is_irreducible(UniPoly.from_text("x^2 - 1/4"))
    facs = factor_rational(UniPoly.from_text("x^3 - x"))
    assert sorted(f.degree() for f, _ in facs) == [1, 1, 1]


def test_roots_mod_p():
    assert sorted(roots_mod_p([-5, 0, 1], 11)) == [4, 7]
    assert roots_mod_p([1, 0, 1], 7) == []


@given(unipolys, unipolys)
def test_gcd_divides_both(f, g):
    if f.is_zero() and g.is_zero():
        return
    d = uni_gcd(f, g)
    assert (f % d).is_zero() and (g % d).is_zero()


@given(unipolys)
def test_squarefree_part_is_coprime_to_derivative(f):
    if f.degree() < 1:
        return
    s = squarefree_part(f)
    assert uni_gcd(s, s.derivative()).degree() == 0


@given(st.lists(small, min_size=2, max_size=5))
def test_isolated_roots_change_sign(roots):
    f = UniPoly([1])
    for r in roots:
        f = f * (X - r)
    for fac, _ in factor_rational(f):
        for a in AlgebraicNumber.real_roots_of(fac):
            iv = a.interval
            assert fac(iv.lower) * fac(iv.upper) < 0


params = st.sampled_from(["alpha", "beta", "gamma", "psi"])
monomials = st.tuples(small, params, st.integers(0, 2)).map(lambda t: ParamPoly.const(t[0]) * ParamPoly.var(t[1]) ** t[2])
parampolys = st.lists(monomials, min_size=1, max_size=4).map(lambda ms: sum(ms, ParamPoly.const(0)))


@given(parampolys, parampolys, st.tuples(small, small, small, small))
def test_specialize_commutes_with_ring_operations(p, q, vals):
    point = dict(zip(["alpha", "beta", "gamma", "psi"], vals))
    assert specialize(p * q, point) == specialize(p, point) * specialize(q, point)
    assert specialize(p + q, point) == specialize(p, point) + specialize(q, point)
