from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from axialpc.errors import DivisionByZero, MixedDomains, NonEmbeddable, ParseError
from axialpc.scalars import QQ, NumberField, PrimeField, embed_rational, field_invert, parse_domain

SQRT5 = NumberField([Fraction(-5), Fraction(0), Fraction(1)])
CUBIC = NumberField([Fraction(13, 512), Fraction(-9, 32), Fraction(-3, 8), Fraction(1)])

rationals = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 50))
primes = st.sampled_from([5, 7, 11, 13, 101])


def nf_elems(field):
    return st.lists(rationals, min_size=field.degree, max_size=field.degree).map(field.from_coords)


def test_invert_examples():
    assert field_invert(PrimeField(7)(3)) == PrimeField(7)(5)
    assert field_invert(Fraction(1, 4)) == 4
    assert field_invert(SQRT5.gen) == SQRT5.from_coords([0, Fraction(1, 5)])


def test_invert_zero_raises():
    with pytest.raises(DivisionByZero):
        field_invert(PrimeField(5)(0))
    with pytest.raises(DivisionByZero):
        field_invert(SQRT5.zero)


def test_embed_examples():
    assert embed_rational(Fraction(1, 4), PrimeField(5)) == PrimeField(5)(4)
    assert embed_rational(Fraction(-1, 8), PrimeField(5)) == PrimeField(5)(3)
    assert embed_rational(Fraction(1, 4), PrimeField(7)) == PrimeField(7)(2)
    with pytest.raises(NonEmbeddable):
        embed_rational(Fraction(1, 5), PrimeField(5))


def test_mixed_moduli_rejected():
    with pytest.raises(MixedDomains):
        PrimeField(5)(1) + PrimeField(7)(1)


def test_parse_domain():
    assert parse_domain("Q") is QQ
    assert parse_domain("Fp:5") == PrimeField(5)
    assert parse_domain("NF:t^2-5") == SQRT5
    assert repr(parse_domain("Fp:7")) == "Fp:7"
    with pytest.raises(ParseError):
        parse_domain("R")


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = PrimeField(p)
    x, y, z = F(a), F(b), F(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert x * field_invert(x) == 1


@given(st.sampled_from([SQRT5, CUBIC]).flatmap(lambda f: st.tuples(nf_elems(f), nf_elems(f), nf_elems(f))))
def test_number_field_axioms(triple):
    x, y, z = triple
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if not x.is_zero():
        assert (x * field_invert(x) - 1).is_zero()


@given(primes, rationals, rationals)
def test_embed_is_a_ring_map(p, q1, q2):
    F = PrimeField(p)
    if q1.denominator % p == 0 or q2.denominator % p == 0:
        return
    e = lambda q: embed_rational(q, F)
    assert e(q1 * q2) == e(q1) * e(q2)
    assert e(q1 + q2) == e(q1) + e(q2)


@given(nf_elems(CUBIC))
def test_number_field_zero_test_on_inverse_products(x):
    if x.is_zero():
        return
    d = x * field_invert(x) - 1
    assert d.is_zero() and all(c == 0 for c in d.coords)
