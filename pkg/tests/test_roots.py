from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from axialpc import reference as ref
from axialpc.errors import ReducibleMinpoly
from axialpc.linalg import element_order
from axialpc.polynomials import UniPoly
from axialpc.roots import (
    order_table_fp,
    prime_divisors,
    solve_order_2gen,
    solve_order_3gen_conjugate,
    tau_word,
    verify_order_at,
)
from axialpc.scalars import NumberField

from oracles import load

Q = Fraction


def test_order_three_candidates():
    sol = solve_order_2gen(3)
    roots = sorted(-c.minpoly.monic().coeffs[0] for c in sol.exact_order())
    assert roots == [Q(-1, 8), Q(5, 8)]


def test_order_five_minpolys():
    sol = solve_order_2gen(5)
    assert {c.minpoly.monic() for c in sol.exact_order()} == set(ref.order_minpolys(5))
    assert sum(len(c.roots) for c in sol.exact_order()) == 4


def test_order_seven_uses_printed_cubics():
    sol = solve_order_2gen(7)
    assert {c.minpoly.monic() for c in sol.exact_order()} == set(ref.order_minpolys(7))


@pytest.mark.parametrize("k", range(2, 13))
def test_candidates_divide_gcd_and_orders_divide_k(k):
    sol = solve_order_2gen(k)
    want = set(ref.order_minpolys(k))
    assert want <= {c.minpoly.monic() for c in sol.candidates}
    for c in sol.candidates:
        assert (sol.gcd % c.minpoly).is_zero()
        assert isinstance(c.order, int) and k % c.order == 0


def test_verify_examples():
    assert verify_order_at(UniPoly.from_text("32*x^2 - 16*x - 7")) == 4
    assert verify_order_at(UniPoly.from_text("x - 1/4")) == 2
    assert verify_order_at(UniPoly.from_text("x - 1/4"), "alpha", "ab", 8) == 4
    with pytest.raises(ReducibleMinpoly):
        verify_order_at(UniPoly.from_text("x^2 - 1/16"))


def test_bound():
    with pytest.raises(ValueError):
        solve_order_2gen(25)
    with pytest.raises(ValueError):
        tau_word("bc", 3)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_conjugate_candidates(k):
    r, s = ref.CONJ_PSI[k]
    psi = r if s == 0 else r + s * NumberField([Q(-5), Q(0), Q(1)]).gen
    sol = solve_order_3gen_conjugate(k)
    assert any(c.minpoly(psi) == 0 for c in sol.candidates)


def test_finite_field_tables():
    assert order_table_fp(7) == ref.ORDERS_F7
    assert order_table_fp(11) == ref.ORDERS_F11


def test_three_dim_orders_against_oracle():
    frozen = load()["order_3x3"]
    m = tau_word("ab", 3)
    for text, order in frozen.items():
        if "sqrt" in text:
            got = verify_order_at(UniPoly.from_text("(x - 1/16)^2 - 45/256"))
        else:
            got = element_order(m.map(lambda x: x.specialize({"alpha": Q(text)})))
        assert got == order


@given(st.integers(2, 5000))
def test_prime_divisors_rebuild_n(n):
    rest = n
    for p in prime_divisors(n):
        assert all(p % d for d in range(2, int(p**0.5) + 1))
        assert rest % p == 0
        while rest % p == 0:
            rest //= p
    assert rest == 1
