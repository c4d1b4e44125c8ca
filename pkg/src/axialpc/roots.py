"""Parameter values that force a prescribed order on a product of involutions.

For a word ``w`` in the Miyamoto involutions, the entries of ``w^k - I`` are
polynomials in one parameter once the others are fixed.  Their gcd vanishes
exactly at the parameter values where the order of ``w`` divides ``k``.
Each irreducible factor of the gcd is then checked by computing the order
of ``w`` over the number field it defines, which is valid for every root of
that factor at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import ReducibleMinpoly
from .linalg import ExactMatrix, Exceeded, element_order
from .pc_core import miyamoto, specialize_table, subalgebra_table, universal_table
from .polynomials import (
    AlgebraicNumber,
    IsolatingInterval,
    ParamPoly,
    UniPoly,
    factor_rational,
    is_irreducible,
    sturm_isolate,
    uni_gcd,
)
from .scalars import NumberField, PrimeField

__all__ = [
    "Candidate",
    "OrderSolution",
    "tau_word",
    "solve_order_2gen",
    "solve_order_3gen_conjugate",
    "verify_order_at",
    "order_table_fp",
    "prime_divisors",
]

WORDS = ("ab", "bc", "ac", "ab^c")


@dataclass(frozen=True)
class Candidate:
    minpoly: UniPoly
    roots: tuple  # AlgebraicNumber per real root
    order: object  # int or Exceeded

    @property
    def exact(self) -> bool:
        return isinstance(self.order, int)

    def intervals(self) -> list[IsolatingInterval]:
        return [r.interval for r in self.roots]


@dataclass(frozen=True)
class OrderSolution:
    k: int
    parameter: str
    gcd: UniPoly
    candidates: tuple = field(default_factory=tuple)

    def exact_order(self) -> list[Candidate]:
        """Candidates whose verified order is exactly k."""
        return [c for c in self.candidates if c.order == self.k]

    def proper_divisors(self) -> list[Candidate]:
        return [c for c in self.candidates if c.order != self.k]


# ---------------------------------------------------------------------------
# tau words
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _symbolic_taus():
    t = universal_table()
    return tuple(miyamoto(t, t[x]) for x in "abc")


@lru_cache(maxsize=None)
def _symbolic_tau_ab_3():
    sub = subalgebra_table(universal_table(), [0, 1, 3])
    return miyamoto(sub, sub["a"]) @ miyamoto(sub, sub["b"])


def tau_word(word: str, size: int = 8) -> ExactMatrix:
    """Symbolic matrix of a product of involutions over the parameter ring.

    ``size=3`` selects the 2-generated subalgebra on (a, b, ab) and only
    supports ``word='ab'``.
    """
    if size == 3:
        if word != "ab":
            raise ValueError("the 3-dimensional subalgebra only carries the word 'ab'")
        return _symbolic_tau_ab_3()
    ta, tb, tc = _symbolic_taus()
    if word == "ab":
        return ta @ tb
    if word == "bc":
        return tb @ tc
    if word == "ac":
        return ta @ tc
    if word == "ab^c":
        return ta @ (tc @ tb @ tc)
    raise ValueError(f"unknown word {word!r}; expected one of {WORDS}")


def _to_uni(x, name: str) -> UniPoly:
    if isinstance(x, ParamPoly):
        return x.to_univariate(name)
    return UniPoly([x])


def _gcd_of_power(m: ExactMatrix, k: int, name: str) -> UniPoly:
    t = m**k - ExactMatrix.identity(m.n, m.domain_one)
    g = UniPoly([])
    for x in t.entries():
        if x == 0:
            continue
        g = uni_gcd(g, _to_uni(x, name))
        if g.degree() == 0:
            break
    return g.monic() if not g.is_zero() else g


def prime_divisors(k: int) -> list[int]:
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


# ---------------------------------------------------------------------------
# exact verification
# ---------------------------------------------------------------------------


def _root_value(minpoly: UniPoly):
    """Generator of Q[t]/(minpoly), or the rational root when linear."""
    minpoly = minpoly.monic()
    if minpoly.degree() == 1:
        return -Fraction(minpoly.coeffs[0])
    return NumberField([Fraction(c) for c in minpoly.coeffs]).gen


def verify_order_at(
    minpoly: UniPoly,
    parameter: str = "alpha",
    word: str = "ab",
    size: int = 3,
    fixed: dict | None = None,
    cutoff: int = 10_000,
):
    """Exact order of a tau word with ``parameter`` set to a root of ``minpoly``.

    Arithmetic happens in Q[t]/(minpoly); since the field is generated by
    the root, the answer holds for every root of ``minpoly`` simultaneously.
    Parameters not in ``fixed`` and not ``parameter`` stay symbolic.
    """
    minpoly = minpoly.monic()
    if not is_irreducible(minpoly):
        raise ReducibleMinpoly(f"{minpoly.to_text()} is reducible over Q")
    point = dict(fixed or {})
    point[parameter] = _root_value(minpoly)
    m = tau_word(word, size).map(lambda x: x.specialize(point) if isinstance(x, ParamPoly) else x)
    return element_order(m, cutoff)


def _candidates(gcd: UniPoly, k: int, verify) -> tuple:
    if gcd.degree() <= 0:
        return ()
    out = []
    for fac, _ in factor_rational(gcd):
        ivs = sturm_isolate(fac)
        if not ivs:
            continue
        roots = tuple(AlgebraicNumber(fac, iv) for iv in ivs)
        out.append(Candidate(fac, roots, verify(fac)))
    return tuple(out)


def solve_order_2gen(k: int, bound: int = 24) -> OrderSolution:
    """Real alpha with |tau_a tau_b| dividing k in the 2-generated algebra."""
    if not 2 <= k <= bound:
        raise ValueError(f"k must lie in [2, {bound}]")
    g = _gcd_of_power(tau_word("ab", 3), k, "alpha")
    cands = _candidates(g, k, lambda f: verify_order_at(f, "alpha", "ab", 3))
    return OrderSolution(k, "alpha", g, cands)


def solve_order_3gen_conjugate(k: int, fixed=Fraction(-1, 8)) -> OrderSolution:
    """Real psi with |tau_a tau_b^tau_c| dividing k when alpha = beta = gamma = ``fixed``."""
    point = {"alpha": fixed, "beta": fixed, "gamma": fixed}
    m = tau_word("ab^c").map(lambda x: x.specialize(point))
    g = _gcd_of_power(m, k, "psi")
    cands = _candidates(g, k, lambda f: verify_order_at(f, "psi", "ab^c", 8, fixed=point))
    return OrderSolution(k, "psi", g, cands)


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------


def order_table_fp(p: int, cutoff: int = 10_000) -> list:
    """Order of the 3x3 tau_a tau_b at every alpha in F_p, alpha = 0..p-1."""
    field_ = PrimeField(p)
    sym = tau_word("ab", 3)
    out = []
    for v in range(p):
        m = sym.map(lambda x: x.specialize({"alpha": field_(v)}))
        try:
            out.append(element_order(m, cutoff))
        except Exception as exc:  # singular at this alpha
            out.append(type(exc).__name__)
    return out


def order_at_point(word: str, point: dict, size: int = 8, cutoff: int = 10_000):
    """Order of a tau word after specializing the universal table at ``point``."""
    if size == 3:
        m = tau_word("ab", 3).map(lambda x: x.specialize(point))
        return element_order(m, cutoff)
    t = specialize_table(universal_table(), point, check=False)
    ta, tb, tc = (miyamoto(t, t[x]) for x in "abc")
    m = {"ab": lambda: ta @ tb, "bc": lambda: tb @ tc, "ac": lambda: ta @ tc, "ab^c": lambda: ta @ tc @ tb @ tc}[word]()
    return element_order(m, cutoff)


def is_exceeded(x) -> bool:
    return isinstance(x, Exceeded)
