"""Univariate and multivariate polynomials with exact coefficients.

``ParamPoly`` is a sparse polynomial in the four algebra parameters
``alpha, beta, gamma, psi``; ``UniPoly`` is a dense univariate polynomial.
Both are generic in the coefficient type: anything supporting ``+ - *``
and comparison with ``0`` works (``Fraction``, prime-field and
number-field elements, even ``ParamPoly`` for ``UniPoly``).

Real-root machinery (Sturm sequences, isolation, rational roots,
irreducibility certificates) only operates over ``Q``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import MixedDomains, ParseError, ReducibleMinpoly

__all__ = [
    "PARAMS",
    "ParamPoly",
    "UniPoly",
    "IsolatingInterval",
    "AlgebraicNumber",
    "parse_poly",
    "uni_gcd",
    "uni_xgcd",
    "squarefree_part",
    "sturm_sequence",
    "count_real_roots",
    "sturm_isolate",
    "refine_interval",
    "rational_roots",
    "is_irreducible",
    "factor_rational",
    "resultant",
    "specialize",
]

PARAMS = ("alpha", "beta", "gamma", "psi")


def _is_zero(c) -> bool:
    return c == 0


# ---------------------------------------------------------------------------
# Text parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent parser producing ``{exponents: Fraction}`` dicts."""

    def __init__(self, text: str, variables: tuple[str, ...]):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = variables
        self.n = len(variables)
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = _padd(val, rhs if op == "+" else _pscale(rhs, Fraction(-1)))
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                val = _pmul(val, rhs)
            else:
                if set(rhs) - {(0,) * self.n} or not rhs:
                    raise ParseError("division by a non-constant or zero")
                val = _pscale(val, 1 / rhs[(0,) * self.n])
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return _pscale(self.unary(), Fraction(-1))
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or val.denominator != 1:
                raise ParseError("exponent must be a non-negative integer")
            out = {(0,) * self.n: Fraction(1)}
            for _ in range(int(val)):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return {(0,) * self.n: val} if val else {}
        if kind == "var":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r} (expected one of {self.vars})")
            e = [0] * self.n
            e[self.vars.index(val)] = 1
            return {tuple(e): Fraction(1)}
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pscale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _pmul(a, b):
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def parse_poly(text: str, variables: tuple[str, ...]) -> dict:
    """Parse polynomial text into an exponent-tuple -> Fraction dict."""
    return _Parser(text, variables).parse()


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, int):
        return str(c)
    s = str(c)
    return f"({s})" if any(ch in s[1:] for ch in "+-") else s


def _is_negative_const(c) -> bool:
    return isinstance(c, (int, Fraction)) and c < 0


def _terms_to_text(items) -> str:
    """``items``: iterable of (coeff, monomial string or '') in print order."""
    parts = []
    for c, mono in items:
        neg = _is_negative_const(c)
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        else:
            body = _fmt_coeff(mag)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------


class ParamPoly:
    """Sparse polynomial in ``alpha, beta, gamma, psi``.

    Terms are stored as ``{(e_alpha, e_beta, e_gamma, e_psi): coeff}`` with
    no zero coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")
    NVARS = 4

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if not _is_zero(v)}
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "ParamPoly":
        if isinstance(c, int):
            c = Fraction(c)
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "ParamPoly":
        e = [0, 0, 0, 0]
        e[PARAMS.index(name)] = 1
        return cls({tuple(e): Fraction(1)})

    @classmethod
    def from_text(cls, text: str) -> "ParamPoly":
        return cls(parse_poly(text, PARAMS))

    @classmethod
    def _raw(cls, terms: dict) -> "ParamPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @staticmethod
    def coerce(x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, UniPoly):
            raise TypeError("cannot coerce UniPoly to ParamPoly")
        return ParamPoly.const(x)

    # queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(k == (0, 0, 0, 0) for k in self.terms)

    def constant_value(self):
        """Value of a constant polynomial (raises if not constant)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0, 0, 0), Fraction(0))

    def degree_in(self, name: str) -> int:
        i = PARAMS.index(name)
        return max((k[i] for k in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def variables(self) -> set[str]:
        return {PARAMS[i] for k in self.terms for i in range(4) if k[i]}

    def coefficients(self):
        return list(self.terms.values())

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, UniPoly):
                return NotImplemented
            if _is_zero(other):
                return self
            other = ParamPoly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if _is_zero(s):
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = v
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({k: -v for k, v in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, UniPoly):
            return NotImplemented
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, UniPoly):
                return NotImplemented
            if _is_zero(other):
                return ParamPoly._raw({})
            out = {}
            for k, v in self.terms.items():
                w = v * other
                if not _is_zero(w):
                    out[k] = w
            return ParamPoly._raw(out)
        if len(other.terms) == 1 and (0, 0, 0, 0) in other.terms:
            return self * other.terms[(0, 0, 0, 0)]
        if len(self.terms) == 1 and (0, 0, 0, 0) in self.terms:
            return other * self.terms[(0, 0, 0, 0)]
        out: dict = {}
        for (a0, a1, a2, a3), va in self.terms.items():
            for (b0, b1, b2, b3), vb in other.terms.items():
                k = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                if k in out:
                    out[k] = out[k] + va * vb
                else:
                    out[k] = va * vb
        return ParamPoly._raw({k: v for k, v in out.items() if not _is_zero(v)})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, ParamPoly):
            if other.is_constant():
                other = other.constant_value()
            else:
                return self.exquo(other)
        if _is_zero(other):
            raise ZeroDivisionError("division of ParamPoly by zero")
        inv = 1 / other
        return self * inv

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of ParamPoly")
        result = ParamPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, UniPoly):
            return NotImplemented
        try:
            other = ParamPoly.const(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def leading_term(self):
        """Leading (exponent, coeff) in lex order alpha > beta > gamma > psi."""
        k = max(self.terms)
        return k, self.terms[k]

    def exquo(self, other: "ParamPoly") -> "ParamPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        other = ParamPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("exact division by zero polynomial")
        lk, lc = other.leading_term()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            k = max(rem)
            c = rem[k]
            if any(x < y for x, y in zip(k, lk)):
                raise ArithmeticError("polynomial division is not exact")
            qk = tuple(x - y for x, y in zip(k, lk))
            qc = c / lc
            quot[qk] = qc
            for ok, ov in other.terms.items():
                kk = tuple(x + y for x, y in zip(qk, ok))
                s = rem.get(kk, 0) - qc * ov
                if _is_zero(s):
                    rem.pop(kk, None)
                else:
                    rem[kk] = s
        return ParamPoly(quot)

    # evaluation -------------------------------------------------------
    def specialize(self, point: dict):
        """Substitute the parameters named in ``point``.

        Returns a scalar when all four parameters are assigned, otherwise a
        ``ParamPoly`` whose coefficients live in the assigned values' domain.
        """
        if any(isinstance(v, ParamPoly) for v in point.values()):
            return self._compose(point)
        idx = [PARAMS.index(n) for n in point]
        vals = [point[n] for n in point]
        _check_common_domain(vals)
        full = len(set(idx)) == 4
        out: dict = {}
        powcache: dict = {}
        for k, c in self.terms.items():
            term = c
            rest = list(k)
            for i, v in zip(idx, vals):
                e = k[i]
                if e:
                    key = (i, e)
                    if key not in powcache:
                        powcache[key] = v**e
                    term = term * powcache[key]
                rest[i] = 0
            rest = tuple(rest)
            out[rest] = out[rest] + term if rest in out else term
        if full:
            from .scalars import domain_of

            total = out.get((0, 0, 0, 0), Fraction(0))
            dom = next((domain_of(v) for v in vals if not isinstance(v, (int, Fraction))), None)
            if isinstance(total, (int, Fraction)):
                total = dom.embed(total) if dom is not None else Fraction(total)
            return total
        return ParamPoly(out)

    def _compose(self, point: dict) -> "ParamPoly":
        """Substitute polynomials for parameters."""
        out = ParamPoly()
        for k, c in self.terms.items():
            term = ParamPoly.const(c)
            for i, name in enumerate(PARAMS):
                if k[i]:
                    term = term * ParamPoly.coerce(point.get(name, ParamPoly.var(name))) ** k[i]
            out = out + term
        return out

    def map_coeffs(self, fn) -> "ParamPoly":
        return ParamPoly({k: fn(v) for k, v in self.terms.items()})

    def to_univariate(self, name: str) -> "UniPoly":
        """View as a UniPoly in ``name``; other parameters must be absent."""
        i = PARAMS.index(name)
        if any(k[j] for k in self.terms for j in range(4) if j != i):
            raise ValueError(f"{self} involves parameters other than {name}")
        deg = self.degree_in(name)
        coeffs = [Fraction(0)] * (deg + 1) if deg >= 0 else []
        for k, v in self.terms.items():
            coeffs[k[i]] = v
        return UniPoly(coeffs)

    # printing ---------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def to_text(self) -> str:
        items = []
        for k, c in self.sorted_terms():
            mono = "*".join(
                PARAMS[i] if e == 1 else f"{PARAMS[i]}^{e}" for i, e in enumerate(k) if e
            )
            items.append((c, mono))
        return _terms_to_text(items)

    __str__ = to_text

    def __repr__(self):
        return f"ParamPoly({self.to_text()!r})"


def _domain_key(v):
    from .scalars import NumberFieldElem, PrimeFieldElem

    if isinstance(v, PrimeFieldElem):
        return ("Fp", v.p)
    if isinstance(v, NumberFieldElem):
        return ("NF", v.field.modulus)
    if isinstance(v, (int, Fraction)):
        return None
    if isinstance(v, ParamPoly):
        keys = {_domain_key(c) for c in v.terms.values()} - {None}
        return keys.pop() if len(keys) == 1 else (None if not keys else ("mixed",))
    return ("other", type(v).__name__)


def _check_common_domain(vals):
    keys = {_domain_key(v) for v in vals} - {None}
    if len(keys) > 1 or ("mixed",) in keys:
        raise MixedDomains(f"parameter values live in different domains: {sorted(map(str, keys))}")


def specialize(p, point: dict):
    """Specialize a ParamPoly (or pass scalars through unchanged)."""
    if isinstance(p, ParamPoly):
        return p.specialize(point)
    return p


# ---------------------------------------------------------------------------
# UniPoly
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_text(cls, text: str, var: str = "x") -> "UniPoly":
        d = parse_poly(text, (var,))
        if not d:
            return cls([])
        deg = max(k[0] for k in d)
        cs = [Fraction(0)] * (deg + 1)
        for (e,), c in d.items():
            cs[e] = c
        return cls(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        o = self._coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return UniPoly([(a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def __pow__(self, k: int):
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "UniPoly"):
        """Euclidean division over a field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        lc = other.lead()
        if isinstance(lc, ParamPoly):
            if not lc.is_constant():
                raise ValueError("divisor needs a constant leading coefficient")
            lc = lc.constant_value()
        inv = 1 / lc
        q = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] * inv
            q[i] = c
            if not _is_zero(c):
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * oc
        return UniPoly(q), UniPoly(rem[:dq])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lead()
        return UniPoly([c * inv for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m):
        """Evaluate at a square matrix (Horner)."""
        from .linalg import ExactMatrix

        n = m.n
        acc = ExactMatrix.zeros(n, m.domain_zero)
        ident = ExactMatrix.identity(n, m.domain_one)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident.scale(c)
        return acc

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def is_palindromic(self) -> bool:
        return all(a == b for a, b in zip(self.coeffs, reversed(self.coeffs)))

    def content_primitive(self):
        """For rational coefficients: (content, primitive integer poly)."""
        cs = [Fraction(c) for c in self.coeffs]
        if not cs:
            return Fraction(0), []
        den = 1
        for c in cs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in cs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]

    def to_text(self, var: str = "x") -> str:
        items = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if _is_zero(c):
                continue
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            items.append((c, mono))
        return _terms_to_text(items)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"UniPoly({self.to_text()!r})"


# ---------------------------------------------------------------------------
# gcd over Q
# ---------------------------------------------------------------------------


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low first)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[j + shift] -= la * y
        while a and a[-1] == 0:
            a.pop()
    return a


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over Q via primitive pseudo-remainder sequences."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    _, a = f.content_primitive()
    _, b = g.content_primitive()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r)
    return UniPoly(a).monic()


def uni_xgcd(f: UniPoly, g: UniPoly):
    """Extended Euclid over a field: returns (d, s, t) with s*f + t*g = d."""
    r0, r1 = f, g
    s0, s1 = UniPoly([1]), UniPoly([])
    t0, t1 = UniPoly([]), UniPoly([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.degree() <= 0:
        return f.monic()
    g = uni_gcd(f, f.derivative())
    return (f // g).monic()


# ---------------------------------------------------------------------------
# Sturm sequences and real roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsolatingInterval:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError("empty isolating interval")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __str__(self):
        return f"({self.lower}, {self.upper})"


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    f = squarefree_part(f)
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree() > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [p for p in seq if not p.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _var_at(seq, x) -> int:
    return _variations([_sign(p(x)) for p in seq])


def _var_at_inf(seq, positive: bool) -> int:
    out = []
    for p in seq:
        s = _sign(p.lead())
        if not positive and p.degree() % 2:
            s = -s
        out.append(s)
    return _variations(out)


def count_real_roots(f: UniPoly, lo=None, hi=None) -> int:
    """Distinct real roots in ``(lo, hi)``; ``None`` means infinite."""
    seq = sturm_sequence(f)
    vlo = _var_at_inf(seq, False) if lo is None else _var_at(seq, lo)
    vhi = _var_at_inf(seq, True) if hi is None else _var_at(seq, hi)
    return vlo - vhi


def _cauchy_bound(f: UniPoly) -> Fraction:
    lc = abs(Fraction(f.lead()))
    return 1 + max((abs(Fraction(c)) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def sturm_isolate(f: UniPoly, width=None) -> list[IsolatingInterval]:
    """One isolating interval per distinct real root, sorted increasingly."""
    if f.is_zero():
        raise ValueError("sturm_isolate of the zero polynomial")
    if f.degree() == 0:
        return []
    sf = squarefree_part(f)
    seq = sturm_sequence(sf)
    bound = _cauchy_bound(sf) + 1
    out: list[IsolatingInterval] = []
    stack = [(-bound, bound, _var_at(seq, -bound), _var_at(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi))
            continue
        mid = _safe_split(sf, lo, hi)
        vmid = _var_at(seq, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort(key=lambda iv: iv.lower)
    if width is not None:
        out = [refine_interval(sf, iv, width) for iv in out]
    return out


def _safe_split(f: UniPoly, lo, hi):
    """A point strictly inside (lo, hi) where f does not vanish."""
    mid = (lo + hi) / 2
    k = 3
    while f(mid) == 0:
        mid = lo + (hi - lo) * Fraction(k - 1, 2 * k)
        k += 1
    return mid


def refine_interval(f: UniPoly, iv: IsolatingInterval, width=Fraction(1, 10**6)) -> IsolatingInterval:
    """Bisect ``iv`` (which isolates a root of ``f``) until narrower than ``width``."""
    lo, hi = iv.lower, iv.upper
    slo = _sign(f(lo))
    width = Fraction(width)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        sm = _sign(f(mid))
        if sm == 0:
            eps = (hi - lo) / 8
            return IsolatingInterval(mid - eps, mid + eps) if eps < width else refine_interval(
                f, IsolatingInterval(mid - eps, mid + eps), width
            )
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return IsolatingInterval(lo, hi)


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots of a nonzero rational polynomial, increasing.

    A root ``k/q`` in lowest terms has ``q`` dividing the leading
    coefficient ``L`` of the primitive integer form, so ``L*root`` is an
    integer; refining each real root until ``L*width < 1/2`` leaves one
    candidate per root.
    """
    if f.degree() <= 0:
        return []
    sf = squarefree_part(f)
    _, ints = sf.content_primitive()
    lead = abs(ints[-1])
    out = []
    for iv in sturm_isolate(sf):
        iv = refine_interval(sf, iv, Fraction(1, 2 * lead + 1))
        cand = Fraction(round((iv.lower + iv.upper) / 2 * lead), lead)
        if iv.lower <= cand <= iv.upper and sf(cand) == 0:
            out.append(cand)
    return sorted(set(out))


# ---------------------------------------------------------------------------
# Irreducibility over Q
# ---------------------------------------------------------------------------


def _small_primes(count: int, start: int = 3):
    out = []
    n = start
    while len(out) < count:
        if all(n % p for p in range(2, int(n**0.5) + 1)):
            out.append(n)
        n += 1
    return out


def _modp_poly(ints, p):
    a = [v % p for v in ints]
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mp_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _mp_trim(q), _mp_trim(a[:db])


def _mp_gcd(a, b, p):
    a, b = _mp_trim(list(a)), _mp_trim(list(b))
    while b:
        a, b = b, _mp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _mp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _mp_divmod(_mp_trim(out), m, p)[1]


def _mp_powmod(base, e, m, p):
    result = [1]
    base = _mp_divmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _mp_mulmod(result, base, m, p)
        base = _mp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _mp_deriv(a, p):
    return _mp_trim([(i * c) % p for i, c in enumerate(a)][1:])


def _distinct_degree_pattern(ints, p):
    """Multiset of irreducible-factor degrees of a squarefree poly mod p."""
    f = _modp_poly(ints, p)
    inv = pow(f[-1], -1, p)
    f = [x * inv % p for x in f]
    pattern = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _mp_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _mp_gcd(f, _mp_trim(diff), p)
        if len(g) > 1:
            pattern += [d] * ((len(g) - 1) // d)
            f = _mp_divmod(f, g, p)[0]
            h = _mp_divmod(h, f, p)[1] if len(f) > 1 else h
    if len(f) > 1:
        pattern.append(len(f) - 1)
    return sorted(pattern)


def roots_mod_p(ints, p: int) -> list[int]:
    """Distinct roots in F_p of an integer polynomial (low-first), by equal-degree splitting."""
    import random

    f = _modp_poly(ints, p)
    if len(f) <= 1:
        return []
    xp = _mp_powmod([0, 1], p, f, p)
    xp = list(xp) + [0] * max(0, 2 - len(xp))
    xp[1] = (xp[1] - 1) % p
    g = _mp_gcd(f, _mp_trim(xp), p)
    rng = random.Random(p)
    out = []
    stack = [g] if len(g) > 1 else []
    while stack:
        h = stack.pop()
        if len(h) == 2:
            out.append((-h[0] * pow(h[1], -1, p)) % p)
            continue
        while True:
            a = rng.randrange(p)
            w = _mp_powmod([a, 1], (p - 1) // 2, h, p)
            w = list(w) if w else [0]
            w[0] = (w[0] - 1) % p
            d = _mp_gcd(h, _mp_trim(w), p)
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(_mp_divmod(h, d, p)[0])
                break
    return sorted(out)


def _subset_sums(parts):
    sums = {0}
    for d in parts:
        sums |= {s + d for s in sums}
    return sums


def resultant(f: UniPoly, g: UniPoly):
    """Resultant of two polynomials over a field (Euclidean recursion)."""
    m, n = f.degree(), g.degree()
    if m < 0 or n < 0:
        return Fraction(0)
    if n == 0:
        return g.lead() ** m
    if m == 0:
        return f.lead() ** n
    r = f % g
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lead() ** (m - r.degree()) * resultant(g, r)


def _pair_sum_factor(f: UniPoly):
    """A proper rational factor of ``f`` found through root pair sums, or None.

    Meant for polynomials without rational roots: a quadratic factor with
    roots r_i, r_j makes r_i + r_j a rational root of Res_x(f(x), f(y-x)).
    """
    n = f.degree()
    f = f.monic()
    pts = [Fraction(y) for y in range(n * n + 1)]
    vals = [resultant(f, _compose_affine(f, y, Fraction(-1))) for y in pts]
    sums_poly = _interpolate(pts, vals)
    for s in rational_roots(sums_poly):
        h = uni_gcd(f, _compose_affine(f, s, Fraction(-1)))
        if 0 < h.degree() < n:
            return h
        if h.degree() == n:
            # f(x) = G(x^2 - s*x); quadratic factors are x^2 - s*x + q with G(-q) = 0
            u = UniPoly([0, -s, 1])
            g_coeffs = []
            rem = f
            while not rem.is_zero():
                q, r = rem.divmod(u)
                if r.degree() > 0:
                    g_coeffs = None
                    break
                g_coeffs.append(r.coeffs[0] if r.coeffs else Fraction(0))
                rem = q
            if g_coeffs:
                for root in rational_roots(UniPoly(g_coeffs)):
                    return UniPoly([root, -s, 1])
    return None


def _compose_affine(f: UniPoly, a, b) -> UniPoly:
    """f(a + b*x)."""
    lin = UniPoly([a, b])
    acc = UniPoly([])
    for c in reversed(f.coeffs):
        acc = acc * lin + c
    return acc


def _interpolate(xs, ys) -> UniPoly:
    """Newton interpolation over Q."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        acc = acc * UniPoly([-xs[i], 1]) + coef[i]
    return acc


def is_irreducible(f: UniPoly, primes: int = 40) -> bool:
    """Certify irreducibility over Q.

    Returns True when certified, False when a factor is exhibited, and
    raises :class:`ReducibleMinpoly` when neither can be decided (degree
    above five with an inconclusive mod-p degree pattern).
    """
    if f.degree() <= 0:
        return False
    if f.degree() == 1:
        return True
    if squarefree_part(f).degree() < f.degree():
        return False
    if rational_roots(f):
        return False
    n = f.degree()
    if n <= 3:
        return True
    _, ints = f.content_primitive()
    possible = set(range(1, n))
    for p in _small_primes(primes):
        if ints[-1] % p == 0:
            continue
        fp = _modp_poly(ints, p)
        if len(_mp_gcd(fp, _mp_deriv(fp, p), p)) > 1:
            continue
        possible &= _subset_sums(_distinct_degree_pattern(ints, p))
        if not possible & set(range(1, n)):
            return True
    if n <= 5:
        return _pair_sum_factor(f) is None
    raise ReducibleMinpoly(f"cannot certify irreducibility of degree-{n} {f}")


def factor_rational(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factorization over Q, as (factor, multiplicity) pairs.

    Backed by sympy's factorizer; the product is re-checked exactly.
    """
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(map(Fraction, f.coeffs)))
    _, facs = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for poly, mult in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        out.append((UniPoly(cs).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree(), [str(c) for c in fm[0].coeffs]))
    check = UniPoly([1])
    for g, m in out:
        check = check * g**m
    if check != f.monic():
        raise ArithmeticError("factorization does not multiply back to the input")
    return out


# ---------------------------------------------------------------------------
# Algebraic numbers
# ---------------------------------------------------------------------------


class AlgebraicNumber:
    """A real root of an irreducible rational polynomial, selected by interval."""

    def __init__(self, minpoly: UniPoly, interval: IsolatingInterval):
        minpoly = minpoly.monic()
        if not is_irreducible(minpoly):
            raise ReducibleMinpoly(f"{minpoly} is reducible over Q")
        lo, hi = interval.lower, interval.upper
        if minpoly(lo) == 0 or minpoly(hi) == 0 or count_real_roots(minpoly, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        self.minpoly = minpoly
        self.interval = interval

    @classmethod
    def real_roots_of(cls, minpoly: UniPoly, width=Fraction(1, 10**6)) -> list["AlgebraicNumber"]:
        return [cls(minpoly, iv) for iv in sturm_isolate(minpoly, width=width)]

    def degree(self) -> int:
        return self.minpoly.degree()

    def refine(self, width) -> "AlgebraicNumber":
        return AlgebraicNumber(self.minpoly, refine_interval(self.minpoly, self.interval, width))

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        lo = max(self.interval.lower, other.interval.lower)
        hi = min(self.interval.upper, other.interval.upper)
        return lo < hi and count_real_roots(self.minpoly, lo, hi) == 1 and (
            self.minpoly(lo) != 0 and self.minpoly(hi) != 0
        )

    def __hash__(self):
        return hash(tuple(self.minpoly.coeffs))

    def __str__(self):
        return f"root of {self.minpoly.to_text()} in {self.interval}"

    __repr__ = __str__
