"""Exact scalar domains: rationals, prime fields and simple number fields.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field and
number-field elements are small immutable classes that interoperate with
``int`` and ``Fraction`` through the usual operators, so generic code
(polynomials, matrices) can stay agnostic of the domain.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DivisionByZero,
    MixedDomains,
    NonEmbeddable,
    NonInvertible,
    ParseError,
)

__all__ = [
    "QQ",
    "RationalField",
    "PrimeField",
    "NumberField",
    "PrimeFieldElem",
    "NumberFieldElem",
    "field_invert",
    "embed_rational",
    "parse_domain",
    "domain_of",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Domain descriptors
# ---------------------------------------------------------------------------


class RationalField:
    characteristic = 0
    is_field = True
    degree = 1

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def embed(self, q) -> Fraction:
        return Fraction(q)

    def __call__(self, x) -> Fraction:
        if isinstance(x, (PrimeFieldElem, NumberFieldElem)):
            raise MixedDomains(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc

    def format(self, x) -> str:
        return str(Fraction(x))


QQ = RationalField()


@lru_cache(maxsize=None)
def PrimeField(p: int) -> "_PrimeField":
    """Return the (cached) descriptor of the prime field with ``p`` elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _PrimeField(p)


class _PrimeField:
    is_field = True
    degree = 1

    def __init__(self, p: int):
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, _PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    @property
    def zero(self):
        return PrimeFieldElem(0, self.p)

    @property
    def one(self):
        return PrimeFieldElem(1, self.p)

    def embed(self, q) -> "PrimeFieldElem":
        return embed_rational(q, self)

    def __call__(self, x) -> "PrimeFieldElem":
        if isinstance(x, PrimeFieldElem):
            if x.p != self.p:
                raise MixedDomains(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, NumberFieldElem):
            raise MixedDomains("number-field element in a prime field")
        if isinstance(x, str):
            return self.parse(x)
        return embed_rational(x, self)

    def parse(self, text: str) -> "PrimeFieldElem":
        return embed_rational(QQ.parse(text), self)

    def format(self, x) -> str:
        return str(self(x).value)

    def elements(self):
        return [PrimeFieldElem(i, self.p) for i in range(self.p)]


class NumberField:
    """``Q[t]/(f)`` for a monic ``f`` with rational coefficients.

    ``f`` is given low-degree-first.  Irreducibility is not checked here;
    a reducible modulus surfaces as :class:`NonInvertible` on inversion.
    """

    characteristic = 0
    is_field = True

    def __init__(self, modulus, var: str = "t"):
        coeffs = [Fraction(c) for c in modulus]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("number-field modulus must have degree >= 1")
        lead = coeffs[-1]
        self.modulus = tuple(c / lead for c in coeffs)
        self.degree = len(self.modulus) - 1
        self.var = var
        # t^(n+k) reduced, for k = 0..n-2
        n = self.degree
        red = []
        cur = [-c for c in self.modulus[:-1]]
        for _ in range(max(n - 1, 1)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [cur[i] + top * red[0][i] for i in range(n)]
        self._reductions = red

    def __repr__(self):
        from .polynomials import UniPoly

        return "NF:" + UniPoly(self.modulus).to_text(self.var)

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("NF", self.modulus))

    @property
    def zero(self):
        return NumberFieldElem((Fraction(0),) * self.degree, self)

    @property
    def one(self):
        return self.embed(1)

    @property
    def gen(self) -> "NumberFieldElem":
        if self.degree == 1:
            return self.embed(-self.modulus[0])
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return NumberFieldElem(tuple(coords), self)

    def embed(self, q) -> "NumberFieldElem":
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(q)
        return NumberFieldElem(tuple(coords), self)

    def __call__(self, x) -> "NumberFieldElem":
        if isinstance(x, NumberFieldElem):
            if x.field != self:
                raise MixedDomains("elements of different number fields")
            return x
        if isinstance(x, PrimeFieldElem):
            raise MixedDomains("prime-field element in a number field")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (list, tuple)):
            return self.from_coords(x)
        return self.embed(x)

    def from_coords(self, coords) -> "NumberFieldElem":
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NumberFieldElem(tuple(coords), self)

    def parse(self, text: str) -> "NumberFieldElem":
        """Parse ``[c0, c1, ...]`` coordinates or a polynomial in the generator."""
        text = text.strip()
        if text.startswith("["):
            inner = text.strip("[]")
            parts = [s for s in inner.split(",") if s.strip()]
            return self.from_coords([QQ.parse(s) for s in parts])
        from .polynomials import UniPoly

        poly = UniPoly.from_text(text, var=self.var)
        return self.reduce(poly.coeffs)

    def reduce(self, coeffs) -> "NumberFieldElem":
        """Reduce an arbitrary-length coefficient list modulo the modulus."""
        n = self.degree
        out = [Fraction(0)] * n
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i < n:
                out[i] += c
            else:
                row = self._power(i)
                for k in range(n):
                    out[k] += c * row[k]
        return NumberFieldElem(tuple(out), self)

    def _power(self, i):
        n = self.degree
        if i - n < len(self._reductions):
            return self._reductions[i - n]
        # extend lazily; only reachable for very long inputs
        cur = list(self._reductions[-1])
        for _ in range(i - n - len(self._reductions) + 1):
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [cur[k] + top * self._reductions[0][k] for k in range(n)]
            self._reductions.append(tuple(cur))
        return self._reductions[i - n]

    def format(self, x) -> str:
        return str(self(x))


_DOMAIN_RE = re.compile(r"^\s*(Q|QQ|Fp|GF|F|NF)\s*(?::\s*(.+))?$")


def parse_domain(text: str):
    """Parse a domain descriptor: ``Q``, ``Fp:5`` or ``NF:t^2-5``."""
    m = _DOMAIN_RE.match(text)
    if not m:
        raise ParseError(f"unknown domain descriptor {text!r}")
    kind, arg = m.group(1), m.group(2)
    if kind in ("Q", "QQ"):
        if arg:
            raise ParseError("Q takes no argument")
        return QQ
    if kind in ("Fp", "GF", "F"):
        try:
            return PrimeField(int(arg))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad prime in {text!r}") from exc
    from .polynomials import UniPoly

    if not arg:
        raise ParseError("NF needs a defining polynomial")
    poly = UniPoly.from_text(arg, var="t")
    return NumberField(poly.coeffs)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


class PrimeFieldElem:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    @property
    def field(self):
        return PrimeField(self.p)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise MixedDomains(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return embed_rational(other, PrimeField(self.p)).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "PrimeFieldElem":
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return PrimeFieldElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElem(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElem(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return other.p == self.p and other.value == self.value
        o = self._coerce(other)
        if o is None:
            return False
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"

    def __str__(self):
        return str(self.value)


class NumberFieldElem:
    __slots__ = ("coords", "field")

    def __init__(self, coords: tuple, field: NumberField):
        self.coords = coords
        self.field = field

    def _coerce(self, other):
        if isinstance(other, NumberFieldElem):
            if other.field is not self.field and other.field != self.field:
                raise MixedDomains("elements of different number fields")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(tuple(x + y for x, y in zip(self.coords, o)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(tuple(x - y for x, y in zip(self.coords, o)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(tuple(y - x for x, y in zip(self.coords, o)), self.field)

    def __neg__(self):
        return NumberFieldElem(tuple(-x for x in self.coords), self.field)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NumberFieldElem(tuple(x * other for x in self.coords), self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o
        n = len(a)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self.field.reduce(prod)

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of 0 in a number field")
        from .polynomials import UniPoly, uni_xgcd

        g, s, _ = uni_xgcd(UniPoly(self.coords), UniPoly(self.field.modulus))
        if g.degree() != 0:
            raise NonInvertible(
                f"{self} shares the factor {g.monic().to_text('t')} with the modulus"
            )
        inv = s * (Fraction(1) / g.coeffs[0])
        return self.field.reduce(inv.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return NumberFieldElem(tuple(x / other for x in self.coords), self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * NumberFieldElem(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(o, self.field) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except MixedDomains:
            return False
        if o is None:
            return False
        return self.coords == tuple(o)

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self):
        return f"NumberFieldElem({self})"

    def __str__(self):
        from .polynomials import UniPoly

        return UniPoly(self.coords).to_text(self.field.var)


# ---------------------------------------------------------------------------
# Free functions
# ---------------------------------------------------------------------------


def domain_of(x):
    """Best-effort domain of a scalar value (ints count as rationals)."""
    if isinstance(x, PrimeFieldElem):
        return PrimeField(x.p)
    if isinstance(x, NumberFieldElem):
        return x.field
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a scalar: {x!r}")


def field_invert(x):
    """Multiplicative inverse of a nonzero scalar in its own domain."""
    if isinstance(x, (PrimeFieldElem, NumberFieldElem)):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise DivisionByZero("inverse of 0 in Q")
    return 1 / x


def embed_rational(q, domain):
    """Image of a rational under the canonical map ``Q -> domain``."""
    q = Fraction(q)
    if isinstance(domain, _PrimeField):
        p = domain.p
        if q.denominator % p == 0:
            raise NonEmbeddable(f"{q} has denominator divisible by {p}")
        return PrimeFieldElem(q.numerator * pow(q.denominator, -1, p), p)
    if isinstance(domain, NumberField):
        return domain.embed(q)
    if isinstance(domain, RationalField):
        return q
    raise TypeError(f"unknown domain {domain!r}")
