"""Exact square-matrix algebra over any scalar domain.

Matrices act on column vectors: column ``j`` holds the image of basis
vector ``j``.  Entries may be rationals, prime-field or number-field
elements, or :class:`ParamPoly` values; algorithms that need division
either run over a field or use fraction-free (Bareiss) elimination with
exact division so they also work over the parameter polynomial ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import Singular
from .polynomials import ParamPoly, UniPoly
from .scalars import NumberFieldElem, PrimeFieldElem

__all__ = [
    "ExactMatrix",
    "Exceeded",
    "char_poly",
    "char_poly_faddeev",
    "char_poly_berkowitz",
    "det_bareiss",
    "min_poly",
    "rank",
    "echelon",
    "kernel",
    "element_order",
    "max_root_of_unity_order",
]


def _is_zero(x) -> bool:
    return x == 0


def _one_like(x):
    if isinstance(x, PrimeFieldElem):
        return PrimeFieldElem(1, x.p)
    if isinstance(x, NumberFieldElem):
        return x.field.one
    if isinstance(x, ParamPoly):
        return ParamPoly.const(1)
    return Fraction(1)


def _zero_like(x):
    return _one_like(x) * 0 if not isinstance(x, ParamPoly) else ParamPoly()


def characteristic_of(x) -> int:
    if isinstance(x, PrimeFieldElem):
        return x.p
    if isinstance(x, ParamPoly):
        for c in x.terms.values():
            return characteristic_of(c)
    return 0


class ExactMatrix:
    """Immutable ``n x n`` matrix; ``rows[i][j]`` is entry (i, j)."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("ExactMatrix must be square")
        self.rows = rows
        self.n = n

    # construction -----------------------------------------------------
    @classmethod
    def identity(cls, n: int, one=Fraction(1)) -> "ExactMatrix":
        zero = one * 0 if not isinstance(one, ParamPoly) else ParamPoly()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, zero=Fraction(0)) -> "ExactMatrix":
        return cls([[zero] * n for _ in range(n)])

    @classmethod
    def from_columns(cls, cols) -> "ExactMatrix":
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    @property
    def domain_one(self):
        return _one_like(self._sample())

    @property
    def domain_zero(self):
        return _zero_like(self._sample())

    def _sample(self):
        for r in self.rows:
            for x in r:
                if not _is_zero(x):
                    return x
        return self.rows[0][0] if self.n else Fraction(0)

    @property
    def characteristic(self) -> int:
        for r in self.rows:
            for x in r:
                c = characteristic_of(x)
                if c:
                    return c
        return 0

    # access -------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.n)]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.n)]

    def entries(self):
        for r in self.rows:
            yield from r

    # arithmetic ---------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            n = self.n
            cols = other.columns()
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = 0
                    for a, b in zip(r, c):
                        if not _is_zero(a) and not _is_zero(b):
                            acc = acc + a * b
                    row.append(acc if not isinstance(acc, int) else _zero_like(self._sample()))
                out.append(row)
            return ExactMatrix(out)
        # matrix-vector
        out = []
        for r in self.rows:
            acc = 0
            for a, b in zip(r, other):
                if not _is_zero(a) and not _is_zero(b):
                    acc = acc + a * b
            out.append(acc if not isinstance(acc, int) else _zero_like(self._sample()))
        return out

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[a * c for a in r] for r in self.rows])

    def __pow__(self, k: int) -> "ExactMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.n, self.domain_one)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)])

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix([[fn(a) for a in r] for r in self.rows])

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix) or other.n != self.n:
            return False
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(tuple(hash(a) for a in self.entries()))

    def is_identity(self) -> bool:
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if i == j:
                    if not a == 1:
                        return False
                elif not _is_zero(a):
                    return False
        return True

    def is_zero(self) -> bool:
        return all(_is_zero(a) for a in self.entries())

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse over a field."""
        n = self.n
        one = self.domain_one
        zero = one * 0 if not isinstance(one, ParamPoly) else ParamPoly()
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if not _is_zero(aug[r][c])), None)
            if piv is None:
                raise Singular("matrix is not invertible")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = one / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and not _is_zero(aug[r][c]):
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return ExactMatrix([r[n:] for r in aug])

    # text -----------------------------------------------------------------
    def to_strings(self) -> list[list[str]]:
        return [[_entry_text(a) for a in r] for r in self.rows]

    def dump(self) -> str:
        """Row-major JSON dump with entries as text."""
        return json.dumps(self.to_strings())

    def __str__(self):
        cells = self.to_strings()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"ExactMatrix({self.to_strings()!r})"


def _entry_text(a) -> str:
    if isinstance(a, ParamPoly):
        return a.to_text()
    return str(a)


# ---------------------------------------------------------------------------
# Determinants and characteristic polynomials
# ---------------------------------------------------------------------------


def _exdiv(a, b):
    if isinstance(a, ParamPoly) or isinstance(b, ParamPoly):
        return ParamPoly.coerce(a).exquo(ParamPoly.coerce(b))
    return a / b


def det_bareiss(m: ExactMatrix):
    """Fraction-free determinant (exact division only)."""
    n = m.n
    a = [list(r) for r in m.rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            swap = next((r for r in range(k + 1, n) if not _is_zero(a[r][k])), None)
            if swap is None:
                return m.domain_zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = v if prev is None else _exdiv(v, prev)
            a[i][k] = 0
        prev = piv
    d = a[n - 1][n - 1] if n else m.domain_one
    return -d if sign < 0 else d


def char_poly_faddeev(m: ExactMatrix) -> UniPoly:
    """Faddeev-LeVerrier; needs division by 1..n (characteristic 0 or > n)."""
    n = m.n
    one = m.domain_one
    ident = ExactMatrix.identity(n, one)
    coeffs = [None] * (n + 1)
    coeffs[n] = one
    mk = ExactMatrix.zeros(n, m.domain_zero)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        am = m @ mk
        coeffs[n - k] = -am.trace() * Fraction(1, k)
    return UniPoly(coeffs)


def char_poly_berkowitz(m: ExactMatrix) -> UniPoly:
    """Division-free Berkowitz algorithm; valid over any commutative ring."""
    a = m.rows
    one = m.domain_one
    vect = [one]
    for r in range(m.n):
        row = a[r][:r]
        col_vec = [a[i][r] for i in range(r)]
        toeplitz = [one, -a[r][r]]
        v = col_vec
        for _ in range(r):
            toeplitz.append(-_dot(row, v))
            v = [_dot(a[i][:r], v) for i in range(r)]
        new = []
        for i in range(r + 2):
            acc = 0
            for j, pv in enumerate(vect):
                if 0 <= i - j < len(toeplitz):
                    acc = acc + toeplitz[i - j] * pv
            new.append(acc)
        vect = new
    return UniPoly(list(reversed(vect)))


def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def char_poly(m: ExactMatrix) -> UniPoly:
    """Monic characteristic polynomial ``det(xI - m)``."""
    p = m.characteristic
    if p == 0 or p > m.n:
        return char_poly_faddeev(m)
    return char_poly_berkowitz(m)


# ---------------------------------------------------------------------------
# Fraction-free echelon, rank, kernel
# ---------------------------------------------------------------------------


def _ff_echelon(rows: list[list]):
    """Bareiss row echelon of a rectangular matrix. Returns (rows, pivots)."""
    a = [list(r) for r in rows]
    m = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    prev = None
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        piv = next((i for i in range(r, m) if not _is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                v = p * a[i][j] - a[i][c] * a[r][j]
                a[i][j] = v if prev is None else _exdiv(v, prev)
            a[i][c] = a[i][c] * 0
        for i in range(r + 1, m):
            for j in range(c):
                pass
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    """Exact rank over the fraction field of the entries."""
    rows = m.rows if isinstance(m, ExactMatrix) else m
    if not rows:
        return 0
    return len(_ff_echelon(rows)[1])


def echelon(m, reduced: bool = True):
    """Row echelon form over a field (reduced by default). Returns (rows, pivots)."""
    rows = [list(r) for r in (m.rows if isinstance(m, ExactMatrix) else m)]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if not _is_zero(rows[i][c])), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if reduced:
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i == r or _is_zero(rows[i][c]):
                continue
            if not reduced and i < r:
                continue
            f = rows[i][c] / rows[r][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def kernel(m) -> list[list]:
    """Basis of the right kernel ``{v : m v = 0}`` over a field."""
    rows = m.rows if isinstance(m, ExactMatrix) else m
    nc = len(rows[0])
    red, pivots = echelon(rows)
    sample = next((x for r in rows for x in r if not _is_zero(x)), Fraction(1))
    one = _one_like(sample)
    zero = one * 0 if not isinstance(one, ParamPoly) else ParamPoly()
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * nc
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Minimal polynomial
# ---------------------------------------------------------------------------


def min_poly(m: ExactMatrix) -> UniPoly:
    """Least-degree monic annihilating polynomial.

    Krylov iteration in matrix space: find the first power ``m^d`` that is a
    linear combination of ``I, ..., m^(d-1)`` and solve for the coefficients
    by Cramer's rule with fraction-free determinants.  Over the parameter
    ring the quotients are exact because the coefficients are integral.
    """
    n = m.n
    one = m.domain_one
    powers = [ExactMatrix.identity(n, one)]
    flat = [list(powers[0].entries())]
    while True:
        nxt = powers[-1] @ m
        vec = list(nxt.entries())
        if rank(flat + [vec]) == len(flat):
            break
        powers.append(nxt)
        flat.append(vec)
    d = len(flat)
    _, pivots = _ff_echelon(flat)
    sys_rows = [[flat[i][p] for i in range(d)] for p in pivots]
    rhs = [-vec[p] for p in pivots]
    den = det_bareiss(ExactMatrix(sys_rows))
    coeffs = []
    for i in range(d):
        mod = [r[:i] + [b] + r[i + 1 :] for r, b in zip(sys_rows, rhs)]
        coeffs.append(_exdiv(det_bareiss(ExactMatrix(mod)), den))
    return UniPoly(coeffs + [one])


# ---------------------------------------------------------------------------
# Multiplicative order
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Exceeded:
    """Search gave up at ``cutoff``; ``proven_infinite`` when no finite order is possible."""

    cutoff: int
    proven_infinite: bool = False

    def __str__(self):
        return "infinite" if self.proven_infinite else f"exceeded({self.cutoff})"


def _euler_phi(k: int) -> int:
    result = k
    p = 2
    n = k
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def max_root_of_unity_order(degree: int) -> int:
    """Largest k with phi(k) <= degree (phi(k) >= sqrt(k/2) bounds the search)."""
    return max(k for k in range(1, 2 * degree * degree + 3) if _euler_phi(k) <= degree)


def _field_degree(m: ExactMatrix) -> int | None:
    """Degree over Q of the entries' field, or None for positive characteristic."""
    for x in m.entries():
        if isinstance(x, PrimeFieldElem):
            return None
        if isinstance(x, ParamPoly):
            for c in x.terms.values():
                if isinstance(c, PrimeFieldElem):
                    return None
                if isinstance(c, NumberFieldElem):
                    return c.field.degree
        if isinstance(x, NumberFieldElem):
            return x.field.degree
    return 1


def element_order(m: ExactMatrix, cutoff: int = 10_000):
    """Least ``k <= cutoff`` with ``m^k = I``, else :class:`Exceeded`.

    In characteristic 0 a finite order ``k`` needs a primitive k-th root of
    unity of degree at most ``n * [K:Q]``, which caps the search well below
    typical cutoffs and lets us report proven infinite order.
    """
    if m.is_identity():
        return 1
    if _is_zero(det_bareiss(m)):
        raise Singular("element_order of a singular matrix")
    deg = _field_degree(m)
    limit = cutoff
    bound = None
    if deg is not None:
        bound = max_root_of_unity_order(m.n * deg)
        limit = min(cutoff, bound)
    power = m
    for k in range(2, limit + 1):
        power = power @ m
        if power.is_identity():
            return k
    return Exceeded(cutoff, proven_infinite=bound is not None and bound <= cutoff)


def order_divides(m: ExactMatrix, k: int) -> bool:
    return (m**k).is_identity()


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
