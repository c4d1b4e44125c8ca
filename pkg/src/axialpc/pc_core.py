"""Universal 3-generated axial pseudo-composition algebra.

The structure constants are re-derived from scratch: every product of
basis monomials that is not a monomial itself, and every Gram entry not
fixed by the parameters, becomes a vector of unknowns.  Instances of the
linearized identity ``x^2 x = phi(x, x) x`` and of Frobenius invariance
are collected; those that are linear in the current unknowns are solved by
exact elimination, the solution is substituted back, and the process
repeats until nothing is left unknown.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement

from .errors import (
    ClosureFailure,
    NotAnAxis,
    NotAutomorphism,
    UnsupportedCharacteristic,
)
from .linalg import ExactMatrix, characteristic_of
from .polynomials import PARAMS, ParamPoly
from .scalars import domain_of

__all__ = [
    "BASIS_LABELS",
    "AlgebraTable",
    "AlgebraElement",
    "build_universal_table",
    "universal_table",
    "load_golden_table",
    "specialize_table",
    "subalgebra_table",
    "left_mult",
    "is_idempotent",
    "miyamoto",
    "conjugate_axis",
    "is_automorphism",
    "preserves_form",
]

BASIS_LABELS = ("a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)")
A, B, C, AB, BC, AC, A_BC, B_AC = range(8)

# products that are basis monomials by definition
_MONOMIAL_PRODUCTS = {
    (A, A): A,
    (B, B): B,
    (C, C): C,
    (A, B): AB,
    (B, C): BC,
    (A, C): AC,
    (A, BC): A_BC,
    (B, AC): B_AC,
}

_P = {name: ParamPoly.var(name) for name in PARAMS}
_GIVEN_GRAM = {
    (A, A): ParamPoly.const(1),
    (B, B): ParamPoly.const(1),
    (C, C): ParamPoly.const(1),
    (A, B): _P["alpha"],
    (B, C): _P["beta"],
    (A, C): _P["gamma"],
    (C, AB): _P["psi"],
    (A, BC): _P["psi"],
    (B, AC): _P["psi"],
}


# ---------------------------------------------------------------------------
# Table and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    """Commutative algebra with a symmetric bilinear form, given on a basis.

    ``products[i][j]`` is the coordinate tuple of ``e_i * e_j``; ``gram[i][j]``
    is ``phi(e_i, e_j)``.
    """

    labels: tuple
    products: tuple
    gram: tuple
    domain: str

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def zero(self):
        return _zero_of(self.gram[0][0])

    @property
    def one(self):
        return _one_of(self.gram[0][0])

    def basis(self, i: int) -> "AlgebraElement":
        z, o = self.zero, self.one
        return AlgebraElement(self, tuple(o if k == i else z for k in range(self.dim)))

    def element(self, coords) -> "AlgebraElement":
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, coords)

    def __getitem__(self, label: str) -> "AlgebraElement":
        return self.basis(self.labels.index(label))

    def multiply(self, u, v) -> tuple:
        out = [self.zero] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                s = ui * vj
                for k, ck in enumerate(self.products[i][j]):
                    if ck != 0:
                        out[k] = out[k] + s * ck
        return tuple(out)

    def form(self, u, v):
        acc = self.zero
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj != 0 and self.gram[i][j] != 0:
                    acc = acc + ui * vj * self.gram[i][j]
        return acc

    def gram_matrix(self) -> ExactMatrix:
        return ExactMatrix(self.gram)

    @property
    def characteristic(self) -> int:
        for row in self.gram:
            for x in row:
                c = characteristic_of(x)
                if c:
                    return c
        return 0

    def __eq__(self, other):
        if not isinstance(other, AlgebraTable) or other.labels != self.labels:
            return False
        return _tables_agree(self, other)

    def __hash__(self):
        return hash(self.labels)

    # identities -----------------------------------------------------------
    def trilinear_defect(self, i: int, j: int, k: int) -> tuple:
        """(xy)z + (yz)x + (zx)y - phi(x,y)z - phi(y,z)x - phi(z,x)y on basis vectors."""
        x, y, z = (self.basis(t).coords for t in (i, j, k))
        lhs = _vadd(
            _vadd(self.multiply(self.products[i][j], z), self.multiply(self.products[j][k], x)),
            self.multiply(self.products[k][i], y),
        )
        rhs = _vadd(
            _vadd(_vscale(z, self.gram[i][j]), _vscale(x, self.gram[j][k])),
            _vscale(y, self.gram[k][i]),
        )
        return _vsub(lhs, rhs)

    def frobenius_defect(self, i: int, j: int, k: int):
        """phi(e_i e_j, e_k) - phi(e_i, e_j e_k)."""
        return self.form(self.products[i][j], self.basis(k).coords) - self.form(
            self.basis(i).coords, self.products[j][k]
        )

    def check_identities(self) -> None:
        """Raise ClosureFailure unless commutativity, symmetry, Frobenius and trilinear identities hold."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                if tuple(self.products[i][j]) != tuple(self.products[j][i]):
                    raise ClosureFailure(f"product {self.labels[i]}*{self.labels[j]} not commutative")
                if self.gram[i][j] != self.gram[j][i]:
                    raise ClosureFailure("Gram matrix not symmetric")
        for i, j, k in combinations_with_replacement(range(n), 3):
            if any(c != 0 for c in self.trilinear_defect(i, j, k)):
                raise ClosureFailure(f"trilinear identity fails on {self.labels[i]}, {self.labels[j]}, {self.labels[k]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.frobenius_defect(i, j, k) != 0:
                        raise ClosureFailure(
                            f"Frobenius identity fails on {self.labels[i]}, {self.labels[j]}, {self.labels[k]}"
                        )

    # export ---------------------------------------------------------------
    def to_json(self) -> dict:
        def text(x):
            return x.to_text() if isinstance(x, ParamPoly) else str(x)

        n = self.dim
        return {
            "domain": self.domain,
            "basis": list(self.labels),
            "products": {
                f"{self.labels[i]}*{self.labels[j]}": [text(c) for c in self.products[i][j]]
                for i in range(n)
                for j in range(i, n)
            },
            "gram": {
                f"{self.labels[i]},{self.labels[j]}": text(self.gram[i][j]) for i in range(n) for j in range(i, n)
            },
        }

    def dump(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraTable":
        labels = tuple(data["basis"])
        n = len(labels)
        prods = [[None] * n for _ in range(n)]
        gram = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                vec = tuple(ParamPoly.from_text(s) for s in data["products"][f"{labels[i]}*{labels[j]}"])
                prods[i][j] = prods[j][i] = vec
                g = ParamPoly.from_text(data["gram"][f"{labels[i]},{labels[j]}"])
                gram[i][j] = gram[j][i] = g
        return cls(labels, tuple(map(tuple, prods)), tuple(map(tuple, gram)), data["domain"])


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    table: AlgebraTable
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.table.dim:
            raise ValueError("coordinate length does not match table dimension")

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.table, self.table.multiply(self.coords, other.coords))
        return AlgebraElement(self.table, tuple(c * other for c in self.coords))

    def __rmul__(self, other):
        return AlgebraElement(self.table, tuple(other * c for c in self.coords))

    def __add__(self, other):
        return AlgebraElement(self.table, _vadd(self.coords, other.coords))

    def __sub__(self, other):
        return AlgebraElement(self.table, _vsub(self.coords, other.coords))

    def __neg__(self):
        return AlgebraElement(self.table, tuple(-c for c in self.coords))

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and all(x == y for x, y in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(self.coords)

    def phi(self, other: "AlgebraElement"):
        return self.table.form(self.coords, other.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self):
        parts = []
        for c, lab in zip(self.coords, self.table.labels):
            if c == 0:
                continue
            t = c.to_text() if isinstance(c, ParamPoly) else str(c)
            parts.append(f"({t})*{lab}")
        return " + ".join(parts) if parts else "0"


def _zero_of(x):
    return ParamPoly() if isinstance(x, ParamPoly) else x * 0


def _one_of(x):
    if isinstance(x, ParamPoly):
        return ParamPoly.const(1)
    return x * 0 + 1


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vscale(u, c):
    return tuple(a * c for a in u)


def _tables_agree(s: AlgebraTable, t: AlgebraTable) -> bool:
    n = s.dim
    return all(
        s.gram[i][j] == t.gram[i][j] and all(x == y for x, y in zip(s.products[i][j], t.products[i][j]))
        for i in range(n)
        for j in range(n)
    )


# ---------------------------------------------------------------------------
# Closure engine
# ---------------------------------------------------------------------------


class _Nonlinear(Exception):
    pass


def _lin_const(c) -> dict:
    return {None: c} if c != 0 else {}


def _lin_is_const(e: dict) -> bool:
    return all(k is None for k in e)


def _lin_add_into(acc: dict, e: dict, scale=None) -> None:
    for k, v in e.items():
        v = v if scale is None else v * scale
        if k in acc:
            s = acc[k] + v
            if s == 0:
                del acc[k]
            else:
                acc[k] = s
        elif v != 0:
            acc[k] = v


def _lin_mul(e: dict, f: dict) -> dict:
    if not e or not f:
        return {}
    if _lin_is_const(e):
        c = e[None]
        return {k: v * c for k, v in f.items()}
    if _lin_is_const(f):
        c = f[None]
        return {k: v * c for k, v in e.items()}
    raise _Nonlinear


class _Closure:
    def __init__(self):
        n = 8
        self.n = n
        self.prod: dict = {}
        self.gram: dict = {}
        one = ParamPoly.const(1)
        for i in range(n):
            for j in range(i, n):
                if (i, j) in _MONOMIAL_PRODUCTS:
                    k0 = _MONOMIAL_PRODUCTS[(i, j)]
                    self.prod[(i, j)] = [_lin_const(one) if k == k0 else {} for k in range(n)]
                else:
                    self.prod[(i, j)] = [{("p", i, j, k): one} for k in range(n)]
                key = (i, j) if (i, j) in _GIVEN_GRAM else (j, i)
                if key in _GIVEN_GRAM:
                    self.gram[(i, j)] = _lin_const(_GIVEN_GRAM[key])
                else:
                    self.gram[(i, j)] = {("g", i, j): one}

    def p(self, i, j):
        return self.prod[(i, j) if i <= j else (j, i)]

    def g(self, i, j):
        return self.gram[(i, j) if i <= j else (j, i)]

    def unknowns(self) -> set:
        out = set()
        for vec in self.prod.values():
            for e in vec:
                out.update(k for k in e if k is not None)
        for e in self.gram.values():
            out.update(k for k in e if k is not None)
        return out

    def mul_vec_basis(self, vec, k) -> list:
        """vec * e_k with vec a list of linear expressions."""
        out = [{} for _ in range(self.n)]
        for i, coeff in enumerate(vec):
            if not coeff:
                continue
            for t, entry in enumerate(self.p(i, k)):
                if entry:
                    _lin_add_into(out[t], _lin_mul(coeff, entry))
        return out

    def form_vec_basis(self, vec, k) -> dict:
        acc: dict = {}
        for i, coeff in enumerate(vec):
            if coeff:
                _lin_add_into(acc, _lin_mul(coeff, self.g(i, k)))
        return acc

    def equations(self):
        n = self.n
        for i, j, k in combinations_with_replacement(range(n), 3):
            try:
                lhs = self.mul_vec_basis(self.p(i, j), k)
                for t, e in enumerate(self.mul_vec_basis(self.p(j, k), i)):
                    _lin_add_into(lhs[t], e)
                for t, e in enumerate(self.mul_vec_basis(self.p(k, i), j)):
                    _lin_add_into(lhs[t], e)
            except _Nonlinear:
                continue
            minus = ParamPoly.const(-1)
            _lin_add_into(lhs[k], self.g(i, j), minus)
            _lin_add_into(lhs[i], self.g(j, k), minus)
            _lin_add_into(lhs[j], self.g(k, i), minus)
            for e in lhs:
                if e:
                    yield e
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    try:
                        e = self.form_vec_basis(self.p(i, j), k)
                        f = self.form_vec_basis(self.p(j, k), i)
                    except _Nonlinear:
                        continue
                    _lin_add_into(e, f, ParamPoly.const(-1))
                    if e:
                        yield e

    def substitute(self, solved: dict) -> None:
        def sub(e: dict) -> dict:
            if not any(k in solved for k in e):
                return e
            out: dict = {}
            for k, v in e.items():
                if k in solved:
                    _lin_add_into(out, solved[k], v)
                else:
                    _lin_add_into(out, {k: v})
            return out

        for key, vec in self.prod.items():
            self.prod[key] = [sub(e) for e in vec]
        for key, e in self.gram.items():
            self.gram[key] = sub(e)


def _sym_key(s):
    return (s[0], s[1:])


def _pick_pivot(row: dict):
    syms = sorted((k for k in row if k is not None), key=_sym_key)
    for s in syms:
        if row[s].is_constant():
            return s
    # a polynomial coefficient is usable when it divides the whole row exactly
    for s in syms:
        c = row[s]
        try:
            for v in row.values():
                v.exquo(c)
        except ArithmeticError:
            continue
        return s
    return None


def _normalize(row: dict, s) -> dict:
    c = row[s]
    if c.is_constant():
        inv = ParamPoly.const(1 / Fraction(c.constant_value()))
        return {k: v * inv for k, v in row.items()}
    return {k: v.exquo(c) for k, v in row.items()}


def _eliminate(rows) -> dict:
    """Reduced echelon over the rows; returns unknowns pinned to constants."""
    pivots: dict = {}
    pending = list(rows)
    while pending:
        deferred = []
        progressed = False
        for row in pending:
            row = dict(row)
            for s in [k for k in row if k in pivots]:
                if s in row:
                    _lin_add_into(row, pivots[s], -row[s])
            if all(k is None for k in row):
                if row:
                    raise ClosureFailure("structure-constant system is inconsistent")
                continue
            s = _pick_pivot(row)
            if s is None:
                deferred.append(row)
                continue
            row = _normalize(row, s)
            for t, prow in pivots.items():
                if s in prow:
                    _lin_add_into(prow, row, -prow[s])
            pivots[s] = row
            progressed = True
        if not progressed:
            break
        pending = deferred
    return {s: {None: -row[None]} if None in row else {} for s, row in pivots.items() if set(row) <= {s, None}}


def build_universal_table(max_rounds: int = 50) -> AlgebraTable:
    """Derive the 8-dimensional universal algebra over the parameter ring."""
    cl = _Closure()
    for _ in range(max_rounds):
        unknown = cl.unknowns()
        if not unknown:
            break
        solved = _eliminate(cl.equations())
        solved = {k: v for k, v in solved.items() if k in unknown}
        if not solved:
            raise ClosureFailure(f"no progress with {len(unknown)} unknowns left")
        cl.substitute(solved)
    else:
        raise ClosureFailure("closure did not converge")
    n = cl.n

    def val(e):
        return e.get(None, ParamPoly())

    prods = [[tuple(val(e) for e in cl.p(i, j)) for j in range(n)] for i in range(n)]
    gram = [[val(cl.g(i, j)) for j in range(n)] for i in range(n)]
    table = AlgebraTable(BASIS_LABELS, tuple(map(tuple, prods)), tuple(map(tuple, gram)), "Q[alpha,beta,gamma,psi]")
    table.check_identities()
    return table


_GOLDEN = "universal_table.json"


def load_golden_table() -> AlgebraTable:
    """The derived universal table as checked into the package data."""
    text = resources.files("axialpc.data").joinpath(_GOLDEN).read_text()
    return AlgebraTable.from_json(json.loads(text))


@lru_cache(maxsize=1)
def universal_table() -> AlgebraTable:
    """Golden table if present, else a fresh derivation."""
    try:
        return load_golden_table()
    except (FileNotFoundError, ModuleNotFoundError):
        return build_universal_table()


# ---------------------------------------------------------------------------
# Specialization and subtables
# ---------------------------------------------------------------------------


def specialize_table(t: AlgebraTable, point: dict, check: bool = True) -> AlgebraTable:
    """Substitute parameter values; rejects characteristic 2 and 3."""
    point = {k: v for k, v in point.items() if v is not None}
    for v in point.values():
        if not isinstance(v, ParamPoly):
            p = characteristic_of(v)
            if p in (2, 3):
                raise UnsupportedCharacteristic(f"characteristic {p} is not supported")

    def sp(x):
        return x.specialize(point) if isinstance(x, ParamPoly) else x

    prods = tuple(tuple(tuple(sp(c) for c in vec) for vec in row) for row in t.products)
    gram = tuple(tuple(sp(g) for g in row) for row in t.gram)
    if all(n in point for n in PARAMS) and not any(isinstance(v, ParamPoly) for v in point.values()):
        dom = next((domain_of(v) for v in point.values() if not isinstance(v, (int, Fraction))), None)
        domain = repr(dom) if dom is not None else "Q"
    else:
        domain = t.domain
    out = AlgebraTable(t.labels, prods, gram, domain)
    if check:
        out.check_identities()
    return out


def subalgebra_table(t: AlgebraTable, indices) -> AlgebraTable:
    """Restrict to a multiplicatively closed span of basis vectors."""
    idx = list(indices)
    prods = []
    for i in idx:
        row = []
        for j in idx:
            vec = t.products[i][j]
            if any(vec[k] != 0 for k in range(t.dim) if k not in idx):
                raise ValueError("basis subset is not closed under multiplication")
            row.append(tuple(vec[k] for k in idx))
        prods.append(tuple(row))
    gram = tuple(tuple(t.gram[i][j] for j in idx) for i in idx)
    return AlgebraTable(tuple(t.labels[i] for i in idx), tuple(prods), gram, t.domain)


# ---------------------------------------------------------------------------
# Multiplication operators and Miyamoto involutions
# ---------------------------------------------------------------------------


def left_mult(t: AlgebraTable, x: AlgebraElement) -> ExactMatrix:
    """Matrix of y -> x*y; column j is x*e_j."""
    cols = [t.multiply(x.coords, t.basis(j).coords) for j in range(t.dim)]
    return ExactMatrix.from_columns(cols)


def is_idempotent(t: AlgebraTable, x: AlgebraElement) -> bool:
    return all(p == q for p, q in zip(t.multiply(x.coords, x.coords), x.coords))


def miyamoto(t: AlgebraTable, axis: AlgebraElement) -> ExactMatrix:
    """tau = (8 L^2 - 5 I) / 3, i.e. -1 on the 1/2-eigenspace of L and +1 elsewhere."""
    if t.characteristic in (2, 3):
        raise UnsupportedCharacteristic(f"characteristic {t.characteristic} is not supported")
    ell = left_mult(t, axis)
    one = t.one
    ident = ExactMatrix.identity(t.dim, one)
    half = one / 2 if not isinstance(one, ParamPoly) else ParamPoly.const(Fraction(1, 2))
    fusion = (ell - ident) @ (ell + ident) @ (ell - ident.scale(half))
    if not fusion.is_zero():
        raise NotAnAxis(f"{axis} has eigenvalues outside {{1, -1, 1/2}}")
    third = one / 3 if not isinstance(one, ParamPoly) else ParamPoly.const(Fraction(1, 3))
    return ((ell @ ell).scale(8 * one) - ident.scale(5 * one)).scale(third)


def is_automorphism(t: AlgebraTable, m: ExactMatrix) -> bool:
    cols = m.columns()
    for i in range(t.dim):
        for j in range(i, t.dim):
            lhs = m @ list(t.products[i][j])
            rhs = t.multiply(cols[i], cols[j])
            if any(x != y for x, y in zip(lhs, rhs)):
                return False
    return True


def preserves_form(t: AlgebraTable, m: ExactMatrix) -> bool:
    g = t.gram_matrix()
    return m.transpose() @ g @ m == g


def conjugate_axis(t: AlgebraTable, axis: AlgebraElement, m: ExactMatrix) -> AlgebraElement:
    """Image of ``axis`` under the automorphism ``m``."""
    if not is_automorphism(t, m):
        raise NotAutomorphism("matrix does not respect the algebra product")
    return AlgebraElement(t, tuple(m @ list(axis.coords)))
