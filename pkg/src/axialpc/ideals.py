"""Ideals, quotients and Gram-rank checks for algebra tables over a field."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ImproperIdeal, NotAutomorphism
from .linalg import ExactMatrix, echelon, kernel, rank
from .pc_core import AlgebraElement, AlgebraTable, is_automorphism

__all__ = [
    "IdealBasis",
    "ideal_closure",
    "fixed_point_defect",
    "quotient",
    "induced_matrix",
    "gram_rank",
    "radical",
    "is_invariant",
]


@dataclass(frozen=True, eq=False)
class IdealBasis:
    """Reduced echelon basis of an ideal; ``pivots[i]`` is the leading column of row i."""

    table: AlgebraTable
    rows: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.table, r) for r in self.rows]

    def reduce(self, v) -> tuple:
        """Representative of ``v`` with zero coordinates at every pivot column."""
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != 0:
                v = [x - c * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def contains_ideal(self, other: "IdealBasis") -> bool:
        return all(self.contains(r) for r in other.rows)

    def to_json(self) -> dict:
        return {
            "parent": self.table.domain,
            "basis": list(self.table.labels),
            "dim": self.dim,
            "rows": [[str(x) for x in r] for r in self.rows],
        }


def _span(table: AlgebraTable, vectors) -> IdealBasis:
    vectors = [tuple(v) for v in vectors if any(x != 0 for x in v)]
    if not vectors:
        return IdealBasis(table, (), ())
    rows, pivots = echelon([list(v) for v in vectors])
    return IdealBasis(table, tuple(tuple(r) for r in rows[: len(pivots)]), tuple(pivots))


def _coords(x):
    return x.coords if isinstance(x, AlgebraElement) else tuple(x)


def ideal_closure(t: AlgebraTable, seeds) -> IdealBasis:
    """Smallest subspace containing ``seeds`` and closed under multiplication by ``t``."""
    ideal = _span(t, [_coords(s) for s in seeds])
    while True:
        new = [t.multiply(r, t.basis(k).coords) for r in ideal.rows for k in range(t.dim)]
        grown = _span(t, list(ideal.rows) + [v for v in new if not ideal.contains(v)])
        if grown.dim == ideal.dim:
            return ideal
        ideal = grown


def fixed_point_defect(t: AlgebraTable, m: ExactMatrix, k: int) -> list[AlgebraElement]:
    """``m^k x_i - x_i`` for every basis vector ``x_i``."""
    if not is_automorphism(t, m):
        raise NotAutomorphism("matrix does not respect the algebra product")
    mk = m**k
    out = []
    for i in range(t.dim):
        col = mk.column(i)
        out.append(AlgebraElement(t, tuple(c - (t.one if j == i else t.zero) for j, c in enumerate(col))))
    return out


def quotient(t: AlgebraTable, ideal: IdealBasis):
    """Quotient table on the non-pivot basis vectors, plus the projection map.

    The Gram matrix of the quotient is the form restricted to those
    representatives; it is the induced form when the ideal lies in the radical.
    """
    if ideal.dim >= t.dim:
        raise ImproperIdeal("the ideal is the whole algebra")
    keep = [c for c in range(t.dim) if c not in ideal.pivots]

    def project(v) -> tuple:
        r = ideal.reduce(_coords(v))
        return tuple(r[c] for c in keep)

    prods = tuple(
        tuple(project(t.products[i][j]) for j in keep)
        for i in keep
    )
    gram = tuple(tuple(t.gram[i][j] for j in keep) for i in keep)
    q = AlgebraTable(tuple(t.labels[c] for c in keep), prods, gram, t.domain)
    return q, project


def induced_matrix(t: AlgebraTable, ideal: IdealBasis, m: ExactMatrix) -> ExactMatrix:
    """Matrix of ``m`` on the quotient by an ``m``-invariant ideal."""
    if not is_invariant(ideal, m):
        raise ValueError("ideal is not invariant under the matrix")
    keep = [c for c in range(t.dim) if c not in ideal.pivots]
    cols = []
    for c in keep:
        r = ideal.reduce(m.column(c))
        cols.append([r[k] for k in keep])
    return ExactMatrix.from_columns(cols)


def is_invariant(ideal: IdealBasis, m: ExactMatrix) -> bool:
    return all(ideal.contains(m @ list(r)) for r in ideal.rows)


def gram_rank(t: AlgebraTable) -> int:
    return rank(t.gram_matrix())


def radical(t: AlgebraTable) -> IdealBasis:
    """Kernel of the Gram form, as a subspace (an ideal by Frobenius invariance)."""
    return _span(t, kernel(t.gram_matrix()))
