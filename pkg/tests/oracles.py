"""Independent oracles, written before the checks that consume them.

They share no arithmetic with the package: sympy solves for the
2-generated subalgebra from the defining identities, a plain-Python
breadth-first search counts group elements, and sympy matrices give
orders and ranks.  ``python tests/oracles.py`` regenerates the frozen
values in ``tests/golden/oracle.json``.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from pathlib import Path

import sympy as sp

GOLDEN = Path(__file__).parent / "golden" / "oracle.json"
alpha = sp.Symbol("alpha")


def two_generated_algebra():
    """Products and form on (a, b, ab) solved from the trilinear and Frobenius identities."""
    n = 3
    unknown = sp.symbols("u0:9")
    forms = sp.symbols("f0:2")
    e = [sp.Matrix([1 if i == j else 0 for j in range(n)]) for i in range(n)]
    prod = {
        (0, 0): e[0], (1, 1): e[1], (0, 1): e[2],
        (0, 2): sp.Matrix(unknown[0:3]), (1, 2): sp.Matrix(unknown[3:6]), (2, 2): sp.Matrix(unknown[6:9]),
    }
    gram = sp.Matrix([[1, alpha, alpha], [alpha, 1, forms[0]], [alpha, forms[0], forms[1]]])
    gram[1, 2] = gram[2, 1] = alpha

    def mul(x, y):
        out = sp.zeros(n, 1)
        for i in range(n):
            for j in range(n):
                if x[i] != 0 and y[j] != 0:
                    out += x[i] * y[j] * prod[(min(i, j), max(i, j))]
        return out

    def phi(x, y):
        return (x.T * gram * y)[0, 0]

    eqs = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = e[i], e[j], e[k]
        lhs = mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y)
        rhs = phi(x, y) * z + phi(y, z) * x + phi(z, x) * y
        eqs.extend(lhs - rhs)
        eqs.append(phi(mul(x, y), z) - phi(x, mul(y, z)))
    eqs = [sp.expand(q) for q in eqs if sp.expand(q) != 0]
    sols = sp.solve(eqs, list(unknown) + list(forms), dict=True)
    if len(sols) != 1:
        raise RuntimeError(f"expected a unique solution, got {len(sols)}")
    s = sols[0]
    prod = {k: v.subs(s) for k, v in prod.items()}
    return prod, gram.subs(s)


def tau_ab_two_generated():
    prod, _ = two_generated_algebra()

    def left(i):
        cols = [prod[(min(i, j), max(i, j))] for j in range(3)]
        return sp.Matrix.hstack(*cols)

    eye = sp.eye(3)
    ta = (8 * left(0) ** 2 - 5 * eye) / 3
    tb = (8 * left(1) ** 2 - 5 * eye) / 3
    return sp.simplify(ta * tb)


def sympy_order(m: sp.Matrix, cutoff: int = 200) -> int | None:
    power = m
    for k in range(1, cutoff + 1):
        if sp.simplify(power - sp.eye(m.shape[0])) == sp.zeros(*m.shape):
            return k
        power = sp.expand(power * m)
    return None


def bfs_order(gens, p: int | None = None, cutoff: int = 10_000) -> int | None:
    """Group order by breadth-first products of tuple matrices; exact rationals when p is None."""
    n = len(gens[0])

    def norm(m):
        return tuple(tuple((x % p) if p else x for x in row) for row in m)

    def mul(x, y):
        return norm([[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)])

    gens = [norm(g) for g in gens]
    ident = norm([[1 if i == j else 0 for j in range(n)] for i in range(n)])
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cutoff:
                    return None
                queue.append(y)
    return len(seen)


def sympy_rank(rows, p: int | None = None) -> int:
    if p is None:
        return sp.Matrix(rows).rank()
    from sympy.polys.domains import GF
    from sympy.polys.matrices import DomainMatrix

    return DomainMatrix([[GF(p)(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), GF(p)).rank()


# ---------------------------------------------------------------------------
# frozen values
# ---------------------------------------------------------------------------

# points whose tau matrices the BFS oracle enumerates; small groups only
F5_POINTS = {"PSL(2,7)": (3, 3, 4, 4), "A6": (3, 3, 1, 1), "A7": (3, 3, 1, 4)}


def _taus_rows(point, p=None):
    from fractions import Fraction

    from axialpc.pc_core import miyamoto, specialize_table, universal_table
    from axialpc.scalars import PrimeField

    vals = [PrimeField(p)(v) for v in point] if p else [Fraction(v) for v in point]
    t = specialize_table(universal_table(), dict(zip(("alpha", "beta", "gamma", "psi"), vals)))
    mats = [miyamoto(t, t[x]) for x in "abc"]
    conv = (lambda x: int(x)) if p else (lambda x: x)
    return [[[conv(x) for x in r] for r in m.rows] for m in mats], t


def compute() -> dict:
    from fractions import Fraction

    out = {}
    tab = tau_ab_two_generated()
    out["tau_ab_3x3"] = [[str(sp.expand(tab[i, j])) for j in range(3)] for i in range(3)]
    out["order_3x3"] = {
        str(v): sympy_order(tab.subs(alpha, v))
        for v in (sp.Rational(-1, 8), sp.Rational(1, 4), sp.Rational(5, 8), sp.Rational(1, 16) + 3 * sp.sqrt(5) / 16)
    }
    out["group_f5"] = {}
    for name, point in F5_POINTS.items():
        gens, t = _taus_rows(point, 5)
        out["group_f5"][name] = bfs_order(gens, 5)
    gens, t = _taus_rows((Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(5, 32)))
    out["group_psl27_q"] = bfs_order(gens)
    out["gram_rank_psl27_q"] = sympy_rank([[sp.Rational(x.numerator, x.denominator) for x in r] for r in t.gram])
    for psi, k in ((Fraction(5, 32), 3), (Fraction(-1, 8), 4)):
        gens, _ = _taus_rows((Fraction(-1, 8),) * 3 + (psi,))
        out[f"group_conj_k{k}"] = bfs_order(gens)
    out["gram_rank_f5"] = {
        str(point): sympy_rank([[int(x) for x in r] for r in _taus_rows(point, 5)[1].gram], 5)
        for point in ((3, 4, 1, 1), (3, 0, 4, 4), (3, 3, 4, 4))
    }
    return out


def load() -> dict:
    return json.loads(GOLDEN.read_text())


if __name__ == "__main__":
    GOLDEN.write_text(json.dumps(compute(), indent=1, sort_keys=True) + "\n")
    print(GOLDEN.read_text())
