"""Enumeration and structure of matrix groups generated by Miyamoto involutions.

Over F_p the work is done with numpy: a batch of matrices is multiplied on
the right by a generator as one (m*n x n) @ (n x n) product in float64,
which is exact while n * p^2 < 2^53.  Every matrix is packed base p into a
few uint64 words and viewed as a fixed-width byte string; sorted arrays of
these keys give vectorized membership tests.

Over Q or a number field the generators are first reduced modulo a large
prime at which all their entries are integral.  Reduction is a group
homomorphism, so the image is never larger than the group: an image that
exceeds the cutoff is a proof that the group does too.  When the image is
small, an exact breadth-first search over the original field checks that
the reduction is injective before the image's structure is reported.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod

import numpy as np

from .errors import NotEnumerated, Singular, UnsupportedCharacteristic
from .linalg import ExactMatrix, det_bareiss
from .polynomials import ParamPoly, roots_mod_p
from .scalars import NumberFieldElem, PrimeFieldElem, is_prime

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_CUTOFF",
    "SWEEP_CUTOFF",
    "GroupReport",
    "CatalogEntry",
    "CATALOG",
    "bfs_closure",
    "derived_analysis",
    "bounded_infinite_probe",
    "catalog_matches",
    "psl3_order",
    "psu3_order",
    "sl_order",
]

DEFAULT_CUTOFF = 2_000_000
SWEEP_CUTOFF = 200_000
# above this many elements only three BFS layers are kept in memory
STORE_LIMIT = 2_000_000
# structure analysis (derived series, center) is skipped above this order
ANALYSIS_LIMIT = 400_000
_CHUNK = 100_000


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def psl3_order(q: int) -> int:
    return q**3 * (q**3 - 1) * (q**2 - 1) // gcd(3, q - 1)


def psu3_order(q: int) -> int:
    return q**3 * (q**3 + 1) * (q**2 - 1) // gcd(3, q + 1)


def sl_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    solvable: bool | None = False
    perfect: bool | None = None
    center: int | None = None

    def consistent(self, order, solvable, perfect, center) -> bool:
        if order != self.order:
            return False
        for mine, theirs in ((self.solvable, solvable), (self.perfect, perfect), (self.center, center)):
            if mine is not None and theirs is not None and mine != theirs:
                return False
        return True


CATALOG = (
    CatalogEntry("A5", 60, False, True, 1),
    CatalogEntry("PSL(2,7)", 168, False, True, 1),
    CatalogEntry("A6", 360, False, True, 1),
    CatalogEntry("A7", 2520, False, True, 1),
    CatalogEntry("PSU(3,5)", psu3_order(5), False, True, 1),
    CatalogEntry("PSL(3,5)", psl3_order(5), False, True, 1),
    CatalogEntry("5^2:(5^2:(SL(2,5):2))", 25 * 25 * 120 * 2, False, False, None),
    CatalogEntry("5^5:A5", 5**5 * 60, False, None, None),
    CatalogEntry("5^5:S5", 5**5 * 120, False, False, None),
    CatalogEntry("PSL(3,7)", psl3_order(7), False, True, 1),
    CatalogEntry("PSU(3,7)", psu3_order(7), False, True, 1),
    CatalogEntry("PSL(3,11)", psl3_order(11), False, True, 1),
    CatalogEntry("PSU(3,11)", psu3_order(11), False, True, 1),
    CatalogEntry("PSL(3,13)", psl3_order(13), False, True, 1),
    CatalogEntry("PSU(3,13)", psu3_order(13), False, True, 1),
    CatalogEntry("SL(8,5)", sl_order(8, 5), False, True, 4),
)


def catalog_matches(order, solvable=None, perfect=None, center=None, involutions: int = 0) -> list[str]:
    """All catalog names consistent with the data; never picks one among several."""
    names = [e.name for e in CATALOG if e.consistent(order, solvable, perfect, center)]
    if involutions == 2 and order and order % 2 == 0:
        names.append(f"D{order // 2}")
    return names


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------


@dataclass
class GroupReport:
    generators: int
    domain: str
    outcome: str  # "order" or "exceeded"
    cutoff: int
    order: int | None = None
    solvable: bool | None = None
    perfect: bool | None = None
    derived_length: int | None = None
    center_order: int | None = None
    order_histogram: dict = field(default_factory=dict)
    catalog: list = field(default_factory=list)
    layers: list = field(default_factory=list)
    method: str = ""
    _enum: object = field(default=None, repr=False, compare=False)

    @property
    def exceeded(self) -> bool:
        return self.outcome == "exceeded"

    def to_json(self) -> dict:
        out = {
            "generators": self.generators,
            "domain": self.domain,
            "outcome": self.outcome,
            "cutoff": self.cutoff,
            "method": self.method,
        }
        if self.order is not None:
            out["order"] = self.order
        for key in ("solvable", "perfect", "derived_length", "center_order"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out["order_histogram"] = {str(k): v for k, v in sorted(self.order_histogram.items(), key=lambda kv: str(kv[0]))}
        out["catalog"] = list(self.catalog)
        out["layers"] = list(self.layers)
        return out

    def element_array(self) -> np.ndarray:
        """Stored elements, shape (order, n, n), over F_p or the mod-p image used in characteristic 0."""
        if self._enum is None or self._enum.elems is None:
            raise NotEnumerated("no stored enumeration")
        return self._enum.elems

    @property
    def modulus(self) -> int:
        if self._enum is None:
            raise NotEnumerated("no stored enumeration")
        return self._enum.arith.p

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        """Membership of each matrix in a stack of shape (m, n, n)."""
        self.element_array()
        return self._enum.contains(x)


# ---------------------------------------------------------------------------
# F_p engine
# ---------------------------------------------------------------------------


class _Fp:
    def __init__(self, p: int, n: int):
        if n * (p - 1) ** 2 >= 2**53:
            raise ValueError(f"prime {p} too large for exact float64 products")
        self.p = p
        self.n = n
        digits = 1
        while p ** (digits + 1) < 2**64:
            digits += 1
        self.digits = digits
        self.words = -(-(n * n) // digits)
        self.weights = np.array([p**i for i in range(digits)], dtype=np.uint64)
        self.dtype = np.uint8 if p < 256 else np.int32
        self.key_dtype = np.dtype((np.void, 8 * self.words))
        self.identity = np.eye(n, dtype=self.dtype)

    def keys(self, x: np.ndarray) -> np.ndarray:
        m = x.shape[0]
        flat = x.reshape(m, -1).astype(np.uint64)
        pad = self.words * self.digits - flat.shape[1]
        if pad:
            flat = np.concatenate([flat, np.zeros((m, pad), dtype=np.uint64)], axis=1)
        k = (flat.reshape(m, self.words, self.digits) * self.weights).sum(axis=2, dtype=np.uint64)
        return np.ascontiguousarray(k).view(self.key_dtype).ravel()

    def rmul(self, x: np.ndarray, g: np.ndarray) -> np.ndarray:
        m, n = x.shape[0], self.n
        y = x.reshape(m * n, n).astype(np.float64) @ g.astype(np.float64)
        return np.mod(y, self.p).astype(self.dtype).reshape(m, n, n)

    def lmul(self, g: np.ndarray, x: np.ndarray) -> np.ndarray:
        return self.rmul(x.transpose(0, 2, 1), g.T).transpose(0, 2, 1)

    def bmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        z = np.matmul(x.astype(np.float64), y.astype(np.float64))
        return np.mod(z, self.p).astype(self.dtype)

    def mul(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        return self.rmul(g[None], h)[0]

    def inverse(self, g: np.ndarray) -> np.ndarray:
        p, n = self.p, self.n
        a = [[int(v) for v in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(g)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] % p), None)
            if piv is None:
                raise Singular("generator is not invertible mod p")
            a[c], a[piv] = a[piv], a[c]
            inv = pow(a[c][c], -1, p)
            a[c] = [v * inv % p for v in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [(v - f * w) % p for v, w in zip(a[r], a[c])]
        return np.array([row[n:] for row in a], dtype=self.dtype)

    def is_identity(self, x: np.ndarray) -> np.ndarray:
        return np.all(x.reshape(x.shape[0], -1) == self.identity.reshape(-1), axis=1)


def _member(sorted_keys: np.ndarray, q: np.ndarray) -> np.ndarray:
    if sorted_keys.size == 0:
        return np.zeros(q.shape[0], dtype=bool)
    idx = np.searchsorted(sorted_keys, q)
    idx[idx == sorted_keys.size] = 0
    return sorted_keys[idx] == q


@dataclass
class _Enumeration:
    arith: _Fp
    gens: list
    order: int
    layers: list
    keys: np.ndarray | None = None  # sorted
    elems: np.ndarray | None = None  # aligned with keys

    def contains(self, x: np.ndarray) -> np.ndarray:
        return _member(self.keys, self.arith.keys(x))


class _Exceeded(Exception):
    def __init__(self, layers):
        self.layers = layers


def _expand(arith: _Fp, frontier: np.ndarray, gens, is_old) -> tuple[np.ndarray, np.ndarray]:
    """Products frontier*g that are new; returns (unique keys, elements)."""
    keep_k, keep_x = [], []
    for start in range(0, frontier.shape[0], _CHUNK):
        block = frontier[start : start + _CHUNK]
        for g in gens:
            cand = arith.rmul(block, g)
            k = arith.keys(cand)
            k, idx = np.unique(k, return_index=True)
            fresh = ~is_old(k)
            keep_k.append(k[fresh])
            keep_x.append(cand[idx[fresh]])
    if not keep_k:
        return np.empty(0, arith.key_dtype), np.empty((0, arith.n, arith.n), arith.dtype)
    k = np.concatenate(keep_k)
    x = np.concatenate(keep_x)
    k, idx = np.unique(k, return_index=True)
    return k, x[idx]


def _enumerate_stored(arith: _Fp, gens, cutoff: int, base: _Enumeration | None = None, new=None) -> _Enumeration:
    """Breadth-first closure keeping every element.  ``base`` is extended by ``new``."""
    if base is None:
        frontier = arith.identity[None].copy()
        keys = arith.keys(frontier)
        key_parts, elem_parts = [keys], [frontier]
        visited = keys
        layers = [1]
        step = gens
    else:
        frontier = base.elems
        key_parts, elem_parts = [base.keys], [base.elems]
        visited = base.keys
        layers = [base.order]
        step = new
    total = int(visited.size)
    while frontier.shape[0]:
        k, x = _expand(arith, frontier, step, lambda q: _member(visited, q))
        step = gens
        if not k.size:
            break
        total += int(k.size)
        layers.append(int(k.size))
        if total > cutoff:
            raise _Exceeded(layers)
        key_parts.append(k)
        elem_parts.append(x)
        visited = np.sort(np.concatenate([visited, k]))
        frontier = x
    keys = np.concatenate(key_parts)
    elems = np.concatenate(elem_parts)
    order_ = np.argsort(keys)
    return _Enumeration(arith, list(gens), total, layers, keys[order_], elems[order_])


def _enumerate_layered(arith: _Fp, gens, cutoff: int) -> _Enumeration:
    """Closure for an inverse-closed generating set keeping three layers only."""
    cur = arith.identity[None].copy()
    cur_k = arith.keys(cur)
    prev_k = np.empty(0, arith.key_dtype)
    total, layers = 1, [1]
    while cur.shape[0]:
        pk, ck = prev_k, cur_k
        k, x = _expand(arith, cur, gens, lambda q: _member(pk, q) | _member(ck, q))
        if not k.size:
            break
        total += int(k.size)
        layers.append(int(k.size))
        log.debug("layer %d: %d new, %d total", len(layers) - 1, k.size, total)
        if total > cutoff:
            raise _Exceeded(layers)
        prev_k, cur_k, cur = cur_k, k, x
    return _Enumeration(arith, list(gens), total, layers)


def _closure(arith: _Fp, gens, cutoff: int, store: bool) -> _Enumeration:
    if store:
        return _enumerate_stored(arith, gens, cutoff)
    inv_closed = list(gens)
    for g in gens:
        gi = arith.inverse(g)
        if not any(np.array_equal(gi, h) for h in inv_closed):
            inv_closed.append(gi)
    return _enumerate_layered(arith, inv_closed, cutoff)


# ---------------------------------------------------------------------------
# structure of enumerated F_p groups
# ---------------------------------------------------------------------------


def _commutator(arith: _Fp, x, y):
    xi, yi = arith.inverse(x), arith.inverse(y)
    return arith.mul(arith.mul(xi, yi), arith.mul(x, y))


def _add_generator(arith: _Fp, grp: _Enumeration, gens: list, x) -> _Enumeration:
    gens.append(x)
    return _enumerate_stored(arith, gens, 10**12, base=grp, new=[x])


def _trivial(arith: _Fp) -> _Enumeration:
    e = arith.identity[None].copy()
    return _Enumeration(arith, [], 1, [1], arith.keys(e), e)


def _derived_subgroup(arith: _Fp, gens_h: list) -> tuple[_Enumeration, list]:
    """Commutator subgroup as the normal closure of generator commutators."""
    sub = _trivial(arith)
    sgens: list = []
    for x, y in combinations(gens_h, 2):
        c = _commutator(arith, x, y)
        if not sub.contains(c[None])[0]:
            sub = _add_generator(arith, sub, sgens, c)
    changed = True
    while changed:
        changed = False
        for s in list(sgens):
            for g in gens_h:
                c = arith.mul(arith.mul(arith.inverse(g), s), g)
                if not sub.contains(c[None])[0]:
                    sub = _add_generator(arith, sub, sgens, c)
                    changed = True
    return sub, sgens


def _derived_series(arith: _Fp, grp: _Enumeration):
    """(perfect, solvable, derived length or None, subgroup orders)."""
    cur_order, cur_gens = grp.order, grp.gens
    orders = [cur_order]
    perfect = None
    length = 0
    while cur_order > 1:
        sub, sgens = _derived_subgroup(arith, cur_gens)
        orders.append(sub.order)
        if perfect is None:
            perfect = sub.order == grp.order
        if sub.order == cur_order:
            return perfect, False, None, orders
        cur_order, cur_gens = sub.order, sgens
        length += 1
    return bool(perfect) if perfect is not None else True, True, length, orders


def _center_order(arith: _Fp, grp: _Enumeration) -> int:
    count = 0
    for start in range(0, grp.order, _CHUNK):
        x = grp.elems[start : start + _CHUNK]
        ok = np.ones(x.shape[0], dtype=bool)
        for g in grp.gens:
            ok &= np.all((arith.rmul(x, g) == arith.lmul(g, x)).reshape(x.shape[0], -1), axis=1)
        count += int(ok.sum())
    return count


def _order_histogram(arith: _Fp, grp: _Enumeration, sample: int = 256, limit: int = 5000, seed: int = 0) -> dict:
    rng = np.random.default_rng(seed)
    if grp.order <= sample:
        x = grp.elems
    else:
        x = grp.elems[np.sort(rng.choice(grp.order, size=sample, replace=False))]
    orders = np.zeros(x.shape[0], dtype=np.int64)
    power = x.copy()
    for k in range(1, limit + 1):
        hit = (orders == 0) & arith.is_identity(power)
        orders[hit] = k
        if np.all(orders):
            break
        power = arith.bmul(power, x)
    hist: dict = {}
    for o in orders.tolist():
        key = o if o else f">{limit}"
        hist[key] = hist.get(key, 0) + 1
    return dict(sorted(hist.items(), key=lambda kv: (isinstance(kv[0], str), kv[0])))


# ---------------------------------------------------------------------------
# reduction of characteristic-0 generators
# ---------------------------------------------------------------------------


def _denominators(x) -> list[int]:
    if isinstance(x, Fraction):
        return [x.denominator]
    if isinstance(x, int):
        return [1]
    if isinstance(x, NumberFieldElem):
        return [Fraction(c).denominator for c in x.coords]
    raise TypeError(f"cannot reduce {type(x).__name__} modulo a prime")


def _number_field(gens: list[ExactMatrix]):
    for m in gens:
        for x in m.entries():
            if isinstance(x, NumberFieldElem):
                return x.field
    return None


def _reduce_entry(x, p: int, root: int | None) -> int:
    if isinstance(x, (int, Fraction)):
        q = Fraction(x)
        return q.numerator * pow(q.denominator, -1, p) % p
    acc = 0
    for i, c in enumerate(x.coords):
        c = Fraction(c)
        acc = (acc + c.numerator * pow(c.denominator, -1, p) * pow(root, i, p)) % p
    return acc


def _pick_prime(gens: list[ExactMatrix], skip: int = 0, top: int = 2**24):
    """A prime below ``top`` where all entries are integral, with a root of the field modulus."""
    nf = _number_field(gens)
    dens = 1
    for m in gens:
        for x in m.entries():
            for d in _denominators(x):
                dens = dens * d // gcd(dens, d)
    mod_ints = None
    if nf is not None:
        mods = [Fraction(c) for c in nf.modulus]
        den = 1
        for c in mods:
            den = den * c.denominator // gcd(den, c.denominator)
        dens = dens * den // gcd(dens, den)
        mod_ints = [int(c * den) for c in mods]
    p = top - 1
    found = 0
    while p > 1000:
        if is_prime(p) and dens % p:
            root = None
            if mod_ints is not None:
                if mod_ints[-1] % p == 0:
                    p -= 2
                    continue
                rts = roots_mod_p(mod_ints, p)
                if not rts:
                    p -= 2
                    continue
                root = rts[0]
            if found == skip:
                return p, root
            found += 1
        p -= 2 if p % 2 else 1
    raise ValueError("no suitable reduction prime found")


def _exact_closure_count(gens: list[ExactMatrix], cutoff: int) -> int | None:
    """Exact BFS size over the original field, or None past ``cutoff``."""
    one = gens[0].domain_one
    ident = ExactMatrix.identity(gens[0].n, one)

    def key(m):
        return tuple(m.entries())

    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x @ g
                k = key(y)
                if k not in seen:
                    seen.add(k)
                    nxt.append(y)
                    if len(seen) > cutoff:
                        return None
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _domain_name(gens: list[ExactMatrix]) -> str:
    for m in gens:
        for x in m.entries():
            if isinstance(x, PrimeFieldElem):
                return f"Fp:{x.p}"
            if isinstance(x, NumberFieldElem):
                return repr(x.field)
            if isinstance(x, ParamPoly):
                raise UnsupportedCharacteristic("generators must be specialized to a field")
    return "Q"


def _to_array(m: ExactMatrix, p: int, root=None) -> np.ndarray:
    vals = [[int(x) % p if isinstance(x, PrimeFieldElem) else _reduce_entry(x, p, root) for x in r] for r in m.rows]
    return np.array(vals, dtype=np.int64)


def _involutions(gens: list[ExactMatrix]) -> int:
    return sum(1 for g in gens if (g @ g).is_identity() and not g.is_identity())


def _fill_structure(report: GroupReport, arith: _Fp, grp: _Enumeration, analyze: bool, involutions: int):
    if analyze and grp.elems is not None and grp.order <= ANALYSIS_LIMIT:
        perfect, solvable, length, _ = _derived_series(arith, grp)
        report.perfect, report.solvable, report.derived_length = perfect, solvable, length
        report.center_order = _center_order(arith, grp)
        report.order_histogram = _order_histogram(arith, grp)
    report.catalog = catalog_matches(grp.order, report.solvable, report.perfect, report.center_order, involutions)


def bfs_closure(
    generators: list[ExactMatrix],
    cutoff: int = DEFAULT_CUTOFF,
    analyze: bool = True,
    store: bool | None = None,
) -> GroupReport:
    """Enumerate the group generated by ``generators`` up to ``cutoff`` elements."""
    if not generators:
        raise ValueError("at least one generator is required")
    for g in generators:
        if det_bareiss(g) == 0:
            raise Singular("generator is not invertible")
    domain = _domain_name(generators)
    n = generators[0].n
    involutions = _involutions(generators)
    if store is None:
        store = cutoff <= STORE_LIMIT
    if domain.startswith("Fp:"):
        p = int(domain[3:])
        arith = _Fp(p, n)
        arrays = [_to_array(g, p) for g in generators]
        report = GroupReport(len(generators), domain, "order", cutoff, method="F_p breadth-first closure")
        try:
            grp = _closure(arith, arrays, cutoff, store)
        except _Exceeded as exc:
            report.outcome, report.layers = "exceeded", exc.layers
            return report
        report.order, report.layers, report._enum = grp.order, grp.layers, grp
        _fill_structure(report, arith, grp, analyze, involutions)
        return report
    return _closure_char0(generators, domain, cutoff, analyze, store, involutions)


def _char0_image(generators, cutoff, store, skip=0):
    gens = list(generators)
    for g in generators:
        if not (g @ g).is_identity():
            gens.append(g.inverse())
    p, root = _pick_prime(gens, skip=skip)
    arith = _Fp(p, gens[0].n)
    arrays = [_to_array(g, p, root) for g in gens]
    return arith, p, _closure(arith, arrays, cutoff, store)


def _closure_char0(generators, domain, cutoff, analyze, store, involutions) -> GroupReport:
    report = GroupReport(len(generators), domain, "order", cutoff)
    for attempt in range(3):
        try:
            arith, p, grp = _char0_image(generators, cutoff, store, skip=attempt)
        except _Exceeded as exc:
            report.outcome, report.layers = "exceeded", exc.layers
            report.method = "image mod a large prime exceeded the cutoff (a lower bound for the group)"
            return report
        exact = _exact_closure_count(generators, grp.order)
        if exact == grp.order:
            report.order, report.layers, report._enum = grp.order, grp.layers, grp
            report.method = f"image mod {p}, injectivity confirmed by exact enumeration"
            _fill_structure(report, arith, grp, analyze, involutions)
            return report
    exact = _exact_closure_count(generators, cutoff)
    if exact is None:
        report.outcome = "exceeded"
        report.method = "exact enumeration exceeded the cutoff"
        return report
    report.order = exact
    report.method = "exact enumeration"
    report.catalog = catalog_matches(exact, involutions=involutions)
    return report


def derived_analysis(report: GroupReport):
    """(is_perfect, is_solvable, derived_length) of a completed enumeration."""
    grp = report._enum
    if report.exceeded or grp is None or grp.elems is None:
        raise NotEnumerated("derived analysis needs a completed, stored enumeration")
    if report.perfect is None:
        perfect, solvable, length, _ = _derived_series(grp.arith, grp)
        report.perfect, report.solvable, report.derived_length = perfect, solvable, length
    return report.perfect, report.solvable, report.derived_length


def bounded_infinite_probe(generators: list[ExactMatrix], cutoff: int = SWEEP_CUTOFF) -> GroupReport:
    """Growth evidence for a characteristic-0 group; makes no infiniteness claim."""
    domain = _domain_name(generators)
    if domain.startswith("Fp:"):
        raise UnsupportedCharacteristic("the probe is for characteristic 0 fields")
    return bfs_closure(generators, cutoff, analyze=False, store=False)
