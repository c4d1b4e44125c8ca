"""Command-line front end: ``axialpc <verb> [options]``.

Exit codes: 0 success or pass, 1 repro mismatch, 2 usage error, 3 cutoff reached.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import AxialError, ParseError, UnknownItem, UnsupportedCharacteristic
from .ideals import fixed_point_defect, gram_rank, ideal_closure, induced_matrix, quotient
from .linalg import Exceeded, char_poly, element_order, min_poly
from .matgroup import DEFAULT_CUTOFF, SWEEP_CUTOFF, bfs_closure
from .pc_core import miyamoto, specialize_table, universal_table
from .polynomials import AlgebraicNumber, ParamPoly
from .reference import order_minpolys
from .roots import WORDS, order_table_fp, solve_order_2gen, solve_order_3gen_conjugate, tau_word
from .scalars import QQ, NumberField, parse_domain
from . import repro

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CUTOFF = 0, 1, 2, 3
PARAMS = ("alpha", "beta", "gamma", "psi")
SWEEP_COLUMNS = [
    "p", "alpha", "beta", "gamma", "psi",
    "ord_ab", "ord_bc", "ord_ac", "ord_abc_conj",
    "group_outcome", "group_order", "solvable", "perfect", "gram_rank",
]


class UsageError(AxialError):
    pass


# ---------------------------------------------------------------------------
# parameter parsing
# ---------------------------------------------------------------------------

_PROP1_RE = re.compile(r"^prop1:k=(\d+):root=(\d+)$")


def prop1_value(k: int, root: int):
    """Root number ``root`` (1-based, increasing) among the real alpha of exact order k.

    Returns the value as the generator of the number field of its minimal
    polynomial, or a rational when that polynomial is linear.
    """
    roots = sorted(
        (r for f in order_minpolys(k) for r in AlgebraicNumber.real_roots_of(f)),
        key=lambda r: r.interval.lower,
    )
    if not 1 <= root <= len(roots):
        raise ParseError(f"order {k} has {len(roots)} real roots; root={root} is out of range")
    f = roots[root - 1].minpoly.monic()
    if f.degree() == 1:
        return -Fraction(f.coeffs[0])
    return NumberField([Fraction(c) for c in f.coeffs]).gen


def parse_value(text: str, domain):
    m = _PROP1_RE.match(text.strip())
    if m:
        value = prop1_value(int(m.group(1)), int(m.group(2)))
        if isinstance(domain, NumberField) and getattr(value, "field", domain) != domain:
            raise ParseError(f"{text} lives in {value.field!r}, not {domain!r}")
        return value if domain is QQ or isinstance(domain, NumberField) else domain(value)
    try:
        return domain.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot read {text!r} in {domain!r}") from exc


def parse_point(args, required=PARAMS) -> dict:
    domain = parse_domain(args.field)
    point = {}
    for name in PARAMS:
        raw = getattr(args, name)
        if raw is None:
            if name in required:
                raise UsageError(f"--{name} is required")
            continue
        point[name] = parse_value(raw, domain)
    return point


def point_table(args, required=PARAMS):
    point = parse_point(args, required)
    if not point:
        return universal_table()
    return specialize_table(universal_table(), point, check=len(point) == 4)


_TERM_RE = re.compile(r"\s*([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?(a\(bc\)|b\(ac\)|ab|bc|ac|a|b|c)\s*")


def parse_element(t, text: str):
    """Linear combination of basis labels, e.g. ``b-c`` or ``2*ab + 1/2*a(bc)``."""
    pos, coords = 0, [t.zero] * t.dim
    text = text.strip()
    if not text:
        raise ParseError("empty element")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse element {text!r} at position {pos}")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        i = t.labels.index(m.group(3))
        coords[i] = coords[i] + coef * t.one
        pos = m.end()
    return t.element(coords)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, ParamPoly):
        return x.to_text()
    return str(x)


def emit(args, payload, text: str | None = None, rows: list | None = None):
    if args.out == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    elif args.out == "csv" and rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text if text is not None else json.dumps(payload, indent=2))


def _matrix_payload(m):
    return [[_fmt(x) for x in r] for r in m.rows]


def _order_payload(o):
    return {"order": o} if isinstance(o, int) else {"order": None, "outcome": str(o)}


def _word_matrix(t, word: str):
    ta, tb, tc = (miyamoto(t, t[x]) for x in "abc")
    return {"a": ta, "b": tb, "c": tc, "ab": ta @ tb, "bc": tb @ tc, "ac": ta @ tc, "ab^c": ta @ (tc @ tb @ tc)}[word]


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_table(args) -> int:
    t = point_table(args, required=())
    if args.out == "json":
        print(t.dump())
        return EXIT_OK
    lines = [f"domain {t.domain}"]
    for i, j in itertools.combinations_with_replacement(range(t.dim), 2):
        lines.append(f"{t.labels[i]} * {t.labels[j]} = {t.element(t.products[i][j])}")
    for i, j in itertools.combinations_with_replacement(range(t.dim), 2):
        lines.append(f"({t.labels[i]}, {t.labels[j]}) = {_fmt(t.gram[i][j])}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_tau(args) -> int:
    t = point_table(args, required=())
    m = _word_matrix(t, args.word)
    emit(args, {"word": args.word, "domain": t.domain, "matrix": _matrix_payload(m)}, str(m), _matrix_payload(m))
    return EXIT_OK


def cmd_order(args) -> int:
    if args.size == 3:
        if args.word != "ab":
            raise UsageError("--size 3 supports only the word ab")
        point = parse_point(args, required=("alpha",))
        m = tau_word("ab", 3).map(lambda x: x.specialize({"alpha": point["alpha"]}))
    else:
        m = _word_matrix(point_table(args), args.word)
    o = element_order(m, args.cutoff if args.cutoff_given else 10_000)
    emit(args, {"word": args.word, **_order_payload(o)}, str(o), [["word", "order"], [args.word, str(o)]])
    return EXIT_CUTOFF if isinstance(o, Exceeded) and not o.proven_infinite else EXIT_OK


def _poly_payload(f):
    return [_fmt(c) for c in reversed(f.coeffs)]


def cmd_charpoly(args) -> int:
    t = point_table(args, required=())
    f = char_poly(_word_matrix(t, args.word))
    emit(args, {"word": args.word, "coefficients_high_first": _poly_payload(f)}, f.to_text(), [_poly_payload(f)])
    return EXIT_OK


def cmd_minpoly(args) -> int:
    t = point_table(args, required=())
    f = min_poly(_word_matrix(t, args.word))
    emit(args, {"word": args.word, "coefficients_high_first": _poly_payload(f)}, f.to_text(), [_poly_payload(f)])
    return EXIT_OK


def cmd_solve_order(args) -> int:
    if args.mode == "2gen":
        sol = solve_order_2gen(args.k)
    else:
        sol = solve_order_3gen_conjugate(args.k)
    cands = [
        {
            "minpoly": c.minpoly.to_text(),
            "order": str(c.order),
            "roots": [str(r.refine(Fraction(1, 10**6)).interval) for r in c.roots],
        }
        for c in sol.candidates
    ]
    payload = {"k": sol.k, "parameter": sol.parameter, "gcd": sol.gcd.to_text(), "candidates": cands}
    text = "\n".join(f"{c['minpoly']}  order {c['order']}  roots {' '.join(c['roots'])}" for c in cands)
    rows = [["minpoly", "order", "roots"]] + [[c["minpoly"], c["order"], " ".join(c["roots"])] for c in cands]
    emit(args, payload, text or "no real candidates", rows)
    return EXIT_OK


def cmd_group(args) -> int:
    t = point_table(args)
    gens = [miyamoto(t, t[x]) for x in "abc"]
    if args.extra_axis:
        gens.append(miyamoto(t, parse_element(t, args.extra_axis)))
    report = bfs_closure(gens, args.cutoff)
    payload = report.to_json()
    payload["gram_rank"] = gram_rank(t)
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    emit(args, payload, text, [list(payload), [json.dumps(v) for v in payload.values()]])
    return EXIT_CUTOFF if report.exceeded else EXIT_OK


def _ideal_from_args(args):
    t = point_table(args)
    seeds = []
    if args.defect:
        ta, tb = (miyamoto(t, t[x]) for x in "ab")
        seeds += fixed_point_defect(t, ta @ tb, args.defect)
    seeds += [parse_element(t, s) for s in args.seed or ()]
    return t, ideal_closure(t, seeds)


def cmd_ideal(args) -> int:
    _, ideal = _ideal_from_args(args)
    payload = ideal.to_json()
    text = f"dim {ideal.dim}\n" + "\n".join(str(e) for e in ideal.elements())
    emit(args, payload, text, [list(ideal.table.labels)] + payload["rows"])
    return EXIT_OK


def cmd_quotient(args) -> int:
    t, ideal = _ideal_from_args(args)
    q, _ = quotient(t, ideal)
    ta, tb = (miyamoto(t, t[x]) for x in "ab")
    m = ta @ tb
    induced = element_order(induced_matrix(t, ideal, m))
    payload = {
        "ideal_dim": ideal.dim,
        "quotient": q.to_json(),
        "tau_ab_order": str(element_order(m)),
        "induced_tau_ab_order": str(induced),
    }
    text = f"ideal dim {ideal.dim}, quotient dim {q.dim} on {', '.join(q.labels)}\n" \
           f"tau_ab order {payload['tau_ab_order']}, on the quotient {induced}"
    emit(args, payload, text)
    return EXIT_OK


def sweep_point(job) -> list:
    """One CSV row; module-level so worker processes can import it."""
    p, values, cutoff = job
    from .scalars import PrimeField

    t = repro.point_table(values, PrimeField(p))
    orders = repro.word_orders(t)
    report = bfs_closure(repro.taus(t), cutoff)
    done = not report.exceeded
    return [
        p, *values, *(str(o) for o in orders),
        report.outcome,
        report.order if done else "",
        report.solvable if done else "",
        report.perfect if done else "",
        gram_rank(t),
    ]


def _sweep_values(args, p: int, name: str) -> list[int]:
    raw = getattr(args, name)
    if raw is None:
        return list(range(p))
    try:
        vals = sorted({int(v) % p for v in raw.split(",")})
    except ValueError as exc:
        raise ParseError(f"--{name} in a sweep takes comma-separated integers") from exc
    return vals


def run_sweep(p: int, grid: dict, cutoff: int, jobs: int = 1) -> list[list]:
    if p in (2, 3):
        raise UnsupportedCharacteristic("sweeps need characteristic at least 5")
    pts = list(itertools.product(*(grid[n] for n in PARAMS)))
    work = [(p, pt, cutoff) for pt in pts]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(sweep_point, work, chunksize=1))
    return [sweep_point(w) for w in work]


def cmd_sweep(args) -> int:
    domain = parse_domain(args.field)
    p = getattr(domain, "p", None)
    if p is None:
        raise UsageError("sweep needs a prime field, e.g. --field Fp:5")
    if p in (2, 3):
        raise UnsupportedCharacteristic("sweeps need characteristic at least 5")
    cutoff = args.cutoff if args.cutoff_given else SWEEP_CUTOFF
    if args.two_generated:
        orders = order_table_fp(p, cutoff)
        rows = [["p", "alpha", "ord_ab"]] + [[p, a, str(o)] for a, o in enumerate(orders)]
        payload = [dict(zip(rows[0], r)) for r in rows[1:]]
    else:
        grid = {n: _sweep_values(args, p, n) for n in PARAMS}
        rows = [SWEEP_COLUMNS] + run_sweep(p, grid, cutoff, args.jobs)
        payload = [dict(zip(SWEEP_COLUMNS, r)) for r in rows[1:]]
    if args.out == "text":
        args.out = "csv"
    emit(args, payload, rows=rows)
    return EXIT_OK


def cmd_repro(args) -> int:
    items = list(repro.ITEMS) if args.item == "all" else [args.item]
    if args.extended:
        import os

        os.environ["AXIALPC_EXTENDED"] = "1"
    reports = [repro.run(i) for i in items]
    if args.out == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        print("\n".join(r.to_text() for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def read_config(path: str) -> dict:
    """``key=value`` lines; ``#`` starts a comment; keys use option names."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"{path}:{n}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lstrip("-").replace("-", "_")] = value
    return out


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--field", default="Q", help="Q, Fp:<p> or NF:<poly in t> (default Q)")
    for name in PARAMS:
        g.add_argument(f"--{name}", help=f"value of {name}; NF values as [c0,c1,...] or prop1:k=<k>:root=<i>")
    g.add_argument("--cutoff", type=int, default=None, help=f"element cutoff (default {DEFAULT_CUTOFF})")
    g.add_argument("--out", choices=("text", "json", "csv"), default="text")
    g.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    g.add_argument("--config", help="key=value file merged under explicit flags")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="axialpc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("table", parents=[common], help="structure constants and Gram matrix").set_defaults(fn=cmd_table)

    word_choices = ("a", "b", "c", *WORDS)
    p = sub.add_parser("tau", parents=[common], help="matrix of an involution or a product")
    p.add_argument("--word", choices=word_choices, default="a")
    p.set_defaults(fn=cmd_tau)

    p = sub.add_parser("order", parents=[common], help="order of a product of involutions")
    p.add_argument("--word", choices=WORDS, default="ab")
    p.add_argument("--size", type=int, choices=(3, 8), default=8)
    p.set_defaults(fn=cmd_order)

    for verb, fn in (("charpoly", cmd_charpoly), ("minpoly", cmd_minpoly)):
        p = sub.add_parser(verb, parents=[common], help=f"{verb} of an involution product")
        p.add_argument("--word", choices=word_choices, default="ab")
        p.set_defaults(fn=fn)

    p = sub.add_parser("solve-order", parents=[common], help="parameter values forcing an order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("2gen", "conj"), default="2gen")
    p.set_defaults(fn=cmd_solve_order)

    p = sub.add_parser("group", parents=[common], help="enumerate <tau_a, tau_b, tau_c>")
    p.add_argument("--extra-axis", help="add the involution of this idempotent, e.g. 'b(ac)'")
    p.set_defaults(fn=cmd_group)

    for verb, fn in (("ideal", cmd_ideal), ("quotient", cmd_quotient)):
        p = sub.add_parser(verb, parents=[common], help=f"{verb} from seed elements")
        p.add_argument("--defect", type=int, help="seed with tau_ab^k x - x for every basis x")
        p.add_argument("--seed", action="append", help="element such as 'b-c' (repeatable)")
        p.set_defaults(fn=fn)

    p = sub.add_parser("sweep", parents=[common], help="CSV over F_p parameter tuples")
    p.add_argument("--two-generated", action="store_true", help="only the 3x3 tau_ab order per alpha")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("repro", parents=[common], help="regenerate a published claim")
    p.add_argument("item", help=f"one of: {', '.join(repro.ITEMS)}, or all")
    p.add_argument("--extended", action="store_true", help="enable the large enumeration budget")
    p.set_defaults(fn=cmd_repro)
    return parser


def _given(argv, key: str) -> bool:
    flag = "--" + key.replace("_", "-")
    return any(a == flag or a.startswith(flag + "=") for a in argv)


def parse_args(argv=None) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.config:
        config = read_config(args.config)
        unknown = set(config) - set(vars(args))
        if unknown:
            raise ParseError(f"unknown config keys: {', '.join(sorted(unknown))}")
        for key, value in config.items():
            if not _given(argv, key):
                setattr(args, key, value)
    args.cutoff_given = args.cutoff is not None
    try:
        args.cutoff = DEFAULT_CUTOFF if args.cutoff is None else int(args.cutoff)
        args.jobs = int(args.jobs)
    except ValueError as exc:
        raise ParseError(f"bad integer option: {exc}") from exc
    if args.out not in ("text", "json", "csv"):
        raise ParseError(f"bad output format {args.out!r}")
    return args


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except AxialError as exc:
        print(f"axialpc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except UnknownItem as exc:
        print(f"axialpc: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParseError, UnsupportedCharacteristic) as exc:
        print(f"axialpc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
