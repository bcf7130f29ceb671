"""Command-line interface: ``gindex <subcommand> ...``.

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import families as fam
from . import oracles
from .algebra import UniPoly, format_poly
from .combinat import TypeKMu, as_partition, types_of
from .errors import GrammarSyntaxError, SizeError
from .expansions import P_METHODS, PTable, expand_recurrence, p_value, type_monomial
from .grammars import Grammar, derive_n, parse_mpoly, u_derive_n, u_dg_expansion_check
from .suites import SUITES, run_suite
from .tableaux import G, KTableau, Tableau, g_index, g_index_k, ktableaux_of, syt_all, syt_of_shape

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
EXPAND_CAP = 10
TABLEAUX_CAP = 10


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_parts(text: str) -> tuple[int, ...]:
    """``"2,1,1,0,0"`` -> ``(2, 1, 1, 0, 0)``; an empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read {text!r} as comma-separated integers") from None


def _type_from_args(k: int, mu_text: str, n: int | None) -> TypeKMu:
    raw = parse_parts(mu_text)
    if any(a < b for a, b in zip(raw, raw[1:])):
        raise UsageError(f"mu={raw} is not weakly decreasing")
    mu = as_partition(raw)
    t = TypeKMu(k, mu)
    if n is not None and n != t.n:
        raise UsageError(f"k + |mu| = {t.n} does not match --n {n}")
    if len(raw) > max(t.n - 1, 0):
        raise UsageError(f"mu has {len(raw)} slots but n - 1 = {t.n - 1}")
    return t


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------


def _type_records(n: int, with_tableaux: bool) -> list[dict]:
    records = []
    for t in types_of(n):
        rec = {"k": t.k, "mu": list(t.padded), "p": p_value(t), "monomial": type_monomial(t).to_text()}
        if with_tableaux:
            rec["tableaux"] = [{**z.to_json(), "g": list(g_index_k(z)), "G": G(z)} for z in ktableaux_of(t)]
        records.append(rec)
    return records


def cmd_expand(args) -> int:
    n = args.n
    if not 1 <= n <= EXPAND_CAP:
        raise UsageError(f"--n must lie in 1..{EXPAND_CAP}")
    exp = expand_recurrence(n)
    if args.grouping == "raw":
        if args.format == "json":
            print(dump_json(exp.to_json()))
        elif args.format == "latex":
            print(exp.to_latex())
        elif args.format == "bfile":
            for i, (coeff, _, _) in enumerate(exp.body.items(), start=1):
                print(f"{i} {coeff}")
        else:
            print(exp.to_text())
        return EXIT_OK
    records = _type_records(n, args.grouping == "tableau")
    if args.format == "json":
        print(dump_json({"n": n, "grouping": args.grouping, "types": records}))
    elif args.format == "bfile":
        for i, rec in enumerate(records, start=1):
            print(f"{i} {rec['p']}")
    elif args.format == "latex":
        terms = [f"{r['p']}\\,{type_monomial(TypeKMu(r['k'], as_partition(r['mu']))).to_latex()}" for r in records]
        print(rf"(cD)^{{{n}}}f &= " + " + ".join(terms))
    else:
        for rec in records:
            t = TypeKMu(rec["k"], as_partition(rec["mu"]))
            print(f"type {t}: p = {rec['p']}  term {rec['monomial']}")
            for z in rec.get("tableaux", []):
                kt = KTableau.from_json(z)
                print(_indent(str(kt)))
                print(_indent(f"g = {tuple(z['g'])}  G = {z['G']}"))
    return EXIT_OK


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be positive")
    report = run_suite(args.suite, args.nmax, args.kmax)
    if args.format == "json":
        print(dump_json({"suite": args.suite, "ok": report.ok, "results": report.results, "failures": report.failures()}))
    else:
        lines = report.lines() if args.verbose or not report.ok else []
        for line in lines:
            if args.verbose or not line.startswith("PASS"):
                print(line)
        passed = sum(report.results.values())
        status = "pass" if report.ok else "FAIL"
        print(f"{args.suite}: {status} ({passed}/{len(report.results)} checks, nmax={args.nmax})")
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def _family_rows(fid: str, ns: Sequence[int], k: int | None, method: str | None) -> list[list[int]]:
    rows = []
    for n in ns:
        if method:
            routes = fam.all_routes(fid, n, k)
            if method not in routes:
                raise UsageError(f"method {method!r} is not available for {fid}; choose from {sorted(routes)}")
            p = routes[method]
        else:
            p = fam.family_poly(fid, n, k)
        rows.append(p.int_coeffs())
    return rows


def cmd_family(args) -> int:
    entry = fam.FAMILIES[args.id]
    if entry.needs_k and args.k is None:
        raise UsageError(f"--k is required for {args.id}")
    if args.n is None and args.nmax is None:
        raise UsageError("give --n or --nmax")
    if args.nmax is not None:
        ns = list(range(entry.offset, args.nmax + 1))
    else:
        ns = [args.n]
    k = args.k if entry.needs_k else None
    if args.format == "bfile":
        for line in fam.bfile_lines(args.id, max(ns), k):
            print(line)
        return EXIT_OK
    rows = _family_rows(args.id, ns, k, args.method)
    if args.format == "json":
        print(dump_json({"family": args.id, "k": k, "n": ns, "coefficients": rows}))
    else:
        for n, row in zip(ns, rows):
            text = format_poly(UniPoly(row))
            print(text if len(ns) == 1 else f"n={n}: {text}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


def cmd_tableaux(args) -> int:
    if args.shape_k is not None:
        t = _type_from_args(args.shape_k, args.shape_mu or "", args.n)
        if t.n > TABLEAUX_CAP:
            raise SizeError(f"tableau listing is capped at n <= {TABLEAUX_CAP}")
        items: list[Tableau | KTableau] = list(ktableaux_of(t))
    else:
        if args.n is None:
            raise UsageError("give --n, or --shape-k with --shape-mu")
        if args.n > TABLEAUX_CAP:
            raise SizeError(f"tableau listing is capped at n <= {TABLEAUX_CAP}")
        if args.shape:
            shape = parse_parts(args.shape)
            if sum(shape) != args.n:
                raise UsageError(f"shape {shape} does not have size {args.n}")
            items = list(syt_of_shape(shape))
        else:
            items = list(syt_all(args.n))
    records = []
    for item in items:
        rec = item.to_json()
        if args.g_index:
            g = g_index_k(item) if isinstance(item, KTableau) else g_index(item)
            rec["g"] = list(g)
            rec["G"] = g.G
        records.append(rec)
    if args.format == "json":
        print(dump_json({"count": len(records), "tableaux": records}))
        return EXIT_OK
    for item, rec in zip(items, records):
        print(item)
        if args.g_index:
            print(f"g = {tuple(rec['g'])}  G = {rec['G']}")
        print()
    total = f", sum of G = {sum(r['G'] for r in records)}" if args.g_index else ""
    print(f"{len(records)} tableaux{total}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# pkmu
# ---------------------------------------------------------------------------


def cmd_pkmu(args) -> int:
    t = _type_from_args(args.k, args.mu, args.n)
    table = PTable.load(args.cache) if args.cache else None
    methods = list(P_METHODS) if args.method == "all" else [args.method]
    values = {m: p_value(t, m, table) for m in methods}
    if args.cache:
        table.save(args.cache)
    if args.format == "json":
        print(dump_json({"k": t.k, "mu": list(t.padded), "n": t.n, "values": values}))
    elif len(values) == 1:
        print(next(iter(values.values())))
    else:
        for m, v in values.items():
            print(f"{m}: {v}")
    return EXIT_OK if len(set(values.values())) == 1 else EXIT_FAIL


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


ORACLE_STATS = {
    **{name: (lambda n, k, s=name: oracles.perm_poly(n, s)) for name in oracles.STATISTICS},
    "exc-cyc": lambda n, k: oracles.exc_cyc_poly(n, k or 1),
    "stirling-des": lambda n, k: oracles.stirling_poly(n, k or 2, "des"),
    "stirling-ap": lambda n, k: oracles.stirling_poly(n, k or 2, "ap"),
    "stirling-lap": lambda n, k: oracles.stirling_poly(n, 2, "lap"),
    "simsun": lambda n, k: oracles.simsun_poly(n),
    "trees012": lambda n, k: oracles.trees012_leaf_poly(n),
    "type-b": lambda n, k: oracles.type_b_poly(n),
    "alternating": lambda n, k: oracles.alternating_count(n),
    "peak-gamma": lambda n, k: oracles.peak_gamma(n),
}


def cmd_oracle(args) -> int:
    value = ORACLE_STATS[args.stat](args.n, args.k)
    if isinstance(value, int):
        coeffs = [value]
    elif isinstance(value, dict):
        coeffs = [value.get(i, 0) for i in range(max(value, default=0) + 1)]
    else:
        coeffs = value.int_coeffs()
    if args.format == "json":
        print(dump_json({"stat": args.stat, "n": args.n, "k": args.k, "coefficients": coeffs}))
    elif args.format == "bfile":
        for i, c in enumerate(coeffs):
            print(f"{i} {c}")
    elif isinstance(value, int):
        print(value)
    elif isinstance(value, dict):
        print(" ".join(f"{i}:{c}" for i, c in sorted(value.items())))
    else:
        print(format_poly(value))
    return EXIT_OK


# ---------------------------------------------------------------------------
# grammar
# ---------------------------------------------------------------------------


def cmd_grammar(args) -> int:
    g = Grammar.parse(args.rules)
    start = parse_mpoly(args.start)
    u = parse_mpoly(args.u) if args.u else None
    result = u_derive_n(g, u, start, args.n) if u is not None else derive_n(g, start, args.n)
    if args.format == "json":
        print(dump_json({"grammar": str(g), "n": args.n, "result": result.to_json()}))
    else:
        print(result)
    if args.check:
        if u is None:
            raise UsageError("--check needs --u")
        ok = u_dg_expansion_check(g, u, start, args.n)
        print(f"tableau expansion: {'pass' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


FORMATS = ("text", "json", "latex", "bfile")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print (cD)^n f")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grouping", choices=("raw", "type", "tableau"), default="raw")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true", help="list every check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="print a polynomial family")
    p.add_argument("--id", choices=sorted(fam.FAMILIES), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--nmax", type=int, help="print every n from the family's offset to nmax")
    p.add_argument("--k", type=int)
    p.add_argument("--method", help="construction route (see families.all_routes)")
    p.add_argument("--format", choices=("text", "json", "bfile"), default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tableaux", help="list SYT or k-Young tableaux")
    p.add_argument("--n", type=int)
    p.add_argument("--shape", help="SYT shape, e.g. 3,2")
    p.add_argument("--shape-k", type=int, help="bottom row length of a k-Young tableau")
    p.add_argument("--shape-mu", help="top partition of a k-Young tableau, e.g. 3,2")
    p.add_argument("--g-index", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("pkmu", help="compute p_{k,mu}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", default="", help="comma-separated parts, zeros allowed")
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=sorted(P_METHODS) + ["all"], default="recurrence")
    p.add_argument("--cache", help="JSON cache file for recurrence values")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_pkmu)

    p = sub.add_parser("oracle", help="brute-force statistic polynomials and counts")
    p.add_argument("--stat", choices=sorted(ORACLE_STATS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("text", "json", "bfile"), default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("grammar", help="iterate a grammar derivative")
    p.add_argument("--rules", required=True, help='e.g. "x -> x*y; y -> x"')
    p.add_argument("--start", default="x")
    p.add_argument("--u", help="multiplier u for (u D_G)^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with the tableau expansion")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_grammar)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (UsageError, GrammarSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
