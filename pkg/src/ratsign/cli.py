"""Command-line front end: ``python3 -m ratsign <command> ...``.

Exit status is 0 on success, 2 for bad usage or invalid input, and 1 when a
verification fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from ratsign import algebra, alternations, bwgraphs, profiles, snumbers

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def _partition(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"not a comma-separated partition: {text!r}") from None
    if not parts or any(p < 1 for p in parts):
        raise UsageError(f"partition needs positive parts: {text!r}")
    if list(parts) != sorted(parts, reverse=True):
        raise UsageError(f"partition must be decreasing: {text!r}")
    return parts


# commands -----------------------------------------------------------------


def cmd_alternations(args) -> str:
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    tables = alternations.count_recursive(args.max)
    rows = []
    for n in range(args.max + 1):
        row = {"n": n, "A": tables.A[n], "B": tables.B[n],
               "B_by_pos": tables.B_by_pos.get(n, [])}
        if args.bruteforce:
            if n > alternations.BRUTEFORCE_LIMIT:
                raise UsageError(f"--bruteforce is limited to n <= {alternations.BRUTEFORCE_LIMIT}")
            a, b, pos = alternations.count_bruteforce(n)
            row["bruteforce_agrees"] = (a, b) == (tables.A[n], tables.B[n]) and (n == 0 or pos == row["B_by_pos"])
        rows.append(row)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["n", "A_n", "B_n"] + (["bruteforce_agrees"] if args.bruteforce else [])
        w.writerow(header)
        for r in rows:
            w.writerow([r["n"], r["A"], r["B"]] + ([r["bruteforce_agrees"]] if args.bruteforce else []))
        return buf.getvalue().rstrip("\n")
    return dump_json({"rows": rows})


def cmd_series(args) -> str:
    try:
        el = alternations.family(args.which, args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"which": args.which, "c": args.c, "element": algebra.gelement_to_json(el),
           "text": algebra.format_gelement(el)}
    deg_f, deg_g = algebra.degrees(el)
    out["deg_f"] = list(deg_f) if deg_f else None
    out["deg_g"] = list(deg_g) if deg_g else None
    if args.order is not None:
        if args.order < 0:
            raise UsageError("--order must be non-negative")
        out["expansion"] = [str(c) for c in algebra.expand(el, args.order).coeffs]
    if args.check_odes is not None:
        out["odes_hold"] = alternations.verify_odes(args.check_odes)
    return dump_json(out)


def cmd_bwgraphs(args) -> str:
    if args.verify_invariance is not None:
        d = args.verify_invariance
        if d < 2:
            raise UsageError("--verify-invariance needs d >= 2")
        bad = bwgraphs.verify_invariance(d)
        report = {"d": d, "mismatches": [[list(a), list(b), x, y] for a, b, x, y in bad]}
        return dump_json(report), (EXIT_FAIL if bad else EXIT_OK)
    if args.white is None or args.black is None:
        raise UsageError("give --white and --black, or --verify-invariance d")
    lw, lb = _partition(args.white), _partition(args.black)
    if sum(lw) != sum(lb):
        raise UsageError("white and black partitions must have the same size")
    sw, sb = bwgraphs.signed_sums(lw, lb)
    report = {"white": list(lw), "black": list(lb), "S_white": sw, "S_black": sb}
    if args.list:
        report["graphs"] = [bwgraphs.graph_report(G) for G in bwgraphs.enumerate_graphs(lw, lb)]
    return dump_json(report)


def cmd_profiles(args) -> str:
    try:
        lam = profiles.ReducedProfiles.parse(args.lam, args.parity)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    wanted = [x.strip() for x in args.report.split(",") if x.strip()]
    known = {"stats", "vanishing", "bounds", "leading"}
    if set(wanted) - known:
        raise UsageError(f"unknown report(s) {sorted(set(wanted) - known)}")
    out = {"lambda": lam.to_text(), "parity": lam.parity}
    if "stats" in wanted:
        s = profiles.stats(lam)
        out["stats"] = {"c": s.c_frak, "o": s.o_frak, "e": s.e_frak, "b": s.b_frak, "A": s.A}
    if "vanishing" in wanted:
        out["vanishing"] = {"nonvanishing": profiles.nonvanishing(lam),
                            "reason": profiles.trivially_vanishes(lam)}
    if "bounds" in wanted:
        bf, bg = profiles.degree_bounds(lam)
        out["bounds"] = {"f": list(bf), "g": list(bg)}
    if "leading" in wanted:
        stated = profiles.leading_coefficients(lam)
        assembled = profiles.assembled_leading_coefficients(lam)
        out["leading"] = {
            t.side: {"degree": list(t.degree), "coefficient": str(t.coefficient),
                     "assembled": str(a.coefficient)}
            for t, a in zip(stated, assembled)}
    return dump_json(out)


def cmd_snumbers(args) -> str:
    if not args.empty:
        raise UsageError("only the empty profile is supported (pass --empty)")
    if args.max_m < 0:
        raise UsageError("--max-m must be non-negative")
    rep = snumbers.s_numbers_empty(args.max_m, args.parity)
    if args.asymptotics:
        try:
            rep.diagnostics["asymptotics"] = snumbers.asymptotic_report(rep).to_json()
        except snumbers.InsufficientDataError as exc:
            raise UsageError(str(exc)) from None
    if args.json:
        return dump_json(rep.to_json())
    return "\n".join(f"{m}: {s}" for m, s in rep.values)


def cmd_fb(args) -> str:
    try:
        with open(args.descriptor, encoding="utf-8") as fh:
            desc = snumbers.BaseDescriptor.from_json(json.load(fh))
        F = snumbers.assemble_FB(desc)
    except (OSError, json.JSONDecodeError, snumbers.InvalidDescriptorError) as exc:
        raise UsageError(str(exc)) from None
    deg_f, deg_g, cf, cg = snumbers.observed_leading_terms(F)
    out = {
        "descriptor": desc.to_json(),
        "epsilon": snumbers.epsilon_base(desc),
        "F_B": algebra.gelement_to_json(F),
        "text": algebra.format_gelement(F),
        "deg_f": list(deg_f) if deg_f else None,
        "deg_g": list(deg_g) if deg_g else None,
        "lc_f": None if cf is None else str(cf),
        "lc_g": None if cg is None else str(cg),
    }
    if args.max_m is not None:
        out["S"] = [str(x) for x in snumbers.extract_s_numbers(F, args.max_m)]
    return dump_json(out)


def cmd_verify_all(args):
    from ratsign import verify

    names = None
    if args.only:
        prefixes = [x.strip() for x in args.only.split(",")]
        names = [n for n, _ in verify.CHECKS if any(n.startswith(p) for p in prefixes)]
    results = verify.run_all(names)
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines), (EXIT_FAIL if failed else EXIT_OK)


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ratsign", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("alternations", help="A_n and B_n tables")
    a.add_argument("--max", type=int, default=12)
    a.add_argument("--format", choices=["csv", "json"], default="json")
    a.add_argument("--bruteforce", action="store_true", help="cross-check by enumeration")
    a.set_defaults(func=cmd_alternations)

    s = sub.add_parser("series", help="the elements f_c, g_c, gt_c, u_c, v_c")
    s.add_argument("--which", default="u_c")
    s.add_argument("--c", type=int, default=0)
    s.add_argument("--order", type=int)
    s.add_argument("--check-odes", type=int, metavar="ORDER")
    s.set_defaults(func=cmd_series)

    b = sub.add_parser("bwgraphs", help="signed counts of real bw-graphs")
    b.add_argument("--white")
    b.add_argument("--black")
    b.add_argument("--list", action="store_true")
    b.add_argument("--verify-invariance", type=int, metavar="D")
    b.set_defaults(func=cmd_bwgraphs)

    pr = sub.add_parser("profiles", help="statistics of reduced profiles")
    pr.add_argument("--lambda", dest="lam", default="", help='e.g. "3,2,1,1;3,2,2"')
    pr.add_argument("--parity", choices=[profiles.ODD, profiles.EVEN], default=profiles.ODD)
    pr.add_argument("--report", default="stats,vanishing,bounds,leading")
    pr.set_defaults(func=cmd_profiles)

    sn = sub.add_parser("snumbers", help="S-numbers of the empty profile")
    sn.add_argument("--empty", action="store_true")
    sn.add_argument("--parity", choices=[profiles.ODD, profiles.EVEN], default=profiles.ODD)
    sn.add_argument("--max-m", type=int, default=15)
    sn.add_argument("--json", action="store_true")
    sn.add_argument("--asymptotics", action="store_true")
    sn.set_defaults(func=cmd_snumbers)

    fb = sub.add_parser("fb", help="assemble F_B from a base descriptor")
    fb.add_argument("--descriptor", required=True, metavar="FILE")
    fb.add_argument("--max-m", type=int)
    fb.set_defaults(func=cmd_fb)

    v = sub.add_parser("verify-all", help="run every acceptance check")
    v.add_argument("--only", help="comma-separated check number prefixes, e.g. 01,04")
    v.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"ratsign: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
