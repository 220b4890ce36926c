"""Command-line front end.

Exit codes: 0 success, 1 a verification failure, 2 a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import affine_group as ag
from .antichain import BRUTEFORCE_MAX_N, bounds, budget, format_golden, strong_classes
from .errors import BudgetExceeded, ModulusError, VerificationFailure
from .perm_group import SYMMETRIC_MAX_DEGREE, builtin_group, conjugacy_class, quasipolarity_classes
from .residue_ring import Modulus
from .verification import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def rational(x: Fraction):
    return {"num": x.numerator, "den": x.denominator}


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def quasipolarity_rows(G, n, check):
    if G.kind == "affine":
        classes = ag.quasipolarity_conjugacy(n, validate=True)
        if check:
            filtered = [g for g in ag.enumerate_group(n) if ag.is_quasipolarity_bruteforce(g)]
            got = sorted((m for c in classes for m in c.members), key=lambda g: g.sort_key)
            if got != filtered:
                raise VerificationFailure("characterized vs brute-force quasipolarities", n)
        return [
            {"v": c.v, "u": [m.u for m in c.members], "orbit_size": c.orbit_size,
             "stabilizer_size": c.stabilizer_size}
            for c in classes
        ]
    rows = []
    for rep, size, cent in quasipolarity_classes(G):
        members = sorted(conjugacy_class(G, rep), key=lambda p: _sort_key(G, p))
        row = {"orbit_size": size, "stabilizer_size": cent}
        if G.labels is not None:
            labels = [G.label(p) for p in members]
            (row["v"],) = {g.v for g in labels}
            row["u"] = [g.u for g in labels]
        else:
            row["members"] = [list(p) for p in members]
        rows.append(row)
    rows.sort(key=lambda r: (r.get("v", 0), r.get("u"), r.get("members")))
    return rows


def _sort_key(G, p):
    label = G.label(p)
    return label.sort_key if isinstance(label, ag.AffineMap) else tuple(label)


def strong_rows(G, n, check, max_n):
    strategy = "bruteforce" if n <= budget(BRUTEFORCE_MAX_N, max_n) else "via_Mq"
    classes = strong_classes(G, n, strategy, max_n=max_n)
    if check and G.kind == "affine" and strategy == "bruteforce":
        other = strong_classes(G, n, "via_Mq", max_n=max_n)
        if [(c.representative, c.polarity) for c in classes] != [(c.representative, c.polarity) for c in other]:
            raise VerificationFailure("bruteforce vs via_Mq strong classes", n)
    rows = []
    for c in classes:
        p = c.polarity
        row = {"mask_hex": c.representative.hex, "elements": c.representative.elements(),
               "orbit_size": c.orbit_size}
        row["polarity"] = {"u": p.u, "v": p.v} if isinstance(p, ag.AffineMap) else {"images": list(p)}
        rows.append(row)
    return rows


def report_dict(r):
    return {
        "n": r.n, "group": r.group, "exact_strong_count": r.exact_strong_count,
        "sperner": r.sperner, "purdy": r.purdy, "ekr": r.ekr,
        "cota": rational(r.cota), "cota_floor": r.cota_floor,
        "closed_form": rational(r.closed_form) if r.closed_form is not None else None,
    }


def _fmt_frac(x):
    return str(x) if x is not None else "-"


def render(command, n, group, rows, fmt) -> str:
    if fmt == "json":
        return dump_json({"command": command, "n": n, "group": group, "result": rows})
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if command == "quasipolarities":
            w.writerow(["n", "group", "v", "u", "orbit_size", "stabilizer_size"])
            for row in rows:
                # unlabelled groups: no (v, u); the images go in the u column
                us = row.get("u") or [" ".join(map(str, m)) for m in row["members"]]
                for u in us:
                    w.writerow([n, group, row.get("v", ""), u, row["orbit_size"], row["stabilizer_size"]])
        elif command == "strong":
            w.writerow(["n", "group", "mask_hex", "polarity_u", "polarity_v"])
            for row in rows:
                p = row["polarity"]
                w.writerow([n, group, row["mask_hex"], p.get("u", " ".join(map(str, p.get("images", [])))), p.get("v", "")])
        else:
            w.writerow(list(rows))
            w.writerow([f"{v['num']}/{v['den']}" if isinstance(v, dict) else ("" if v is None else v)
                        for v in rows.values()])
        return buf.getvalue()

    if command == "quasipolarities":
        total = sum(r["orbit_size"] for r in rows)
        buf.write(f"{group} group on Z_{n}: {len(rows)} classes, {total} quasipolarities\n")
        for row in rows:
            if "u" in row:
                buf.write(f"  v={row['v']}  u={row['u']}  orbit={row['orbit_size']}  stabilizer={row['stabilizer_size']}\n")
            else:
                buf.write(f"  class of {row['members'][0]}  orbit={row['orbit_size']}  "
                          f"stabilizer={row['stabilizer_size']}\n")
    elif command == "strong":
        buf.write(f"{group} group on Z_{n}: {len(rows)} strong classes\n")
        for row in rows:
            p = row["polarity"]
            pol = f"e^{p['u']}*{p['v']}" if "u" in p else str(p["images"])
            buf.write(f"  {row['mask_hex']}  {{{','.join(map(str, row['elements']))}}}  polarity {pol}\n")
    else:
        r = rows
        cota = Fraction(r["cota"]["num"], r["cota"]["den"])
        cf = r["closed_form"]
        buf.write(f"{group} group on Z_{n}\n")
        buf.write(f"  strong classes : {r['exact_strong_count']}\n")
        buf.write(f"  cota           : {cota} (floor {r['cota_floor']})\n")
        buf.write(f"  closed form    : {_fmt_frac(Fraction(cf['num'], cf['den']) if cf else None)}\n")
        buf.write(f"  EKR            : {r['ekr']}\n")
        buf.write(f"  Purdy          : {r['purdy']}\n")
        buf.write(f"  Sperner        : {r['sperner']}\n")
    return buf.getvalue()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", choices=["affine", "dihedral", "symmetric"], default="affine")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--check", dest="check", action="store_true", default=None,
                        help="cross-validate against brute force (default: on for n <= 12)")
    common.add_argument("--no-check", dest="check", action="store_false")
    common.add_argument("--max-n", type=int, default=None,
                        help="enumeration budget (largest n); overrides ANTICHAIN_BUDGET")
    common.add_argument("--output", "-o", default=None)

    parser = argparse.ArgumentParser(prog="strong-dichotomies",
                                     description="Quasipolarities and strong dichotomies of Z_n.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("quasipolarities", "strong", "bounds", "export"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--n-min", type=int, default=2)
    return parser


def _group(args, n):
    try:
        Modulus(n)
    except ModulusError as exc:
        raise UsageError(str(exc)) from None
    if args.group == "symmetric" and n > SYMMETRIC_MAX_DEGREE:
        raise UsageError(f"symmetric group is limited to n <= {SYMMETRIC_MAX_DEGREE}")
    return builtin_group(args.group, n)


def _emit(text, output):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(args) -> int:
    if args.command == "verify":
        results = list(run_suite(args.n_max, args.group, check=args.check, n_min=args.n_min))
        text = "".join(r.line() + "\n" for r in results)
        failed = sum(not r.passed for r in results)
        text += f"{len(results) - failed} passed, {failed} failed\n"
        _emit(text, args.output)
        return EXIT_FAIL if failed else EXIT_OK

    n = args.n
    G = _group(args, n)
    check = n <= 12 if args.check is None else args.check
    if args.command == "quasipolarities":
        rows = quasipolarity_rows(G, n, check)
    elif args.command == "strong":
        rows = strong_rows(G, n, check, args.max_n)
    elif args.command == "bounds":
        rows = report_dict(bounds(G, n, max_n=args.max_n))
    else:
        classes = strong_classes(G, n, max_n=args.max_n)
        text = format_golden(classes, bounds(G, n, max_n=args.max_n))
        _emit(text, args.output or f"{args.group}_{n}.csv")
        return EXIT_OK
    _emit(render(args.command, n, args.group, rows, args.format), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, BudgetExceeded, ModulusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
