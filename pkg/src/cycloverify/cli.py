"""Command-line front end.

    cycloverify characters 8
    cycloverify lvalues 5 --method both
    cycloverify regulators --range 5..32
    cycloverify verify --range 5..32 --json
    cycloverify dedekind-selftest --trials 200

Exit status: 0 when everything passes, 1 on any failed check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import replace

from .characters import character_group, conductor, evaluate, parity, primitive_characters
from .lfunctions import (
    ConvergenceError,
    l_e_one_closed,
    l_e_one_series,
    l_one_closed,
    l_one_series,
)
from .regulators import dedekind_det_check, verify_index_relation
from .unitgroups import half_group
from .verify import Tolerances, Verifier

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    try:
        lo, hi = text.split("..")
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _text(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.12g}{v.imag:+.3g}i"
    if isinstance(v, float):
        return f"{v:.12g}"
    return "" if v is None else str(v)


def emit(rows: list[dict], fmt: str, header: str | None = None, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        if header:
            print(f"# {header}", file=sys.stderr)
        for r in rows:
            print(json.dumps({k: _jsonable(v) for k, v in r.items()}), file=out)
        return
    if header:
        print(f"# {header}", file=out)
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(keys)
        for r in rows:
            w.writerow([_text(r[k]) for k in keys])
        return
    cells = [[_text(r[k]) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    print("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip(), file=out)
    for c in cells:
        print("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip(), file=out)


def _moduli(args) -> list[int]:
    ms = list(args.moduli or [])
    if args.range:
        ms += args.range
    if not ms:
        raise UsageError("give at least one modulus or --range a..b")
    bad = [m for m in ms if m < 3]
    if bad:
        raise UsageError(f"moduli must be >= 3, got {bad}")
    return sorted(set(ms))


def _standard_modulus(m: int) -> None:
    if m < 3:
        raise UsageError(f"modulus must be >= 3, got {m}")
    if m % 4 == 2:
        raise UsageError(f"m = {m} is congruent to 2 mod 4")


def _tolerances(args) -> Tolerances:
    tol = Tolerances()
    if args.tol_series is not None:
        tol = replace(tol, series=args.tol_series)
    if args.tol_det is not None:
        tol = replace(tol, det=args.tol_det, ratio=args.tol_det)
    return tol


def _dps(args) -> int | None:
    return args.precision if args.precision and args.precision > 15 else None


def cmd_characters(args) -> int:
    m = args.modulus
    if m < 3:
        raise UsageError(f"modulus must be >= 3, got {m}")
    rows = []
    for chi in character_group(m):
        two = evaluate(chi, 2)
        rows.append({
            "label": chi.label,
            "parity": parity(chi),
            "conductor": conductor(chi),
            "chi(2)": "0" if two is None else f"e(2pi i*{two})",
        })
    emit(rows, args.format)
    return EXIT_OK


def cmd_lvalues(args) -> int:
    m = args.modulus
    _standard_modulus(m)
    stol = args.tol_series if args.tol_series is not None else 1e-8
    rows = []
    status = EXIT_OK
    for f in (d for d in range(1, m + 1) if m % d == 0):
        for chi in primitive_characters(f):
            if chi.is_principal():
                continue
            row = {"label": chi.label, "conductor": f, "parity": parity(chi)}
            try:
                if args.method in ("closed", "both"):
                    row["L_closed"] = l_one_closed(chi)
                    row["L_E_closed"] = l_e_one_closed(chi)
                if args.method in ("series", "both"):
                    row["L_series"] = l_one_series(chi, stol).value
                    row["L_E_series"] = l_e_one_series(chi, stol).value
                if args.method == "both":
                    row["disagreement"] = max(
                        abs(row["L_closed"] - row["L_series"]),
                        abs(row["L_E_closed"] - row["L_E_series"]),
                    )
                row["error"] = ""
            except ConvergenceError as exc:
                row["error"] = str(exc)
                status = EXIT_FAIL
            rows.append(row)
    keys = {k: None for r in rows for k in r}
    emit([{k: r.get(k) for k in keys} for r in rows], args.format)
    return status


def cmd_regulators(args) -> int:
    rows = []
    status = EXIT_OK
    tol = _tolerances(args)
    for m in _moduli(args):
        try:
            rep = verify_index_relation(m, dps=_dps(args))
        except ValueError as exc:
            rows.append({"modulus": m, "R_cyc": None, "R_tilde_cyc": None, "eta": None, "ratio": None,
                         "generates": None, "residual": None, "status": f"skipped: {exc}"})
            continue
        ok = rep.passed(tol.ratio, tol.det)
        status = status if ok else EXIT_FAIL
        rows.append({
            "modulus": m,
            "R_cyc": rep.r_cyc,
            "R_tilde_cyc": rep.r_tilde_cyc,
            "eta": rep.eta.real,
            "ratio": "singular" if rep.singular else rep.ratio,
            "generates": rep.generates,
            "residual": rep.residual,
            "status": "pass" if ok else "fail",
        })
    emit(rows, args.format)
    return status


def cmd_verify(args) -> int:
    tol = _tolerances(args)
    verifier = Verifier(tol=tol, dps=_dps(args))
    records = verifier.run_many(_moduli(args))
    header = f"tolerances: {tol.header()} precision={_dps(args) or 'double'}"
    emit([r.to_dict() for r in records], args.format, header)
    return EXIT_FAIL if any(r.status == "fail" for r in records) else EXIT_OK


def cmd_dedekind_selftest(args) -> int:
    rng = random.Random(args.seed)
    groups = [half_group(m) for m in range(3, args.max_m + 1) if len(half_group(m)) <= 24]
    tol = args.tol_det if args.tol_det is not None else 1e-8
    worst = 0.0
    fails = 0
    for _ in range(args.trials):
        g = rng.choice(groups)
        f = {a: complex(rng.gauss(0, 1), rng.gauss(0, 1)) for a in g}
        r = dedekind_det_check(g, f).residual
        worst = max(worst, r)
        fails += r >= tol
    emit([{"trials": args.trials, "max_m": args.max_m, "worst_residual": worst, "failures": fails}], args.format)
    return EXIT_FAIL if fails else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="one JSON object per line")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.set_defaults(format="text")
    common.add_argument("--tol-series", type=float, default=None)
    common.add_argument("--tol-det", type=float, default=None)
    common.add_argument("--precision", type=int, default=None, help="decimal digits; > 15 switches regulators to mpmath")

    p = argparse.ArgumentParser(prog="cycloverify", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("characters", parents=[common], help="list the characters mod m")
    s.add_argument("modulus", type=int)
    s.set_defaults(func=cmd_characters)

    s = sub.add_parser("lvalues", parents=[common], help="L(1, chi) and L_E(1, chi) for conductors dividing m")
    s.add_argument("modulus", type=int)
    s.add_argument("--method", choices=("closed", "series", "both"), default="both")
    s.set_defaults(func=cmd_lvalues)

    for name, func, help_ in (
        ("regulators", cmd_regulators, "R_cyc, R~_cyc and eta for prime powers"),
        ("verify", cmd_verify, "run the verification suite"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("moduli", type=int, nargs="*")
        s.add_argument("--range", type=parse_range, default=None, metavar="A..B")
        s.set_defaults(func=func)

    s = sub.add_parser("dedekind-selftest", parents=[common], help="randomized group-determinant identities")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--max-m", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_dedekind_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
