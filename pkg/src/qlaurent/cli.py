"""Command-line interface: saddle constants, exact and asymptotic coefficient
queries, table reproduction, and figure data/rendering."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import mpmath

from . import asym, figures
from .exact_coeffs import (
    laurent_coeff_exact,
    laurent_coeff_numeric,
    sylvester_wave_exact,
    sylvester_wave_numeric,
)
from .hp import find_w0

EXIT_OK = 0
EXIT_CONVERGENCE = 2
EXIT_PARAMETERS = 3
EXIT_BRANCH = 4

# Table registry: id -> (kind, params, published exact value string)
TABLES = {
    "T1": ("laurent", dict(k=1, h=0, m=-1, N=2500), "3.83861799348646318e+67"),
    "T2": (
        "laurent",
        dict(k=3, h=1, m=-2, N=2500),
        "-1.729346669988476e+14 + 7.893754594541664e+14j",
    ),
    "T3": ("wave", dict(k=3, N=4001, n=4001), "2.2581936758249785e+32"),
    "T4": ("laurent", dict(k=1, h=0, m=-4, N=2500), "1.97741548293140288e+60"),
    "T5": (
        "laurent",
        dict(k=4, h=1, m=1, N=2501),
        "6.651195010459496e+17 - 2.3158366731930319e+18j",
    ),
    "T6": ("wave", dict(k=1, N=3500, n=5000), "-3.6775621984857302e+96"),
    "T7": ("wave", dict(k=2, N=4001, n=8002), "1.2424007618319874e+53"),
    "T8": ("wave", dict(k=4, N=4000, n=3000), "-1.1889188816869245e+23"),
}


def _default_prec() -> int:
    env = os.environ.get("QS_PREC")
    if env:
        try:
            return max(int(env), 10)
        except ValueError:
            pass
    return 60


def _cstr(z, digits: int) -> str:
    z = mpmath.mpc(z)
    if z.imag == 0:
        return mpmath.nstr(z.real, digits)
    return mpmath.nstr(z, digits)


def _stable_decimal(compute, prec: int):
    """Render `compute(dps)` at prec and prec+20 digits; keep agreed digits."""
    lo = compute(prec)
    hi = compute(prec + 20)
    with mpmath.mp.workdps(prec + 20):
        lo, hi = mpmath.mpc(lo), mpmath.mpc(hi)
        scale = max(abs(hi), mpmath.mpf(1) * 10 ** -prec)
        err = abs(hi - lo) / scale
        agreed = prec if err == 0 else min(prec, int(-mpmath.log10(err)))
        agreed = max(agreed, 1)
        return _cstr(hi, agreed), agreed, hi


def _rational_decimal(value, dps: int):
    with mpmath.mp.workdps(dps):
        return mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)


def emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        keys = list(record)
        print(",".join(keys))
        print(",".join(str(record[key]) for key in keys))
    else:
        for key, value in record.items():
            print(f"{key}: {value}")


def cmd_const(args) -> int:
    prec = args.prec
    constants = find_w0(prec)
    with mpmath.mp.workdps(prec + 10):
        from .hp import li2

        w0 = mpmath.mpc(constants.w0)
        residual = abs(li2(w0, prec + 5) - 2j * mpmath.pi * mpmath.log(w0))
        record = {
            "command": "const",
            "prec": prec,
            "w0": _cstr(constants.w0, prec),
            "z0": _cstr(constants.z0, prec),
            "U": mpmath.nstr(mpmath.mpf(constants.U), prec),
            "V": mpmath.nstr(mpmath.mpf(constants.V), prec),
            "residual": mpmath.nstr(residual, 3),
        }
    emit(record, args.format)
    return EXIT_OK


def _validate_root(k: int, h: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 1 and math.gcd(h, k) != 1:
        raise ValueError("h must be coprime to k")


def cmd_exact(args) -> int:
    prec = args.prec
    record = {"command": "exact", "kind": args.kind, "prec": prec}
    if args.kind == "laurent":
        _validate_root(args.k, args.h)
        if args.N < 1:
            raise ValueError("N must be >= 1")
        record.update(k=args.k, h=args.h, m=args.m, N=args.N)
        value = laurent_coeff_exact(args.k, args.h, args.m, args.N)
        if value.is_rational():
            record["exact"] = str(value.rational_value())
        else:
            record["exact"] = "[" + ", ".join(str(c) for c in value.coords) + "]"
        decimal, agreed, _ = _stable_decimal(lambda d: value.embed(d), prec)
        record["decimal"] = decimal
        record["stable_digits"] = agreed
    else:
        if args.N < 1 or args.k < 1:
            raise ValueError("k and N must be >= 1")
        record.update(k=args.k, N=args.N, n=args.n)
        value = sylvester_wave_exact(args.k, args.N, args.n)
        record["exact"] = str(value)
        decimal, agreed, _ = _stable_decimal(
            lambda d: _rational_decimal(value, d), prec
        )
        record["decimal"] = decimal
        record["stable_digits"] = agreed
    emit(record, args.format)
    return EXIT_OK


def cmd_asym(args) -> int:
    prec = args.prec
    record = {"command": "asym", "kind": args.kind, "prec": prec, "r": args.r}
    if args.r < 1:
        raise ValueError("r must be >= 1")
    if args.kind == "laurent":
        _validate_root(args.k, args.h)
        record.update(k=args.k, h=args.h, m=args.m, N=args.N)
        decimal, agreed, approx = _stable_decimal(
            lambda d: asym.eval_asym_laurent(args.k, args.h, args.m, args.N, args.r, d),
            prec,
        )
    else:
        if args.k < 1 or args.N < 1:
            raise ValueError("k and N must be >= 1")
        record.update(k=args.k, N=args.N, n=args.n)
        decimal, agreed, approx = _stable_decimal(
            lambda d: asym.eval_asym_wave(args.k, args.N, args.n, args.r, d), prec
        )
    record["approximation"] = decimal
    record["stable_digits"] = agreed
    if args.check_exact:
        if args.N > 400:
            raise ValueError("--check-exact supported for N <= 400 only")
        if args.kind == "laurent":
            exact = laurent_coeff_exact(args.k, args.h, args.m, args.N).embed(prec + 20)
        else:
            exact = _rational_decimal(sylvester_wave_exact(args.k, args.N, args.n), prec + 20)
        with mpmath.mp.workdps(prec + 20):
            exact = mpmath.mpc(exact)
            record["exact"] = _cstr(exact, 20)
            rel = abs(exact - approx) / max(abs(exact), mpmath.mpf(10) ** -prec)
            record["agree_digits"] = prec if rel == 0 else max(0, int(-mpmath.log10(rel)))
    emit(record, args.format)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.id not in TABLES:
        raise ValueError(f"unknown table id: {args.id} (expected T1..T8)")
    kind, params, published = TABLES[args.id]
    prec = args.prec
    rows = []
    for r in (1, 3, 5, 7):
        if kind == "laurent":
            value = asym.eval_asym_laurent(
                params["k"], params["h"], params["m"], params["N"], r, prec
            )
        else:
            value = asym.eval_asym_wave(params["k"], params["N"], params["n"], r, prec)
        with mpmath.mp.workdps(prec):
            rows.append((r, _cstr(value, 17)))
    if args.exact_large:
        if kind == "laurent":
            exact = laurent_coeff_numeric(
                params["k"], params["h"], params["m"], params["N"], digits=20
            )
        else:
            exact = sylvester_wave_numeric(
                params["k"], params["N"], params["n"], digits=20
            )
        with mpmath.mp.workdps(25):
            last = ("exact (computed)", _cstr(exact, 17))
    else:
        last = ("exact (published reference)", published)
    record = {
        "command": "table",
        "id": args.id,
        "kind": kind,
        **{key: str(val) for key, val in params.items()},
    }
    for r, val in rows:
        record[f"r={r}"] = val
    record[last[0]] = last[1]
    emit(record, args.format)
    return EXIT_OK


def cmd_figure(args) -> int:
    header, rows = figures.figure_rows(
        args.id, start=args.start, stop=args.stop, step=args.step
    )
    out = args.out
    figures.write_csv(out, header, rows)
    png = os.path.splitext(out)[0] + ".png"
    figures.render_png(png, args.id, header, rows)
    emit(
        {
            "command": "figure",
            "id": args.id,
            "rows": len(rows),
            "csv": out,
            "png": png,
        },
        args.format,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--prec",
        type=int,
        default=_default_prec(),
        help="working precision in decimal digits (default 60, or QS_PREC)",
    )
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="qlaurent",
        description="Laurent coefficients of 1/(q)_N at roots of unity, "
        "Sylvester waves, and their asymptotic expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("const", parents=[common], help="saddle-point constants")
    p.set_defaults(func=cmd_const)

    for name, func, with_r in (("exact", cmd_exact, False), ("asym", cmd_asym, True)):
        p = sub.add_parser(name, parents=[common], help=f"{name} coefficient query")
        p.add_argument("--kind", choices=("laurent", "wave"), required=True)
        p.add_argument("-k", type=int, default=1, help="order of the root of unity")
        p.add_argument("-H", dest="h", type=int, default=0, help="root exponent h")
        p.add_argument("-m", type=int, default=0, help="Laurent index")
        p.add_argument("-n", type=int, default=0, help="wave argument n")
        p.add_argument("-N", type=int, required=True, help="number of factors")
        if with_r:
            p.add_argument("-r", type=int, default=5, help="number of expansion terms")
            p.add_argument(
                "--check-exact",
                action="store_true",
                help="compare against the exact engine (small N only)",
            )
        p.set_defaults(func=func)

    p = sub.add_parser("table", parents=[common], help="reproduce a published table")
    p.add_argument("--id", required=True, help="table id T1..T8")
    p.add_argument(
        "--exact-large",
        action="store_true",
        help="recompute the exact last line (minutes) instead of quoting it",
    )
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", parents=[common], help="emit figure data (CSV + PNG)")
    p.add_argument("--id", required=True, choices=figures.FIGURE_IDS)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--start", type=int, default=None)
    p.add_argument("--stop", type=int, default=None)
    p.add_argument("--step", type=int, default=None)
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETERS
    except ArithmeticError as exc:
        msg = str(exc)
        if "branch" in msg or "principal" in msg:
            print(f"branch validation failed: {exc}", file=sys.stderr)
            return EXIT_BRANCH
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
