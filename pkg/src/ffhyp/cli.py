"""Command line entry point: ``ffhyp verify | eval | tables``."""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import classno, qseries, traceform
from .chargauss import quadratic, quartic, tables as field_tables
from .fieldcore import is_prime, odd_primes
from .hyper import evaluate
from .suites import SUITES, RunConfig, run_suite

CONFIG_KEYS = {
    "pmax": int, "ext_pmax": int, "tol": float, "jobs": int, "format": str,
    "census_pmax": int, "whipple_pmax": int, "whipple_samples": int, "seed": int,
}


def read_config(path: str) -> dict:
    """Parse a plain ``key = value`` file; blank lines and # comments ignored."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = CONFIG_KEYS[key](value)
    return out


# ---------------------------------------------------------------------------
# verify


def _emit_report(report, fmt: str, out, timing: bool) -> None:
    if fmt == "json":
        for rec in report.records:
            out.write(json.dumps({"suite": report.suite, **rec.as_dict()}) + "\n")
        out.write(json.dumps({"summary": report.summary(timing)}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for rec in report.records:
            d = rec.as_dict()
            w.writerow([report.suite, d["p"], d["key"], d["lhs"], d["rhs"],
                        repr(d["residual"]), d["pass"], d["status"]])
    else:
        s = report.summary(True)
        mark = "PASS" if s["ok"] else "FAIL"
        out.write(
            f"{mark} {report.suite:<20} checked={s['checked']} passed={s['passed']} "
            f"failed={s['failed']} unavailable={s['unavailable']} "
            f"max_residual={s['max_residual']:.3g} time={s['wall_time']:.2f}s\n"
        )
        for rec in report.records:
            if rec.passed is False:
                out.write(f"    p={rec.p} {rec.key} lhs={rec.lhs} rhs={rec.rhs} "
                          f"residual={rec.residual:.3g}\n")


def cmd_verify(args) -> int:
    settings = read_config(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    cfg = RunConfig(**settings)
    ids = list(SUITES) if args.suite == "all" else args.suite.split(",")
    unknown = [s for s in ids if s not in SUITES]
    if unknown:
        print(f"unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
        print(f"valid ids: all, {', '.join(SUITES)}", file=sys.stderr)
        return 2
    if cfg.format == "csv":
        sys.stdout.write("suite,p,key,lhs,rhs,residual,pass,status\n")
    failing = 0
    for sid in ids:
        report = run_suite(sid, cfg)
        _emit_report(report, cfg.format, sys.stdout, args.timing)
        failing += not report.ok
    return min(failing, 125)


# ---------------------------------------------------------------------------
# eval


def parse_characters(spec: str, p: int, ext: bool) -> list[int]:
    ctx, _ = field_tables(p, ext)
    out = []
    for name in filter(None, (s.strip() for s in spec.split(","))):
        low = name.lower()
        if low in ("eps", "epsilon", "e"):
            out.append(0)
        elif low == "phi":
            out.append(quadratic(ctx))
        elif low in ("chi4", "chi4bar"):
            out.append(quartic(ctx, conjugate=low == "chi4bar"))
        elif re.fullmatch(r"-?\d+", name):
            out.append(int(name) % ctx.order)
        else:
            raise ValueError(f"unknown character {name!r} (use phi, eps, chi4, chi4bar or an exponent)")
    return out


def cmd_eval(args) -> int:
    m = re.fullmatch(r"(\d+)f(\d+)", args.fn.lower())
    if not m:
        print(f"function name must look like 4f3, got {args.fn!r}", file=sys.stderr)
        return 2
    n_up, n_low = int(m.group(1)), int(m.group(2))
    if not is_prime(args.p) or args.p == 2:
        print(f"--p must be an odd prime, got {args.p}", file=sys.stderr)
        return 2
    try:
        upper = parse_characters(args.upper, args.p, args.ext)
        lower = parse_characters(args.lower, args.p, args.ext)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if (len(upper), len(lower)) != (n_up, n_low) or n_up != n_low + 1:
        print(f"{args.fn} needs {n_up} upper and {n_low} lower characters "
              f"(got {len(upper)} and {len(lower)})", file=sys.stderr)
        return 2
    value = evaluate(upper, lower, args.x, args.p, args.ext)
    q = args.p ** 2 if args.ext else args.p
    print(f"q = {q}")
    print(f"raw      = {value.raw.real:.12g}{value.raw.imag:+.3g}i")
    print(f"rounded  = {value.rounded}")
    print(f"residual = {value.residual:.3g}")
    return 0


# ---------------------------------------------------------------------------
# tables


def _fmt(v) -> str:
    return "" if v is None else str(v)


def cmd_tables(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    if args.what == "class-numbers":
        w.writerow(["D", "h", "omega", "hstar", "H", "Hstar"])
        for D in classno.discriminants(args.dmin):
            c = classno.class_data(D)
            w.writerow([D, c.h, c.omega, c.hstar, c.Hagg, c.Hstaragg])
    elif args.what == "traces":
        w.writerow(["p", "Tr16", "Tr32", "Tr32new"])
        for p in odd_primes(args.pmax):
            w.writerow([p, traceform.trace16(p), traceform.trace32(p), traceform.trace32_new(p)])
    else:
        w.writerow(["n", "a", "c", "d", "b"])
        for n in range(1, args.nmax + 1):
            try:
                b = qseries.b_coeff(n)
            except qseries.UnavailableError:
                b = None
            w.writerow([n, qseries.a_coeff(n), qseries.c_coeff(n), qseries.d_coeff(n), _fmt(b)])
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffhyp",
        description="Finite-field hypergeometric values checked against independent integer pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", help="suite id, comma list, or 'all'")
    v.add_argument("--pmax", type=int)
    v.add_argument("--ext-pmax", dest="ext_pmax", type=int)
    v.add_argument("--tol", type=float)
    v.add_argument("--jobs", type=int, help="worker processes over primes")
    v.add_argument("--format", choices=("json", "csv", "text"))
    v.add_argument("--census-pmax", dest="census_pmax", type=int)
    v.add_argument("--whipple-pmax", dest="whipple_pmax", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--config", help="key=value settings file; flags override it")
    v.add_argument("--timing", action="store_true", help="add wall time to json summaries")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate one hypergeometric value")
    e.add_argument("fn", help="e.g. 2f1, 3f2, 4f3")
    e.add_argument("--upper", required=True)
    e.add_argument("--lower", default="")
    e.add_argument("--x", type=int, required=True)
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--ext", action="store_true", help="evaluate over F_{p^2}")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("tables", help="emit CSV tables")
    t.add_argument("--what", required=True, choices=("class-numbers", "traces", "newforms"))
    t.add_argument("--dmin", type=int, default=-400)
    t.add_argument("--pmax", type=int, default=200)
    t.add_argument("--nmax", type=int, default=100)
    t.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
