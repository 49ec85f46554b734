"""Command-line front end.

    cyclocoh analyze 45
    cyclocoh table --dim 8 --format csv
    cyclocoh roots --family E --rank 8
    cyclocoh verify --range 3..200
    cyclocoh asymptotics --max 100000

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import mpmath

from . import analysis, rootlattices
from .config import PRECISION_ENV, Config, default_precision
from .cyclolattice import stats
from .exact import fraction_str, to_mpf
from .verify import verify_n


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument(
        "--precision", type=int, default=None,
        help=f"working precision in bits (default 256, or ${PRECISION_ENV})",
    )
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--budget", type=int, default=10**8, help="enumeration node budget")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--digits", type=int, default=12, help="significant digits for floats")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="cyclocoh", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    a = sub.add_parser("analyze", parents=[common], help="all invariants of one cyclotomic lattice")
    a.add_argument("n", type=int)
    a.add_argument("--no-verify", action="store_true", help="skip brute-force cross-checks")

    t = sub.add_parser("table", parents=[common], help="every lattice of a given rank phi(n)")
    t.add_argument("--dim", type=int, required=True)

    r = sub.add_parser("roots", parents=[common], help="root lattice coherence statistics")
    r.add_argument("--family", choices=("A", "D", "E"), default=None)
    r.add_argument("--rank", type=int, default=None)
    r.add_argument("--closed-form", action="store_true", help="print the published formulas instead")

    v = sub.add_parser("verify", parents=[common], help="cross-check formulas against oracles")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=_parse_range, dest="nrange")
    v.add_argument("--enumerate", action="store_true", help="also enumerate minimal vectors (rank <= 40)")

    s = sub.add_parser("asymptotics", parents=[common], help="average-order diagnostic")
    s.add_argument("--max", type=int, required=True, dest="N")
    return p


def _config(args) -> Config:
    return Config(
        precision_bits=args.precision or default_precision(),
        tolerance=args.tolerance,
        enum_node_budget=args.budget,
        workers=args.workers,
        output_format=args.format,
    )


def _rat(x) -> str:
    return fraction_str(x)


def _text_stats(s, digits: int) -> str:
    lat = s.lattice
    lines = [
        f"n = {lat.n}   phi(n) = {lat.d}   |S'| = {lat.s_half}",
        f"C     = {_rat(s.max_coherence)} ({mpmath.nstr(to_mpf(s.max_coherence), digits)})",
        f"A     = {_rat(s.avg_coherence)} ({mpmath.nstr(to_mpf(s.avg_coherence), digits)})",
        f"nu    = {mpmath.nstr(s.defect, digits)}",
        f"Pi    = {'undefined' if s.pi is None else mpmath.nstr(s.pi, digits)}",
        f"delta = {mpmath.nstr(s.packing_density, digits)}",
        f"disc  = {s.discriminant}",
    ]
    return "\n".join(lines) + "\n"


def _text_table(T, digits: int) -> str:
    head = f"{'n':>6} {'C':>12} {'A':>12} {'nu':>20} {'Pi':>20}"
    lines = [f"phi(n) = {T.d}: {len(T.rows)} lattices", head]
    for s in T.rows:
        n = s.lattice.n
        mark = lambda col: "*" if n in T.markers.get(col, []) else " "
        pi = "--" if s.pi is None else mpmath.nstr(s.pi, digits)
        lines.append(
            f"{n:>6} {_rat(s.max_coherence):>11}{mark('C')} {_rat(s.avg_coherence):>11}{mark('A')}"
            f" {mpmath.nstr(s.defect, digits):>19}{mark('nu')} {pi:>19}{mark('Pi')}"
        )
    lines.append("* extremal within the dimension (min C, A; max nu, Pi)")
    return "\n".join(lines) + "\n"


def _text_roots(rows, digits: int) -> str:
    lines = [f"{'L':>4} {'|S|':>5} {'C':>5} {'A':>8} {'nu_def':>14} {'nu_table':>14} {'Pi_def':>14} {'Pi_table':>14}"]
    fmt = lambda x: "--" if x is None else mpmath.nstr(x, digits)
    for r in rows:
        lines.append(
            f"{r.name:>4} {r.s_half:>5} {_rat(r.coherence):>5} {_rat(r.avg_coherence):>8}"
            f" {fmt(r.nu_def):>14} {fmt(r.nu_table):>14} {fmt(r.pi_def):>14} {fmt(r.pi_table):>14}"
        )
    return "\n".join(lines) + "\n"


def _digit_count(x: int) -> int:
    return len(str(x)) if x < 10**4000 else int(x.bit_length() * 0.30103) + 1


def _text_report(rep, digits: int) -> str:
    return (
        f"N = {rep.N}\n"
        f"sum C_n = {mpmath.nstr(to_mpf(rep.sum_c), digits)}"
        f"   (exact denominator has ~{_digit_count(rep.sum_c.denominator)} digits)\n"
        f"sum A_n = {mpmath.nstr(to_mpf(rep.sum_a), digits)}"
        f"   (exact denominator has ~{_digit_count(rep.sum_a.denominator)} digits)\n"
        f"predicted sum 2 log n / n       = {rep.predicted_c:.{digits}g}\n"
        f"predicted sum log2 log n / n    = {rep.predicted_a:.{digits}g}\n"
        f"ratio C = {rep.ratio_c:.{digits}g}\n"
        f"ratio A = {rep.ratio_a:.{digits}g}\n"
    )


def _emit(payload, args, text_fn) -> str:
    if args.format == "text":
        return text_fn(payload, args.digits)
    return analysis.export(payload, args.format, args.digits).decode("utf-8")


def _verify_text(results) -> str:
    lines = []
    for res in results:
        lines.append(f"n = {res.n}: {'PASS' if res.passed else 'FAIL'}")
        for c in res.checks:
            tag = "skip" if c.skipped else ("ok" if c.passed else "FAIL")
            lines.append(f"  [{tag:>4}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    failed = [r.n for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} lattices passed" + (f"; failures: {failed}" if failed else ""))
    return "\n".join(lines) + "\n"


def _verify_csv(results) -> str:
    lines = ["n,check,status,detail"]
    for res in results:
        for c in res.checks:
            status = "skip" if c.skipped else ("pass" if c.passed else "fail")
            detail = c.detail.replace('"', "'")
            lines.append(f'{res.n},"{c.name}",{status},"{detail}"')
    return "\n".join(lines) + "\n"


def _verify_json(results) -> str:
    import json

    doc = [
        {
            "n": r.n,
            "passed": r.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "skipped": c.skipped, "detail": c.detail}
                for c in r.checks
            ],
        }
        for r in results
    ]
    return json.dumps(doc, indent=2) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    code = 0
    try:
        if args.command == "analyze":
            out = _emit(stats(args.n, cfg.precision_bits, verify=not args.no_verify), args, _text_stats)
        elif args.command == "table":
            T = analysis.table_for_dimension(
                args.dim, cfg.precision_bits, verify_max_rank=cfg.verify_max_rank, workers=cfg.workers
            )
            out = _emit(T, args, _text_table)
        elif args.command == "roots":
            systems = (
                rootlattices.standard_systems()
                if args.family is None
                else [(args.family, args.rank)]
            )
            fn = rootlattices.closed_form_stats if args.closed_form else rootlattices.bruteforce_stats
            with mpmath.workprec(cfg.precision_bits):
                rows = [fn(f, r) for f, r in systems]
                out = _emit(rows, args, _text_roots)
        elif args.command == "verify":
            ns = [args.n] if args.n is not None else list(args.nrange)
            if any(n <= 2 for n in ns):
                parser.error("verify needs n > 2")
            job = partial(verify_n, config=cfg, enumerate_vectors=args.enumerate or args.n is not None)
            if cfg.workers > 1 and len(ns) > 1:
                with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                    results = list(pool.map(job, ns))
            else:
                results = [job(n) for n in ns]
            out = {"text": _verify_text, "csv": _verify_csv, "json": _verify_json}[args.format](results)
            code = 0 if all(r.passed for r in results) else 1
        else:
            rep = analysis.average_order_report(args.N)
            out = _emit(rep, args, _text_report)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
