"""Command-line front end.

Commands::

    conebell grid       --n 3
    conebell qm-check   --N 3 --samples 1000
    conebell search     --N 2 --n 4 [--mode exhaustive|conjecture] [--threads T]
    conebell bound      --n 3 [--N 4]
    conebell continuum  --N 3
    conebell sweep      --N 2,3 --n-range 2:6 [--mode ...] [--format csv|json] [--out F]

Outputs are deterministic for fixed inputs; timing columns in sweep files stay
empty unless --timings is given.  CONEBELL_THREADS sets the default worker
count, the --threads flag overrides it.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .bounds import analytic_bound, bound_ratio, max_projection
from .continuum import continuous_ratio
from .quantum import correlation_closed_form, correlation_oracle
from .reporting import (
    ReportRow,
    SweepSpec,
    encode_argmax,
    has_errors,
    run_sweep,
)
from .search import BudgetExceededError, DEFAULT_BUDGET, violation_report
from .settings import build_grid

QM_CHECK_TOL = 1e-10
QM_CHECK_SEED = 1093


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _default_threads() -> int | None:
    raw = os.environ.get("CONEBELL_THREADS")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"CONEBELL_THREADS must be an integer, got {raw!r}")


def _parse_n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}")
    return lo, hi


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _cmd_grid(args) -> int:
    grid = build_grid(args.n)
    print(f"n = {grid.n} trios, {grid.size} settings, angle(m) = 2*pi*m/{grid.size}")
    for m, angle in enumerate(grid.angles):
        print(f"  setting {m:3d}: {_fmt(angle)}")
    for k in range(grid.n):
        idx = grid.trio(k)
        angles = ", ".join(_fmt(a) for a in grid.trio_angles(k))
        print(f"  trio {k}: indices {idx} angles ({angles})")
    return 0


def _cmd_qm_check(args) -> int:
    rng = np.random.default_rng(QM_CHECK_SEED)
    worst = 0.0
    for _ in range(args.samples):
        phis = rng.uniform(0.0, 2 * np.pi, size=args.N)
        worst = max(worst, abs(correlation_closed_form(phis) - correlation_oracle(phis)))
    ok = worst <= QM_CHECK_TOL
    print(f"qm-check N={args.N} samples={args.samples}: max |closed - oracle| = {worst:.3e}")
    print(f"qm-check {'PASS' if ok else 'FAIL'} (tolerance {QM_CHECK_TOL:.0e})")
    return 0 if ok else 1


def _print_violation(report) -> None:
    print(f"N = {report.N}, n = {report.n}, mode = {report.mode}")
    print(f"  qm_norm      = {_fmt(report.qm_norm)}")
    print(f"  lhv_max      = {_fmt(report.lhv_max)}")
    print(f"  ratio (1/V)  = {_fmt(report.ratio)}")
    print(f"  visibility V = {_fmt(report.visibility)}")
    print(f"  argmax       = {encode_argmax(report.argmax)}")
    print(f"  evaluations  = {report.evaluations}")
    if report.flags:
        print(f"  flags        = {report.flags}")


def _cmd_search(args) -> int:
    try:
        report = violation_report(
            args.N, args.n, mode=args.mode, workers=args.threads, budget=args.budget
        )
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _print_violation(report)
    if args.out:
        row = ReportRow(
            N=report.N, n=report.n, mode=report.mode,
            qm_norm=report.qm_norm, lhv_max=report.lhv_max,
            ratio=report.ratio, visibility=report.visibility,
            argmax=encode_argmax(report.argmax),
            elapsed_ms=None, flags=report.flags,
        )
        spec = SweepSpec(
            N_list=(args.N,), n_range=(args.n, args.n), mode=args.mode,
            fmt=args.format, out=args.out, workers=args.threads, budget=args.budget,
        )
        from .reporting import emit

        emit([row], spec)
        print(f"wrote {args.out}")
    return 0


def _cmd_bound(args) -> int:
    projection = max_projection(args.n)
    print(f"n = {projection.n}")
    print(f"  max_witness_magnitude = {_fmt(projection.max_witness_magnitude)}")
    print(f"  argmax = {encode_argmax((projection.argmax_strategy,))}")
    if args.N is not None:
        print(f"  analytic_bound(N={args.N}) = {_fmt(analytic_bound(args.n, args.N))}")
        print(f"  bound_ratio(N={args.N})    = {_fmt(bound_ratio(args.n, args.N))}")
    return 0


def _cmd_continuum(args) -> int:
    report = continuous_ratio(args.N)
    print(f"N = {report.N} (continuous setting limit)")
    print(f"  qm_norm      = {_fmt(report.qm_norm)}")
    print(f"  interval_max = {_fmt(report.interval_max)}")
    print(f"  ratio (1/V)  = {_fmt(report.ratio)}")
    print(f"  shift_argmax = {_fmt(report.shift_argmax)}")
    return 0


def _cmd_sweep(args) -> int:
    if args.n_range is not None:
        n_range = args.n_range
    elif args.n is not None:
        n_range = (args.n, args.n)
    elif args.mode == "continuum":
        n_range = (1, 1)
    else:
        print("error: sweep needs --n or --n-range", file=sys.stderr)
        return 2
    spec = SweepSpec(
        N_list=args.N, n_range=n_range, mode=args.mode, fmt=args.format,
        out=args.out, workers=args.threads, budget=args.budget, timings=args.timings,
    )
    rows = run_sweep(spec)
    for r in rows:
        ratio = "" if r.ratio is None else _fmt(r.ratio)
        print(f"N={r.N} n={r.n} mode={r.mode} ratio={ratio} flags={r.flags}")
    if spec.out:
        print(f"wrote {spec.out}")
    return 1 if has_errors(rows) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conebell",
        description="Cone Bell inequalities for N spin-1 systems: quantum norms, "
        "local-realistic maxima, analytic bounds, and the continuous limit.",
    )
    parser.add_argument("--version", action="version", version=f"conebell {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grid", help="print the setting angles and trios")
    p.add_argument("--n", type=int, required=True, help="number of setting trios")
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("qm-check", help="compare the closed-form correlation with the operator oracle")
    p.add_argument("--N", type=int, default=3, help="number of observers")
    p.add_argument("--samples", type=int, default=1000, help="random angle tuples to test")
    p.set_defaults(func=_cmd_qm_check)

    p = sub.add_parser("search", help="maximize the local-realistic functional for one (N, n)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "conjecture"), default="exhaustive")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("bound", help="maximal witness magnitude and the analytic bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, default=None)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("continuum", help="continuous-limit report for one N")
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=_cmd_continuum)

    p = sub.add_parser("sweep", help="run a grid of (N, n) cells and emit a report file")
    p.add_argument("--N", type=_parse_n_list, required=True, help="observer counts, e.g. 2 or 2,3")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-range", type=_parse_n_range, default=None, help="inclusive range a:b")
    p.add_argument(
        "--mode",
        choices=("exhaustive", "conjecture", "bound", "continuum", "both"),
        default="exhaustive",
    )
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--timings", action="store_true", help="record wall-clock times in the output")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
