"""Sweep orchestration and deterministic CSV/JSON report emission.

A sweep runs one (N, n, mode) cell at a time and assembles flat rows holding
the quantum norm, the local-realistic maximum (or its analytic stand-in), the
violation ratio, and the noise threshold.  Rows are byte-stable across reruns
of the same spec: searches are deterministic and timing columns stay empty
unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .bounds import analytic_bound, bound_ratio, max_projection
from .continuum import continuous_ratio, interval_max
from .quantum import qm_norm_discrete
from .search import DEFAULT_BUDGET, BudgetExceededError, violation_report
from .settings import Strategy

CSV_HEADER = "N,n,mode,qm_norm,lhv_max,ratio,visibility,argmax,elapsed_ms,flags"

SWEEP_MODES = ("exhaustive", "conjecture", "bound", "continuum", "both")

AGREEMENT_TOL = 1e-9


@dataclass(frozen=True)
class SweepSpec:
    """What to compute and where to put it."""

    N_list: tuple[int, ...]
    n_range: tuple[int, int]
    mode: str = "exhaustive"
    fmt: str = "csv"
    out: str | None = None
    workers: int | None = None
    budget: int = DEFAULT_BUDGET
    timings: bool = False

    def __post_init__(self):
        if any(N < 2 for N in self.N_list):
            raise ValueError("every N must be >= 2")
        lo, hi = self.n_range
        if lo < 1 or hi < lo:
            raise ValueError(f"bad trio range {lo}:{hi}")
        if self.mode not in SWEEP_MODES:
            raise ValueError(f"mode must be one of {SWEEP_MODES}")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")


@dataclass(frozen=True)
class ReportRow:
    """One sweep cell; numeric fields are None on error rows."""

    N: int
    n: int
    mode: str
    qm_norm: float | None
    lhv_max: float | None
    ratio: float | None
    visibility: float | None
    argmax: str
    elapsed_ms: int | None
    flags: str


def encode_argmax(strategies: tuple[Strategy, ...]) -> str:
    """Per-observer trio choices as digit strings, observers joined by ';'."""
    return ";".join("".join(str(j) for j in s.choices) for s in strategies)


def decode_argmax(text: str) -> tuple[Strategy, ...]:
    return tuple(Strategy(tuple(int(c) for c in part)) for part in text.split(";"))


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


def _search_row(N: int, n: int, mode: str, spec: SweepSpec) -> ReportRow:
    try:
        report = violation_report(N, n, mode=mode, workers=spec.workers, budget=spec.budget)
    except BudgetExceededError as exc:
        return ReportRow(
            N=N, n=n, mode=mode, qm_norm=None, lhv_max=None, ratio=None,
            visibility=None, argmax="", elapsed_ms=None,
            flags=f"error:budget-exceeded(needs {exc.required})",
        )
    return ReportRow(
        N=N, n=n, mode=mode,
        qm_norm=report.qm_norm, lhv_max=report.lhv_max,
        ratio=report.ratio, visibility=report.visibility,
        argmax=encode_argmax(report.argmax),
        elapsed_ms=int(round(report.elapsed * 1000)) if spec.timings else None,
        flags=report.flags,
    )


def _bound_row(N: int, n: int) -> ReportRow:
    qm = qm_norm_discrete(n, N)
    bound = analytic_bound(n, N)
    projection = max_projection(n)
    return ReportRow(
        N=N, n=n, mode="bound",
        qm_norm=qm, lhv_max=bound,
        ratio=bound_ratio(n, N), visibility=bound / qm,
        argmax=encode_argmax((projection.argmax_strategy,)),
        elapsed_ms=None, flags="analytic-bound",
    )


def _continuum_row(N: int) -> ReportRow:
    report = continuous_ratio(N)
    denominator = 3**N * interval_max(N)
    return ReportRow(
        N=N, n=0, mode="continuum",
        qm_norm=report.qm_norm, lhv_max=denominator,
        ratio=report.ratio, visibility=1.0 / report.ratio,
        argmax=f"shift={report.shift_argmax:.12g}",
        elapsed_ms=None, flags="continuum",
    )


def run_sweep(spec: SweepSpec) -> list[ReportRow]:
    """Compute all rows of the sweep, sorted by (N, n, mode); emit the file if asked.

    In mode "both" each (N, n) cell gets an exhaustive and a conjecture row,
    and the conjecture row is flagged with whether it matches the exhaustive
    maximum.  Budget failures become error-flagged rows instead of aborting.
    """
    lo, hi = spec.n_range
    rows: list[ReportRow] = []
    for N in sorted(spec.N_list):
        if spec.mode == "continuum":
            rows.append(_continuum_row(N))
            continue
        for n in range(lo, hi + 1):
            if spec.mode == "bound":
                rows.append(_bound_row(N, n))
            elif spec.mode == "both":
                ex = _search_row(N, n, "exhaustive", spec)
                cj = _search_row(N, n, "conjecture", spec)
                if ex.lhv_max is not None and cj.lhv_max is not None:
                    agrees = abs(ex.lhv_max - cj.lhv_max) <= AGREEMENT_TOL
                    note = "matches-exhaustive" if agrees else "differs-from-exhaustive"
                    joined = ";".join(x for x in (cj.flags, note) if x)
                    cj = ReportRow(**{**asdict(cj), "flags": joined})
                rows.extend([cj, ex])
            else:
                rows.append(_search_row(N, n, spec.mode, spec))
    rows.sort(key=lambda r: (r.N, r.n, r.mode))
    if spec.out:
        emit(rows, spec)
    return rows


def rows_to_csv(rows: list[ReportRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        elapsed = "" if r.elapsed_ms is None else str(r.elapsed_ms)
        lines.append(
            f"{r.N},{r.n},{r.mode},{_fmt(r.qm_norm)},{_fmt(r.lhv_max)},"
            f"{_fmt(r.ratio)},{_fmt(r.visibility)},{r.argmax},{elapsed},{r.flags}"
        )
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[ReportRow], spec: SweepSpec) -> str:
    payload = {
        "version": __version__,
        "spec": {
            "N_list": list(spec.N_list),
            "n_range": list(spec.n_range),
            "mode": spec.mode,
            "format": spec.fmt,
            "out": spec.out,
            "workers": spec.workers,
            "budget": spec.budget,
            "timings": spec.timings,
        },
        "rows": [asdict(r) for r in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit(rows: list[ReportRow], spec: SweepSpec) -> None:
    """Write rows to spec.out (UTF-8, LF line endings)."""
    text = rows_to_csv(rows) if spec.fmt == "csv" else rows_to_json(rows, spec)
    Path(spec.out).write_bytes(text.encode("utf-8"))


def has_errors(rows: list[ReportRow]) -> bool:
    return any(r.flags.startswith("error") for r in rows)
