"""Maximizing the local-realistic functional over deterministic strategies.

For deterministic local models the overlap between the quantum correlation
function and the model reduces to (-1)^N times the sum of the correlation
function over the product of the observers' null-setting sets.  Expanding the
correlation function in frequencies turns that sum into products of the
per-observer Fourier witnesses,

    value = (8/3^{2+N}) * [(-1)^N Re prod_x w1_x + Re prod_x w2_x],

so a search only ever touches the 3^n witness pairs of one observer.  The
functional is symmetric under permuting observers, hence the exhaustive
search enumerates multisets of strategies and expands the winner back into a
concrete tuple.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .quantum import qm_norm_discrete
from .settings import (
    Strategy,
    TrioGrid,
    build_grid,
    fourier_witness,
    run_family_strategies,
    witness_table,
)

DEFAULT_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """Raised before starting a search whose tuple space exceeds the budget."""

    def __init__(self, N: int, n: int, required: int, budget: int):
        super().__init__(
            f"exhaustive search for N={N}, n={n} needs 3^{n * N} = {required} "
            f"tuple evaluations, above the budget of {budget}"
        )
        self.N = N
        self.n = n
        self.required = required
        self.budget = budget


def functional_from_witnesses(w1s: Sequence[complex], w2s: Sequence[complex]) -> float:
    """Functional value from per-observer witness pairs, in the given order.

    Products fold left to right; negating one observer's pair negates the
    value exactly, mirroring complementation of that observer's null set.
    """
    N = len(w1s)
    if N < 2 or len(w2s) != N:
        raise ValueError("need matching witness lists for at least 2 observers")
    p1 = complex(w1s[0])
    p2 = complex(w2s[0])
    for w1, w2 in zip(w1s[1:], w2s[1:]):
        p1 = p1 * complex(w1)
        p2 = p2 * complex(w2)
    sign = -1.0 if N % 2 else 1.0
    return 8.0 / 3 ** (2 + N) * (sign * p1.real + p2.real)


def lhv_functional(sigmas: Sequence[Strategy], grid: TrioGrid) -> float:
    """Overlap contribution of one deterministic strategy tuple.

    Equals (-1)^N times the nested sum of the correlation function over the
    product of the strategies' null-setting angle sets.  Witness pairs are
    multiplied in a canonical (sorted) observer order, which makes the value
    exactly invariant under permuting the tuple.
    """
    if len(sigmas) < 2:
        raise ValueError("need at least 2 observers")
    for s in sigmas:
        if s.n != grid.n:
            raise ValueError(f"strategy with {s.n} trios does not fit grid with {grid.n}")
    ordered = sorted(sigmas)
    pairs = [fourier_witness(s, grid) for s in ordered]
    return functional_from_witnesses([p.w1 for p in pairs], [p.w2 for p in pairs])


@dataclass(frozen=True)
class SearchResult:
    """Maximum of the functional with the strategies realizing it."""

    lhv_max: float
    argmax: list[tuple[Strategy, ...]]
    mode: str
    evaluations: int
    elapsed: float


@dataclass(frozen=True)
class ViolationReport:
    """Quantum norm versus the local-realistic maximum for one (N, n).

    ratio is the violation strength (> 1 excludes local realism); visibility
    is the white-noise weight of the state at which the violation disappears.
    """

    N: int
    n: int
    mode: str
    qm_norm: float
    lhv_max: float
    ratio: float
    visibility: float
    argmax: tuple[Strategy, ...]
    evaluations: int
    elapsed: float
    flags: str = ""


def _scan_partition(
    W1: np.ndarray, W2: np.ndarray, N: int, first_indices: Sequence[int]
) -> tuple[float, tuple[int, ...]]:
    """Best (raw value, rank multiset) over sorted tuples starting in first_indices.

    Scans in lexicographic order of the sorted rank tuple; strict improvement
    keeps the lexicographically smallest argmax among exact ties.  The raw
    value omits the positive prefactor 8/3^{2+N}.
    """
    S = W1.shape[0]
    sign = -1.0 if N % 2 else 1.0
    best = -np.inf
    best_idx: tuple[int, ...] = ()

    def leaf(p1: complex, p2: complex, jstart: int, prefix: tuple[int, ...], only_j=None):
        nonlocal best, best_idx
        rows = (only_j,) if only_j is not None else range(jstart, S)
        for j in rows:
            vals = sign * ((p1 * W1[j]) * W1[j:]).real + ((p2 * W2[j]) * W2[j:]).real
            k = int(np.argmax(vals))
            v = float(vals[k])
            if v > best:
                best = v
                best_idx = prefix + (j, j + k)

    def rec(start: int, remaining: int, p1: complex, p2: complex, prefix: tuple[int, ...]):
        if remaining == 2:
            leaf(p1, p2, start, prefix)
            return
        for i in range(start, S):
            rec(i, remaining - 1, p1 * complex(W1[i]), p2 * complex(W2[i]), prefix + (i,))

    for i1 in first_indices:
        if N == 2:
            leaf(complex(1.0), complex(1.0), i1, (), only_j=i1)
        else:
            rec(i1, N - 1, complex(W1[i1]), complex(W2[i1]), (i1,))
    return best, best_idx


def _partition_worker(args: tuple[int, int, list[int]]) -> tuple[float, tuple[int, ...]]:
    N, n, first_indices = args
    W1, W2 = witness_table(n)
    return _scan_partition(W1, W2, N, first_indices)


def _merge(results) -> tuple[float, tuple[int, ...]]:
    best = -np.inf
    best_idx: tuple[int, ...] = ()
    for v, idx in results:
        if not idx:
            continue
        if v > best or (v == best and (not best_idx or idx < best_idx)):
            best = v
            best_idx = idx
    return best, best_idx


def exhaustive_max(
    N: int,
    grid: TrioGrid,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Global maximum of the functional over all 3^{nN} strategy tuples.

    Searches multisets of per-observer witnesses (the functional is symmetric
    under permuting observers) and reports the lexicographically smallest
    strategy tuple among ties.  The first observer's strategy list is striped
    across workers; the merged result does not depend on the worker count.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    n = grid.n
    total = 3 ** (n * N)
    if total > budget:
        raise BudgetExceededError(N, n, total, budget)
    t0 = time.perf_counter()
    S = 3**n
    if workers and workers > 1:
        stripes = [list(range(w, S, workers)) for w in range(workers)]
        stripes = [s for s in stripes if s]
        with ProcessPoolExecutor(max_workers=len(stripes)) as pool:
            results = list(pool.map(_partition_worker, [(N, n, s) for s in stripes]))
        best, best_idx = _merge(results)
    else:
        W1, W2 = witness_table(n)
        best, best_idx = _scan_partition(W1, W2, N, range(S))
    value = 8.0 / 3 ** (2 + N) * best
    argmax = tuple(Strategy.from_rank(r, n) for r in best_idx)
    return SearchResult(
        lhv_max=value,
        argmax=[argmax],
        mode="exhaustive",
        evaluations=total,
        elapsed=time.perf_counter() - t0,
    )


def conjecture_max(N: int, grid: TrioGrid) -> SearchResult:
    """Maximum over tuples built from the two-run family.

    The first N-1 observers share one family strategy; the last observer
    ranges over the family independently, which covers every rotated partner
    because the family is closed under rotations.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    t0 = time.perf_counter()
    family = run_family_strategies(grid.n)
    pairs = [fourier_witness(s, grid) for s in family]
    W1 = np.array([p.w1 for p in pairs])
    W2 = np.array([p.w2 for p in pairs])
    sign = -1.0 if N % 2 else 1.0
    best = -np.inf
    best_pair = (0, 0)
    for i in range(len(family)):
        p1 = complex(W1[i]) ** (N - 1)
        p2 = complex(W2[i]) ** (N - 1)
        vals = sign * (p1 * W1).real + (p2 * W2).real
        k = int(np.argmax(vals))
        v = float(vals[k])
        if v > best:
            best = v
            best_pair = (i, k)
    value = 8.0 / 3 ** (2 + N) * best
    i, k = best_pair
    argmax = tuple([family[i]] * (N - 1) + [family[k]])
    return SearchResult(
        lhv_max=value,
        argmax=[argmax],
        mode="conjecture",
        evaluations=len(family) ** 2,
        elapsed=time.perf_counter() - t0,
    )


def violation_report(
    N: int,
    n: int,
    mode: str = "exhaustive",
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ViolationReport:
    """Assemble the quantum norm, the search maximum, and their ratio."""
    grid = build_grid(n)
    if mode == "exhaustive":
        result = exhaustive_max(N, grid, workers=workers, budget=budget)
    elif mode == "conjecture":
        result = conjecture_max(N, grid)
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    qm = qm_norm_discrete(n, N)
    flags = "degenerate:n=1" if n == 1 else ""
    return ViolationReport(
        N=N,
        n=n,
        mode=mode,
        qm_norm=qm,
        lhv_max=result.lhv_max,
        ratio=qm / result.lhv_max,
        visibility=result.lhv_max / qm,
        argmax=result.argmax[0],
        evaluations=result.evaluations,
        elapsed=result.elapsed,
        flags=flags,
    )
