"""Analytic upper bound on the local-realistic value and the resulting ratio.

Projecting a strategy's null-setting indicator onto the four grid-sampled
frequency vectors (cos/sin at frequencies 1 and 2) bounds every observer's
contribution by its witness magnitude, so the functional can never exceed
(8/3^{2+N}) times the N-th power of the largest magnitude.  The bound is
found by enumerating all 3^n strategies; it is observed to stay below n for
n >= 3, which makes the violation ratio grow geometrically in N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .quantum import qm_norm_discrete
from .settings import Strategy, witness_blocks

MAX_ENUM_TRIOS = 16


@dataclass(frozen=True)
class ProjectionBound:
    """Largest witness magnitude over all strategies for one grid size."""

    n: int
    max_witness_magnitude: float
    argmax_strategy: Strategy


@lru_cache(maxsize=None)
def _max_witness(n: int) -> tuple[float, int]:
    best = -1.0
    best_rank = -1
    for start, w1, w2 in witness_blocks(n):
        mags = np.sqrt(np.abs(w1) ** 2 + np.abs(w2) ** 2)
        k = int(np.argmax(mags))
        if float(mags[k]) > best:
            best = float(mags[k])
            best_rank = start + k
    return best, best_rank


def max_projection(n: int) -> ProjectionBound:
    """Exact maximum witness magnitude, by enumeration of all 3^n strategies.

    Ties resolve to the lexicographically smallest strategy.  Requires n >= 2
    so that frequencies 1 and 2 are distinct nonzero modes of the 3n-point
    grid (at n = 1 the four frequency vectors are not orthogonal).
    """
    if n < 2:
        raise ValueError("n >= 2 required for orthogonal frequency vectors")
    if n > MAX_ENUM_TRIOS:
        raise ValueError(f"enumeration over 3^{n} strategies is too large (max n={MAX_ENUM_TRIOS})")
    magnitude, rank = _max_witness(n)
    return ProjectionBound(n=n, max_witness_magnitude=magnitude, argmax_strategy=Strategy.from_rank(rank, n))


def analytic_bound(n: int, N: int) -> float:
    """Upper bound (8/3^{2+N}) * max_magnitude^N on the local-realistic value."""
    if N < 2:
        raise ValueError("N >= 2 required")
    return 8.0 / 3 ** (2 + N) * max_projection(n).max_witness_magnitude**N


def bound_ratio(n: int, N: int) -> float:
    """Guaranteed lower bound on the violation ratio, qm_norm / analytic_bound.

    Equals (8/9) (n / max_magnitude)^N, so successive ratios in N are the
    constant n / max_magnitude; a maximum magnitude below n therefore forces
    violation for every sufficiently large N.
    """
    return qm_norm_discrete(n, N) / analytic_bound(n, N)
