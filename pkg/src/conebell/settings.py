"""Measurement settings for cone-restricted spin-1 Bell tests.

Each observer measures squared spin components along directions drawn from a
fixed cone around the z axis, so a single azimuthal angle labels a setting.
The grid holds 3n equally spaced angles; settings that differ by 2*pi/3 point
along mutually orthogonal directions, so the grid splits into n orthogonal
trios.  A joint measurement of a trio always yields outcomes 1, 0, 1 in some
order (the 1-0-1 rule), hence a deterministic local model marks exactly one
null setting per trio.  The correlation functional only ever sees the two
lowest Fourier modes of that null-setting indicator, which therefore act as a
compact per-observer witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class TrioGrid:
    """The 3n measurement angles of one observer, angle(m) = 2*pi*m/(3n).

    Index m = k + n*j picks trio k (0 <= k < n) and trio member j (0..2), so
    angle(k + n*j) = 2*pi*k/(3n) + 2*pi*j/3 and trio members differ by 2*pi/3.
    """

    n: int
    angles: np.ndarray

    @property
    def size(self) -> int:
        return 3 * self.n

    def trio(self, k: int) -> tuple[int, int, int]:
        """Grid indices of the k-th orthogonal setting trio."""
        if not 0 <= k < self.n:
            raise ValueError(f"trio index {k} outside 0..{self.n - 1}")
        return (k, k + self.n, k + 2 * self.n)

    def trio_angles(self, k: int) -> np.ndarray:
        return self.angles[list(self.trio(k))]


def build_grid(n: int) -> TrioGrid:
    """Build the uniform grid of 3n cone angles (n orthogonal trios)."""
    if n < 1:
        raise ValueError("need at least one setting trio per observer (n >= 1)")
    angles = 2.0 * np.pi * np.arange(3 * n) / (3 * n)
    angles.setflags(write=False)
    return TrioGrid(n=n, angles=angles)


@dataclass(frozen=True, order=True)
class Strategy:
    """A deterministic local strategy for one observer.

    choices[k] in {0, 1, 2} selects which member of trio k receives the null
    outcome (eigenvalue -2/3); the other two members of the trio get 1/3.
    Exactly one null per trio is forced by the 1-0-1 rule.
    """

    choices: tuple[int, ...]

    def __post_init__(self):
        if len(self.choices) < 1:
            raise ValueError("strategy needs at least one trio choice")
        if any(j not in (0, 1, 2) for j in self.choices):
            raise ValueError(f"trio choices must be 0, 1 or 2, got {self.choices}")

    @property
    def n(self) -> int:
        return len(self.choices)

    def indices(self) -> tuple[int, ...]:
        """Grid indices of the null settings, one per trio."""
        n = self.n
        return tuple(k + n * j for k, j in enumerate(self.choices))

    def rank(self) -> int:
        """Position in the lexicographic enumeration of all 3^n strategies."""
        r = 0
        for j in self.choices:
            r = 3 * r + j
        return r

    @classmethod
    def from_rank(cls, rank: int, n: int) -> "Strategy":
        if not 0 <= rank < 3**n:
            raise ValueError(f"rank {rank} outside 0..3^{n}-1")
        digits = []
        for k in range(n):
            digits.append((rank // 3 ** (n - 1 - k)) % 3)
        return cls(tuple(digits))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> "Strategy":
        """Build from a set of grid indices, enforcing one null per trio."""
        idx = sorted(indices)
        if sorted(m % n for m in idx) != list(range(n)):
            raise ValueError(f"index set {idx} does not hit every trio exactly once")
        choices = [0] * n
        for m in idx:
            if not 0 <= m < 3 * n:
                raise ValueError(f"grid index {m} outside 0..{3 * n - 1}")
            choices[m % n] = m // n
        return cls(tuple(choices))


def enumerate_strategies(n: int) -> Iterator[Strategy]:
    """All 3^n one-null-per-trio strategies, lexicographic in the choices."""
    if n < 1:
        raise ValueError("n >= 1 required")
    for rank in range(3**n):
        yield Strategy.from_rank(rank, n)


def run_family_strategies(n: int) -> list[Strategy]:
    """Strategies whose null-setting indices form at most two circular runs.

    Any n consecutive grid indices hit every trio exactly once, so every
    rotation of a single run of length n is valid.  Splitting the run into two
    blocks keeps validity only when the second block starts n + (length of the
    first block) positions after the first, which pins down the two-run
    members.  The family has 3n(n+1)/2 strategies versus 3^n in total and
    contains the bunched and split shapes that empirically carry the
    local-realistic optimum.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    m = 3 * n
    seen: set[frozenset[int]] = set()
    for a in range(m):
        seen.add(frozenset((a + t) % m for t in range(n)))
    for a in range(m):
        for p in range(1, n):
            b = (a + p + n) % m
            block = [(a + t) % m for t in range(p)]
            block += [(b + t) % m for t in range(n - p)]
            seen.add(frozenset(block))
    family = [Strategy.from_indices(s, n) for s in seen]
    family.sort()
    return family


@dataclass(frozen=True)
class FourierWitness:
    """Frequency-1 and frequency-2 sums of e^{i*phi} over the null settings.

    These two complex numbers are the only data the correlation functional
    extracts from a strategy; their joint magnitude bounds the strategy's
    contribution.
    """

    w1: complex
    w2: complex

    @property
    def magnitude(self) -> float:
        return math.hypot(abs(self.w1), abs(self.w2))


def witness_of_indices(grid: TrioGrid, indices: Sequence[int]) -> FourierWitness:
    """Witness of an arbitrary index set (not necessarily one per trio)."""
    th = grid.angles[list(indices)]
    return FourierWitness(complex(np.exp(1j * th).sum()), complex(np.exp(2j * th).sum()))


def fourier_witness(strategy: Strategy, grid: TrioGrid) -> FourierWitness:
    if strategy.n != grid.n:
        raise ValueError(f"strategy has {strategy.n} trios, grid has {grid.n}")
    return witness_of_indices(grid, strategy.indices())


def witness_blocks(n: int, block: int = 3**13) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield (start_rank, w1, w2) arrays over all 3^n strategies in rank order.

    Blocked so that enumerations up to n ~ 16 stay within memory; within a
    block the accumulation runs over trios k = 0..n-1 exactly like the scalar
    witness computation.
    """
    size = 3**n
    theta = 2.0 * np.pi * np.arange(n) / (3 * n)
    omega1 = np.exp(2j * np.pi * np.arange(3) / 3)
    omega2 = np.exp(4j * np.pi * np.arange(3) / 3)
    for start in range(0, size, block):
        ranks = np.arange(start, min(start + block, size))
        w1 = np.zeros(ranks.shape, dtype=complex)
        w2 = np.zeros(ranks.shape, dtype=complex)
        for k in range(n):
            digits = (ranks // 3 ** (n - 1 - k)) % 3
            w1 += np.exp(1j * theta[k]) * omega1[digits]
            w2 += np.exp(2j * theta[k]) * omega2[digits]
        yield start, w1, w2


def witness_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense witness arrays for all 3^n strategies, indexed by rank."""
    parts1, parts2 = [], []
    for _, w1, w2 in witness_blocks(n):
        parts1.append(w1)
        parts2.append(w2)
    return np.concatenate(parts1), np.concatenate(parts2)
