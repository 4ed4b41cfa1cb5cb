"""Continuous-limit quantities: interval strategies, their maximum, and the ratio.

When every observer may use the full circle of cone settings, the conjectured
optimal local strategies assign the null outcome on an interval covering one
third of the circle (one point per infinitesimal trio), with the last
observer's interval shifted by a.  The overlap then factorizes through the
interval integrals of e^{i phi} and e^{2i phi} and is maximal at zero shift.
A midpoint-rule quadrature over the product of intervals validates the closed
forms independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .quantum import qm_norm_continuous

INTERVAL_HALF_WIDTH = 2 * np.pi / 3


@dataclass(frozen=True)
class ContinuousReport:
    """Continuous-limit norm, interval maximum, and violation ratio for one N."""

    N: int
    qm_norm: float
    interval_max: float
    ratio: float
    shift_argmax: float


def interval_lhv_value(N: int, a: float) -> float:
    """Overlap value of the interval strategy with the last interval shifted by a.

    The per-observer interval integrals of e^{i phi} and e^{2i phi} over
    (-2*pi/3, 2*pi/3] are sqrt3 and -sqrt3/2, giving the closed form
    (8/3^{N/2+2}) (cos a + 2^{-N} cos 2a) for any N >= 2.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    return float(8.0 / 3 ** (N / 2 + 2) * (np.cos(a) + 2.0 ** (-N) * np.cos(2 * a)))


def interval_max(N: int) -> float:
    """Maximum of the interval overlap, attained at zero shift."""
    if N < 2:
        raise ValueError("N >= 2 required")
    return 2.0 ** (3 - N) * 3.0 ** (-N / 2 - 2) * (2**N + 1)


def quadrature_oracle(N: int, a: float, points_per_dim: int) -> float:
    """Midpoint-rule integral of the correlation function over the interval box.

    Integrates over (-2*pi/3, 2*pi/3]^{N-1} x (-2*pi/3 + a, 2*pi/3 + a] with
    points_per_dim midpoints per axis; converges to interval_lhv_value(N, a)
    with error O(points_per_dim^{-2}).  Cost grows as points_per_dim^N; the
    two innermost axes are vectorized, the rest iterate.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    if points_per_dim < 64:
        raise ValueError("points_per_dim >= 64 required")
    m = points_per_dim
    h = 2 * INTERVAL_HALF_WIDTH / m
    mids = -INTERVAL_HALF_WIDTH + (np.arange(m) + 0.5) * h
    axes = [mids] * (N - 1) + [mids + a]
    prefactor = 8.0 / 3 ** (2 + N)
    sign = (-1) ** N
    tail = axes[-2][:, None] + axes[-1][None, :]
    block_sums = []
    for combo in itertools.product(*axes[:-2]):
        s = sum(combo) + tail
        block_sums.append(float(np.sum(np.cos(s) + sign * np.cos(2 * s))))
    total = reduce(lambda acc, x: acc + x, block_sums, 0.0)
    return float(prefactor * total * h**N)


def continuous_ratio(N: int) -> ContinuousReport:
    """Continuous-limit violation ratio 8/(9(2^N+1)) * (4*pi/(3*sqrt3))^N.

    The ratio also equals qm_norm_continuous(N) divided by 3^N times the
    interval maximum (both sides carry the per-trio measure normalization);
    the two routes are checked against each other before reporting.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    qm = qm_norm_continuous(N)
    imax = interval_max(N)
    ratio = float(8.0 / (9 * (2**N + 1)) * (4 * np.pi / (3 * np.sqrt(3.0))) ** N)
    quotient = qm / (3**N * imax)
    if abs(ratio - quotient) > 1e-12:
        raise RuntimeError(
            f"normalization mismatch at N={N}: formula {ratio!r} vs quotient {quotient!r}"
        )
    return ContinuousReport(N=N, qm_norm=qm, interval_max=imax, ratio=ratio, shift_argmax=0.0)
