"""Spin-1 observables, the biased GHZ state, and its correlation function.

The observables are squared spin components (S.n)^2 along cone directions
n(phi) = (sqrt2*cos phi, sqrt2*sin phi, 1)/sqrt3, shifted by -2/3 to make them
traceless with eigenvalues {-2/3, 1/3, 1/3}.  For the biased N-qutrit GHZ
state the full correlation function collapses to a closed form in the angle
sum; an exact operator-contraction oracle and the grid / full-circle norms of
the correlation function live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

SQRT2 = np.sqrt(2.0)

# Spin-1 matrices in the (|1>, |0>, |-1>) eigenbasis of S_z.
SPIN_X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / SQRT2
SPIN_Y = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / SQRT2
SPIN_Z = np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)

MAX_PARTIES = 12


def cone_direction(phi: float) -> np.ndarray:
    """Unit vector (sqrt2*cos phi, sqrt2*sin phi, 1)/sqrt3 on the fixed cone."""
    return np.array([SQRT2 * np.cos(phi), SQRT2 * np.sin(phi), 1.0]) / np.sqrt(3.0)


def squared_spin_matrix(phi: float) -> np.ndarray:
    """(S.n(phi))^2 as an explicit 3x3 Hermitian matrix, eigenvalues {0, 1, 1}."""
    e1, e2 = np.exp(-1j * phi), np.exp(-2j * phi)
    return np.array(
        [
            [2.0, e1, e2],
            [np.conj(e1), 2.0, -e1],
            [np.conj(e2), -np.conj(e1), 2.0],
        ]
    ) / 3.0


def traceless_observable(phi: float) -> np.ndarray:
    """(S.n(phi))^2 - 2/3, with eigenvalues -2/3 (null direction) and 1/3, 1/3."""
    return squared_spin_matrix(phi) - (2.0 / 3.0) * np.eye(3)


def _zero_eigenvector(matrix: np.ndarray, tol: float) -> np.ndarray:
    vals, vecs = np.linalg.eigh(matrix)
    k = int(np.argmin(np.abs(vals)))
    if abs(vals[k]) > tol:
        raise RuntimeError(
            f"no eigenvalue within {tol} of zero (closest {vals[k]:.3e}); "
            "the observable matrix is malformed"
        )
    return vecs[:, k]


def null_direction_state(phi: float, tol: float = 1e-10) -> np.ndarray:
    """Normalized state annihilated by (S.n(phi))^2.

    Overlaps between null states obey the spin-1 Malus law
    |<n(phi)|n(phi')>|^2 = (n(phi).n(phi'))^2.
    """
    return _zero_eigenvector(squared_spin_matrix(phi), tol)


@dataclass(frozen=True)
class BiasedGhzState:
    """N-qutrit state (2/3)(|-1..-1> + 1/2 |0..0> + (-1)^N |1..1>)."""

    N: int
    amplitudes: np.ndarray


def biased_ghz(N: int, max_parties: int = MAX_PARTIES) -> BiasedGhzState:
    """Amplitude vector of the biased GHZ state, length 3^N, unit norm."""
    if N < 2:
        raise ValueError("the correlation construction needs N >= 2 observers")
    if N > max_parties:
        raise ValueError(f"N={N} exceeds the configured maximum {max_parties} (3^N amplitudes)")
    amps = np.zeros(3**N, dtype=complex)
    # local basis order (|1>, |0>, |-1>) -> indices 0, 1, 2
    amps[0] = (-1) ** N * 2.0 / 3.0
    amps[(3**N - 1) // 2] = 1.0 / 3.0
    amps[3**N - 1] = 2.0 / 3.0
    amps.setflags(write=False)
    return BiasedGhzState(N=N, amplitudes=amps)


def correlation_closed_form(phis: Sequence[float]) -> float:
    """Closed-form N-party correlation (8/3^{2+N})(cos S + (-1)^N cos 2S), S = sum of angles."""
    N = len(phis)
    if N < 2:
        raise ValueError("need at least 2 observers")
    s = float(np.sum(phis))
    return float(8.0 / 3 ** (2 + N) * (np.cos(s) + (-1) ** N * np.cos(2 * s)))


class CorrelationModel:
    """Correlation function of the biased GHZ state for a fixed party count.

    The value depends on the settings only through their sum modulo 2*pi and
    is bounded by 2*prefactor in absolute value.
    """

    def __init__(self, N: int):
        if N < 2:
            raise ValueError("need at least 2 observers")
        self.N = N
        self.prefactor = 8.0 / 3 ** (2 + N)

    def __call__(self, phis: Sequence[float]) -> float:
        if len(phis) != self.N:
            raise ValueError(f"expected {self.N} angles, got {len(phis)}")
        return correlation_closed_form(phis)

    def norm_discrete(self, n: int) -> float:
        return qm_norm_discrete(n, self.N)

    def norm_continuous(self) -> float:
        return qm_norm_continuous(self.N)


def correlation_oracle(
    phis: Sequence[float], imag_tol: float = 1e-12, max_parties: int = MAX_PARTIES
) -> float:
    """Exact expectation of the product of traceless observables in the biased GHZ state.

    Contracts against the three nonzero amplitudes only, so each party
    contributes one 3x3 matrix factor and the cost is O(N).  Serves as an
    independent check of the closed form.
    """
    N = len(phis)
    if N < 2:
        raise ValueError("need at least 2 observers")
    if N > max_parties:
        raise ValueError(f"N={N} exceeds the configured maximum {max_parties}")
    coeff = np.array([(-1) ** N * 2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0], dtype=complex)
    product = np.ones((3, 3), dtype=complex)
    for phi in phis:
        product = product * traceless_observable(phi)
    value = complex(np.conj(coeff) @ product @ coeff)
    if abs(value.imag) > imag_tol:
        raise RuntimeError(f"imaginary residue {value.imag:.3e} exceeds {imag_tol}")
    return value.real


def qm_norm_discrete(n: int, N: int) -> float:
    """Self-overlap of the correlation function summed over the full (3n)^N grid.

    Only the frequency +-1 and +-2 modes of the correlation function survive
    the grid sum: the two squared-cosine terms each average to 1/2, and the
    cross term needs a frequency-3 resonance, which exists only at n = 1.
    For n >= 2 this reduces to 64 n^N / 3^{4+N} exactly.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if N < 2:
        raise ValueError("N >= 2 required")
    squared_modes = (3 * n) ** N  # two terms, (3n)^N / 2 each
    cross = (-1) ** N * 3**N if n == 1 else 0
    return 64 * (squared_modes + cross) / 3 ** (4 + 2 * N)


def qm_norm_continuous(N: int) -> float:
    """Full-circle self-overlap 64 (2*pi)^N / 3^{4+N}.

    Normalized so that each observer's angle carries the per-trio measure
    (three times the plain angle measure); this is the weighting under which
    the grid norms converge, via qm_norm_discrete(n, N) * (2*pi/n)^N.
    """
    if N < 2:
        raise ValueError("N >= 2 required")
    return float(64 * (2 * np.pi) ** N / 3 ** (4 + N))
