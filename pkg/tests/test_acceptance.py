"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines on the terminal.  Expensive search results are shared across criteria
through module-scoped fixtures.
"""

import itertools
import time

import numpy as np
import pytest

from conebell import (
    Strategy,
    analytic_bound,
    bound_ratio,
    build_grid,
    conjecture_max,
    continuous_ratio,
    correlation_closed_form,
    correlation_oracle,
    exhaustive_max,
    fourier_witness,
    functional_from_witnesses,
    interval_lhv_value,
    interval_max,
    lhv_functional,
    max_projection,
    null_direction_state,
    cone_direction,
    qm_norm_continuous,
    qm_norm_discrete,
    quadrature_oracle,
    squared_spin_matrix,
    violation_report,
)
import conebell.bounds

N2_TARGET_RATIOS = {2: 0.8889, 3: 0.9724, 4: 1.0018, 5: 1.016, 6: 1.023}
N3_TARGET_RATIOS = {2: 0.889, 3: 1.401, 4: 1.398, 5: 1.397}
PROJECTION_TARGETS = {3: 2.86822, 4: 3.7678, 5: 4.678, 6: 5.5932, 7: 6.5112}

CONJECTURE_REGION = (
    [(2, n) for n in range(2, 7)]
    + [(3, n) for n in range(2, 6)]
    + [(4, n) for n in range(2, 5)]
    + [(5, n) for n in (2, 3)]
)


def announce(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE C{criterion:02d} {'PASS' if ok else 'FAIL'} - {detail}", flush=True)


@pytest.fixture(scope="module")
def n2_exhaustive():
    t0 = time.perf_counter()
    reports = {n: violation_report(2, n, workers=4) for n in range(2, 7)}
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="module")
def n3_exhaustive():
    t0 = time.perf_counter()
    reports = {n: violation_report(3, n, workers=8) for n in range(2, 6)}
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="module")
def region_maxima(n2_exhaustive, n3_exhaustive):
    exhaustive = {(2, n): r.lhv_max for n, r in n2_exhaustive[0].items()}
    exhaustive.update({(3, n): r.lhv_max for n, r in n3_exhaustive[0].items()})
    for N, n in CONJECTURE_REGION:
        if (N, n) not in exhaustive:
            exhaustive[(N, n)] = exhaustive_max(N, build_grid(n)).lhv_max
    conjectured = {
        (N, n): conjecture_max(N, build_grid(n)).lhv_max for N, n in CONJECTURE_REGION
    }
    return exhaustive, conjectured


def test_c01_oracle_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    for N in (2, 3, 4):
        rng = np.random.default_rng(1000 + N)
        for _ in range(1000):
            phis = rng.uniform(0, 2 * np.pi, N)
            worst = max(worst, abs(correlation_closed_form(phis) - correlation_oracle(phis)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 10.0
    announce(1, ok, f"closed form vs oracle: max dev {worst:.2e} over 3x1000 tuples in {elapsed:.2f}s")
    assert worst <= 1e-10
    assert elapsed < 10.0


def test_c02_quantum_norms():
    worst = 0.0
    for n in (2, 3, 4):
        for N in (2, 3):
            angles = 2 * np.pi * np.arange(3 * n) / (3 * n)
            s = sum(np.meshgrid(*([angles] * N), indexing="ij"))
            e = 8 / 3 ** (2 + N) * (np.cos(s) + (-1) ** N * np.cos(2 * s))
            worst = max(worst, abs(qm_norm_discrete(n, N) - float(np.sum(e * e))))
    exact = all(
        qm_norm_discrete(n, N) == 64 * n**N / 3 ** (4 + N)
        for n in range(2, 21)
        for N in range(2, 7)
    )
    ok = worst <= 1e-12 and exact
    announce(2, ok, f"grid-sum dev {worst:.2e}; closed form exact for n=2..20, N=2..6: {exact}")
    assert worst <= 1e-12
    assert exact


def test_c03_two_observer_ratios(n2_exhaustive):
    reports, elapsed = n2_exhaustive
    gaps = {n: abs(reports[n].ratio - N2_TARGET_RATIOS[n]) for n in reports}
    ok = max(gaps.values()) <= 1e-3 and elapsed < 60.0
    ratios = ", ".join(f"n={n}: {reports[n].ratio:.4f}" for n in sorted(reports))
    announce(3, ok, f"N=2 exhaustive ratios ({ratios}) in {elapsed:.1f}s with 4 workers")
    assert max(gaps.values()) <= 1e-3
    assert elapsed < 60.0


def test_c04_three_observer_ratios(n3_exhaustive):
    reports, elapsed = n3_exhaustive
    gaps = {n: abs(reports[n].ratio - N3_TARGET_RATIOS[n]) for n in reports}
    ok = max(gaps.values()) <= 2e-3 and elapsed < 600.0
    ratios = ", ".join(f"n={n}: {reports[n].ratio:.4f}" for n in sorted(reports))
    announce(4, ok, f"N=3 exhaustive ratios ({ratios}) in {elapsed:.1f}s with 8 workers")
    assert max(gaps.values()) <= 2e-3
    assert elapsed < 600.0


def test_c05_projection_values():
    conebell.bounds._max_witness.cache_clear()
    t0 = time.perf_counter()
    values = {n: max_projection(n).max_witness_magnitude for n in range(3, 8)}
    elapsed = time.perf_counter() - t0
    radical = np.sqrt((1 + 2 * np.cos(2 * np.pi / 9)) ** 2 + (1 + 2 * np.sin(np.pi / 18)) ** 2)
    gaps = {n: abs(values[n] - PROJECTION_TARGETS[n]) for n in values}
    ok = max(gaps.values()) <= 1e-3 and abs(values[3] - radical) <= 1e-5 and elapsed < 1.0
    shown = ", ".join(f"n={n}: {v:.5f}" for n, v in values.items())
    announce(5, ok, f"max witness magnitudes ({shown}) in {elapsed:.3f}s")
    assert max(gaps.values()) <= 1e-3
    assert abs(values[3] - radical) <= 1e-5
    assert elapsed < 1.0


def test_c06_two_observer_tightness(n2_exhaustive):
    reports, _ = n2_exhaustive
    gaps = {n: abs(reports[n].lhv_max - analytic_bound(n, 2)) for n in reports}
    ok = max(gaps.values()) <= 1e-9
    announce(6, ok, f"N=2 bound tightness for n=2..6: max gap {max(gaps.values()):.2e}")
    assert max(gaps.values()) <= 1e-9


def test_c07_threshold_party_count():
    ratios = {N: bound_ratio(3, N) for N in range(2, 6)}
    first_violating = min(N for N, r in ratios.items() if r > 1)
    ok = first_violating == 3 and abs(ratios[3] - 1.0173) <= 1e-3
    announce(7, ok, f"bound ratios at n=3: N=2: {ratios[2]:.4f}, N=3: {ratios[3]:.4f} (first > 1 at N={first_violating})")
    assert first_violating == 3
    assert abs(ratios[3] - 1.0173) <= 1e-3


def test_c08_conjecture_sufficiency(region_maxima):
    exhaustive, conjectured = region_maxima
    gaps = {cell: abs(exhaustive[cell] - conjectured[cell]) for cell in CONJECTURE_REGION}
    worst_cell = max(gaps, key=gaps.get)
    ok = gaps[worst_cell] <= 1e-9
    announce(8, ok, f"two-run family matches exhaustive on {len(gaps)} cells; max gap {gaps[worst_cell]:.2e} at {worst_cell}")
    assert gaps[worst_cell] <= 1e-9


def test_c09_continuum(n3_exhaustive):
    formula_gap = max(
        abs(interval_lhv_value(N, 0.0) - 2.0 ** (3 - N) * 3.0 ** (-N / 2 - 2) * (2**N + 1))
        for N in range(2, 11)
    )
    quad_gap = max(
        abs(quadrature_oracle(N, 0.0, 512) - interval_max(N)) for N in (2, 3)
    )
    identity_gap = max(
        abs(continuous_ratio(N).ratio - qm_norm_continuous(N) / (3**N * interval_max(N)))
        for N in range(2, 11)
    )
    plateau_gap = max(
        abs(continuous_ratio(3).ratio - n3_exhaustive[0][n].ratio) for n in (3, 4, 5)
    )
    ok = formula_gap <= 1e-12 and quad_gap <= 1e-5 and identity_gap <= 1e-12 and plateau_gap < 0.005
    announce(
        9,
        ok,
        f"interval max formula {formula_gap:.1e}; quadrature {quad_gap:.1e}; "
        f"ratio identity {identity_gap:.1e}; plateau gap {plateau_gap:.4f}",
    )
    assert formula_gap <= 1e-12
    assert quad_gap <= 1e-5
    assert identity_gap <= 1e-12
    assert plateau_gap < 0.005


def test_c10_exponential_growth():
    factors = {
        N: continuous_ratio(N + 1).ratio / continuous_ratio(N).ratio for N in range(3, 10)
    }
    ok = min(factors.values()) > 1.15
    announce(10, ok, f"continuum ratio growth factors N=3..9 all in [{min(factors.values()):.3f}, {max(factors.values()):.3f}]")
    assert min(factors.values()) > 1.15


def test_c11_property_suite(region_maxima):
    rng = np.random.default_rng(2026)
    failures = []

    # trio completeness of the squared spin components
    for phi in rng.uniform(0, 2 * np.pi, 20):
        total = sum(squared_spin_matrix(phi + j * 2 * np.pi / 3) for j in range(3))
        if not np.allclose(total, 2 * np.eye(3), atol=1e-12):
            failures.append("trio-completeness")
            break

    # marginal nullity: summing the correlation over any one trio gives zero
    for N in (2, 3, 4):
        for _ in range(20):
            phis = rng.uniform(0, 2 * np.pi, N)
            axis = int(rng.integers(0, N))
            total = 0.0
            for j in range(3):
                shifted = phis.copy()
                shifted[axis] += j * 2 * np.pi / 3
                total += correlation_closed_form(shifted)
            if abs(total) > 1e-12:
                failures.append("marginal-nullity")
                break

    # Malus law for null-direction overlaps
    for phi, phi2 in rng.uniform(0, 2 * np.pi, (50, 2)):
        overlap = abs(np.vdot(null_direction_state(phi), null_direction_state(phi2))) ** 2
        if abs(overlap - float(cone_direction(phi) @ cone_direction(phi2)) ** 2) > 1e-10:
            failures.append("malus-law")
            break

    # complement sign rule, exact through the witness identity
    grid = build_grid(3)
    for _ in range(30):
        sigmas = sorted(Strategy.from_rank(int(r), 3) for r in rng.integers(0, 27, 3))
        pairs = [fourier_witness(s, grid) for s in sigmas]
        w1s, w2s = [p.w1 for p in pairs], [p.w2 for p in pairs]
        value = functional_from_witnesses(w1s, w2s)
        flipped = functional_from_witnesses([-w1s[0]] + w1s[1:], [-w2s[0]] + w2s[1:])
        if flipped != -value:
            failures.append("complement-sign")
            break

    # permutation symmetry of the functional
    for _ in range(20):
        sigmas = [Strategy.from_rank(int(r), 3) for r in rng.integers(0, 27, 3)]
        reference = lhv_functional(sigmas, grid)
        if any(
            lhv_functional([sigmas[i] for i in perm], grid) != reference
            for perm in itertools.permutations(range(3))
        ):
            failures.append("permutation-symmetry")
            break

    # dominance chain on the verified region
    exhaustive, conjectured = region_maxima
    for (N, n), exact in exhaustive.items():
        if (N, n) in conjectured and conjectured[(N, n)] > exact + 1e-9:
            failures.append(f"dominance-conjecture({N},{n})")
        if exact > analytic_bound(n, N) + 1e-9:
            failures.append(f"dominance-bound({N},{n})")

    ok = not failures
    announce(11, ok, "all module invariants hold" if ok else f"failed: {failures}")
    assert not failures
