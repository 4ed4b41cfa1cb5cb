"""Multisetting cone Bell inequalities for N spin-1 systems.

Builds the uniform cone-setting grids and deterministic local strategies,
evaluates the biased-GHZ correlation function and its norms, maximizes the
local-realistic functional exhaustively or over the two-run strategy family,
computes the analytic witness-magnitude bound, and evaluates the continuous
setting limit.
"""

__version__ = "0.1.0"

from .settings import (
    FourierWitness,
    Strategy,
    TrioGrid,
    build_grid,
    enumerate_strategies,
    fourier_witness,
    run_family_strategies,
    witness_of_indices,
    witness_table,
)
from .quantum import (
    SPIN_X,
    SPIN_Y,
    SPIN_Z,
    BiasedGhzState,
    CorrelationModel,
    biased_ghz,
    cone_direction,
    correlation_closed_form,
    correlation_oracle,
    null_direction_state,
    qm_norm_continuous,
    qm_norm_discrete,
    squared_spin_matrix,
    traceless_observable,
)
from .search import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SearchResult,
    ViolationReport,
    conjecture_max,
    exhaustive_max,
    functional_from_witnesses,
    lhv_functional,
    violation_report,
)
from .bounds import ProjectionBound, analytic_bound, bound_ratio, max_projection
from .continuum import (
    ContinuousReport,
    continuous_ratio,
    interval_lhv_value,
    interval_max,
    quadrature_oracle,
)
from .reporting import ReportRow, SweepSpec, encode_argmax, decode_argmax, run_sweep

__all__ = [
    "__version__",
    "TrioGrid",
    "Strategy",
    "FourierWitness",
    "build_grid",
    "enumerate_strategies",
    "run_family_strategies",
    "fourier_witness",
    "witness_of_indices",
    "witness_table",
    "SPIN_X",
    "SPIN_Y",
    "SPIN_Z",
    "cone_direction",
    "squared_spin_matrix",
    "traceless_observable",
    "null_direction_state",
    "BiasedGhzState",
    "biased_ghz",
    "CorrelationModel",
    "correlation_closed_form",
    "correlation_oracle",
    "qm_norm_discrete",
    "qm_norm_continuous",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "SearchResult",
    "ViolationReport",
    "lhv_functional",
    "functional_from_witnesses",
    "exhaustive_max",
    "conjecture_max",
    "violation_report",
    "ProjectionBound",
    "max_projection",
    "analytic_bound",
    "bound_ratio",
    "ContinuousReport",
    "interval_lhv_value",
    "interval_max",
    "quadrature_oracle",
    "continuous_ratio",
    "SweepSpec",
    "ReportRow",
    "run_sweep",
    "encode_argmax",
    "decode_argmax",
]
