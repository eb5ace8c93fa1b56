"""Exact generating-function toolkit for connected labelled graphs and
irreducible tournaments: counts, full asymptotic expansions of the
connectivity probabilities, and brute-force cross-checks."""

from .asymptotics import (
    BenderInput,
    ExpansionReport,
    bender_condition_probe,
    bender_expand,
    connected_bender_input,
    error_report,
    exact_prob_connected,
    exact_prob_connected_p,
    exact_prob_irreducible,
    expansion_prob_connected,
    expansion_prob_connected_p,
    expansion_prob_irreducible,
    irreducible_bender_input,
)
from .errors import (
    ConnasymError,
    ConsistencyError,
    DomainError,
    HypothesisViolation,
    ResourceLimitError,
    UsageError,
)
from .oracle import (
    Decomposition,
    GraphInstance,
    TournamentInstance,
    component_histogram_exhaustive,
    count_connected_exhaustive,
    count_irreducible_exhaustive,
    decompose_tournament,
    mc_estimate,
)
from .polynomial import RhoPolynomial
from .sequences import (
    CountTable,
    PolynomialTable,
    components_counts,
    connected_counts,
    graph_counts,
    irreducible_counts,
    rho_graph_series,
    rho_polynomials,
    tournament_counts,
)
from .series import (
    TruncatedSeries,
    egf_counts,
    series_add,
    series_exp,
    series_log,
    series_mul,
    series_recip,
    series_sub,
)

__version__ = "0.1.0"
