"""knodeldom: Knödel graph modeling and total domination toolkit."""

from .domination import (
    DominationReport,
    SweepReport,
    certify_constructions,
    construct_optimal_tds,
    gamma_t_formula,
    is_dominating,
    is_total_dominating,
    side_lower_bound,
)
from .errors import DomainError, ResourceLimitError
from .graph import (
    KnodelGraph,
    PowerDiffCheck,
    Side,
    Vertex,
    build_graph,
    check_power_diff_identity,
    m_set,
    u,
    v,
)
from .solver import (
    CERT_BOUND_MATCHED,
    CERT_EXHAUSTED,
    SolveOptions,
    SolveResult,
    solve_min_dominating,
    solve_min_total_dominating,
)
from .structure import (
    CheckOutcome,
    CountingReport,
    IntersectionPrediction,
    check_k23_free,
    common_neighbors,
    counting_report,
    predict_intersection,
    run_suite,
    unique_intersection_regime,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "KnodelGraph",
    "Side",
    "Vertex",
    "u",
    "v",
    "build_graph",
    "m_set",
    "check_power_diff_identity",
    "PowerDiffCheck",
    "common_neighbors",
    "predict_intersection",
    "IntersectionPrediction",
    "check_k23_free",
    "unique_intersection_regime",
    "counting_report",
    "CountingReport",
    "CheckOutcome",
    "run_suite",
    "DominationReport",
    "is_dominating",
    "is_total_dominating",
    "gamma_t_formula",
    "side_lower_bound",
    "construct_optimal_tds",
    "certify_constructions",
    "SweepReport",
    "SolveOptions",
    "SolveResult",
    "solve_min_total_dominating",
    "solve_min_dominating",
    "CERT_BOUND_MATCHED",
    "CERT_EXHAUSTED",
    "DomainError",
    "ResourceLimitError",
]
