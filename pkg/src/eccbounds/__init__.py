"""Eccentricity-based lower bounds on graph algebraic connectivity.

The package computes lower bounds on lambda2 (the second-smallest Laplacian
eigenvalue) from eccentricity counts, verifies them against exactly computed
spectra, and numerically certifies the matrix inequalities they rest on.
"""

from .bounds import (
    BOUND_NAMES,
    TIGHTNESS_REL_TOL,
    BoundReport,
    bound_g1,
    bound_g1_diam,
    bound_g2,
    bound_lu,
    bound_mohar,
    bound_s1,
    bound_s2_over_n,
    evaluate_all,
    gamma,
)
from .certify import (
    CHAIN_REL_TOL,
    ChainCheck,
    certify_g1_matrix,
    certify_g2_matrix,
    check_chain,
)
from .graphs import (
    FAMILIES,
    Graph,
    ParseError,
    complement,
    complete_graph,
    cycle_graph,
    erdos_renyi,
    generate,
    load_edge_list,
    parse_edge_list,
    path_graph,
    random_tree,
    serialize_edge_list,
    star_graph,
    validate,
)
from .metrics import (
    UNREACHABLE,
    DistanceMatrix,
    EccentricityProfile,
    all_pairs_distances,
    count_s_ell,
    eccentricity_profile,
    is_connected,
    power_graph,
)
from .spectral import (
    NOT_PSD,
    PSD,
    CertificateResult,
    JacobiConvergenceError,
    SpectralSummary,
    eigen_decompose,
    is_psd,
    lambda2,
    laplacian,
    psd_tolerance,
)

__version__ = "0.1.0"

__all__ = [
    "BOUND_NAMES",
    "CHAIN_REL_TOL",
    "FAMILIES",
    "NOT_PSD",
    "PSD",
    "TIGHTNESS_REL_TOL",
    "UNREACHABLE",
    "BoundReport",
    "CertificateResult",
    "ChainCheck",
    "DistanceMatrix",
    "EccentricityProfile",
    "Graph",
    "JacobiConvergenceError",
    "ParseError",
    "SpectralSummary",
    "all_pairs_distances",
    "bound_g1",
    "bound_g1_diam",
    "bound_g2",
    "bound_lu",
    "bound_mohar",
    "bound_s1",
    "bound_s2_over_n",
    "certify_g1_matrix",
    "certify_g2_matrix",
    "check_chain",
    "complement",
    "complete_graph",
    "count_s_ell",
    "cycle_graph",
    "eccentricity_profile",
    "eigen_decompose",
    "erdos_renyi",
    "evaluate_all",
    "gamma",
    "generate",
    "is_connected",
    "is_psd",
    "lambda2",
    "laplacian",
    "load_edge_list",
    "parse_edge_list",
    "path_graph",
    "power_graph",
    "psd_tolerance",
    "random_tree",
    "serialize_edge_list",
    "star_graph",
    "validate",
    "__version__",
]
