"""Double total domination in Harary graphs.

Build H(d, n), evaluate closed-form double total dominating sets and lower
bounds, and check every claim against an exact solver.
"""

from .constructions import CaseDescriptor, Claim, ClaimKind, ConstructionResult, classify, construct_2tds, translate_set
from .domination import BoundsRecord, coverage, forced_vertices, is_ktds, lower_bounds
from .errors import InfeasibleError, ParameterError, UnsupportedDegreeError
from .harary import (
    CirculantGraph,
    Graph,
    HararyParams,
    ParityClass,
    VertexSet,
    build_harary,
    degree_profile,
    neighbors,
)
from .kernels import BACKEND
from .solver import Method, SolveResult, cross_check, solve_exact

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundsRecord",
    "CaseDescriptor",
    "CirculantGraph",
    "Claim",
    "ClaimKind",
    "ConstructionResult",
    "Graph",
    "HararyParams",
    "InfeasibleError",
    "Method",
    "ParameterError",
    "ParityClass",
    "SolveResult",
    "UnsupportedDegreeError",
    "VertexSet",
    "build_harary",
    "classify",
    "construct_2tds",
    "coverage",
    "cross_check",
    "degree_profile",
    "forced_vertices",
    "is_ktds",
    "lower_bounds",
    "neighbors",
    "solve_exact",
    "translate_set",
]
