"""Monochromatic components of edge-colored uniform hypergraphs, hole-style
invariants, the partite dual translation, extremal constructions, and
witness-producing degree/refutation algorithms.

The heavy enumeration kernels have a compiled backend with a pure-Python
fallback; `backend_name()` reports which one is active.  Set MONOCOMP_PURE=1
to force the fallback.
"""

from ._backend import BACKEND_NAME, backends_available
from .acceptance import run_criterion, verify_suite
from .constructions import (
    ConstructionReport,
    affine_plane_coloring,
    bose_sts,
    capped_coloring,
    construct_grid,
    construct_isolated_clique,
    construct_layered,
    construct_layered_dual,
    first_moment_alpha_bound,
    hole_based_coloring,
    sample_binomial_hypergraph,
    steiner_pair_cover,
)
from .core import (
    MC_DEFAULT_BUDGET,
    ComponentLabeling,
    EdgeColoring,
    UniformHypergraph,
    canonicalize,
    check_coloring,
    color_components,
    largest_mono_component,
    mc_exact,
    two_shadow,
)
from .duality import (
    DualCorrespondence,
    dual_max_degree_identity,
    dual_of_coloring,
    primal_of_dual,
)
from .errors import (
    BudgetExceeded,
    InternalCheckError,
    PreconditionError,
    VerificationError,
)
from .holes import (
    CrossFreeFamily,
    PartiteHole,
    cross_free_number,
    independence_number,
    is_expander,
    is_outer_expander,
    overlapping_hole_number,
    partite_hole_number,
)
from .partite import PartiteMultiHypergraph
from .sweep import CSV_COLUMNS, ExperimentRecord, run_sweep
from .witness import (
    CrossFreeWitness,
    DegreeWitness,
    HoleWitness,
    MonoComponentResult,
    MultiplicityWitness,
    ThresholdTable,
    bipartite_degree_witness,
    degree_witness,
    fat_edge_or_degree,
    high_degree_vertex,
    mono_component_witness,
    r_partite_degree_witness,
    shadow_degree_witness,
    split_or_concentrate,
    split_or_concentrate_simple,
    tripartite_degree_witness,
    weak_degree_witness,
)

__version__ = "0.1.0"


def backend_name():
    return BACKEND_NAME

__all__ = [
    "BACKEND_NAME",
    "BudgetExceeded",
    "CSV_COLUMNS",
    "ComponentLabeling",
    "ConstructionReport",
    "CrossFreeFamily",
    "CrossFreeWitness",
    "DegreeWitness",
    "DualCorrespondence",
    "EdgeColoring",
    "ExperimentRecord",
    "HoleWitness",
    "InternalCheckError",
    "MC_DEFAULT_BUDGET",
    "MonoComponentResult",
    "MultiplicityWitness",
    "PartiteHole",
    "PartiteMultiHypergraph",
    "PreconditionError",
    "ThresholdTable",
    "UniformHypergraph",
    "VerificationError",
    "affine_plane_coloring",
    "backend_name",
    "backends_available",
    "bipartite_degree_witness",
    "bose_sts",
    "canonicalize",
    "capped_coloring",
    "check_coloring",
    "color_components",
    "construct_grid",
    "construct_isolated_clique",
    "construct_layered",
    "construct_layered_dual",
    "cross_free_number",
    "degree_witness",
    "dual_max_degree_identity",
    "dual_of_coloring",
    "fat_edge_or_degree",
    "first_moment_alpha_bound",
    "high_degree_vertex",
    "hole_based_coloring",
    "independence_number",
    "is_expander",
    "is_outer_expander",
    "largest_mono_component",
    "mc_exact",
    "mono_component_witness",
    "overlapping_hole_number",
    "partite_hole_number",
    "primal_of_dual",
    "r_partite_degree_witness",
    "run_criterion",
    "run_sweep",
    "sample_binomial_hypergraph",
    "shadow_degree_witness",
    "split_or_concentrate",
    "split_or_concentrate_simple",
    "steiner_pair_cover",
    "tripartite_degree_witness",
    "two_shadow",
    "verify_suite",
    "weak_degree_witness",
]
