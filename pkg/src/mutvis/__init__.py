"""Mutual-visibility sets, numbers, polynomials and spectra of graphs."""

from .enumeration import (
    DEFAULT_LIMITS,
    EnumerationLimits,
    dual_spectrum,
    lemma_assisted_dual_search,
    maximal_visibility_sets,
    polynomial_via_inclusion_exclusion,
    total_number_geodetic,
    total_number_via_bypass,
    visibility_number,
    visibility_polynomial,
)
from .families import (
    Construction,
    ConstructionSpec,
    attach_seven_cycle,
    complete_bipartite_graph,
    complete_graph,
    construct,
    cycle_graph,
    f_composite_graph,
    f_one_ell_graph,
    f_t_graph,
    g_n_graph,
    path_graph,
    petersen_graph,
    star_graph,
    y_set,
)
from .graphs import Graph, VertexSet, build_graph
from .polynomials import (
    CountPolynomial,
    closed_form,
    generalized_binomial,
    shadow_bound_check,
    spectrum_gap_report,
)
from .visibility import (
    Variant,
    is_general_position_set,
    is_pair_visible,
    is_total_visibility_set_fast,
    is_visibility_set,
    minimal_non_total_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Construction",
    "ConstructionSpec",
    "CountPolynomial",
    "DEFAULT_LIMITS",
    "EnumerationLimits",
    "Graph",
    "Variant",
    "VertexSet",
    "attach_seven_cycle",
    "build_graph",
    "closed_form",
    "complete_bipartite_graph",
    "complete_graph",
    "construct",
    "cycle_graph",
    "dual_spectrum",
    "f_composite_graph",
    "f_one_ell_graph",
    "f_t_graph",
    "g_n_graph",
    "generalized_binomial",
    "is_general_position_set",
    "is_pair_visible",
    "is_total_visibility_set_fast",
    "is_visibility_set",
    "lemma_assisted_dual_search",
    "maximal_visibility_sets",
    "minimal_non_total_witness",
    "path_graph",
    "petersen_graph",
    "polynomial_via_inclusion_exclusion",
    "shadow_bound_check",
    "spectrum_gap_report",
    "star_graph",
    "total_number_geodetic",
    "total_number_via_bypass",
    "visibility_number",
    "visibility_polynomial",
    "y_set",
]
