"""Boolean complexes of finite simple graphs.

Words of distinct vertices modulo commutation of non-adjacent letters form a
ranked simplicial poset, the boolean ideal; its cell complex realises a wedge
of top-dimensional spheres.  This package enumerates the ideal, counts the
spheres four independent ways (edge recursion, Euler characteristic, covering
edge subsets, GF(2) homology), builds the anchored acyclic matchings behind
the count, and extracts explicit mod-2 generating cycles.
"""

from .graph import (
    CANONICAL_KEY_LIMIT,
    CanonicalKeyLimitError,
    FamilyError,
    FamilySpec,
    Graph,
    GraphError,
    InvalidEdgeError,
    UnknownVertexError,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    family_graph,
    format_edge_list,
    parse_edge_list,
    path_graph,
    star_graph,
)
from .ideal import (
    BooleanIdeal,
    BudgetError,
    UnknownElementError,
    admits_adjacent_pair,
    count_rank_path,
    enumerate_ideal,
    euler_characteristic,
    format_word,
    normalize,
    parse_word,
    rank_sizes,
    representatives,
    trace_order,
    word_faces,
)
from .beta import (
    BetaResult,
    CrossCheckError,
    CrossCheckReport,
    beta_complete,
    beta_euler,
    beta_family,
    beta_recursive,
    beta_subset_formula,
    cross_check,
    cycle_count,
    fibonacci,
    spanning_forest_count,
)
from .morse import (
    HReport,
    Matching,
    SkeletonReport,
    build_h_matching,
    skeleton_restriction_counts,
    skeleton_sphere_counts,
    verify_acyclic,
    verify_h_properties,
)
from .homology import (
    Gf2Chain,
    Gf2ChainComplex,
    Gf2Matrix,
    an_fixture_suite,
    betti_gf2,
    boundary_matrix,
    top_betti,
    top_cycle_basis,
    verify_cycle,
)

__version__ = "1.0.0"
