"""Graph products, generalized wreath products of graphs and permutation groups."""

from .errors import (
    BadPoint,
    ContainsIdentity,
    CycleDetected,
    DoesNotGenerate,
    DuplicateLabel,
    InputError,
    LoopEdge,
    NoIdentity,
    NoInverse,
    NotAncestral,
    NotAssociative,
    NotSymmetric,
    SchemaError,
    SizeCap,
    UnknownLabel,
    VerificationFailed,
    WreathGraphsError,
)
from .graph import Graph, are_isomorphic, complete_graph, cycle_graph, export_dot, graph_new, path_graph
from .groups import (
    FiniteGroup,
    GeneratingSet,
    Permutation,
    PermutationGroup,
    cayley_graph,
    closure,
    cyclic_group,
    direct_product_group,
    group_from_table,
    is_transitive,
    orbit,
    regular_representation,
    symmetric_group,
    trivial_group,
    validate_generating_set,
)
from .gwp_group import (
    GwpGroupSpec,
    TheoremReport,
    gwp_act,
    gwp_compose,
    gwp_enumerate,
    gwp_identity,
    gwp_induced,
    gwp_inverse,
    gwp_is_transitive,
    theorem_generating_set,
    verify_cayley_theorem,
    verify_faithful,
)
from .poset import (
    BlockStructure,
    Poset,
    ancestral_family,
    ancestral_set,
    block_automorphisms,
    block_related,
    hereditary_set,
    is_ancestral,
    linear_extension,
    poset_from_covers,
)
from .products import (
    GwpSpec,
    cartesian_product,
    cayley_gwp_spec,
    generalized_wreath,
    generalized_wreath_cayley,
    gwp_eval,
    gwp_eval_inv,
    gwp_neighbors,
    gwp_vertex_count,
    lexicographic_product,
    wreath_product_graphs,
)

__version__ = "0.1.0"
