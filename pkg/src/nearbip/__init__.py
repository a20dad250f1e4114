"""Graph library and CLI for minimum independent feedback vertex sets of
diameter-2 graphs, near-bipartiteness certificates, and the 3-SAT
hardness-construction compiler."""

from ._backend import active_backend, compiled_available
from .decomposition import (
    CycleInB,
    IndependenceViolation,
    InvalidDecompositionError,
    NbDecomposition,
    TwoColouring,
    Valid,
    colouring_to_decomposition,
    decomposition_from_a,
    decomposition_to_three_colouring,
    is_good_colouring,
    is_valid_decomposition,
    validate_decomposition,
)
from .graph import (
    Graph,
    GraphError,
    Infinite,
    OutOfRangeError,
    SelfLoopError,
    VertexSet,
    diameter,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    is_forest,
    two_neighbour_set,
)
from .oracle import (
    OracleResult,
    SearchSpaceTooLargeError,
    all_nb_decompositions,
    exact_min_ifvs,
    is_near_bipartite_exact,
)
from .reduction import (
    CnfError,
    CnfFormula,
    HphiInstance,
    UnsatisfiedClauseError,
    assignment_to_decomposition,
    build_constraint_graph,
    build_hphi,
    certify_hphi,
    constraint_decomposition,
    parse_dimacs_cnf,
)
from .solver import (
    DiameterNotTwoError,
    Lemma2PreconditionError,
    StructureViolationError,
    UPartition,
    find_deletion_bipartite_vertex,
    lemma1_min_ifvs,
    lemma2_min_ifvs,
    partition_around_u,
    solve_min_ifvs_diam2,
    yang_yuan_condition,
    yang_yuan_near_bipartite,
)

__version__ = "0.1.0"
