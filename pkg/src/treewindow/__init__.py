"""Linear-time search for subtrees of specified weight, with applications
to cycles in plane hamiltonian graphs and dense subset-sum instances."""

from .errors import (
    DegenerateTreeError,
    EmbeddingError,
    FormatError,
    InstanceTooLargeError,
    NotATreeError,
    NotHamiltonianError,
    PreconditionError,
    StructureError,
    TreeWindowError,
    WeightError,
    WeightExceedsTargetError,
)
from .euler import (
    EulerCycle,
    SubtreeResult,
    build_euler_cycle,
    find_subtree,
    verify_subtree,
)
from .planar import (
    CycleResult,
    DualTree,
    HamiltonCycle,
    PlaneGraph,
    Split,
    build_dual_tree,
    cycle_search_guaranteed,
    find_cycle_near,
    find_half_cycle_3conn,
    is_three_connected,
    parse_graph,
    serialize_graph,
    split_by_hamilton,
    subtree_to_cycle,
    trace_faces,
    verify_cycle,
)
from .subsetsum import (
    NOT_APPLICABLE,
    Decision,
    SubsetWitness,
    oracle_subset_sum,
    partition_dense,
    subset_sum_dense,
    subset_sum_via_partition,
    verify_witness,
)
from .tree import (
    ConditionReport,
    SearchParams,
    TIGHT_FAMILIES,
    TightInstance,
    WeightedTree,
    achievable_subtree_weights,
    check_conditions,
    parse_tree,
    path_tree,
    serialize_tree,
    star_tree,
    tight_instance,
)
from . import generators

__version__ = "1.0.0"

__all__ = [
    "CycleResult",
    "ConditionReport",
    "Decision",
    "DegenerateTreeError",
    "DualTree",
    "EmbeddingError",
    "EulerCycle",
    "FormatError",
    "HamiltonCycle",
    "InstanceTooLargeError",
    "NOT_APPLICABLE",
    "NotATreeError",
    "NotHamiltonianError",
    "PlaneGraph",
    "PreconditionError",
    "SearchParams",
    "Split",
    "StructureError",
    "SubsetWitness",
    "SubtreeResult",
    "TIGHT_FAMILIES",
    "TightInstance",
    "TreeWindowError",
    "WeightError",
    "WeightExceedsTargetError",
    "WeightedTree",
    "achievable_subtree_weights",
    "build_dual_tree",
    "build_euler_cycle",
    "check_conditions",
    "cycle_search_guaranteed",
    "find_cycle_near",
    "find_half_cycle_3conn",
    "find_subtree",
    "generators",
    "is_three_connected",
    "oracle_subset_sum",
    "parse_graph",
    "parse_tree",
    "partition_dense",
    "path_tree",
    "serialize_graph",
    "serialize_tree",
    "split_by_hamilton",
    "star_tree",
    "subset_sum_dense",
    "subset_sum_via_partition",
    "subtree_to_cycle",
    "tight_instance",
    "trace_faces",
    "verify_cycle",
    "verify_subtree",
    "verify_witness",
]
