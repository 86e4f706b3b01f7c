"""Exact evaluation of vector-transformation sequence counts, with a
dominating-set compiler and a cross-checking verification harness."""

from .core import (
    DenseMatrix,
    DimensionMismatch,
    EmptyTransformationList,
    FunctionalMatrix,
    NonBinaryEntry,
    NonSquare,
    ResourceBound,
    Semiring,
    VestError,
    VestInstance,
    apply,
    instance_fingerprint,
    is_zero_vector,
    new_instance,
    to_functional,
)
from .evaluate import (
    IndexOutOfRange,
    MSequenceResult,
    StateDistribution,
    annihilated_mass,
    check_sequence,
    dedup_levels,
    m_k_bruteforce,
    m_k_dedup,
    m_sequence,
)
from .documents import DocumentError, InstanceDocument, VerificationReport, VerificationRow
from .graphs import (
    Graph,
    GraphSyntaxError,
    InconsistentHeader,
    VertexOutOfRange,
    VertexSet,
    closed_neighborhood,
    count_dominating_sets,
    is_dominating,
    parse_graph,
)
from .reduction import (
    CoordinateLayout,
    EmptyGraph,
    ReducedInstance,
    build_initial_vector,
    build_selector,
    build_vertex_action,
    build_vertex_matrix,
    coordinate_layout,
    reduce_graph,
)

__version__ = "0.1.0"

__all__ = [
    "DenseMatrix",
    "DimensionMismatch",
    "EmptyTransformationList",
    "FunctionalMatrix",
    "NonBinaryEntry",
    "NonSquare",
    "ResourceBound",
    "Semiring",
    "VestError",
    "VestInstance",
    "apply",
    "instance_fingerprint",
    "is_zero_vector",
    "new_instance",
    "to_functional",
    "IndexOutOfRange",
    "MSequenceResult",
    "StateDistribution",
    "annihilated_mass",
    "check_sequence",
    "dedup_levels",
    "m_k_bruteforce",
    "m_k_dedup",
    "m_sequence",
    "DocumentError",
    "InstanceDocument",
    "VerificationReport",
    "VerificationRow",
    "Graph",
    "GraphSyntaxError",
    "InconsistentHeader",
    "VertexOutOfRange",
    "VertexSet",
    "closed_neighborhood",
    "count_dominating_sets",
    "is_dominating",
    "parse_graph",
    "CoordinateLayout",
    "EmptyGraph",
    "ReducedInstance",
    "build_initial_vector",
    "build_selector",
    "build_vertex_action",
    "build_vertex_matrix",
    "coordinate_layout",
    "reduce_graph",
    "__version__",
]
