"""Attributes of path sets in directed networks.

Path sets are rewritten into hypergraphs over the graph's edges (identity,
union or minimal cuts), weighted into r-incidence matrices, and reduced by
two folds to a single attribute value.
"""

from .attributes import (
    BUILTINS,
    CAPACITY,
    COST,
    DELAY,
    FAULT_PROBABILITY,
    UNAVAILABILITY,
    AttributeRegistry,
    AttributeResult,
    AttributeSpec,
    FoldOp,
    availability,
    evaluate,
    fold_op,
    register_attribute,
    serviceability,
)
from .errors import (
    AttributeSpecError,
    DomainError,
    GraphError,
    LimitExceededError,
    PathAttrError,
    PathError,
    UnknownNameError,
)
from .graph import (
    DirectedGraph,
    DirectedPath,
    Edge,
    EdgePropertyVector,
    PathSet,
    build_graph,
    validate_path,
    validate_path_set,
)
from .hypergraph import Hyperedge, Hypergraph, Matrix, VertexWeightedHypergraph, incidence_matrix, r_incidence_matrix
from .polymatroid import SetFunctionReport, SetFunctionTable, check_axioms, dualize, tabulate
from .transforms import (
    CutVerdict,
    TransformKind,
    cuts_transform,
    identity_transform,
    is_minimal_cut,
    union_transform,
)

__all__ = [
    "BUILTINS",
    "CAPACITY",
    "COST",
    "DELAY",
    "FAULT_PROBABILITY",
    "UNAVAILABILITY",
    "AttributeRegistry",
    "AttributeResult",
    "AttributeSpec",
    "FoldOp",
    "availability",
    "evaluate",
    "fold_op",
    "register_attribute",
    "serviceability",
    "AttributeSpecError",
    "DomainError",
    "GraphError",
    "LimitExceededError",
    "PathAttrError",
    "PathError",
    "UnknownNameError",
    "DirectedGraph",
    "DirectedPath",
    "Edge",
    "EdgePropertyVector",
    "PathSet",
    "build_graph",
    "validate_path",
    "validate_path_set",
    "Hyperedge",
    "Hypergraph",
    "Matrix",
    "VertexWeightedHypergraph",
    "incidence_matrix",
    "r_incidence_matrix",
    "SetFunctionReport",
    "SetFunctionTable",
    "check_axioms",
    "dualize",
    "tabulate",
    "CutVerdict",
    "TransformKind",
    "cuts_transform",
    "identity_transform",
    "is_minimal_cut",
    "union_transform",
]

__version__ = "0.1.0"
