"""Ground generic subtyping graphs built from partial Cartesian graph
products, cross-checked by a rule-based decision procedure."""

from .builder import (
    IterationTrace,
    contravariant_image,
    covariant_image,
    initial_approximation,
    initial_wildcards,
    run,
    step,
    subtype_by_graph,
    sufficient_depth,
)
from .digraph import (
    BipointedGraph,
    Edge,
    EdgeTag,
    LabeledDigraph,
    cartesian_product,
    disjoint_union,
    induced_subgraph,
    merge_vertices,
    order_isomorphic,
    pair_label,
    reachable,
    reflexive_transitive_closure,
    reversed_graph,
    transitive_reduction,
)
from .errors import (
    DeclarationError,
    GraphError,
    GroundsubError,
    ParseError,
    QueryError,
)
from .export import FORMATS, render, to_dot, to_graphml, to_json
from .labels import BOTTOM_CLASS, TOP_CLASS, WILDCARD
from .product import (
    EdgePartition,
    PartitionedGraph,
    partial_product,
    partial_product_via_merge,
)
from .rules import (
    DifferentialReport,
    Mismatch,
    contains_argument,
    differential_check,
    enumerate_types,
    is_subtype,
)
from .typelang import (
    WILD,
    ClassTable,
    Con,
    Cov,
    GroundType,
    Inv,
    TypeArg,
    Wild,
    argument_label,
    canonical_label,
    normalize_argument,
    normalize_type,
    parse_declarations,
    parse_ground_type,
    rank,
)
from .wildcards import wildcards_graph, wildcards_size

__version__ = "0.1.0"

__all__ = [
    "BOTTOM_CLASS",
    "BipointedGraph",
    "ClassTable",
    "Con",
    "Cov",
    "DeclarationError",
    "DifferentialReport",
    "Edge",
    "EdgePartition",
    "EdgeTag",
    "FORMATS",
    "GraphError",
    "GroundType",
    "GroundsubError",
    "Inv",
    "IterationTrace",
    "LabeledDigraph",
    "Mismatch",
    "ParseError",
    "PartitionedGraph",
    "QueryError",
    "TOP_CLASS",
    "TypeArg",
    "WILD",
    "WILDCARD",
    "Wild",
    "argument_label",
    "canonical_label",
    "cartesian_product",
    "contains_argument",
    "contravariant_image",
    "covariant_image",
    "differential_check",
    "disjoint_union",
    "enumerate_types",
    "induced_subgraph",
    "initial_approximation",
    "initial_wildcards",
    "is_subtype",
    "merge_vertices",
    "normalize_argument",
    "normalize_type",
    "order_isomorphic",
    "pair_label",
    "parse_declarations",
    "parse_ground_type",
    "partial_product",
    "partial_product_via_merge",
    "rank",
    "reachable",
    "reflexive_transitive_closure",
    "render",
    "reversed_graph",
    "run",
    "step",
    "subtype_by_graph",
    "sufficient_depth",
    "to_dot",
    "to_graphml",
    "to_json",
    "transitive_reduction",
    "wildcards_graph",
    "wildcards_size",
]
