"""Maximum internal spanning trees for block, cactus, cograph, bipartite
permutation and chain graphs. Vertex ids are 0-based here; the text format
read by Graph.parse uses 1-based ids."""

from ._core import (
    BudgetExceeded,
    Graph,
    GraphError,
    InvariantViolation,
    SpanningTree,
    classify,
    family_block_cactus,
    family_bp,
    generate,
    oracle_max_pathcover_edges,
    oracle_mist,
    path_cover,
    solve,
    spanning_tree_count,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphError",
    "InvariantViolation",
    "SpanningTree",
    "classify",
    "family_block_cactus",
    "family_bp",
    "generate",
    "oracle_max_pathcover_edges",
    "oracle_mist",
    "path_cover",
    "solve",
    "spanning_tree_count",
    "verify",
]
