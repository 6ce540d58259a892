"""Strong shift equivalence of non-negative integer matrices and the
graph constructions around it: bipartite inflation, outsplit (Toeplitz)
graphs, saturated hereditary ideal lattices and corner generator maps.
"""

from shiftequiv.matrices import (
    DimensionError,
    MatrixError,
    MatrixOverflowError,
    NonNegIntMatrix,
    block_bipartite,
    block_diagonal,
    multiply,
    trace_powers,
)
from shiftequiv.graphs import (
    Edge,
    GraphAnalysis,
    GraphError,
    MultiDigraph,
    analyze,
    graph_from_matrix,
    vertex_matrix,
)
from shiftequiv.sse import (
    ElementaryPair,
    SearchLimitExceeded,
    SSEChain,
    find_elementary,
    inflate_graph,
    rect_graph,
    trace_obstruction,
    verify_chain,
    verify_elementary,
)
from shiftequiv.gralg import (
    CornerMap,
    CorrespondenceProfile,
    IdealLattice,
    MoritaVerdict,
    corner_maps,
    enumerate_saturated_hereditary,
    hereditary_closure,
    morita_verdict,
    outsplit_toeplitz,
    profile,
    saturate,
)

__version__ = "0.1.0"

__all__ = [
    "CornerMap",
    "CorrespondenceProfile",
    "DimensionError",
    "Edge",
    "ElementaryPair",
    "GraphAnalysis",
    "GraphError",
    "IdealLattice",
    "MatrixError",
    "MatrixOverflowError",
    "MoritaVerdict",
    "MultiDigraph",
    "NonNegIntMatrix",
    "SSEChain",
    "SearchLimitExceeded",
    "analyze",
    "block_bipartite",
    "block_diagonal",
    "corner_maps",
    "enumerate_saturated_hereditary",
    "find_elementary",
    "graph_from_matrix",
    "hereditary_closure",
    "inflate_graph",
    "morita_verdict",
    "multiply",
    "outsplit_toeplitz",
    "profile",
    "rect_graph",
    "saturate",
    "trace_obstruction",
    "trace_powers",
    "verify_chain",
    "verify_elementary",
    "vertex_matrix",
]
