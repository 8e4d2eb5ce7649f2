"""The K33-subdivision oracle for subcubic graphs.

For maximum degree 3 a K5 subdivision cannot occur, so by Kuratowski's
theorem a subcubic graph is non-planar exactly when it contains a K33
subdivision.  The None side is decided by the embedding-search planarity
test; the witness side runs the disjoint-path packing, first with a node
budget per branch-pair (witnesses are dense in non-planar graphs), then
unbounded as a fallback.
"""

from __future__ import annotations

from .graphs import Graph
from .planarity import k33_subdivision_by_packing, planar_by_embedding_search

_FAST_BUDGET = 20000


def find_k33_subdivision(g: Graph):
    """Six branch vertices plus nine internally disjoint paths, or None.

    None means planar (and conversely).  Raises ValueError on a vertex of
    degree 4 or more, where the equivalence breaks.
    """
    if any(g.degree(v) > 3 for v in range(g.n)):
        raise ValueError("the subdivision oracle needs maximum degree 3")
    if planar_by_embedding_search(g):
        return None
    witness = k33_subdivision_by_packing(g, node_budget=_FAST_BUDGET)
    if witness is None:
        witness = k33_subdivision_by_packing(g, node_budget=None)
    assert witness is not None, "non-planar subcubic graph must contain a K33 subdivision"
    return witness
