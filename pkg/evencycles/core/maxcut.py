import logging

from .graph import Graph

logger = logging.getLogger(__name__)


def max_cut_bipartition(g):
    """
    Greedy assignment followed by single-vertex local search.

    Each vertex is placed, in id order, on the side opposite most of its
    already-placed neighbours; then any vertex with more neighbours on its own
    side than across is moved until no move improves the cut. At a local
    optimum every vertex has at least half its edges crossing, so the cut
    holds at least e(g)/2 edges.

    Returns:
        ((X, Y), H): the two sides as sorted tuples, and the spanning subgraph
        H of g made of the cut edges.
    """
    n = g.vertex_count
    side = [0] * n
    for v in g.vertices():
        same = sum(1 for u in g.neighbors(v) if u < v and side[u] == 0)
        other = sum(1 for u in g.neighbors(v) if u < v and side[u] == 1)
        side[v] = 1 if same > other else 0

    moves = 0
    improved = True
    while improved:
        improved = False
        for v in g.vertices():
            same = sum(1 for u in g.neighbors(v) if side[u] == side[v])
            if 2 * same > g.degree(v):
                side[v] = 1 - side[v]
                moves += 1
                improved = True

    cut_edges = [(u, v) for u, v in g.edges() if side[u] != side[v]]
    assert 2 * len(cut_edges) >= g.edge_count, "local optimum lost the half-cut guarantee"
    logger.debug("max cut: %d of %d edges after %d moves", len(cut_edges), g.edge_count, moves)
    x = tuple(v for v in g.vertices() if side[v] == 0)
    y = tuple(v for v in g.vertices() if side[v] == 1)
    return (x, y), Graph.from_edges(n, cut_edges)
