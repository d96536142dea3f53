import logging

from ..core.graph import Remap, Subgraph, count_edges_within, induced_subgraph
from ..core.layers import bfs_levels
from ..errors import Exhausted

logger = logging.getLogger(__name__)


def ball_weight(h, ball):
    """e(H[S]) + e(S, V(H) minus S), computed as the degree sum of S minus e(H[S])."""
    return sum(h.degree(v) for v in ball) - count_edges_within(h, ball)


def highest_degree_vertex(h):
    return min(h.vertices(), key=lambda v: (-h.degree(v), v))


def refine_dense_ball(h, threshold, decomp, max_level=None):
    """
    Delete violating BFS balls until every proper ball S = V(H_i), i <= max_level,
    satisfies e(H[S]) + e(S, V minus S) > threshold * |S|.

    Removing a violating ball keeps e >= threshold * |V| on what is left, so
    the density hypothesis survives each step; the new root is the
    highest-degree vertex of the remainder.

    Returns:
        (Subgraph, LevelDecomposition): the refined graph with a remap to the
        ids of h, and its decomposition

    Raises:
        Exhausted: the deletions emptied the graph
    """
    graph, remap = h, Remap.identity(h.vertex_count)
    rounds = 0
    while True:
        if graph.vertex_count == 0 or graph.edge_count == 0:
            raise Exhausted(f"ball refinement emptied the graph after {rounds} deletions")
        limit = decomp.max_level if max_level is None else min(max_level, decomp.max_level)
        violated = None
        size = degree_sum = inside = 0
        for i in range(limit + 1):
            layer = decomp.level(i)
            size += len(layer)
            if size == graph.vertex_count:
                break
            for v in layer:
                degree_sum += graph.degree(v)
                for u in graph.neighbors(v):
                    du = decomp.depth[u]
                    if 0 <= du < i or (du == i and u < v):
                        inside += 1
            if degree_sum - inside <= threshold * size:
                violated = decomp.ball(i)
                break
        if violated is None:
            logger.debug("refined to %r after %d deletions", graph, rounds)
            return Subgraph(graph, remap), decomp
        rounds += 1
        rest = set(graph.vertices()) - set(violated)
        sub = induced_subgraph(graph, rest)
        graph, remap = sub.graph, sub.remap.compose(remap)
        if graph.vertex_count == 0:
            continue
        decomp = bfs_levels(graph, highest_degree_vertex(graph), decomp.depth_budget)
