"""Degree peeling: d-cores and the two-threshold bipartite variant."""

from collections import deque

from .graph import bipartite_between, induced_subgraph


def _peel(g, threshold_of):
    degree = [g.degree(v) for v in g.vertices()]
    removed = [False] * g.vertex_count
    queue = deque(v for v in g.vertices() if degree[v] < threshold_of(v))
    for v in queue:
        removed[v] = True
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if removed[u]:
                continue
            degree[u] -= 1
            if degree[u] < threshold_of(u):
                removed[u] = True
                queue.append(u)
    return [v for v in g.vertices() if not removed[v]]


def core_vertices(g, d):
    """Vertices of the d-core of g, in increasing order."""
    return _peel(g, lambda v: d)


def peel_min_degree(g, d):
    """The d-core of g as an induced subgraph (possibly empty) with its remap."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return induced_subgraph(g, core_vertices(g, d))


def bipartite_peel(g_bip, side_p, d_p, d_q):
    """
    Largest subgraph of the bipartite graph (P, Q) in which surviving P-vertices
    keep degree >= d_p and surviving Q-vertices keep degree >= d_q.

    Only P-Q edges count; any edge inside a side is ignored.
    """
    p = frozenset(side_p)
    between = bipartite_between(g_bip, p, set(g_bip.vertices()) - p)
    local_p = frozenset(v for v, parent in enumerate(between.remap.to_parent) if parent in p)
    kept = _peel(between.graph, lambda v: d_p if v in local_p else d_q)
    core = induced_subgraph(between.graph, kept)
    return core._replace(remap=core.remap.compose(between.remap))
