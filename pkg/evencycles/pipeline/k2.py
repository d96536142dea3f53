"""
The k = 2 orchestrator: a disjoint C4 and C6 (or a longer consecutive pair
from the deletion trace).

After the deletion rounds and the partition it first turns a K_{3,3} of
G(V1, V2) into a 6-cycle D and looks for a K_{2,2} away from V(D). Failing
that, it takes the pivot u of V2 with the most V1 neighbours, builds a
6-cycle through u from a 4-edge path of G[V1] with both ends in A = N(u) and
V1, and completes it with a 4-cycle of G(V1, V2) away from it. The last
branch takes both cycles from G(V1, V2).
"""

import logging

from ..core.certificates import Cycle, CyclePacking
from ..core.graph import bipartite_between
from ..errors import ContractViolation, EvenCyclesError, InvalidInput
from ..extractors.kss import find_kss
from .carve import alternating_cycle
from .deletion import iterative_deletion
from .params import Mode
from .partition import partition_vertices
from .report import StageLog
from .stages import as_family, bipartite_view, complete_packing, kss_stage

logger = logging.getLogger(__name__)


def pivot_vertex(g, part):
    """The V2 vertex with the most V1 neighbours (smallest id on ties)."""
    if not part.v2:
        raise InvalidInput("V2 is empty")
    return min(part.v2, key=lambda v: (-len(g.neighbor_set(v) & part.v1), v))


def four_edge_path(g, region, ends):
    """x0 x1 x2 x3 x4 inside ``region`` with x0, x4 in ``ends``, or None."""
    region = frozenset(region)
    ends = frozenset(ends) & region
    path = []

    def dfs():
        if len(path) == 5:
            return list(path) if path[-1] in ends else None
        for u in g.neighbors(path[-1]):
            if u in region and u not in path:
                path.append(u)
                found = dfs()
                if found is not None:
                    return found
                path.pop()
        return None

    for start in sorted(ends):
        path[:] = [start]
        found = dfs()
        if found is not None:
            return found
    return None


def find_k33(g, part, params):
    sub, side = bipartite_view(g, part)
    if sub.graph.edge_count == 0:
        raise InvalidInput("G(V1, V2) has no edges")
    return find_kss(sub.graph, 3, side_a=side, budget=params.per_r_budget).lift(sub.remap)


def residual_four_cycle(g, part, used, params):
    """A 4-cycle of G(V1, V2) avoiding ``used``, taken from a K_{2,2}."""
    v1 = part.v1 - used
    v2 = part.v2 - used
    sub = bipartite_between(g, v1, v2)
    if sub.graph.edge_count == 0:
        raise InvalidInput("nothing of G(V1, V2) is left for the 4-cycle")
    index = sub.remap.from_parent
    cert = find_kss(sub.graph, 2, side_a=sorted(index[v] for v in v1), budget=params.per_r_budget)
    cert = cert.lift(sub.remap)
    return alternating_cycle(sorted(cert.side_a)[:2], sorted(cert.side_b)[:2])


def k33_stage(g, part, params):
    """The 6-cycle D of a K_{3,3} in G(V1, V2), then a 4-cycle away from V(D)."""
    k33 = find_k33(g, part, params)
    hexagon = alternating_cycle(sorted(k33.side_a)[:3], sorted(k33.side_b)[:3])
    packing = CyclePacking(cycles=(hexagon,))
    try:
        square = residual_four_cycle(g, part, packing.vertex_set(), params)
    except EvenCyclesError as e:
        logger.debug("no K_2,2 left after the K_3,3 hexagon (%s); completing greedily", e)
        return as_family(complete_packing(g, part, packing, [4], params), 2)
    return as_family(packing.extend([square]), 2)


def pivot_stage(g, part, params):
    u = pivot_vertex(g, part)
    set_a = g.neighbor_set(u) & part.v1
    path = four_edge_path(g, part.v1, set_a)
    if path is None:
        raise InvalidInput(f"G[V1] has no 4-edge path with both ends next to the pivot {u}")
    hexagon = Cycle(vertices=(u, *path))
    logger.debug("pivot %d closes a 6-cycle with |A| = %d", u, len(set_a))
    packing = complete_packing(g, part, CyclePacking(cycles=(hexagon,)), [4], params)
    return as_family(packing, 2)


def bipartite_pair_stage(g, part, params):
    return as_family(complete_packing(g, part, CyclePacking(), [6, 4], params), 2)


def k2_pipeline(g, params):
    """
    Returns:
        SearchReport: a verified disjoint pair of consecutive even cycles, or
        the stage log of the failed attempts
    """
    if params.mode != Mode.K2 or params.k != 2:
        raise ContractViolation("k2_pipeline needs mode k2 and k = 2")
    log = StageLog(g, params)
    trace, family = iterative_deletion(g, params)
    detail = f"{len(trace.records)} records, r values {trace.r_values()}"
    if log.accept("deletion", family, detail):
        return log.report(family)
    if family is None:
        log.record("deletion", False, detail)

    part = partition_vertices(g, trace, params)
    log.record("partition", True, f"|V1|={len(part.v1)} |V2|={len(part.v2)} |M|={part.m}")

    stages = (
        ("k33-c6", k33_stage),
        ("kss", kss_stage),
        ("pivot-c6", pivot_stage),
        ("bipartite-c6", bipartite_pair_stage),
    )
    for name, stage in stages:
        family = log.run(name, stage, g, part, params)
        if family is not None:
            return log.report(family)
    return log.report()
