import logging

from ..core.certificates import Cycle, CyclePacking
from ..core.graph import filtered_subgraph
from ..errors import EvenCyclesError, GreedyStuck, InvalidInput
from ..extractors.even_path import even_endpoints_path
from ..extractors.long_cycle import long_cycle

logger = logging.getLogger(__name__)


def _anchored_cycle(g, anchor, v1, used, length):
    """
    A cycle of ``length`` through ``anchor`` whose other vertices lie in V1:
    a long cycle of G[A_u, B_u) (A_u = N(u) in V1, no B_u-B_u edges) is
    opened into an even path with both ends in A_u and closed through u.
    """
    free = v1 - used
    a_u = g.neighbor_set(anchor) & free
    if len(a_u) < 2:
        raise GreedyStuck(f"anchor {anchor} has {len(a_u)} free V1 neighbours")
    sub = filtered_subgraph(g, free, lambda x, y: x in a_u or y in a_u)
    index = sub.remap.from_parent
    local_a = {index[v] for v in a_u}
    hypothesis = 2 * sub.graph.edge_count > (length - 1) * sub.graph.vertex_count
    cycle = long_cycle(sub.graph, length)
    path = even_endpoints_path(sub.graph, cycle, local_a, length - 2).lift(sub.remap)
    logger.debug("anchor %d: long cycle %d (edge hypothesis %s), path %d", anchor, cycle.length, hypothesis, path.length)
    return Cycle(vertices=(anchor,) + path.vertices)


def anchored_long_cycles(g, part, params):
    """
    Disjoint cycles of lengths 2k+2, 2k, ..., one per heavy anchor, each an
    even path of G[V1] closed through its anchor. Anchors are tried in the
    order of M; an anchor that fails is skipped for the next one.

    Raises:
        InvalidInput: M is empty
        GreedyStuck: no remaining anchor yields the next length; carries the
            cycles built so far
    """
    if not part.m_set:
        raise InvalidInput("anchored long cycles need a nonempty heavy set")
    k = params.k
    targets = [2 * k + 2 - 2 * i for i in range(k) if 2 * k + 2 - 2 * i >= 4]
    remaining = list(part.m_set)
    used = set()
    cycles = []
    for index, length in enumerate(targets):
        if not remaining:
            break
        built = None
        failures = []
        for anchor in list(remaining):
            try:
                built = _anchored_cycle(g, anchor, part.v1, used, length)
            except EvenCyclesError as e:
                failures.append(f"{anchor}: {type(e).__name__}")
                continue
            remaining.remove(anchor)
            break
        if built is None:
            raise GreedyStuck(
                f"no anchor yields a {length}-cycle ({'; '.join(failures)})",
                index=index,
                partial=CyclePacking(cycles=tuple(cycles)),
            )
        used.update(built.vertices)
        cycles.append(built)
    return CyclePacking(cycles=tuple(cycles))
