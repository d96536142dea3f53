import logging

import networkx as nx

from ..core.certificates import Cycle
from ..core.peeling import core_vertices
from ..errors import BelowThreshold, BudgetExceeded, InvalidInput
from .base import ExtractorBase
from .rotation import PathGrower

logger = logging.getLogger(__name__)

SMALL_BLOCK = 20


def _blocks(g, vertices):
    """Biconnected blocks (with a cycle) of g restricted to ``vertices``, largest first."""
    keep = set(vertices)
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(keep)
    nx_graph.add_edges_from((u, v) for u, v in g.edges() if u in keep and v in keep)
    blocks = [sorted(b) for b in nx.biconnected_components(nx_graph) if len(b) >= 3]
    return sorted(blocks, key=lambda b: (-len(b), b))


def exhaustive_long_cycle(g, block, l_min, budget=10**6):
    """Depth-first search for a cycle of length >= l_min inside ``block``."""
    allowed = set(block)
    nodes = 0
    for start in sorted(allowed):
        path = [start]
        on_path = {start}

        def dfs():
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"long-cycle search spent {budget} nodes", nodes)
            end = path[-1]
            if len(path) >= l_min and g.has_edge(end, start):
                return tuple(path)
            for u in g.neighbors(end):
                if u > start and u in allowed and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    found = dfs()
                    if found is not None:
                        return found
                    on_path.discard(u)
                    path.pop()
            return None

        found = dfs()
        if found is not None:
            return Cycle(vertices=found)
    return None


class LongCycleExtractor(ExtractorBase):
    """
    A cycle of length at least l_min under an edge-count hypothesis.

    Vertices of degree at most floor((l_min - 1) / 2) are peeled first; each
    deletion keeps e > (l_min - 1)|V| / 2. Inside every block of what remains,
    rotation-extended maximal paths are closed at their farthest neighbour,
    and blocks of at most 20 vertices are additionally searched exhaustively.
    """

    name = "long_cycle"

    def check_hypothesis(self, g, l_min):
        return 2 * g.edge_count > (l_min - 1) * g.vertex_count

    def _rotation_cycle(self, g, block, l_min):
        grower = PathGrower(g, allowed=block)
        starts = sorted(block, key=lambda v: (-g.degree(v), v))[:8]
        for start in starts:
            path = grower.maximal_path(start)
            for candidate in grower.rotations(path):
                for oriented, farthest, _ in grower.end_closures(candidate):
                    if len(oriented) - farthest >= l_min:
                        return Cycle(vertices=tuple(oriented[farthest:]))
        return None

    def _search_blocks(self, g, vertices, l_min):
        for block in _blocks(g, vertices):
            if len(block) < l_min:
                continue
            cycle = self._rotation_cycle(g, block, l_min)
            if cycle is None and len(block) <= SMALL_BLOCK:
                cycle = exhaustive_long_cycle(g, block, l_min)
            if cycle is not None:
                return cycle
        return None

    def extract(self, g, l_min):
        """
        Returns:
            Cycle with at least l_min vertices

        Raises:
            BelowThreshold: no such cycle was found
        """
        if l_min < 3:
            raise InvalidInput("l_min must be at least 3")
        core = core_vertices(g, (l_min - 1) // 2 + 1)
        cycle = self._search_blocks(g, core, l_min) if core else None
        if cycle is None:
            cycle = self._search_blocks(g, list(g.vertices()), l_min)
        if cycle is None:
            raise BelowThreshold(
                f"no cycle of length >= {l_min}",
                {"edges": g.edge_count, "vertices": g.vertex_count, "hypothesis": self.check_hypothesis(g, l_min)},
            )
        logger.debug("long cycle of length %d (wanted >= %d)", cycle.length, l_min)
        return cycle


def long_cycle(g, l_min):
    return LongCycleExtractor().extract(g, l_min)
