import logging
from collections import deque

from ..core.certificates import Cycle
from ..errors import BudgetExceeded, InvalidInput

logger = logging.getLogger(__name__)


class ExactCycleSearch:
    """
    Depth-first search for a cycle of exactly ``length`` vertices.

    Each candidate start is the smallest vertex of the cycle it looks for, so
    the walk only enters larger ids; a BFS distance table back to the start
    prunes any branch that can no longer close in the remaining steps.
    """

    def __init__(self, g, budget=10**6):
        self.g = g
        self.budget = budget
        self.nodes = 0

    def _distances(self, start, allowed):
        dist = {start: 0}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.g.neighbors(v):
                if u not in dist and u in allowed:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def _from(self, start, length, allowed):
        dist = self._distances(start, allowed)
        if len(dist) < length:
            return None
        path = [start]
        on_path = {start}

        def dfs():
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"exact-length search spent {self.budget} nodes", self.nodes)
            end = path[-1]
            if len(path) == length:
                return tuple(path) if self.g.has_edge(end, start) else None
            remaining = length - len(path)
            for u in self.g.neighbors(end):
                if u in on_path or u not in dist or dist[u] > remaining:
                    continue
                path.append(u)
                on_path.add(u)
                found = dfs()
                if found is not None:
                    return found
                on_path.discard(u)
                path.pop()
            return None

        return dfs()

    def find(self, length, avoid=(), allowed=None):
        if length < 3:
            raise InvalidInput("cycles have length >= 3")
        avoid = frozenset(avoid)
        pool = set(self.g.vertices()) if allowed is None else set(allowed)
        pool -= avoid
        for start in sorted(pool):
            if self.g.degree(start) < 2:
                continue
            region = {v for v in pool if v >= start}
            found = self._from(start, length, region)
            if found is not None:
                return Cycle(vertices=found)
        return None


def find_cycle_of_length(g, length, avoid=(), allowed=None, budget=10**6):
    """A cycle of exactly ``length`` vertices avoiding ``avoid``, or None."""
    return ExactCycleSearch(g, budget).find(length, avoid, allowed)
