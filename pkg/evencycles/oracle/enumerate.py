import logging
from typing import NamedTuple

from ..core.certificates import Cycle
from ..errors import BudgetExceeded, InvalidInput

logger = logging.getLogger(__name__)


class CycleEnumeration(NamedTuple):
    cycles: list
    partial: bool
    nodes: int


def enumerate_simple_cycles(g, max_len, budget=None):
    """
    Every simple cycle with at most ``max_len`` vertices, each exactly once,
    in canonical form: smallest vertex first, its smaller cycle-neighbour
    second. A spent budget stops the walk and sets ``partial``.
    """
    if max_len < 3:
        raise InvalidInput("max_len must be at least 3")
    cycles = []
    nodes = 0
    partial = False
    path = []
    on_path = set()

    def dfs(start):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"cycle enumeration spent {budget} nodes", nodes)
        end = path[-1]
        for u in g.neighbors(end):
            if u == start and len(path) >= 3 and path[1] < path[-1]:
                cycles.append(Cycle(vertices=tuple(path)))
            elif u > start and u not in on_path and len(path) < max_len:
                path.append(u)
                on_path.add(u)
                dfs(start)
                on_path.discard(u)
                path.pop()

    try:
        for start in g.vertices():
            path[:] = [start]
            on_path.clear()
            on_path.add(start)
            dfs(start)
    except BudgetExceeded:
        partial = True
        logger.warning("cycle enumeration stopped after %d nodes", nodes)
    return CycleEnumeration(cycles, partial, nodes)
