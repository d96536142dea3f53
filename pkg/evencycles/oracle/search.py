"""
Exhaustive ground truth for small graphs: do k vertex-disjoint cycles of
lengths 2r, 2r+2, ..., 2r+2k-2 exist for some r >= 2?
"""

import logging
from collections import defaultdict
from typing import Optional

from pydantic import BaseModel, ConfigDict

from ..config import settings
from ..core.certificates import Cycle, CycleFamily
from ..errors import BudgetExceeded, InvalidInput
from ..tasks import SearchPool
from .enumerate import enumerate_simple_cycles

logger = logging.getLogger(__name__)


class OracleResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    exists: bool
    witness: Optional[CycleFamily] = None
    r_values_checked: tuple[int, int]
    nodes_explored: int = 0

    def to_dict(self):
        return {
            "exists": self.exists,
            "witness": None if self.witness is None else [list(c.vertices) for c in self.witness.cycles],
            "r": None if self.witness is None else self.witness.r,
            "r_values_checked": list(self.r_values_checked),
            "nodes_explored": self.nodes_explored,
        }


def max_base(n, k):
    """Largest r with 2kr + k(k-1) <= n, the room k disjoint cycles of lengths 2r..2r+2k-2 need."""
    return (n - k * (k - 1)) // (2 * k)


def _extend(lists, depth, used, chosen, counter, budget):
    counter[0] += 1
    if counter[0] > budget:
        raise BudgetExceeded(f"oracle backtracking spent {budget} nodes", counter[0])
    if depth == len(lists):
        return True
    for mask, vertices in lists[depth]:
        if mask & used:
            continue
        chosen.append(vertices)
        if _extend(lists, depth + 1, used | mask, chosen, counter, budget):
            return True
        chosen.pop()
    return False


def _search_chunk(lists, first, budget):
    """Backtrack with the shortest cycle drawn from ``first``; returns (witness, nodes, spent)."""
    counter = [0]
    try:
        for mask, vertices in first:
            chosen = [vertices]
            if _extend(lists, 1, mask, chosen, counter, budget):
                return chosen, counter[0], False
    except BudgetExceeded:
        return None, counter[0], True
    return None, counter[0], False


def _chunks(items, count):
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _shares(total, parts):
    """Split a node budget into ``parts`` non-negative shares summing to ``total``."""
    total = max(0, total)
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def oracle_find_family(g, k, budget=None, jobs=1):
    """
    Returns:
        OracleResult; exists=False only after an exhaustive search over every
        r with 2r+2k-2 fitting and every disjoint selection

    Raises:
        BudgetExceeded: enumeration or backtracking ran out of nodes, so the
            answer is unknown
    """
    if k < 2:
        raise InvalidInput("k must be at least 2")
    budget = settings.budget if budget is None else budget
    n = g.vertex_count
    r_max = max_base(n, k)
    checked = (2, r_max)
    if r_max < 2:
        return OracleResult(exists=False, r_values_checked=checked)

    enumeration = enumerate_simple_cycles(g, 2 * r_max + 2 * k - 2, budget)
    if enumeration.partial:
        raise BudgetExceeded("cycle enumeration did not finish", enumeration.nodes)
    by_length = defaultdict(list)
    for cycle in enumeration.cycles:
        if cycle.length % 2 == 0:
            mask = 0
            for v in cycle.vertices:
                mask |= 1 << v
            by_length[cycle.length].append((mask, cycle.vertices))
    for entries in by_length.values():
        entries.sort(key=lambda item: item[1])

    nodes = enumeration.nodes
    for r in range(2, r_max + 1):
        lists = [by_length.get(2 * r + 2 * j, []) for j in range(k)]
        if not all(lists):
            continue
        pool = SearchPool(jobs)
        chunks = _chunks(lists[0], jobs)
        for chunk, share in zip(chunks, _shares(budget - nodes, len(chunks))):
            pool.submit(_search_chunk, lists, chunk, share)
        spent = False
        witness = None
        for result in pool.results():
            if result.status == "failed":
                raise result.value
            found, used_nodes, over = result.value
            nodes += used_nodes
            spent = spent or over
            if found is not None and witness is None:
                witness = found
        if witness is not None:
            family = CycleFamily.from_cycles([Cycle(vertices=vs) for vs in witness], disjoint=True)
            logger.debug("oracle: family %s at r=%d after %d nodes", family.lengths, r, nodes)
            return OracleResult(exists=True, witness=family, r_values_checked=(2, r), nodes_explored=nodes)
        if spent or nodes > budget:
            raise BudgetExceeded(f"oracle spent its budget at r={r}", nodes)
    return OracleResult(exists=False, r_values_checked=checked, nodes_explored=nodes)
