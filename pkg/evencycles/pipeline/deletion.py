"""
Iterative deletion of minimal-r families.

Each round searches the current graph for k cycles of lengths 2r, ..., 2r+2k-2
with r as small as possible (iterative deepening up to the depth budget t),
deletes their vertices and records the round. Records are pairwise disjoint,
so any r seen k times yields a disjoint family by taking the j-th record's
cycle of length 2r+2(j-1).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from ..core.certificates import CycleFamily
from ..core.graph import induced_subgraph
from ..errors import BudgetExceeded, ContractViolation
from ..extractors.exact import find_cycle_of_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceRecord:
    r: int
    family: CycleFamily
    removed: frozenset


@dataclass(frozen=True)
class DeletionTrace:
    records: tuple = ()
    terminal_vertices: frozenset = field(default_factory=frozenset)
    depth_budget: int = 0

    @classmethod
    def empty(cls, g):
        """A trace with no records: the terminal graph is g itself."""
        return cls((), frozenset(g.vertices()), 0)

    def removed(self):
        return frozenset().union(*(rec.removed for rec in self.records))

    def r_values(self):
        return [rec.r for rec in self.records]


def _family_at(g, lengths, budget):
    """
    k cycles with the given lengths in g, disjoint if a greedy longest-first
    choice allows it. None when some length has no cycle within the budget.
    """
    used = set()
    chosen = {}
    for length in sorted(lengths, reverse=True):
        cycle = find_cycle_of_length(g, length, avoid=used, budget=budget)
        if cycle is None:
            break
        chosen[length] = cycle
        used.update(cycle.vertices)
    else:
        return CycleFamily.from_cycles(chosen.values(), disjoint=True)

    for length in lengths:
        if length in chosen:
            continue
        cycle = find_cycle_of_length(g, length, budget=budget)
        if cycle is None:
            return None
        chosen[length] = cycle
    return CycleFamily.from_cycles(chosen.values(), disjoint=False)


def minimal_family(g, params, t):
    """(r, family) for the least r in 2..t admitting a family in g, or None."""
    n = g.vertex_count
    for r in range(2, t + 1):
        lengths = params.lengths(r)
        if lengths[-1] > n:
            return None
        try:
            family = _family_at(g, lengths, params.per_r_budget)
        except BudgetExceeded as e:
            logger.warning("r=%d: search budget spent (%s), treated as no family", r, e)
            continue
        if family is not None:
            return r, family
    return None


def assemble_repeated(records, k):
    """
    k pairwise-disjoint records sharing one r give a disjoint family: the
    j-th record contributes its cycle of length 2r+2(j-1).
    """
    if len(records) != k or len({rec.r for rec in records}) != 1:
        raise ContractViolation("assembly needs k records with one common r")
    cycles = [rec.family.cycles[j] for j, rec in enumerate(records)]
    return CycleFamily.from_cycles(cycles, disjoint=True)


def iterative_deletion(g, params):
    """
    Returns:
        (DeletionTrace, CycleFamily or None): the trace in the ids of g, and a
        disjoint family when a record was already disjoint or some r recurred
        k times
    """
    t = params.depth_budget_for(g.vertex_count)
    alive = set(g.vertices())
    records = []
    by_r = defaultdict(list)
    while alive:
        sub = induced_subgraph(g, alive)
        found = minimal_family(sub.graph, params, t)
        if found is None:
            break
        r, family = found
        family = family.lift(sub.remap)
        removed = family.vertex_set()
        record = TraceRecord(r, family, removed)
        records.append(record)
        alive -= removed
        logger.debug("deletion round %d: r=%d, removed %d vertices", len(records), r, len(removed))
        trace = DeletionTrace(tuple(records), frozenset(alive), t)
        if family.disjoint:
            return trace, family
        by_r[r].append(record)
        if len(by_r[r]) == params.k:
            return trace, assemble_repeated(by_r[r], params.k)
    return DeletionTrace(tuple(records), frozenset(alive), t), None
