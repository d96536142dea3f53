"""Stages shared by the general and the k = 2 orchestrators, all in the ids of g."""

import logging

from ..core.certificates import CyclePacking
from ..core.graph import bipartite_between
from ..errors import GreedyStuck, InvalidInput
from ..extractors.kss import find_kss
from .anchored import anchored_long_cycles
from .carve import carve_from_kss
from .common_neighbor import common_neighbor_cycles
from .greedy import greedy_disjoint_bipartite_cycles
from .partition import CycleSchedule
from .type_chain import type_chain_cycle

logger = logging.getLogger(__name__)


def target_lengths(k):
    """2k+2, 2k, ..., 4."""
    return [2 * k + 2 - 2 * i for i in range(k)]


def bipartite_view(g, part):
    """G(V1, V2) with its remap and the local ids of V1."""
    sub = bipartite_between(g, part.v1, part.v2)
    index = sub.remap.from_parent
    side = sorted(index[v] for v in part.v1)
    return sub, side


def complete_packing(g, part, packing, lengths, params):
    """Add disjoint cycles of ``lengths`` found in G(V1, V2) minus the packing."""
    if not lengths:
        return packing
    sub, side = bipartite_view(g, part)
    index = sub.remap.from_parent
    avoid = [index[v] for v in packing.vertex_set() if v in index]
    extra = greedy_disjoint_bipartite_cycles(sub.graph, lengths, side_p=side, avoid=avoid, budget=params.per_r_budget)
    logger.debug("completion: wanted %s, found %s", lengths, extra.lengths)
    return packing.extend(extra.lift(sub.remap).cycles)


def as_family(packing, k):
    if len(packing.cycles) != k:
        return None
    return packing.to_family()


def kss_stage(g, part, params):
    """K_{s,s} in G(V1, V2), carved into cycles of lengths 4..2k+2."""
    sub, side = bipartite_view(g, part)
    if sub.graph.edge_count == 0:
        raise InvalidInput("G(V1, V2) has no edges")
    cert = find_kss(sub.graph, params.s, side_a=side, budget=params.per_r_budget)
    return carve_from_kss(cert.lift(sub.remap), params.k)


def common_neighbor_stage(g, part, params):
    sched = CycleSchedule.build(params.k, part.m)
    if sched.ell == 0:
        raise InvalidInput(f"|M| = {part.m} cannot anchor a {2 * sched.half_lengths[0]}-cycle")
    try:
        packing = common_neighbor_cycles(g, part, sched, params)
    except GreedyStuck as e:
        logger.warning("common-neighbour cycles stuck at %s; completing the partial packing", e.index)
        packing = e.partial
    missing = sched.lengths()[len(packing.cycles):]
    return as_family(complete_packing(g, part, packing, missing, params), params.k)


def anchored_stage(g, part, params):
    try:
        packing = anchored_long_cycles(g, part, params)
    except GreedyStuck as e:
        if e.partial is None:
            raise
        logger.warning("anchored long cycles stuck at %s; completing the partial packing", e.index)
        packing = e.partial
    have = set(packing.lengths)
    missing = [length for length in target_lengths(params.k) if length not in have]
    return as_family(complete_packing(g, part, packing, missing, params), params.k)


def type_chain_stage(g, part, params):
    if part.m <= 2 * params.k:
        raise InvalidInput(f"|M| = {part.m} <= 2k: the bipartite greedy stage covers this case")
    cycle = type_chain_cycle(g, part, params)
    packing = CyclePacking(cycles=(cycle,))
    missing = [length for length in target_lengths(params.k) if length != cycle.length]
    return as_family(complete_packing(g, part, packing, missing, params), params.k)


def bipartite_greedy_stage(g, part, params):
    packing = complete_packing(g, part, CyclePacking(), target_lengths(params.k), params)
    return as_family(packing, params.k)
