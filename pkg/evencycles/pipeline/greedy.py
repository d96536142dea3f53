import logging

from ..core.certificates import CyclePacking
from ..core.graph import induced_subgraph
from ..errors import BudgetExceeded, InvalidInput, NotHypothesis
from ..extractors.exact import find_cycle_of_length
from ..extractors.kss import find_kss
from .carve import alternating_cycle

logger = logging.getLogger(__name__)


def _check_lengths(lengths):
    for i, length in enumerate(lengths):
        if length < 4 or length % 2:
            raise InvalidInput(f"length {length} is not an even length >= 4")
        if i and length >= lengths[i - 1]:
            raise InvalidInput("lengths must be strictly descending")


def _biclique_cycle(g_bip, length, used, side_p, budget):
    alive = [v for v in g_bip.vertices() if v not in used]
    sub = induced_subgraph(g_bip, alive)
    local_side = None
    if side_p is not None:
        index = sub.remap.from_parent
        local_side = [index[v] for v in side_p if v in index]
    try:
        cert = find_kss(sub.graph, length // 2, side_a=local_side, budget=budget)
    except (NotHypothesis, BudgetExceeded) as e:
        logger.debug("no K_{%d,%d} in the residual: %s", length // 2, length // 2, e)
        return None
    cert = cert.lift(sub.remap)
    return alternating_cycle(sorted(cert.side_a), sorted(cert.side_b))


def greedy_disjoint_bipartite_cycles(g_bip, lengths, side_p=None, avoid=(), budget=10**6):
    """
    Greedy disjoint cycles of the given strictly descending even lengths in a
    bipartite graph, avoiding ``avoid``. Stops at the first length it cannot
    place; the result may be shorter than ``lengths``.
    """
    lengths = list(lengths)
    _check_lengths(lengths)
    used = set(avoid)
    cycles = []
    for length in lengths:
        try:
            cycle = find_cycle_of_length(g_bip, length, avoid=used, budget=budget)
            exhaustive = True
        except BudgetExceeded:
            cycle, exhaustive = None, False
        if cycle is None and not exhaustive:
            cycle = _biclique_cycle(g_bip, length, used, side_p, budget)
        if cycle is None:
            logger.debug("greedy stopped at length %d after %d cycles", length, len(cycles))
            break
        cycles.append(cycle)
        used.update(cycle.vertices)
    return CyclePacking(cycles=tuple(cycles))
