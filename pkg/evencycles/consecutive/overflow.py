import logging

from ..core.certificates import CycleFamily
from ..core.graph import bipartite_between, count_edges_between
from ..errors import BipartitionCase, ContractViolation
from ..extractors.chord import cycle_with_chord
from ..extractors.theta import theta_ab_paths
from .split import minimal_subtree_split

logger = logging.getLogger(__name__)


def level_overflow_cycles(h, decomp, level, k):
    """
    k cycles of lengths 2r'+2, ..., 2r'+2k from an overfull pair of levels.

    When e(L_i, L_{i+1}) > k(|L_i| + |L_{i+1}|), the bipartite graph between
    the two levels has average degree above 2k and so holds a cycle of length
    at least 2k+2 with a chord. Splitting its level-i vertices at their BFS
    branching vertex gives a split (A, B) that cannot 2-colour the theta;
    the even A-B paths of lengths 2..2k then close through the tree.
    """
    upper, lower = decomp.level(level), decomp.level(level + 1)
    between = count_edges_between(h, upper, lower)
    if between <= k * (len(upper) + len(lower)):
        raise ContractViolation(
            f"level {level}: e(L_i, L_i+1) = {between} does not exceed k(|L_i| + |L_i+1|)"
        )

    sub = bipartite_between(h, upper, lower)
    theta = cycle_with_chord(sub.graph, k, min_length=2 * k + 2).lift(sub.remap)
    upper_set = set(upper)
    targets = [v for v in theta.cycle.vertices if v in upper_set]
    logger.debug("level %d overflow: theta with %d-cycle, %d targets", level, theta.cycle.length, len(targets))

    lengths = list(range(2, 2 * k + 1, 2))
    split = minimal_subtree_split(decomp, targets)
    for branch in range(split.branch_count):
        split = minimal_subtree_split(decomp, targets, branch)
        try:
            paths = theta_ab_paths(theta, split.set_a, lengths)
        except BipartitionCase:
            logger.debug("branch %d 2-colours the theta, trying the next", branch)
            continue
        cycles = []
        for path in paths:
            cycle, d = decomp.close_through_tree(path.vertices)
            if d != split.anchor_depth:
                raise ContractViolation(f"closure depth {d} differs from anchor depth {split.anchor_depth}")
            cycles.append(cycle)
        family = CycleFamily.from_cycles(cycles)
        if family.r != split.anchor_depth + 1:
            raise ContractViolation(f"family base r={family.r} for anchor depth {split.anchor_depth}")
        return family
    raise ContractViolation(f"every branch split of level {level} 2-colours the theta")
