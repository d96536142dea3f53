import logging

from ..core.certificates import Cycle, CyclePacking
from ..errors import ContractViolation, GreedyStuck

logger = logging.getLogger(__name__)


def two_path(g, ends, middle, used):
    """x w y with x, y in ``ends`` and w in ``middle``, all unused, or None."""
    for w in middle:
        if w in used:
            continue
        hits = [x for x in g.neighbors(w) if x in ends and x not in used and x != w]
        if len(hits) >= 2:
            return [hits[0], w, hits[1]]
    return None


def common_neighbor_cycles(g, part, sched, params):
    """
    The first ``sched.ell`` cycles of lengths 2c_1, 2c_2, ... through heavy
    anchors. A cycle of length 2c takes ceil(c/2) anchors v_1..v_q and joins
    each consecutive pair (cyclically) through their common V1 neighbourhood:
    by a path x w y of V1 (four edges with the anchors), or for odd c once by
    a single common neighbour (two edges).

    Raises:
        ContractViolation: M holds fewer anchors than the schedule needs
        GreedyStuck: a pair ran out of unused common neighbours; carries the
            cycles built so far
    """
    need = sched.demand()
    if part.m < need:
        raise ContractViolation(f"schedule needs {need} anchors, M has {part.m}")
    v1 = part.v1
    ordered_v1 = sorted(v1)
    anchors = iter(part.m_set)
    used = set()
    cycles = []
    for index in range(sched.ell):
        c = sched.half_lengths[index]
        q = (c + 1) // 2
        chosen = [next(anchors) for _ in range(q)]
        used.update(chosen)
        walk = []
        for j in range(q):
            a, b = chosen[j], chosen[(j + 1) % q]
            common = g.neighbor_set(a) & g.neighbor_set(b) & v1
            if c % 2 and j == q - 1:
                free = sorted(common - used)
                segment = free[:1] or None
            else:
                segment = two_path(g, common, ordered_v1, used)
            if segment is None:
                raise GreedyStuck(
                    f"anchors {a} and {b} have no free common-neighbour segment",
                    index=index,
                    partial=CyclePacking(cycles=tuple(cycles)),
                )
            used.update(segment)
            walk.append(a)
            walk.extend(segment)
        cycle = Cycle(vertices=tuple(walk))
        if cycle.length != 2 * c:
            raise ContractViolation(f"built a cycle of length {cycle.length}, wanted {2 * c}")
        logger.debug("anchored %d-cycle on %s", cycle.length, chosen)
        cycles.append(cycle)
    return CyclePacking(cycles=tuple(cycles))
