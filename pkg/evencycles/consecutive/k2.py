"""
The two level claims behind the k = 2 engine.

Both turn a surplus of edges at one BFS level into two cycles of lengths
2d+2 and 2d+4: each finds an even path of length 4 and a length-2 sub-path
that share two end-vertices on the level (or join the same two BFS branches),
and closes both through the tree.
"""

import logging

from ..core.certificates import CycleFamily
from ..core.graph import (
    bipartite_between,
    connected_components,
    count_edges_between,
    count_edges_within,
    induced_subgraph,
)
from ..core.peeling import bipartite_peel, peel_min_degree
from ..errors import ContractViolation, EvenCyclesError, ProofCaseExhausted
from .split import minimal_subtree_split

logger = logging.getLogger(__name__)


def _close_pair(decomp, short_path, long_path):
    short_cycle, _ = decomp.close_through_tree(short_path)
    long_cycle, _ = decomp.close_through_tree(long_path)
    family = CycleFamily.from_cycles([short_cycle, long_cycle])
    if family.lengths[1] != family.lengths[0] + 2 or family.lengths[0] % 2:
        raise ContractViolation(f"closed lengths {family.lengths} are not consecutive even")
    return family


def _peeled_components(g, upper, lower):
    """Components of the (2, 3)-peel of G(upper, lower), surplus components first."""
    upper_set = set(upper)
    between = bipartite_between(g, upper_set, lower)
    upper_local = {i for i, v in enumerate(between.remap.to_parent) if v in upper_set}
    core = bipartite_peel(between.graph, upper_local, 2, 3)
    remap = core.remap.compose(between.remap)
    components = []
    for comp in connected_components(core.graph):
        if len(comp) < 2:
            continue
        vertices = remap.lift_all(comp)
        top = [v for v in vertices if v in upper_set]
        bottom = [v for v in vertices if v not in upper_set]
        surplus = count_edges_within(core.graph, comp) - len(top) - 2 * len(bottom)
        components.append((surplus <= 0, sorted(vertices), top, bottom, core.graph, comp, remap))
    components.sort(key=lambda item: (item[0], item[1]))
    return components


def _five_vertex_path(adjacency, set_a, bottom):
    """
    Find y below the split with neighbours on both sides and walk
    x1 -> y' -> x3' to a path a c a' c' b whose two ends lie on opposite
    sides, together with its length-2 suffix.
    """
    for y in sorted(bottom):
        n_a = sorted(u for u in adjacency[y] if u in set_a)
        n_b = sorted(u for u in adjacency[y] if u not in set_a)
        if not n_a or not n_b:
            continue
        if len(n_a) >= 2:
            same, x1, x2, x3 = set_a, n_a[0], n_a[1], n_b[0]
        elif len(n_b) >= 2:
            same, x1, x2, x3 = None, n_b[0], n_b[1], n_a[0]
        else:
            continue
        y_prime = min((u for u in adjacency[x1] if u != y), default=None)
        if y_prime is None:
            continue
        x3_prime = min((u for u in adjacency[y_prime] if u not in (x1, x2)), default=None)
        if x3_prime is None:
            continue
        on_x_side = (x3_prime in set_a) if same is not None else (x3_prime not in set_a)
        if on_x_side:
            path = [x3_prime, y_prime, x1, y, x3]
        else:
            path = [x2, y, x1, y_prime, x3_prime]
        return path[2:], path
    return None


def cross_mechanism(g, decomp, upper, lower):
    """
    Two consecutive even cycles from a bipartite surplus between ``upper``
    (vertices on one BFS level) and ``lower`` (vertices on that level or the
    next), or None when no peeled component supports the walk.
    """
    for _, vertices, top, bottom, core_graph, comp, remap in _peeled_components(g, upper, lower):
        if len(top) < 2:
            continue
        split = minimal_subtree_split(decomp, top)
        local_of = {remap.lift(c): c for c in comp}
        adjacency = {v: [remap.lift(u) for u in core_graph.neighbors(local_of[v])] for v in vertices}
        found = _five_vertex_path(adjacency, split.set_a, bottom)
        if found is not None:
            short_path, long_path = found
            return _close_pair(decomp, short_path, long_path)
    return None


def k2_cross_level_cycles(g, decomp, level):
    """Two consecutive even cycles when e(L_i, L_i+1) >= |L_i| + 2|L_i+1| + 1."""
    upper, lower = decomp.level(level), decomp.level(level + 1)
    between = count_edges_between(g, upper, lower)
    if between < len(upper) + 2 * len(lower) + 1:
        raise ContractViolation(f"level {level}: cross-level surplus missing ({between} edges)")
    family = cross_mechanism(g, decomp, upper, lower)
    if family is None:
        raise ContractViolation(f"level {level}: (2, 3)-peel left no usable component")
    logger.debug("level %d cross claim: lengths %s", level, family.lengths)
    return family


class _LevelPatterns:
    """Small-pattern search inside one component R of a level, split into A and B."""

    def __init__(self, g, r_vertices, set_a):
        self.r = frozenset(r_vertices)
        self.set_a = frozenset(set_a)
        self.adj = {v: [u for u in g.neighbors(v) if u in self.r] for v in sorted(self.r)}

    def side(self, v, label, x_is_a):
        in_a = v in self.set_a
        return in_a == x_is_a if label == "X" else in_a != x_is_a

    def match(self, pattern, x_is_a):
        """First simple path whose i-th vertex lies on side pattern[i] ("X" or "Y")."""
        path = []

        def dfs():
            if len(path) == len(pattern):
                return list(path)
            label = pattern[len(path)]
            candidates = self.adj[path[-1]] if path else sorted(self.r)
            for v in candidates:
                if v in path or not self.side(v, label, x_is_a):
                    continue
                path.append(v)
                found = dfs()
                if found is not None:
                    return found
                path.pop()
            return None

        return dfs()

    def four_cycles(self):
        """4-cycles a1 b1 a2 b2 using only A-B edges."""
        for a1 in sorted(self.r & self.set_a):
            across = [b for b in self.adj[a1] if b not in self.set_a]
            for i, b1 in enumerate(across):
                for b2 in across[i + 1:]:
                    for a2 in self.adj[b1]:
                        if a2 > a1 and a2 in self.set_a and a2 in self.adj[b2]:
                            yield [a1, b1, a2, b2]


def _intra_component(g, decomp, r_vertices):
    split = minimal_subtree_split(decomp, r_vertices)
    patterns = _LevelPatterns(g, r_vertices, split.set_a)

    # a1 a2 a3 a4 b: suffix a3 a4 b and the whole path
    for x_is_a in (True, False):
        path = patterns.match("XXXXY", x_is_a)
        if path is not None:
            return _close_pair(decomp, path[2:], path), "four-on-one-side path"

    # a1 a2 b1 a3 b2: prefix a1 a2 b1 and the whole path
    for x_is_a in (True, False):
        path = patterns.match("XXYXY", x_is_a)
        if path is not None:
            return _close_pair(decomp, path[:3], path), "alternating path"

    # a 4-cycle v p o q of R(A, B) with an outside neighbour x of v
    for quad in patterns.four_cycles():
        for rotation in range(4):
            v, p, o, q = quad[rotation:] + quad[:rotation]
            v_in_a = v in patterns.set_a
            for x in patterns.adj[v]:
                if x in quad:
                    continue
                if (x in patterns.set_a) != v_in_a:
                    return _close_pair(decomp, [x, v, p], [x, v, q, o, p]), "4-cycle with cross neighbour"
                return _close_pair(decomp, [x, v, p], [x, v, p, o, q]), "4-cycle with same-side neighbour"

    # A and B as two stacked levels: rerun the cross-level claim inside R
    set_b = patterns.r - patterns.set_a
    for upper, lower in ((patterns.set_a, set_b), (set_b, patterns.set_a)):
        family = cross_mechanism(g, decomp, sorted(upper), sorted(lower))
        if family is not None:
            return family, "stacked-split claim"
    return None, {
        "component_size": len(r_vertices),
        "component_edges": count_edges_within(g, r_vertices),
        "set_a": sorted(split.set_a),
        "anchor_depth": split.anchor_depth,
    }


def k2_intra_level_cycles(g, decomp, level):
    """
    Two consecutive even cycles when e(G[L_i]) >= 2|L_i| + 1.

    The level subgraph is peeled to its 3-core and a component R with
    e(R) >= 2|R| + 1 is split at its BFS branching vertex into (A, B). The
    search then tries, in order: a path a1 a2 a3 a4 b, a path a1 a2 b1 a3 b2,
    a 4-cycle of R(A, B) with a neighbour outside it, and finally the
    cross-level claim with A stacked above B (and B above A).

    Raises:
        ProofCaseExhausted: every branch failed; carries the state of each component
    """
    layer = decomp.level(level)
    inside = count_edges_within(g, layer)
    if inside < 2 * len(layer) + 1:
        raise ContractViolation(f"level {level}: e(G[L_i]) = {inside} < 2|L_i| + 1")
    sub = induced_subgraph(g, layer)
    core = peel_min_degree(sub.graph, 3)
    remap = core.remap.compose(sub.remap)
    components = [remap.lift_all(c) for c in connected_components(core.graph)]
    components.sort(key=lambda c: (count_edges_within(g, c) < 2 * len(c) + 1, c))

    state = {"level": level, "level_size": len(layer), "level_edges": inside}
    for index, comp in enumerate(components):
        if len(comp) < 2:
            continue
        try:
            family, detail = _intra_component(g, decomp, comp)
        except EvenCyclesError as e:
            state[f"component_{index}"] = f"error: {e}"
            continue
        if family is not None:
            logger.debug("level %d intra claim via %s: lengths %s", level, detail, family.lengths)
            return family
        state[f"component_{index}"] = detail
    raise ProofCaseExhausted(f"level {level}: no intra-level case produced two cycles", state)
