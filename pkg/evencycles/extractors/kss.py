import logging
from fractions import Fraction

from ..core.certificates import KssCert
from ..core.graph import two_coloring
from ..core.numbers import parse_rational
from ..errors import BudgetExceeded, ContractViolation, InvalidInput, NotHypothesis
from .base import ExtractorBase

logger = logging.getLogger(__name__)


class KssExtractor(ExtractorBase):
    """
    Complete bipartite K_{s,s} search by common-neighbourhood intersection.

    Subsets of the side B are grown depth-first, highest degree first; the
    running intersection of neighbourhoods (kept as an int bitmask over A)
    prunes a branch as soon as fewer than s common neighbours remain. Short of
    the node budget the search is exhaustive, so a hypothesis-met input can
    never come back empty.
    """

    name = "kss"

    def __init__(self, budget=10**7):
        self.budget = budget

    @staticmethod
    def sides(g_bip, side_a=None):
        coloring = two_coloring(g_bip)
        if coloring is None:
            raise InvalidInput("find_kss needs a bipartite graph")
        if side_a is None:
            side_a = [v for v in g_bip.vertices() if coloring[v] == 0]
        a = frozenset(side_a)
        for u, v in g_bip.edges():
            if (u in a) == (v in a):
                raise InvalidInput(f"edge ({u}, {v}) lies inside one side")
        b = frozenset(g_bip.vertices()) - a
        return a, b

    def check_hypothesis(self, g_bip, a, b, s, delta):
        # e >= (s - 1 + delta)|A| and delta |A| >= |B|^s
        e = g_bip.edge_count
        return e >= (s - 1 + delta) * len(a) and delta * len(a) >= len(b) ** s

    def _search(self, g_bip, pick, other, s):
        if s == 0:
            return (), ()
        pick_order = sorted(pick, key=lambda v: (-g_bip.degree(v), v))
        pick_order = [v for v in pick_order if g_bip.degree(v) >= s]
        other_index = {v: i for i, v in enumerate(sorted(other))}
        other_ids = sorted(other)
        masks = {}
        for v in pick_order:
            mask = 0
            for u in g_bip.neighbors(v):
                mask |= 1 << other_index[u]
            masks[v] = mask

        nodes = 0
        chosen = []

        def grow(start, common):
            nonlocal nodes
            nodes += 1
            if nodes > self.budget:
                raise BudgetExceeded(f"K_{{{s},{s}}} search spent {self.budget} nodes", nodes)
            if len(chosen) == s:
                return common
            for i in range(start, len(pick_order) - (s - len(chosen)) + 1):
                v = pick_order[i]
                narrowed = common & masks[v]
                if narrowed.bit_count() < s:
                    continue
                chosen.append(v)
                found = grow(i + 1, narrowed)
                if found is not None:
                    return found
                chosen.pop()
            return None

        full = (1 << len(other_ids)) - 1
        common = grow(0, full)
        logger.debug("K_{%d,%d} search explored %d nodes", s, s, nodes)
        if common is None:
            return None
        partners = [other_ids[i] for i in range(len(other_ids)) if common >> i & 1][:s]
        return tuple(sorted(chosen)), tuple(partners)

    def extract(self, g_bip, s, delta=1, side_a=None):
        """
        Find K_{s,s} in the bipartite graph with sides (A, B).

        Args:
            g_bip: bipartite Graph
            s: size of each side of the biclique
            delta: the positive rational of the counting hypothesis
            side_a: optional explicit side A (default: colour class 0)

        Returns:
            KssCert with side_a inside A and side_b inside B

        Raises:
            InvalidInput: g_bip is not bipartite with the given side
            NotHypothesis: nothing found and the counting hypothesis fails
            BudgetExceeded: the non-exhaustive search spent its budget
        """
        delta = parse_rational(delta)
        if s < 1:
            raise InvalidInput("s must be at least 1")
        if delta <= 0:
            raise InvalidInput("delta must be positive")
        a, b = self.sides(g_bip, side_a)
        hypothesis = self.check_hypothesis(g_bip, a, b, s, Fraction(delta))
        # enumerate subsets of the smaller side
        if len(b) <= len(a):
            found = self._search(g_bip, b, a, s)
            if found is not None:
                side_b, side_a_found = found
                return KssCert(side_a=side_a_found, side_b=side_b, s=s)
        else:
            found = self._search(g_bip, a, b, s)
            if found is not None:
                side_a_found, side_b = found
                return KssCert(side_a=side_a_found, side_b=side_b, s=s)
        # the search is exhaustive unless it raised BudgetExceeded
        if hypothesis:
            raise ContractViolation(f"counting hypothesis holds but no K_{{{s},{s}}} exists")
        raise NotHypothesis(f"no K_{{{s},{s}}} found and the counting hypothesis fails")


def find_kss(g_bip, s, delta=1, side_a=None, budget=10**7):
    return KssExtractor(budget=budget).extract(g_bip, s, delta, side_a)
