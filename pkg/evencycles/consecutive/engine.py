import logging
import math
from collections import namedtuple
from fractions import Fraction

from ..core.graph import count_edges_between, count_edges_within
from ..core.layers import bfs_levels
from ..core.maxcut import max_cut_bipartition
from ..core.numbers import log_base, parse_rational
from ..core.verify import verify_certificate
from ..errors import BelowThreshold, ContractViolation, EvenCyclesError, Exhausted, InvalidInput
from ..tasks import SearchPool
from .k2 import k2_cross_level_cycles, k2_intra_level_cycles
from .overflow import level_overflow_cycles
from .refine import refine_dense_ball

logger = logging.getLogger(__name__)

ROOT_RETRIES = 8

RootOutcome = namedtuple("RootOutcome", ["root", "family", "growth_stops_at"])


def growth_certificate(decomp, eps, k, max_level):
    """
    Level-by-level check of |L_i+1| >= (eps/k)|V(H_i)|, the growth that holds
    whenever no level claim fails. Returns the per-level rows and the first
    level where growth stops (None if it never does within max_level).
    """
    rows = []
    contradiction = None
    ball = 0
    for i in range(min(max_level, decomp.max_level) + 1):
        ball += len(decomp.level(i))
        nxt = len(decomp.level(i + 1))
        ok = nxt >= Fraction(eps) / k * ball
        rows.append({"level": i, "ball": ball, "next": nxt, "grows": ok})
        if not ok and contradiction is None:
            contradiction = i
    return rows, contradiction


def _search_root(h, root, k, eps, max_level, depth_budget):
    """One BFS root: refine, then scan levels 0..max_level for an overfull claim."""
    threshold = 2 * k + eps if k >= 3 else 5 + eps
    decomp = bfs_levels(h, root, depth_budget)
    try:
        sub, decomp = refine_dense_ball(h, threshold, decomp, max_level)
    except Exhausted as e:
        logger.debug("root %d: %s", root, e)
        return RootOutcome(root, None, None)
    hh = sub.graph
    for i in range(min(max_level, decomp.max_level) + 1):
        upper, lower = decomp.level(i), decomp.level(i + 1)
        try:
            if k >= 3:
                if count_edges_between(hh, upper, lower) > k * (len(upper) + len(lower)):
                    return RootOutcome(root, level_overflow_cycles(hh, decomp, i, k).lift(sub.remap), None)
                continue
            if count_edges_within(hh, upper) >= 2 * len(upper) + 1:
                return RootOutcome(root, k2_intra_level_cycles(hh, decomp, i).lift(sub.remap), None)
            if count_edges_between(hh, upper, lower) >= len(upper) + 2 * len(lower) + 1:
                return RootOutcome(root, k2_cross_level_cycles(hh, decomp, i).lift(sub.remap), None)
        except EvenCyclesError as e:
            logger.warning("root %d level %d: claim handler failed: %s", root, i, e)
    _, depth = growth_certificate(decomp, eps, k, max_level)
    logger.debug("root %d: no overfull level; growth stops at %s", root, depth)
    return RootOutcome(root, None, depth)


def _has_family(outcome):
    return outcome.family is not None


class ConsecutiveCycleEngine:
    """
    k (possibly overlapping) cycles of consecutive even lengths.

    For k >= 3 the search runs on a max-cut bipartization of g with ball
    threshold 2k+eps; for k = 2 it runs on g itself with threshold 5+eps.
    Up to eight BFS roots are tried, highest degree first.
    """

    def __init__(self, k, eps=1, jobs=1, roots=ROOT_RETRIES):
        if k < 2:
            raise InvalidInput("k must be at least 2")
        self.k = k
        self.eps = parse_rational(eps)
        if self.eps <= 0:
            raise InvalidInput("eps must be positive")
        self.jobs = jobs
        self.roots = roots

    def degree_threshold(self):
        return 8 * self.k + 4 * self.eps if self.k >= 3 else 10 + 2 * self.eps

    def hypothesis(self, g):
        return g.vertex_count > 0 and g.average_degree() >= self.degree_threshold()

    def level_bound(self, n):
        """(max_level, depth_budget): floor and ceil(+1) of log_{1+eps/k} n."""
        value = log_base(n, 1 + self.eps / self.k)
        return int(math.floor(value + 1e-9)), int(math.ceil(value - 1e-9)) + 1

    def length_bound(self, n):
        return 2 * log_base(n, 1 + self.eps / self.k) + 2

    def find(self, g):
        """
        Returns:
            CycleFamily (disjoint=False) in the ids of g

        Raises:
            BelowThreshold: the degree hypothesis fails and no family was found
            ContractViolation: the hypothesis holds but every root came back empty
        """
        n = g.vertex_count
        hypothesis = self.hypothesis(g)
        if n == 0 or g.edge_count == 0:
            raise BelowThreshold("graph has no edges", {"n": n})
        h = max_cut_bipartition(g)[1] if self.k >= 3 else g
        max_level, depth_budget = self.level_bound(n)
        candidates = sorted((v for v in h.vertices() if h.degree(v) > 0), key=lambda v: (-h.degree(v), v))
        pool = SearchPool(self.jobs, success=_has_family)
        for root in candidates[: self.roots]:
            pool.submit(_search_root, h, root, self.k, self.eps, max_level, depth_budget)
        outcome = pool.first_success()
        if outcome is not None:
            family = outcome.family
            verdict = verify_certificate(g, family)
            if not verdict:
                raise ContractViolation(f"engine produced an invalid family: {verdict.reason}")
            if hypothesis and family.lengths[0] > self.length_bound(n) + 1e-9:
                raise ContractViolation(
                    f"shortest cycle {family.lengths[0]} exceeds the bound {self.length_bound(n):.3f}"
                )
            logger.info("consecutive even cycles %s (k=%d, n=%d)", family.lengths, self.k, n)
            return family
        diagnostics = {
            "average_degree": str(g.average_degree()),
            "degree_threshold": str(self.degree_threshold()),
            "roots_tried": min(len(candidates), self.roots),
            "max_level": max_level,
            "growth_stops_at": {
                str(result.value.root): result.value.growth_stops_at
                for result in pool.outcomes
                if result.status == "completed"
            },
        }
        if hypothesis:
            raise ContractViolation(f"degree hypothesis holds but no family was found: {diagnostics}")
        raise BelowThreshold("no consecutive even cycles found below the degree threshold", diagnostics)


def find_consecutive_even_cycles(g, k, eps=1, jobs=1):
    return ConsecutiveCycleEngine(k, eps, jobs).find(g)

