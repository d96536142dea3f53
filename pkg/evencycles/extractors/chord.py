import logging

from ..core.certificates import Cycle, ThetaGraph
from ..core.graph import connected_components
from ..core.layers import girth
from ..core.peeling import core_vertices
from ..errors import BelowThreshold, InvalidInput
from .base import ExtractorBase
from .rotation import PathGrower

logger = logging.getLogger(__name__)


class ChordedCycleExtractor(ExtractorBase):
    """
    Long cycle with a chord from a maximal path in a high-minimum-degree core.

    Inside the (k+1)-core the end of a maximal path has at least k+1
    neighbours, all on the path. Closing at the farthest one gives the cycle;
    any neighbour strictly between the farthest one and the end's predecessor
    is a chord. With girth g those neighbours sit at least g-2 apart along the
    path, so the cycle has at least (g-2)k+2 vertices.
    """

    name = "cycle_with_chord"

    def check_hypothesis(self, g, k):
        return g.vertex_count > 0 and g.average_degree() >= 2 * k

    @staticmethod
    def default_min_length(g, k):
        """(girth - 2) * k + 2; at least 2k+2 on bipartite input."""
        shortest = girth(g)
        return 4 if shortest is None else (shortest - 2) * k + 2

    def _theta_from(self, grower, path, min_length):
        for oriented, farthest, others in grower.end_closures(path):
            end_index = len(oriented) - 1
            length = end_index - farthest + 1
            if length < max(min_length, 4):
                continue
            chords = [j for j in others if farthest + 1 <= j <= end_index - 2]
            if not chords:
                continue
            cycle = Cycle(vertices=tuple(oriented[farthest:]))
            return ThetaGraph(cycle=cycle, chord=(oriented[end_index], oriented[chords[0]]))
        return None

    def _search(self, g, vertices, min_length):
        grower = PathGrower(g, allowed=vertices)
        for comp in connected_components(g, vertices):
            starts = sorted(comp, key=lambda v: (-g.degree(v), v))
            for start in starts[:8]:
                path = grower.maximal_path(start)
                for candidate in grower.rotations(path):
                    theta = self._theta_from(grower, candidate, min_length)
                    if theta is not None:
                        return theta
        return None

    def extract(self, g, k, min_length=None):
        """
        Args:
            g: host Graph
            k: degree parameter (k >= 2)
            min_length: required cycle length; defaults to (girth-2)k+2 when
                the average-degree hypothesis holds, 4 otherwise

        Returns:
            ThetaGraph whose cycle has at least min_length vertices

        Raises:
            BelowThreshold: no qualifying cycle with a chord was found
        """
        if k < 2:
            raise InvalidInput("cycle_with_chord needs k >= 2")
        hypothesis = self.check_hypothesis(g, k)
        if min_length is None:
            min_length = self.default_min_length(g, k) if hypothesis else 4
        for d in (k + 1, k):
            core = core_vertices(g, d)
            if not core:
                continue
            theta = self._search(g, core, min_length)
            if theta is not None:
                logger.debug("theta with %d-cycle from the %d-core", theta.cycle.length, d)
                return theta
        raise BelowThreshold(
            f"no cycle of length >= {min_length} with a chord",
            {"average_degree": str(g.average_degree()), "k": k, "hypothesis": hypothesis},
        )


def cycle_with_chord(g, k, min_length=None):
    return ChordedCycleExtractor().extract(g, k, min_length)
