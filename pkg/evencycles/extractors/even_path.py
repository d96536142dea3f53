import logging

from ..core.certificates import PathCert
from ..core.verify import verify_certificate
from ..errors import InfeasibleTrim
from .base import ExtractorBase

logger = logging.getLogger(__name__)


class EvenPathExtractor(ExtractorBase):
    """
    Opens a cycle into an even path with both ends in A, then trims it two
    edges at a time down to the target length.

    The complement B of A must be independent along the cycle, which is what
    makes every trim step available: whenever an end's neighbour is a
    B-vertex the vertex after it is back in A.
    """

    name = "even_endpoints_path"

    def check_hypothesis(self, g, cycle, a_set, target_len):
        vs = cycle.vertices
        n = len(vs)
        if target_len % 2 or target_len < 0 or n < target_len + 2:
            return False
        if not any(v in a_set for v in vs):
            return False
        return all(vs[i] in a_set or vs[(i + 1) % n] in a_set for i in range(n))

    @staticmethod
    def open_cycle(cycle, a_set):
        vs = list(cycle.vertices)
        n = len(vs)
        if n % 2:
            for i in range(n):
                if vs[i] in a_set and vs[(i + 1) % n] in a_set:
                    # drop edge vs[i] vs[i+1]
                    return vs[i + 1:] + vs[: i + 1]
            raise InfeasibleTrim("odd cycle without an A-A edge")
        drop = next((i for i in range(n) if vs[i] not in a_set), 0)
        return vs[drop + 1:] + vs[:drop]

    @staticmethod
    def trim(path, a_set):
        if path[1] not in a_set:
            return path[2:]
        if path[-2] not in a_set:
            return path[:-2]
        return path[1:-1]

    def extract(self, g, cycle, a_set, target_len):
        """
        Args:
            g: host Graph
            cycle: Cycle in g with no two consecutive vertices outside a_set
            a_set: vertex set A
            target_len: even length of the returned path

        Returns:
            PathCert of exactly target_len edges, both ends in A, inside the cycle

        Raises:
            InfeasibleTrim: the preconditions do not hold
        """
        a_set = frozenset(a_set)
        if not verify_certificate(g, cycle):
            raise InfeasibleTrim("cycle is not valid in the host graph")
        if not self.check_hypothesis(g, cycle, a_set, target_len):
            raise InfeasibleTrim(
                f"cannot trim a {cycle.length}-cycle to an A-A path of length {target_len}"
            )
        path = self.open_cycle(cycle, a_set)
        while len(path) - 1 > target_len:
            path = self.trim(path, a_set)
        if len(path) - 1 != target_len or path[0] not in a_set or path[-1] not in a_set:
            raise InfeasibleTrim(f"trim ended at length {len(path) - 1} with ends {path[0]}, {path[-1]}")
        return PathCert(vertices=tuple(path))


def even_endpoints_path(g, cycle, a_set, target_len):
    return EvenPathExtractor().extract(g, cycle, a_set, target_len)
