import logging

from ..core.certificates import PathCert
from ..errors import BipartitionCase, ContractViolation, InvalidInput
from .base import ExtractorBase

logger = logging.getLogger(__name__)


class ThetaPathExtractor(ExtractorBase):
    """
    A-B paths of prescribed lengths inside a cycle-with-chord.

    Every vertex of a theta graph has degree 2 or 3, so the simple paths from a
    fixed start branch only at the two chord ends: a depth-first walk from each
    A-vertex visits O(|V|) paths and the whole enumeration stays quadratic.
    """

    name = "theta_ab_paths"

    @staticmethod
    def adjacency(theta):
        adj = {v: set() for v in theta.cycle.vertices}
        for u, v in theta.edges():
            adj[u].add(v)
            adj[v].add(u)
        return {v: sorted(nbrs) for v, nbrs in adj.items()}

    def check_hypothesis(self, theta, a_set):
        """True unless (A, complement) properly 2-colours the theta."""
        return any((u in a_set) == (v in a_set) for u, v in theta.edges())

    def _walk(self, adj, a_set, max_len, wanted):
        """First A-to-complement path found for each length in ``wanted``."""
        found = {}
        for start in sorted(a_set):
            path = [start]
            on_path = {start}

            def dfs():
                end = path[-1]
                length = len(path) - 1
                if length > 0 and end not in a_set and length in wanted and length not in found:
                    found[length] = tuple(path)
                if length == max_len or len(found) == len(wanted):
                    return
                for u in adj[end]:
                    if u not in on_path:
                        path.append(u)
                        on_path.add(u)
                        dfs()
                        on_path.discard(u)
                        path.pop()

            dfs()
            if len(found) == len(wanted):
                break
        return found

    def path_lengths(self, theta, a_set):
        """Every length realised by some path from A to the complement."""
        adj = self.adjacency(theta)
        a_set = frozenset(a_set) & frozenset(adj)
        n = len(adj)
        return set(self._walk(adj, a_set, n - 1, set(range(1, n))))

    def extract(self, theta, a_set, lengths):
        """
        Args:
            theta: ThetaGraph
            a_set: the side A; its complement within the theta is B
            lengths: requested path lengths, each below |V(theta)|

        Returns:
            one PathCert per requested length, running from A to B

        Raises:
            BipartitionCase: (A, B) properly 2-colours the theta
            ContractViolation: a requested length is missing otherwise
        """
        adj = self.adjacency(theta)
        a_set = frozenset(a_set) & frozenset(adj)
        n = len(adj)
        if not a_set or len(a_set) == n:
            raise InvalidInput("a_set must be a nonempty proper subset of the theta's vertices")
        wanted = set(lengths)
        too_long = [ell for ell in wanted if not 1 <= ell < n]
        if too_long:
            raise InvalidInput(f"lengths {sorted(too_long)} outside 1..{n - 1}")
        if not self.check_hypothesis(theta, a_set):
            raise BipartitionCase(f"split of size {len(a_set)}/{n - len(a_set)} 2-colours the theta")
        found = self._walk(adj, a_set, max(wanted, default=0), wanted)
        missing = sorted(wanted - set(found))
        if missing:
            raise ContractViolation(f"theta on {n} vertices has no A-B path of length(s) {missing}")
        logger.debug("A-B paths of lengths %s on a %d-vertex theta", sorted(wanted), n)
        return [PathCert(vertices=found[ell]) for ell in lengths]


def theta_ab_paths(theta, a_set, lengths):
    return ThetaPathExtractor().extract(theta, a_set, lengths)


def theta_path_lengths(theta, a_set):
    return ThetaPathExtractor().path_lengths(theta, a_set)
