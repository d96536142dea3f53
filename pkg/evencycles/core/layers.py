"""BFS level decompositions and cycle closure through the BFS tree."""

from collections import deque
from dataclasses import dataclass, field

from ..errors import ContractViolation, InvalidInput
from .certificates import Cycle


@dataclass(frozen=True)
class LevelDecomposition:
    """
    Levels L_0..L_max of the root's component plus one BFS tree.

    ``depth[v]`` is the distance from the root, or -1 when v is unreachable.
    ``depth_budget`` is the level bound t the caller searches within (None if
    the decomposition is used without one).
    """

    root: int
    levels: tuple
    parents: dict = field(compare=False)
    depth: tuple
    depth_budget: int = None

    @property
    def max_level(self):
        return len(self.levels) - 1

    def level(self, i):
        if 0 <= i < len(self.levels):
            return self.levels[i]
        return ()

    def ball(self, i):
        """Vertices at distance at most i from the root."""
        out = []
        for j in range(min(i, self.max_level) + 1):
            out.extend(self.levels[j])
        return out

    def reachable(self):
        return self.ball(self.max_level)

    def path_to_root(self, v):
        if self.depth[v] < 0:
            raise InvalidInput(f"vertex {v} is not reachable from root {self.root}")
        path = [v]
        while path[-1] != self.root:
            path.append(self.parents[path[-1]])
        return path

    def lca(self, u, v):
        while self.depth[u] > self.depth[v]:
            u = self.parents[u]
        while self.depth[v] > self.depth[u]:
            v = self.parents[v]
        while u != v:
            u = self.parents[u]
            v = self.parents[v]
        return u

    def close_through_tree(self, path):
        """
        Close a path whose two ends sit on the same level i (and whose other
        vertices sit on levels >= i) into a cycle using the tree paths from
        both ends up to their lowest common ancestor.

        Returns:
            (Cycle, d): the cycle has len(path) - 1 + 2d edges.
        """
        a, b = path[0], path[-1]
        if a == b:
            raise ContractViolation("closing path must have distinct endpoints")
        level = self.depth[a]
        if level < 0 or self.depth[b] != level:
            raise ContractViolation(f"endpoints {a}, {b} are not on a common level")
        if any(self.depth[v] < level for v in path):
            raise ContractViolation("closing path dips above its endpoints' level")
        top = self.lca(a, b)
        up_a, up_b = [], []
        x, y = a, b
        while x != top:
            x = self.parents[x]
            up_a.append(x)
        while y != top:
            y = self.parents[y]
            up_b.append(y)
        # up_b runs b's parent .. top, up_a runs a's parent .. top
        vertices = list(path) + up_b + list(reversed(up_a[:-1]))
        return Cycle(vertices=tuple(vertices)), level - self.depth[top]


def bfs_levels(g, root, depth_budget=None):
    """Breadth-first levels from root; neighbours are visited in sorted order."""
    n = g.vertex_count
    if not 0 <= root < n:
        raise InvalidInput(f"root {root} out of range for n={n}")
    depth = [-1] * n
    depth[root] = 0
    parents = {}
    levels = [[root]]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if depth[u] == -1:
                depth[u] = depth[v] + 1
                parents[u] = v
                if depth[u] == len(levels):
                    levels.append([])
                levels[depth[u]].append(u)
                queue.append(u)
    return LevelDecomposition(
        root=root,
        levels=tuple(tuple(sorted(level)) for level in levels),
        parents=parents,
        depth=tuple(depth),
        depth_budget=depth_budget,
    )


def girth(g):
    """Length of a shortest cycle, or None when g is a forest."""
    best = None
    for root in g.vertices():
        depth = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            # every cycle closed from here on is at least 2 * depth[v] long
            if best is not None and 2 * depth[v] >= best:
                break
            for u in g.neighbors(v):
                if u not in depth:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    length = depth[u] + depth[v] + 1
                    if best is None or length < best:
                        best = length
    return best
