"""Longest-path growth by endpoint extension and one-step rotations."""


class PathGrower:
    """
    Grows maximal paths inside ``allowed`` (default: every vertex).

    A path is maximal once neither endpoint has a neighbour off the path.
    When an end is stuck, a rotation through one of its path-neighbours
    ``path[i]`` turns ``path[i + 1]`` into the new end; if that vertex has an
    unused neighbour the path grows again. ``max_steps`` caps the number of
    rotations tried per path.
    """

    def __init__(self, g, allowed=None, max_steps=None):
        self.g = g
        self.allowed = None if allowed is None else frozenset(allowed)
        n = g.vertex_count if allowed is None else len(self.allowed)
        self.max_steps = max_steps if max_steps is not None else max(16, n * n)

    def _ok(self, v):
        return self.allowed is None or v in self.allowed

    def _extend_end(self, path, on_path):
        while True:
            end = path[-1]
            nxt = next((u for u in self.g.neighbors(end) if u not in on_path and self._ok(u)), None)
            if nxt is None:
                return
            path.append(nxt)
            on_path.add(nxt)

    def _rotate_once(self, path, on_path):
        """Try one rotation at the end of ``path``; True if the path grew."""
        end = path[-1]
        position = {v: i for i, v in enumerate(path)}
        for u in self.g.neighbors(end):
            i = position.get(u)
            if i is None or i >= len(path) - 2:
                continue
            pivot = path[i + 1]
            if any(w not in on_path and self._ok(w) for w in self.g.neighbors(pivot)):
                path[i + 1:] = reversed(path[i + 1:])
                self._extend_end(path, on_path)
                return True
        return False

    def maximal_path(self, start):
        path = [start]
        on_path = {start}
        self._extend_end(path, on_path)
        path.reverse()
        self._extend_end(path, on_path)
        steps = 0
        while steps < self.max_steps:
            steps += 1
            if self._rotate_once(path, on_path):
                continue
            path.reverse()
            if self._rotate_once(path, on_path):
                continue
            break
        return path

    def end_closures(self, path):
        """
        For each end of a maximal path, the closing position of its farthest
        path-neighbour and the positions of its other path-neighbours.

        Yields (oriented_path, farthest_index, other_indices) where the end
        is ``oriented_path[-1]``.
        """
        for oriented in (path, path[::-1]):
            end = oriented[-1]
            position = {v: i for i, v in enumerate(oriented)}
            hits = sorted(position[u] for u in self.g.neighbors(end) if u in position and position[u] < len(oriented) - 1)
            if hits:
                yield oriented, hits[0], hits[1:]

    def rotations(self, path):
        """The path itself plus every one-step rotation of either end."""
        yield path
        for oriented in (path, path[::-1]):
            end = oriented[-1]
            position = {v: i for i, v in enumerate(oriented)}
            for u in self.g.neighbors(end):
                i = position.get(u)
                if i is None or i >= len(oriented) - 2:
                    continue
                yield oriented[: i + 1] + oriented[i + 1:][::-1]
