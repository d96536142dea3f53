"""
Simple undirected graphs over dense integer ids.

A Graph is immutable once built. Every "deletion" produces a new induced
subgraph together with a Remap that translates its ids back to the parent's,
so certificates found deep inside a pipeline can always be reported in the
ids of the original input.
"""

from collections import deque
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from ..errors import GraphParseError, InvalidInput, SelfLoopError


class Graph:
    """Adjacency-set graph on vertices 0..n-1 with sorted neighbor tuples."""

    __slots__ = ("_adj", "_sets", "_m")

    def __init__(self, adjacency):
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        n = len(adj)
        total = 0
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if u == v:
                    raise InvalidInput(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise InvalidInput(f"neighbor {u} of {v} out of range")
            total += len(nbrs)
        self._adj = adj
        self._sets = tuple(frozenset(nbrs) for nbrs in adj)
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if v not in self._sets[u]:
                    raise InvalidInput(f"asymmetric adjacency between {v} and {u}")
        self._m = total // 2

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph on n vertices; duplicate edges collapse, self-loops are rejected."""
        if n < 0:
            raise InvalidInput("vertex count must be non-negative")
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop ({u}, {v}) rejected")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(adjacency)

    @classmethod
    def empty(cls, n=0):
        return cls([() for _ in range(n)])

    @property
    def vertex_count(self):
        return len(self._adj)

    @property
    def edge_count(self):
        return self._m

    def vertices(self):
        return range(len(self._adj))

    def neighbors(self, v):
        return self._adj[v]

    def neighbor_set(self, v):
        return self._sets[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return 0 <= u < len(self._sets) and v in self._sets[u]

    def edges(self):
        """Edges (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degrees(self):
        return np.fromiter((len(nbrs) for nbrs in self._adj), dtype=np.int64, count=len(self._adj))

    def average_degree(self):
        if not self._adj:
            return Fraction(0)
        return Fraction(2 * self._m, len(self._adj))

    def edge_subgraph(self, edges):
        """Spanning subgraph with the same vertex ids and only the given edges."""
        for u, v in edges:
            if not self.has_edge(u, v):
                raise InvalidInput(f"({u}, {v}) is not an edge")
        return Graph.from_edges(self.vertex_count, edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    def __getstate__(self):
        return self._adj

    def __setstate__(self, state):
        self._adj = state
        self._sets = tuple(frozenset(nbrs) for nbrs in state)
        self._m = sum(len(nbrs) for nbrs in state) // 2


class Remap:
    """Child-to-parent id translation produced by every subgraph operation."""

    __slots__ = ("to_parent", "_from_parent")

    def __init__(self, to_parent):
        self.to_parent = tuple(to_parent)
        self._from_parent = None

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @property
    def from_parent(self):
        if self._from_parent is None:
            self._from_parent = {p: c for c, p in enumerate(self.to_parent)}
        return self._from_parent

    def lift(self, v):
        return self.to_parent[v]

    def lift_all(self, vertices):
        return [self.to_parent[v] for v in vertices]

    def lower(self, v):
        return self.from_parent[v]

    def compose(self, outer):
        """Chain this remap (child -> parent) with outer (parent -> grandparent)."""
        return Remap(outer.to_parent[p] for p in self.to_parent)

    def __len__(self):
        return len(self.to_parent)

    def __repr__(self):
        return f"Remap({len(self.to_parent)} ids)"


class Subgraph(NamedTuple):
    graph: Graph
    remap: Remap


def induced_subgraph(g, s):
    """G[S] with ids renumbered in increasing order of the kept parent ids."""
    kept = sorted(set(s))
    n = g.vertex_count
    for v in kept:
        if not 0 <= v < n:
            raise InvalidInput(f"vertex {v} out of range for n={n}")
    index = {v: i for i, v in enumerate(kept)}
    adjacency = [[index[u] for u in g.neighbors(v) if u in index] for v in kept]
    return Subgraph(Graph(adjacency), Remap(kept))


def filtered_subgraph(g, s, keep_edge):
    """Subgraph on S keeping only the edges (u, v) for which keep_edge(u, v) is true."""
    kept = sorted(set(s))
    index = {v: i for i, v in enumerate(kept)}
    adjacency = [
        [index[u] for u in g.neighbors(v) if u in index and keep_edge(v, u)] for v in kept
    ]
    return Subgraph(Graph(adjacency), Remap(kept))


def bipartite_between(g, side_p, side_q):
    """G(P, Q): the bipartite subgraph spanned by the P-Q edges only."""
    p = frozenset(side_p)
    q = frozenset(side_q)
    if p & q:
        raise InvalidInput("sides must be disjoint")
    return filtered_subgraph(g, p | q, lambda u, v: (u in p) != (v in p))


def count_edges_within(g, s):
    s = s if isinstance(s, (set, frozenset)) else set(s)
    return sum(1 for v in s for u in g.neighbors(v) if u in s and u > v)


def count_edges_between(g, s, t):
    t = t if isinstance(t, (set, frozenset)) else set(t)
    return sum(1 for v in s for u in g.neighbors(v) if u in t)


def connected_components(g, vertices=None):
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    allowed = None if vertices is None else set(vertices)
    order = sorted(allowed) if allowed is not None else g.vertices()
    seen = set()
    components = []
    for start in order:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        comp = [start]
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in seen and (allowed is None or u in allowed):
                    seen.add(u)
                    queue.append(u)
                    comp.append(u)
        components.append(sorted(comp))
    return components


def two_coloring(g):
    """A proper 2-colouring as a list of 0/1, or None when g has an odd cycle."""
    color = [-1] * g.vertex_count
    for start in g.vertices():
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g):
    return two_coloring(g) is not None


def parse_edge_list(text):
    """
    Parse the edge-list format: an optional "n <count>" header, then one
    "u v" edge per line; blank lines and lines starting with "#" are skipped.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    declared = None
    edges = []
    seen_content = False
    max_id = -1
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not seen_content and tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphParseError(f"malformed header {line!r}", line_number)
            declared = int(tokens[1])
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2 or not all(tok.isdigit() for tok in tokens):
            raise GraphParseError(f"expected two non-negative integers, got {line!r}", line_number)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise SelfLoopError(u, line_number)
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = max_id + 1
    if declared is not None:
        if declared < n:
            raise GraphParseError(f"header declares n={declared} but vertex {max_id} appears")
        n = declared
    return Graph.from_edges(n, edges)


def serialize_edge_list(g):
    """Header plus sorted edges; parse_edge_list(serialize_edge_list(g)) == g."""
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
