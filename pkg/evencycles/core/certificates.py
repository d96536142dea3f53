"""
Certificates returned by every extractor and pipeline stage.

These models only carry data. Whether a certificate is valid for a given host
graph is decided by ``verify_certificate``; keeping the models permissive lets
the CLI load a tampered certificate and report *which* invariant it breaks.
"""

from fractions import Fraction
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from .numbers import Rational


class _Certificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class Cycle(_Certificate):
    kind: Literal["cycle"] = "cycle"
    vertices: tuple[int, ...]

    @property
    def length(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def lift(self, remap):
        return Cycle(vertices=tuple(remap.lift_all(self.vertices)))


class PathCert(_Certificate):
    kind: Literal["path"] = "path"
    vertices: tuple[int, ...]

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def endpoints(self):
        return self.vertices[0], self.vertices[-1]

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def reversed(self):
        return PathCert(vertices=tuple(reversed(self.vertices)))

    def lift(self, remap):
        return PathCert(vertices=tuple(remap.lift_all(self.vertices)))


class KssCert(_Certificate):
    kind: Literal["kss"] = "kss"
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    s: int = Field(ge=0)

    def lift(self, remap):
        return KssCert(
            side_a=tuple(remap.lift_all(self.side_a)),
            side_b=tuple(remap.lift_all(self.side_b)),
            s=self.s,
        )


class ThetaGraph(_Certificate):
    """A cycle plus one chord, i.e. three internally disjoint paths between the chord ends."""

    kind: Literal["theta"] = "theta"
    cycle: Cycle
    chord: tuple[int, int]

    def arcs(self):
        """The two cycle arcs between the chord ends, each listed from chord[0] to chord[1]."""
        vs = self.cycle.vertices
        x, y = self.chord
        i, j = vs.index(x), vs.index(y)
        n = len(vs)
        forward = [vs[(i + step) % n] for step in range((j - i) % n + 1)]
        backward = [vs[(i - step) % n] for step in range((i - j) % n + 1)]
        return forward, backward

    def vertex_set(self):
        return frozenset(self.cycle.vertices)

    def edges(self):
        return self.cycle.edges() + [self.chord]

    def lift(self, remap):
        return ThetaGraph(cycle=self.cycle.lift(remap), chord=(remap.lift(self.chord[0]), remap.lift(self.chord[1])))


class CycleFamily(_Certificate):
    """k cycles of lengths 2r, 2r+2, ..., 2r+2k-2, ascending."""

    kind: Literal["family"] = "family"
    cycles: tuple[Cycle, ...]
    r: int
    disjoint: bool = False

    @classmethod
    def from_cycles(cls, cycles, disjoint=False):
        ordered = tuple(sorted(cycles, key=lambda c: (c.length, c.vertices)))
        if not ordered:
            raise ValueError("a family needs at least one cycle")
        return cls(cycles=ordered, r=ordered[0].length // 2, disjoint=disjoint)

    @property
    def k(self):
        return len(self.cycles)

    @property
    def lengths(self):
        return [c.length for c in self.cycles]

    def vertex_set(self):
        return frozenset(v for c in self.cycles for v in c.vertices)

    def lift(self, remap):
        return CycleFamily(cycles=tuple(c.lift(remap) for c in self.cycles), r=self.r, disjoint=self.disjoint)


class CyclePacking(_Certificate):
    """Vertex-disjoint cycles of arbitrary lengths, the partial result of a heavy-vertex stage."""

    kind: Literal["packing"] = "packing"
    cycles: tuple[Cycle, ...] = ()

    @property
    def lengths(self):
        return [c.length for c in self.cycles]

    def vertex_set(self):
        return frozenset(v for c in self.cycles for v in c.vertices)

    def extend(self, cycles):
        return CyclePacking(cycles=self.cycles + tuple(cycles))

    def to_family(self):
        return CycleFamily.from_cycles(self.cycles, disjoint=True)

    def lift(self, remap):
        return CyclePacking(cycles=tuple(c.lift(remap) for c in self.cycles))


class NeighborhoodSplit(_Certificate):
    """(A, B) split of an ambient set around a pivot; A lies in the pivot's neighbourhood."""

    pivot: Union[int, tuple[int, int]]
    set_a: frozenset[int]
    set_b: frozenset[int]
    alpha: Rational = Fraction(0)

    @classmethod
    def around(cls, g, pivot, ambient):
        ambient = frozenset(ambient)
        pivots = pivot if isinstance(pivot, tuple) else (pivot,)
        set_a = ambient
        for p in pivots:
            set_a = set_a & g.neighbor_set(p)
        alpha = Fraction(len(ambient) - len(set_a), len(ambient)) if ambient else Fraction(0)
        return cls(pivot=pivot, set_a=set_a, set_b=ambient - set_a, alpha=alpha)


Certificate = Union[Cycle, PathCert, KssCert, ThetaGraph, CycleFamily]
