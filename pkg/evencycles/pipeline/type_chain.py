"""
One cycle of length 2k or 2k+2 through few heavy anchors.

Consecutive anchors v_j, v_j+1 are joined inside their common V1
neighbourhood A by a length-3 segment v_j x y v_j+1 (x y an edge of G[A],
"type I") or a length-4 segment v_j x w z v_j+1 (x, z in A, "type II").
Segments are chained until their total length is 2k-2 or 2k, and a
common neighbour w of the first and last anchor closes the cycle.
"""

import logging
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.certificates import Cycle, NeighborhoodSplit, PathCert
from ..core.graph import count_edges_between, count_edges_within
from ..errors import ClassificationFailed, ContractViolation, GreedyStuck
from .common_neighbor import two_path
from .params import Mode

logger = logging.getLogger(__name__)

SEGMENT_LENGTH = {"I": 3, "II": 4}


def chain_anchor_count(k):
    return (2 * k + 2) // 3 + 2


class TypeChain(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    anchors: tuple[int, ...]
    pair_types: tuple[Literal["I", "II"], ...]
    segments: tuple[PathCert, ...]
    closing: int

    @property
    def r_alpha(self):
        return self.pair_types.count("I")

    @property
    def s_alpha(self):
        return self.pair_types.count("II")

    @property
    def alpha(self):
        return len(self.pair_types)

    @property
    def beta(self):
        return len(self.anchors)

    @model_validator(mode="after")
    def _check(self):
        total = 3 * self.r_alpha + 4 * self.s_alpha
        if total not in (2 * self.k - 2, 2 * self.k):
            raise ValueError(f"3r + 4s = {total} is neither 2k-2 nor 2k")
        if self.r_alpha % 2:
            raise ValueError("an even total needs an even number of length-3 segments")
        if self.beta > chain_anchor_count(self.k):
            raise ValueError(f"{self.beta} anchors exceed {chain_anchor_count(self.k)}")
        if len(self.segments) != self.alpha or self.beta != self.alpha + 1:
            raise ValueError("one segment per consecutive anchor pair")
        return self

    def cycle(self):
        walk = [self.anchors[0]]
        for segment in self.segments:
            walk.extend(segment.vertices[1:])
        walk.append(self.closing)
        cycle = Cycle(vertices=tuple(walk))
        if cycle.length not in (2 * self.k, 2 * self.k + 2):
            raise ContractViolation(f"chained cycle has length {cycle.length}")
        return cycle


def classify_pair(g, part, a, b, params):
    """
    Density label of the pair (a, b): "I" when e(A) >= eps n / divisor,
    "II" when e(A, B) >= |B| + eps n / divisor, otherwise None.
    """
    split = NeighborhoodSplit.around(g, (a, b), part.v1)
    n = g.vertex_count
    slack = Fraction(params.eps) * n / params.type_density_divisor
    if count_edges_within(g, split.set_a) >= slack:
        return "I", split
    if count_edges_between(g, split.set_a, split.set_b) >= len(split.set_b) + slack:
        return "II", split
    return None, split


def _segment(g, kind, a, b, split, used):
    if kind == "I":
        for x in sorted(split.set_a - used):
            for y in g.neighbors(x):
                if y in split.set_a and y not in used:
                    return PathCert(vertices=(a, x, y, b))
        return None
    middle = two_path(g, split.set_a, sorted(split.set_b) + sorted(split.set_a), used)
    return PathCert(vertices=(a, *middle, b)) if middle else None


def assemble_type_chain(g, part, params):
    """
    Depth-first chaining over the anchor pairs, trying each pair's density
    label first. Returns the TypeChain of the first chain that closes.

    Raises:
        ContractViolation: fewer than floor((2k+2)/3)+2 anchors, or not asymptotic mode
        ClassificationFailed: some pair had no segment of either type
        GreedyStuck: segments exist but no chain reaches 2k-2 or 2k and closes
    """
    k = params.k
    need = chain_anchor_count(k)
    if params.mode != Mode.ASYMPTOTIC:
        raise ContractViolation("type chains belong to the asymptotic mode")
    if part.m < need:
        raise ContractViolation(f"type chain needs {need} anchors, M has {part.m}")
    anchors = list(part.m_set[:need])
    v1 = part.v1
    labels = {}
    blocked = set()

    def close(j, used):
        common = g.neighbor_set(anchors[0]) & g.neighbor_set(anchors[j]) & v1
        free = sorted(common - used)
        return free[0] if free else None

    def extend(j, total, used, segments, kinds):
        if j >= 1 and total in (2 * k - 2, 2 * k):
            w = close(j, used)
            if w is not None:
                return TypeChain(
                    k=k, anchors=tuple(anchors[: j + 1]), pair_types=tuple(kinds),
                    segments=tuple(segments), closing=w,
                )
        if total >= 2 * k or j + 1 >= len(anchors):
            return None
        a, b = anchors[j], anchors[j + 1]
        if (a, b) not in labels:
            labels[(a, b)] = classify_pair(g, part, a, b, params)
        label, split = labels[(a, b)]
        order = ("II", "I") if label == "II" else ("I", "II")
        found_any = False
        for kind in order:
            segment = _segment(g, kind, a, b, split, used)
            if segment is None:
                continue
            found_any = True
            inner = set(segment.vertices[1:-1])
            result = extend(j + 1, total + SEGMENT_LENGTH[kind], used | inner, segments + [segment], kinds + [kind])
            if result is not None:
                return result
        if not found_any:
            blocked.add((a, b))
        return None

    chain = extend(0, 0, frozenset(), [], [])
    if chain is None:
        if blocked:
            raise ClassificationFailed(f"anchor pairs {sorted(blocked)} support no segment")
        raise GreedyStuck(f"no chain over {need} anchors closes at length {2 * k} or {2 * k + 2}")
    logger.debug("type chain: pairs %s, r=%d s=%d", chain.pair_types, chain.r_alpha, chain.s_alpha)
    return chain


def type_chain_cycle(g, part, params):
    return assemble_type_chain(g, part, params).cycle()
