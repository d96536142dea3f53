"""Instance generators: extremal bicliques, random graphs, thetas and layered overflows."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ..core.certificates import Cycle, ThetaGraph
from ..core.graph import Graph, count_edges_between
from ..core.numbers import parse_rational
from ..errors import ContractViolation, InvalidInput, UnsatisfiableDensity

logger = logging.getLogger(__name__)

RESAMPLE_TRIES = 16


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    certificate: Optional[object] = None
    metadata: dict = field(default_factory=dict)


def gen_complete_bipartite(a, b):
    """K_{a,b} on sides 0..a-1 and a..a+b-1."""
    if a < 0 or b < 0:
        raise InvalidInput("side sizes must be non-negative")
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    g = Graph.from_edges(a + b, edges)
    expected = Fraction(2 * a * b, a + b) if a + b else Fraction(0)
    metadata = {
        "family": "complete_bipartite",
        "a": a,
        "b": b,
        "expected_average_degree": expected,
        "realized_average_degree": g.average_degree(),
    }
    return GeneratedGraph(g, None, metadata)


def gen_random_avg_degree(n, d, seed):
    """
    G(n, p) with p = d/(n-1), resampled (up to 16 times, the seed advancing
    with the generator) until the realized average degree reaches d.
    """
    d = parse_rational(d)
    if n < 0 or d < 0 or (n > 0 and d > n - 1) or (n <= 1 and d > 0):
        raise InvalidInput(f"average degree {d} impossible on {n} vertices")
    p = float(d / (n - 1)) if n > 1 else 0.0
    rng = np.random.default_rng(seed)
    for attempt in range(1, RESAMPLE_TRIES + 1):
        edges = []
        for u in range(n - 1):
            hits = np.flatnonzero(rng.random(n - u - 1) < p)
            edges.extend((u, u + 1 + int(v)) for v in hits)
        g = Graph.from_edges(n, edges)
        realized = g.average_degree()
        if realized >= d:
            metadata = {
                "family": "random",
                "n": n,
                "seed": seed,
                "p": p,
                "attempts": attempt,
                "expected_average_degree": d,
                "realized_average_degree": realized,
            }
            return GeneratedGraph(g, None, metadata)
        logger.debug("attempt %d: average degree %s below %s", attempt, realized, d)
    raise UnsatisfiableDensity(f"no sample of G({n}, {p:.4f}) reached average degree {d} in {RESAMPLE_TRIES} tries")


def gen_theta(arc_lengths):
    """
    Branch vertices 0 and 1 joined by three internally disjoint paths of the
    given lengths. With an arc of length 1 the certificate is the cycle on
    the two other arcs with chord (0, 1); otherwise there is none.
    """
    arcs = tuple(int(x) for x in arc_lengths)
    if len(arcs) != 3 or min(arcs) < 1 or arcs.count(1) > 1:
        raise InvalidInput(f"invalid arc lengths {arc_lengths}")
    edges = []
    paths = []
    next_id = 2
    for length in arcs:
        inner = list(range(next_id, next_id + length - 1))
        next_id += length - 1
        path = [0, *inner, 1]
        paths.append(path)
        edges.extend(zip(path, path[1:]))
    g = Graph.from_edges(next_id, edges)
    certificate = None
    if 1 in arcs:
        first, second = [p for length, p in zip(arcs, paths) if length != 1]
        cycle = Cycle(vertices=tuple(first + list(reversed(second[1:-1]))))
        certificate = ThetaGraph(cycle=cycle, chord=(0, 1))
    metadata = {"family": "theta", "arcs": list(arcs), "realized_average_degree": g.average_degree()}
    return GeneratedGraph(g, certificate, metadata)


def gen_layered_overflow(k, depth):
    """
    2k+1 disjoint paths of length ``depth`` from the root 0, their ends joined
    to 2k+1 further vertices as K_{2k+1,2k+1}. Seen from the root, levels
    ``depth`` and ``depth+1`` carry (2k+1)^2 > k(|L_depth| + |L_depth+1|)
    edges and every branch separates at the root.
    """
    if k < 2 or depth < 1:
        raise InvalidInput("gen_layered_overflow needs k >= 2 and depth >= 1")
    width = 2 * k + 1
    edges = []
    next_id = 1
    ends = []
    for _ in range(width):
        previous = 0
        for _ in range(depth):
            edges.append((previous, next_id))
            previous = next_id
            next_id += 1
        ends.append(previous)
    bottom = list(range(next_id, next_id + width))
    next_id += width
    edges.extend((u, v) for u in ends for v in bottom)
    g = Graph.from_edges(next_id, edges)
    between = count_edges_between(g, ends, bottom)
    if between <= k * (len(ends) + len(bottom)):
        raise ContractViolation(f"generated levels carry {between} edges, no overflow")
    metadata = {
        "family": "layered_overflow",
        "k": k,
        "depth": depth,
        "root": 0,
        "overflow_level": depth,
        "anchor_depth": depth,
        "expected_lengths": [2 * depth + 2 * j for j in range(1, k + 1)],
        "realized_average_degree": g.average_degree(),
    }
    return GeneratedGraph(g, None, metadata)
