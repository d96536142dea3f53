"""Soundness gate: checks any certificate against its host graph."""

from typing import NamedTuple

from .certificates import Cycle, CycleFamily, CyclePacking, KssCert, PathCert, ThetaGraph


class Verdict(NamedTuple):
    ok: bool
    reason: str = ""
    invariant: str = ""

    def __bool__(self):
        return self.ok


VALID = Verdict(True)


def _fail(invariant, reason):
    return Verdict(False, reason, invariant)


def _check_ids(g, vertices):
    n = g.vertex_count
    for v in vertices:
        if not 0 <= v < n:
            return _fail("vertex-range", f"vertex {v} not in graph of order {n}")
    if len(set(vertices)) != len(vertices):
        return _fail("distinct", "repeated vertex")
    return VALID


def _check_cycle(g, cycle):
    vs = cycle.vertices
    if len(vs) < 3:
        return _fail("min-length", f"cycle of length {len(vs)} < 3")
    verdict = _check_ids(g, vs)
    if not verdict:
        return verdict
    for i in range(len(vs)):
        u, v = vs[i], vs[(i + 1) % len(vs)]
        if not g.has_edge(u, v):
            invariant = "closing-edge" if i == len(vs) - 1 else "edge"
            return _fail(invariant, f"non-edge ({u}, {v}) at position {i}")
    return VALID


def _check_path(g, path):
    vs = path.vertices
    if not vs:
        return _fail("min-length", "empty path")
    verdict = _check_ids(g, vs)
    if not verdict:
        return verdict
    for i in range(len(vs) - 1):
        if not g.has_edge(vs[i], vs[i + 1]):
            return _fail("edge", f"non-edge ({vs[i]}, {vs[i + 1]}) at position {i}")
    return VALID


def _check_kss(g, cert):
    a, b = cert.side_a, cert.side_b
    if len(a) != cert.s or len(b) != cert.s:
        return _fail("side-size", f"sides of sizes {len(a)}, {len(b)} for s={cert.s}")
    verdict = _check_ids(g, a + b)
    if not verdict:
        return _fail("sides-disjoint", verdict.reason) if verdict.invariant == "distinct" else verdict
    for x in a:
        for y in b:
            if not g.has_edge(x, y):
                return _fail("biclique-edge", f"non-edge ({x}, {y})")
    return VALID


def _check_theta(g, theta):
    verdict = _check_cycle(g, theta.cycle)
    if not verdict:
        return verdict
    x, y = theta.chord
    if x not in theta.cycle.vertices or y not in theta.cycle.vertices:
        return _fail("chord-on-cycle", f"chord ({x}, {y}) leaves the cycle")
    if not g.has_edge(x, y):
        return _fail("chord-edge", f"chord ({x}, {y}) is not an edge")
    shortest = min(len(arc) - 1 for arc in theta.arcs())
    if shortest < 2:
        return _fail("chord-arcs", f"chord ({x}, {y}) cuts off an arc of length {shortest}")
    return VALID


def _check_disjoint(cycles):
    seen = set()
    for index, cycle in enumerate(cycles):
        overlap = seen.intersection(cycle.vertices)
        if overlap:
            return _fail("disjointness", f"cycle {index} reuses vertex {min(overlap)}")
        seen.update(cycle.vertices)
    return VALID


def _check_family(g, family):
    if not family.cycles:
        return _fail("family-size", "empty family")
    if family.r < 2:
        return _fail("length-arithmetic", f"r={family.r} < 2")
    for index, cycle in enumerate(family.cycles):
        verdict = _check_cycle(g, cycle)
        if not verdict:
            return Verdict(False, f"cycle {index}: {verdict.reason}", verdict.invariant)
        expected = 2 * family.r + 2 * index
        if cycle.length != expected:
            return _fail(
                "length-arithmetic",
                f"cycle {index} has length {cycle.length}, expected {expected}",
            )
    if family.disjoint:
        return _check_disjoint(family.cycles)
    return VALID


def _check_packing(g, packing):
    for index, cycle in enumerate(packing.cycles):
        verdict = _check_cycle(g, cycle)
        if not verdict:
            return Verdict(False, f"cycle {index}: {verdict.reason}", verdict.invariant)
    return _check_disjoint(packing.cycles)


_CHECKS = (
    (Cycle, _check_cycle),
    (PathCert, _check_path),
    (KssCert, _check_kss),
    (ThetaGraph, _check_theta),
    (CycleFamily, _check_family),
    (CyclePacking, _check_packing),
)


def verify_certificate(g, cert):
    """Return Verdict(True) iff every invariant of cert holds in g, else the first violation."""
    for kind, check in _CHECKS:
        if isinstance(cert, kind):
            return check(g, cert)
    return _fail("kind", f"unsupported certificate type {type(cert).__name__}")
