import pytest

from evencycles.core.certificates import (
    Cycle,
    CycleFamily,
    CyclePacking,
    KssCert,
    NeighborhoodSplit,
    PathCert,
    ThetaGraph,
)
from evencycles.core.verify import verify_certificate
from evencycles.oracle.generators import gen_complete_bipartite

from .graphs import complete_graph, cycle_graph, disjoint_union


def test_valid_cycle():
    assert verify_certificate(cycle_graph(5), Cycle(vertices=(0, 1, 2, 3, 4)))


@pytest.mark.parametrize(
    "vertices, invariant",
    [
        ((0, 1), "min-length"),
        ((0, 1, 7), "vertex-range"),
        ((0, 1, 1, 2), "distinct"),
        ((0, 2, 1), "edge"),
        ((0, 1, 2, 3), "closing-edge"),
    ],
)
def test_broken_cycle_names_the_invariant(vertices, invariant):
    verdict = verify_certificate(cycle_graph(5), Cycle(vertices=vertices))
    assert not verdict
    assert verdict.invariant == invariant


def test_path_certificate():
    g = cycle_graph(6)
    assert verify_certificate(g, PathCert(vertices=(0, 1, 2, 3)))
    assert verify_certificate(g, PathCert(vertices=(0, 2))).invariant == "edge"
    assert PathCert(vertices=(4, 5, 0)).length == 2
    assert PathCert(vertices=(4, 5, 0)).reversed().vertices == (0, 5, 4)


def test_kss_certificate(k55):
    good = KssCert(side_a=(0, 1), side_b=(5, 6), s=2)
    assert verify_certificate(k55, good)
    assert verify_certificate(k55, KssCert(side_a=(0, 1), side_b=(2, 6), s=2)).invariant == "biclique-edge"
    assert verify_certificate(k55, KssCert(side_a=(0, 1), side_b=(5,), s=2)).invariant == "side-size"
    assert verify_certificate(k55, KssCert(side_a=(0, 5), side_b=(5, 6), s=2)).invariant == "sides-disjoint"


def test_theta_certificate():
    g = complete_graph(5)
    theta = ThetaGraph(cycle=Cycle(vertices=(0, 1, 2, 3)), chord=(0, 2))
    assert verify_certificate(g, theta)
    adjacent = ThetaGraph(cycle=Cycle(vertices=(0, 1, 2, 3)), chord=(0, 1))
    assert verify_certificate(g, adjacent).invariant == "chord-arcs"
    off_cycle = ThetaGraph(cycle=Cycle(vertices=(0, 1, 2, 3)), chord=(0, 4))
    assert verify_certificate(g, off_cycle).invariant == "chord-on-cycle"
    missing = ThetaGraph(cycle=Cycle(vertices=(0, 1, 2, 3)), chord=(0, 2))
    assert verify_certificate(cycle_graph(4), missing).invariant == "chord-edge"


def test_theta_arcs_run_between_chord_ends():
    theta = ThetaGraph(cycle=Cycle(vertices=(0, 1, 2, 3, 4, 5)), chord=(1, 4))
    forward, backward = theta.arcs()
    assert forward == [1, 2, 3, 4]
    assert backward == [1, 0, 5, 4]


def test_family_certificate():
    g = disjoint_union(cycle_graph(4), cycle_graph(6))
    family = CycleFamily.from_cycles(
        [Cycle(vertices=(4, 5, 6, 7, 8, 9)), Cycle(vertices=(0, 1, 2, 3))], disjoint=True
    )
    assert family.r == 2
    assert family.lengths == [4, 6]
    assert verify_certificate(g, family)


def test_family_length_arithmetic_violation():
    g = disjoint_union(cycle_graph(4), cycle_graph(8))
    family = CycleFamily.from_cycles([Cycle(vertices=(0, 1, 2, 3)), Cycle(vertices=tuple(range(4, 12)))])
    verdict = verify_certificate(g, family)
    assert verdict.invariant == "length-arithmetic"


def test_family_disjointness_violation():
    g = complete_graph(6)
    family = CycleFamily.from_cycles(
        [Cycle(vertices=(0, 1, 2, 3)), Cycle(vertices=(0, 1, 2, 3, 4, 5))], disjoint=True
    )
    assert verify_certificate(g, family).invariant == "disjointness"
    overlapping = CycleFamily.from_cycles(family.cycles, disjoint=False)
    assert verify_certificate(g, overlapping)


def test_family_needs_r_at_least_two():
    g = complete_graph(6)
    family = CycleFamily.from_cycles([Cycle(vertices=(0, 1, 2)), Cycle(vertices=(3, 4, 5))])
    assert verify_certificate(g, family).invariant == "length-arithmetic"


def test_packing_is_checked_for_disjointness_only():
    g = complete_graph(7)
    packing = CyclePacking(cycles=(Cycle(vertices=(0, 1, 2)), Cycle(vertices=(3, 4, 5, 6))))
    assert verify_certificate(g, packing)
    assert verify_certificate(g, packing.extend([Cycle(vertices=(0, 5, 6))])).invariant == "disjointness"


def test_lift_translates_every_vertex():
    from evencycles.core.graph import Remap

    remap = Remap([10, 11, 12, 13])
    family = CycleFamily.from_cycles([Cycle(vertices=(0, 1, 2, 3))])
    assert family.lift(remap).cycles[0].vertices == (10, 11, 12, 13)


def test_neighborhood_split_around_pair():
    g = gen_complete_bipartite(2, 4).graph
    split = NeighborhoodSplit.around(g, (0, 1), [2, 3, 4, 5])
    assert split.set_a == frozenset({2, 3, 4, 5})
    assert split.set_b == frozenset()
    assert split.alpha == 0
    lone = NeighborhoodSplit.around(g, 2, [0, 1, 3])
    assert lone.set_a == frozenset({0, 1})
    assert lone.set_b == frozenset({3})
