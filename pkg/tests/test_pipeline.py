from fractions import Fraction

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from evencycles.core.certificates import Cycle, CycleFamily, KssCert, PathCert
from evencycles.core.graph import Graph
from evencycles.core.verify import verify_certificate
from evencycles.errors import (
    ClassificationFailed,
    ContractViolation,
    GreedyStuck,
    InsufficientS,
    InvalidInput,
)
from evencycles.oracle.generators import gen_complete_bipartite
from evencycles.oracle.search import oracle_find_family
from evencycles.pipeline.anchored import anchored_long_cycles
from evencycles.pipeline.carve import alternating_cycle, carve_from_kss
from evencycles.pipeline.common_neighbor import common_neighbor_cycles, two_path
from evencycles.pipeline.deletion import (
    DeletionTrace,
    TraceRecord,
    assemble_repeated,
    iterative_deletion,
    minimal_family,
)
from evencycles.pipeline.greedy import greedy_disjoint_bipartite_cycles
from evencycles.pipeline.k2 import (
    bipartite_pair_stage,
    find_k33,
    four_edge_path,
    k33_stage,
    pivot_stage,
    pivot_vertex,
    residual_four_cycle,
)
from evencycles.pipeline.params import Mode, Params
from evencycles.pipeline.partition import CycleSchedule, Partition, partition_vertices
from evencycles.pipeline.report import SearchReport, Stage, StageLog, family_from_report
from evencycles.pipeline.runner import run_pipeline
from evencycles.pipeline.stages import anchored_stage, common_neighbor_stage, target_lengths
from evencycles.pipeline.type_chain import TypeChain, assemble_type_chain, chain_anchor_count

from .graphs import complete_graph, cycle_graph, disjoint_union, path_graph, small_graphs, with_edges


def manual_partition(v1, v2, m_set=()):
    v1, v2 = frozenset(v1), frozenset(v2)
    return Partition(v1_prime=v1, v2_prime=v2, u_set=frozenset(), v1=v1, v2=v2, m_set=tuple(m_set))


def anchors_over(anchor_count, v1_edges, v1_size, anchor_reach=None):
    """Anchors 0..anchor_count-1 joined to ``anchor_reach`` (default all) of V1."""
    v1 = list(range(anchor_count, anchor_count + v1_size))
    reach = v1 if anchor_reach is None else anchor_reach
    edges = [(a, v) for a in range(anchor_count) for v in reach]
    edges.extend(v1_edges)
    return Graph.from_edges(anchor_count + v1_size, edges), v1


def assert_disjoint_family(g, family, k):
    assert family is not None
    assert family.k == k
    assert family.disjoint
    assert verify_certificate(g, family)


class TestParams:
    def test_derived_values(self):
        params = Params(k=3, eps=1)
        assert params.s == 9
        assert params.heavy == Fraction(2, 3)
        assert params.lengths(2) == [4, 6, 8]
        assert params.depth_budget_for(1) == 2
        assert Params(k=2).s == 5

    def test_asymptotic_heavy_threshold(self):
        assert Params(k=4, mode=Mode.ASYMPTOTIC).heavy == Fraction(7, 8)

    def test_depth_budget_override(self):
        assert Params(k=2, depth_budget=5).depth_budget_for(10**6) == 5

    @pytest.mark.parametrize(
        "fields",
        [{"k": 1}, {"k": 3, "mode": "k2"}, {"k": 2, "eps": 0}, {"k": 2, "heavy_threshold": 1}],
    )
    def test_rejects(self, fields):
        with pytest.raises(ValidationError):
            Params(**fields)

    def test_echo(self):
        data = Params(k=2, eps="1/2").echo()
        assert data["eps"] == "1/2"
        assert data["s"] == 5
        assert data["heavy"] == "3/4"
        assert data["mode"] == "exact"


class TestDeletion:
    def test_single_biclique_gives_one_disjoint_record(self, k55, params2):
        trace, family = iterative_deletion(k55, params2)
        assert len(trace.records) == 1
        assert trace.r_values() == [2]
        assert_disjoint_family(k55, family, 2)
        assert family.lengths == [4, 6]

    def test_disjoint_cycles(self, params2):
        g = disjoint_union(cycle_graph(4), cycle_graph(6))
        _, family = iterative_deletion(g, params2)
        assert_disjoint_family(g, family, 2)

    def test_forest_leaves_no_records(self, params2):
        g = path_graph(12)
        trace, family = iterative_deletion(g, params2)
        assert family is None
        assert trace.records == ()
        assert trace.terminal_vertices == frozenset(range(12))

    def test_overlapping_record_is_deleted(self, k48, params2):
        trace, family = iterative_deletion(k48, params2)
        assert family is None
        first = trace.records[0]
        assert first.r == 2
        assert not first.family.disjoint
        assert verify_certificate(k48, first.family)
        assert trace.removed().isdisjoint(trace.terminal_vertices)

    def test_minimal_family_stops_when_lengths_do_not_fit(self, params2):
        assert minimal_family(complete_graph(5), params2, 10) is None

    def test_assemble_repeated(self):
        first = CycleFamily.from_cycles([Cycle(vertices=(0, 1, 2, 3)), Cycle(vertices=(0, 1, 2, 3, 4, 5))])
        second = CycleFamily.from_cycles(
            [Cycle(vertices=(10, 11, 12, 13)), Cycle(vertices=(10, 11, 12, 13, 14, 15))]
        )
        records = [
            TraceRecord(2, first, first.vertex_set()),
            TraceRecord(2, second, second.vertex_set()),
        ]
        family = assemble_repeated(records, 2)
        assert family.disjoint
        assert family.cycles[0].vertices == (0, 1, 2, 3)
        assert family.cycles[1].vertices == (10, 11, 12, 13, 14, 15)
        assert verify_certificate(complete_graph(16), family)

    def test_assemble_needs_a_common_r(self):
        first = CycleFamily.from_cycles([Cycle(vertices=(0, 1, 2, 3)), Cycle(vertices=(0, 1, 2, 3, 4, 5))])
        later = CycleFamily.from_cycles(
            [Cycle(vertices=tuple(range(10, 16))), Cycle(vertices=tuple(range(10, 18)))]
        )
        records = [TraceRecord(2, first, first.vertex_set()), TraceRecord(3, later, later.vertex_set())]
        with pytest.raises(ContractViolation):
            assemble_repeated(records, 2)

    def test_empty_trace(self, k55):
        trace = DeletionTrace.empty(k55)
        assert trace.terminal_vertices == frozenset(range(10))
        assert trace.removed() == frozenset()


class TestPartition:
    def test_star_centre_is_heavy(self, params2):
        g = gen_complete_bipartite(1, 20).graph
        part = partition_vertices(g, DeletionTrace.empty(g), params2)
        assert part.u_set == frozenset({0})
        assert part.v1 == frozenset(range(1, 21))
        assert part.m_set == (0,)
        assert part.diagnostics["e_v1"] == 0
        assert part.diagnostics["e_v1_v2"] == 20
        assert part.diagnostics["regimes"]["sparse_v1"] is True

    def test_removed_vertices_land_in_v2(self, k48, params2):
        trace, _ = iterative_deletion(k48, params2)
        part = partition_vertices(k48, trace, params2)
        assert part.v2_prime == trace.removed()
        assert part.v1 | part.v2 == frozenset(range(12))
        assert not part.v1 & part.v2

    def test_set_algebra_is_validated(self):
        with pytest.raises(ValidationError):
            Partition(
                v1_prime=frozenset({0, 1}),
                v2_prime=frozenset({2}),
                u_set=frozenset({1}),
                v1=frozenset({0, 1}),
                v2=frozenset({2}),
                m_set=(),
            )
        with pytest.raises(ValidationError):
            manual_partition({0, 1}, {2}, m_set=(0,))

    @pytest.mark.parametrize(
        "k, m, half, ell, demand",
        [(2, 5, (3, 2), 2, 3), (2, 2, (3, 2), 1, 2), (2, 1, (3, 2), 0, 0), (3, 3, (4, 3, 2), 1, 2), (3, 6, (4, 3, 2), 3, 5)],
    )
    def test_cycle_schedule(self, k, m, half, ell, demand):
        sched = CycleSchedule.build(k, m)
        assert sched.half_lengths == half
        assert sched.ell == ell
        assert sched.demand() == demand
        assert sched.lengths() == [2 * c for c in half]


class TestCarveAndGreedy:
    @pytest.mark.parametrize("s, k", [(5, 2), (9, 3), (14, 4)])
    def test_carve(self, s, k):
        g = gen_complete_bipartite(s, s).graph
        cert = KssCert(side_a=tuple(range(s)), side_b=tuple(range(s, 2 * s)), s=s)
        family = carve_from_kss(cert, k)
        assert family.lengths == [4 + 2 * j for j in range(k)]
        assert_disjoint_family(g, family, k)

    def test_carve_needs_enough_vertices(self):
        cert = KssCert(side_a=(0, 1, 2, 3), side_b=(4, 5, 6, 7), s=4)
        with pytest.raises(InsufficientS):
            carve_from_kss(cert, 2)

    def test_alternating_cycle(self):
        assert alternating_cycle([0, 1], [5, 6]).vertices == (0, 5, 1, 6)
        with pytest.raises(ContractViolation):
            alternating_cycle([0], [5])

    def test_greedy_places_every_length(self):
        g = gen_complete_bipartite(9, 9).graph
        packing = greedy_disjoint_bipartite_cycles(g, [8, 6, 4])
        assert packing.lengths == [8, 6, 4]
        assert verify_certificate(g, packing)

    def test_greedy_stops_at_first_missing_length(self):
        g = gen_complete_bipartite(5, 5).graph
        assert greedy_disjoint_bipartite_cycles(g, [8, 6, 4]).lengths == [8]
        assert greedy_disjoint_bipartite_cycles(gen_complete_bipartite(2, 2).graph, [6]).lengths == []

    def test_greedy_avoids_vertices(self, k55):
        packing = greedy_disjoint_bipartite_cycles(k55, [6, 4], avoid={0, 5})
        assert packing.lengths == [6]
        assert not {0, 5} & packing.vertex_set()

    @pytest.mark.parametrize("lengths", [[4, 6], [5], [2], [6, 6]])
    def test_greedy_rejects_bad_lengths(self, k55, lengths):
        with pytest.raises(InvalidInput):
            greedy_disjoint_bipartite_cycles(k55, lengths)


class TestCommonNeighbor:
    @pytest.fixture
    def dense(self):
        # five anchors over a 12-cycle in V1
        ring = [(5 + i, 5 + (i + 1) % 12) for i in range(12)]
        g, v1 = anchors_over(5, ring, 12)
        return g, manual_partition(v1, range(5), range(5))

    def test_two_path(self):
        g = path_graph(5)
        assert two_path(g, {0, 2, 4}, [1, 3], set()) == [0, 1, 2]
        assert two_path(g, {0, 2, 4}, [1, 3], {0}) == [2, 3, 4]
        assert two_path(g, {0, 2, 4}, [1, 3], {2}) is None

    def test_builds_the_scheduled_cycles(self, dense, params2):
        g, part = dense
        packing = common_neighbor_cycles(g, part, CycleSchedule.build(2, part.m), params2)
        assert packing.lengths == [6, 4]
        assert verify_certificate(g, packing)
        assert packing.cycles[0].vertices[0] == 0

    def test_stage_returns_family(self, dense, params2):
        g, part = dense
        family = common_neighbor_stage(g, part, params2)
        assert_disjoint_family(g, family, 2)
        assert family.lengths == [4, 6]

    def test_stuck_without_v1_paths(self, params2):
        g, v1 = anchors_over(5, [], 12)
        part = manual_partition(v1, range(5), range(5))
        with pytest.raises(GreedyStuck) as info:
            common_neighbor_cycles(g, part, CycleSchedule.build(2, 5), params2)
        assert info.value.index == 0
        assert info.value.partial.cycles == ()

    def test_stage_completes_a_stuck_packing_greedily(self, params2):
        g, v1 = anchors_over(5, [], 12)
        part = manual_partition(v1, range(5), range(5))
        family = common_neighbor_stage(g, part, params2)
        assert_disjoint_family(g, family, 2)

    def test_too_few_anchors(self, dense, params2):
        g, part = dense
        small = manual_partition(part.v1, part.v2, (0,))
        with pytest.raises(ContractViolation):
            common_neighbor_cycles(g, small, CycleSchedule.build(2, 5), params2)


class TestAnchored:
    @pytest.fixture
    def clique(self):
        v1_edges = [(u, v) for u in range(2, 12) for v in range(u + 1, 12)]
        g, v1 = anchors_over(2, v1_edges, 10)
        return g, manual_partition(v1, {0, 1}, (0, 1))

    def test_one_cycle_per_anchor(self, clique, params2):
        g, part = clique
        packing = anchored_long_cycles(g, part, params2)
        assert packing.lengths == [6, 4]
        assert [c.vertices[0] for c in packing.cycles] == [0, 1]
        assert verify_certificate(g, packing)

    def test_stage_returns_family(self, clique, params2):
        g, part = clique
        assert_disjoint_family(g, anchored_stage(g, part, params2), 2)

    def test_single_anchor(self, clique, params2):
        g, part = clique
        packing = anchored_long_cycles(g, manual_partition(part.v1, part.v2, (1,)), params2)
        assert packing.lengths == [6]

    def test_needs_anchors(self, clique, params2):
        g, part = clique
        with pytest.raises(InvalidInput):
            anchored_long_cycles(g, manual_partition(part.v1, part.v2), params2)

    def test_stuck_anchor(self, params2):
        v1_edges = [(u, v) for u in range(1, 5) for v in range(u + 1, 5)]
        g, v1 = anchors_over(1, v1_edges, 4, anchor_reach=[1])
        with pytest.raises(GreedyStuck) as info:
            anchored_long_cycles(g, manual_partition(v1, {0}, (0,)), params2)
        assert info.value.index == 0


class TestTypeChain:
    def test_anchor_count(self):
        assert [chain_anchor_count(k) for k in (2, 3, 4, 5)] == [4, 4, 5, 6]

    def test_all_type_two(self):
        # anchors 0..3 see the independent set A = 4..13; B = 14..17 is complete to A
        edges = [(a, v) for a in range(4) for v in range(4, 14)]
        edges += [(b, v) for b in range(14, 18) for v in range(4, 14)]
        g = Graph.from_edges(18, edges)
        part = manual_partition(range(4, 18), range(4), range(4))
        chain = assemble_type_chain(g, part, Params(k=3, mode=Mode.ASYMPTOTIC))
        assert chain.pair_types == ("II",)
        assert (chain.r_alpha, chain.s_alpha) == (0, 1)
        cycle = chain.cycle()
        assert cycle.length == 6
        assert verify_certificate(g, cycle)

    def test_all_type_one(self):
        # anchors 0..4 see the clique A = 5..16
        edges = [(a, v) for a in range(5) for v in range(5, 17)]
        edges += [(u, v) for u in range(5, 17) for v in range(u + 1, 17)]
        g = Graph.from_edges(17, edges)
        part = manual_partition(range(5, 17), range(5), range(5))
        chain = assemble_type_chain(g, part, Params(k=4, mode=Mode.ASYMPTOTIC))
        assert chain.pair_types == ("I", "I")
        assert chain.r_alpha == 2
        assert chain.beta == 3
        cycle = chain.cycle()
        assert cycle.length == 8
        assert verify_certificate(g, cycle)

    def test_unsupported_pairs(self):
        edges = [(a, v) for a in range(4) for v in range(4, 14)]
        g = Graph.from_edges(14, edges)
        part = manual_partition(range(4, 14), range(4), range(4))
        with pytest.raises(ClassificationFailed):
            assemble_type_chain(g, part, Params(k=3, mode=Mode.ASYMPTOTIC))

    def test_needs_asymptotic_mode_and_anchors(self):
        g = complete_graph(6)
        part = manual_partition(range(2, 6), range(2), range(2))
        with pytest.raises(ContractViolation):
            assemble_type_chain(g, part, Params(k=3))
        with pytest.raises(ContractViolation):
            assemble_type_chain(g, part, Params(k=3, mode=Mode.ASYMPTOTIC))

    def test_length_arithmetic_is_validated(self):
        with pytest.raises(ValidationError):
            TypeChain(
                k=3,
                anchors=(0, 1),
                pair_types=("I",),
                segments=(PathCert(vertices=(0, 4, 5, 1)),),
                closing=6,
            )


class TestK2Stages:
    @pytest.fixture
    def pivot_graph(self):
        # V1 = 1..7 with the path 1-2-3-4-5; pivot 0 sees 1, 5, 6, 7; 8 and 9 see 6, 7
        edges = [(1, 2), (2, 3), (3, 4), (4, 5), (0, 1), (0, 5), (0, 6), (0, 7), (8, 6), (8, 7), (9, 6), (9, 7)]
        g = Graph.from_edges(10, edges)
        return g, manual_partition(range(1, 8), {0, 8, 9})

    def test_pivot_vertex(self, pivot_graph):
        g, part = pivot_graph
        assert pivot_vertex(g, part) == 0

    def test_four_edge_path(self, pivot_graph):
        g, part = pivot_graph
        assert four_edge_path(g, part.v1, {1, 5, 6, 7}) == [1, 2, 3, 4, 5]
        assert four_edge_path(g, {6, 7}, {6, 7}) is None

    def test_pivot_stage(self, pivot_graph):
        g, part = pivot_graph
        family = pivot_stage(g, part, Params(k=2, mode=Mode.K2))
        assert_disjoint_family(g, family, 2)
        assert family.cycles[1].vertices[0] == 0

    def test_bipartite_pair_stage(self, k55):
        part = manual_partition(range(5), range(5, 10))
        family = bipartite_pair_stage(k55, part, Params(k=2, mode=Mode.K2))
        assert_disjoint_family(k55, family, 2)

    def test_find_k33(self):
        g = gen_complete_bipartite(3, 3).graph
        cert = find_k33(g, manual_partition(range(3), range(3, 6)), Params(k=2, mode=Mode.K2))
        assert cert.s == 3
        assert verify_certificate(g, cert)

    def test_k33_hexagon_with_residual_square(self):
        # K_3,3 on {0,1,2} x {3,4,5} next to a K_2,2 on {6,7} x {8,9}
        edges = [(a, b) for a in range(3) for b in range(3, 6)]
        edges += [(a, b) for a in (6, 7) for b in (8, 9)]
        g = Graph.from_edges(10, edges)
        part = manual_partition({0, 1, 2, 6, 7}, {3, 4, 5, 8, 9})
        family = k33_stage(g, part, Params(k=2, mode=Mode.K2))
        assert_disjoint_family(g, family, 2)
        assert family.lengths == [4, 6]
        assert set(family.cycles[1].vertices) == {0, 1, 2, 3, 4, 5}
        assert set(family.cycles[0].vertices) == {6, 7, 8, 9}

    def test_residual_square_avoids_used_vertices(self):
        g = gen_complete_bipartite(4, 4).graph
        part = manual_partition(range(4), range(4, 8))
        square = residual_four_cycle(g, part, frozenset({0, 4}), Params(k=2, mode=Mode.K2))
        assert square.length == 4
        assert not {0, 4} & set(square.vertices)
        assert verify_certificate(g, square)

    def test_k33_alone_leaves_no_room_for_the_square(self):
        g = gen_complete_bipartite(3, 3).graph
        part = manual_partition(range(3), range(3, 6))
        log = StageLog(g, Params(k=2, mode=Mode.K2))
        assert log.run("k33-c6", k33_stage, g, part, Params(k=2, mode=Mode.K2)) is None
        assert log.stages[-1].ok is False


class TestReport:
    def test_stage_log_rejects_invalid_family(self, k55, params2):
        log = StageLog(k55, params2)
        bad = CycleFamily.from_cycles([Cycle(vertices=(0, 5, 1, 6)), Cycle(vertices=(0, 5, 1, 6, 2, 7))], disjoint=True)
        assert not log.accept("stage", bad)
        assert log.stages[-1].ok is False
        assert "disjointness" in log.stages[-1].detail

    def test_stage_log_records_errors(self, k55, params2):
        log = StageLog(k55, params2)

        def failing():
            raise GreedyStuck("stuck")

        assert log.run("failing", failing) is None
        assert log.stages == [Stage(name="failing", detail="GreedyStuck: stuck", ok=False)]
        assert log.run("empty", lambda: None) is None
        assert log.stages[-1].detail == "no family"

    def test_report_round_trip(self, k55, params2):
        report = run_pipeline(k55, params2)
        data = report.to_dict()
        assert data["schema"] == 1
        assert data["outcome"] == "success"
        assert family_from_report(data) == report.family
        assert family_from_report(SearchReport(outcome="failure").to_dict()) is None


class TestRunner:
    def test_target_lengths(self):
        assert target_lengths(3) == [8, 6, 4]

    @pytest.mark.parametrize("mode", [Mode.EXACT, Mode.ASYMPTOTIC, Mode.K2])
    def test_biclique_succeeds_in_every_mode(self, k55, mode):
        report = run_pipeline(k55, Params(k=2, mode=mode))
        assert report.ok
        assert report.stages[0].name == "deletion"
        assert_disjoint_family(k55, report.family, 2)
        assert report.family.lengths == [4, 6]

    def test_three_cycles(self):
        g = gen_complete_bipartite(9, 9).graph
        report = run_pipeline(g, Params(k=3))
        assert report.ok
        assert report.family.lengths == [4, 6, 8]
        assert_disjoint_family(g, report.family, 3)

    @pytest.mark.parametrize("mode", [Mode.EXACT, Mode.ASYMPTOTIC, Mode.K2])
    def test_extremal_biclique_fails_soundly(self, k48, mode):
        report = run_pipeline(k48, Params(k=2, mode=mode))
        assert not report.ok
        assert report.family is None
        assert report.stages
        assert not oracle_find_family(k48, 2).exists

    @pytest.mark.slow
    @pytest.mark.parametrize("mode", [Mode.EXACT, Mode.ASYMPTOTIC, Mode.K2])
    @pytest.mark.parametrize("n", range(10, 15))
    def test_unbalanced_bicliques_fail_soundly(self, n, mode):
        generated = gen_complete_bipartite(4, n - 4)
        assert generated.metadata["expected_average_degree"] == Fraction(2 * 4 * (n - 4), n)
        report = run_pipeline(generated.graph, Params(k=2, mode=mode))
        assert not report.ok
        assert report.family is None

    def test_report_is_deterministic(self, k48, params2):
        assert run_pipeline(k48, params2).to_json() == run_pipeline(k48, params2).to_json()

    def test_failure_lists_every_stage(self, k48, params2):
        names = [stage.name for stage in run_pipeline(k48, params2).stages]
        assert names == ["deletion", "partition", "kss", "common-neighbor", "anchored-long", "bipartite-greedy"]

    def test_extra_chords_do_not_break_success(self):
        g = with_edges(disjoint_union(cycle_graph(4), cycle_graph(6)), [(0, 2), (4, 7)])
        report = run_pipeline(g, Params(k=2))
        assert_disjoint_family(g, report.family, 2)


@settings(max_examples=30, deadline=None)
@given(small_graphs(min_n=8, max_n=11))
def test_pipeline_agrees_with_oracle_on_success(g):
    report = run_pipeline(g, Params(k=2))
    exists = oracle_find_family(g, 2).exists
    if report.ok:
        assert exists
        assert_disjoint_family(g, report.family, 2)
    if not exists:
        assert not report.ok
