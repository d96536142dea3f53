import logging

from .deletion import iterative_deletion
from .k2 import k2_pipeline
from .params import Mode
from .partition import partition_vertices
from .report import StageLog
from .stages import (
    anchored_stage,
    bipartite_greedy_stage,
    common_neighbor_stage,
    kss_stage,
    type_chain_stage,
)

logger = logging.getLogger(__name__)

STAGES = {
    Mode.EXACT: (
        ("kss", kss_stage),
        ("common-neighbor", common_neighbor_stage),
        ("anchored-long", anchored_stage),
        ("bipartite-greedy", bipartite_greedy_stage),
    ),
    Mode.ASYMPTOTIC: (
        ("kss", kss_stage),
        ("type-chain", type_chain_stage),
        ("bipartite-greedy", bipartite_greedy_stage),
    ),
}


def run_pipeline(g, params):
    """
    k vertex-disjoint cycles of lengths 2r, ..., 2r+2k-2, or a failure report.

    Stages run in a fixed order and the first verified family wins: the
    deletion trace (a disjoint record or a repeated r), then, on the
    partition it leaves, a K_{s,s} carve followed by the heavy-vertex
    constructions of the selected mode, each completed greedily in G(V1, V2).
    Nothing here raises for "not found".
    """
    if params.mode == Mode.K2:
        return k2_pipeline(g, params)
    log = StageLog(g, params)
    trace, family = iterative_deletion(g, params)
    detail = f"{len(trace.records)} records, r values {trace.r_values()}, t={trace.depth_budget}"
    if log.accept("deletion", family, detail):
        return log.report(family)
    if family is None:
        log.record("deletion", False, detail)

    part = partition_vertices(g, trace, params)
    regimes = part.diagnostics.get("regimes", {})
    log.record(
        "partition",
        True,
        f"|V1|={len(part.v1)} |V2|={len(part.v2)} |U|={len(part.u_set)} |M|={part.m} "
        f"regimes={sorted(name for name, hit in regimes.items() if hit is True)}",
    )
    for name, stage in STAGES[params.mode]:
        family = log.run(name, stage, g, part, params)
        if family is not None:
            return log.report(family)
    logger.info("pipeline failed after %d stages", len(log.stages))
    return log.report()
