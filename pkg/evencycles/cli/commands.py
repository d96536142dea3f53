"""One handler per subcommand; each returns (payload, exit code)."""

import json
import logging
import sys
from enum import Enum
from fractions import Fraction
from typing import Literal, Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from ..config import settings
from ..consecutive.engine import find_consecutive_even_cycles
from ..core.certificates import Certificate
from ..core.graph import connected_components, is_bipartite, parse_edge_list, serialize_edge_list
from ..core.numbers import Rational
from ..core.verify import verify_certificate
from ..errors import BelowThreshold, InvalidInput
from ..oracle.generators import gen_complete_bipartite, gen_layered_overflow, gen_random_avg_degree, gen_theta
from ..oracle.search import oracle_find_family
from ..pipeline.deletion import DeletionTrace
from ..pipeline.params import Mode, Params
from ..pipeline.partition import partition_vertices
from ..pipeline.report import SearchReport, Stage, family_from_report
from ..pipeline.runner import run_pipeline

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GENERATOR_ARITY = {"complete-bipartite": 2, "random": 2, "theta": 3, "layered": 2}


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subcommand: Literal["find", "disjoint", "verify", "oracle", "gen", "stats"]
    input: str = "-"
    k: int = Field(default=2, ge=2)
    eps: Rational = Field(default_factory=lambda: settings.eps)
    mode: Mode = Field(default_factory=lambda: Mode(settings.mode))
    seed: int = 0
    budget: int = Field(default_factory=lambda: settings.budget, gt=0)
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    output: Optional[str] = None
    certificate: Optional[str] = None
    generator: Optional[str] = None
    values: tuple[str, ...] = ()

    def params(self):
        return Params(k=self.k, eps=self.eps, mode=self.mode, budget=self.budget, jobs=self.jobs)


def jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def render(payload):
    return json.dumps(jsonable(payload), sort_keys=True, indent=2)


def load_graph(path):
    if path == "-":
        return parse_edge_list(sys.stdin.buffer.read())
    with open(path, "rb") as handle:
        return parse_edge_list(handle.read())


def find(config):
    g = load_graph(config.input)
    params = config.params()
    try:
        family = find_consecutive_even_cycles(g, config.k, config.eps, config.jobs)
    except BelowThreshold as e:
        stage = Stage(name="consecutive", detail=f"{e} {jsonable(e.diagnostics)}", ok=False)
        report = SearchReport(outcome="failure", stages=(stage,), params=params.echo())
        return report.to_dict(), EXIT_NOT_FOUND
    stage = Stage(name="consecutive", detail=f"lengths {family.lengths}", ok=True)
    report = SearchReport(outcome="success", family=family, stages=(stage,), params=params.echo())
    return report.to_dict(), EXIT_OK


def disjoint(config):
    g = load_graph(config.input)
    report = run_pipeline(g, config.params())
    return report.to_dict(), EXIT_OK if report.ok else EXIT_NOT_FOUND


def verify(config):
    if config.certificate is None:
        raise InvalidInput("verify needs --certificate")
    g = load_graph(config.input)
    with open(config.certificate, "rb") as handle:
        data = json.loads(handle.read())
    if "kind" in data:
        cert = TypeAdapter(Certificate).validate_python(data)
    else:
        cert = family_from_report(data)
        if cert is None:
            return {"ok": False, "reason": "report carries no family", "invariant": "outcome"}, EXIT_NOT_FOUND
    verdict = verify_certificate(g, cert)
    payload = {"ok": verdict.ok, "reason": verdict.reason, "invariant": verdict.invariant, "kind": cert.kind}
    return payload, EXIT_OK if verdict else EXIT_NOT_FOUND


def oracle(config):
    g = load_graph(config.input)
    params = config.params()
    result = oracle_find_family(g, config.k, budget=config.budget, jobs=config.jobs)
    stage = Stage(name="oracle", detail=f"r in {list(result.r_values_checked)}, {result.nodes_explored} nodes", ok=result.exists)
    report = SearchReport(
        outcome="success" if result.exists else "failure",
        family=result.witness,
        stages=(stage,),
        params=params.echo(),
    ).with_oracle(result.to_dict())
    return report.to_dict(), EXIT_OK if result.exists else EXIT_NOT_FOUND


def gen(config):
    arity = GENERATOR_ARITY.get(config.generator)
    if arity is None:
        raise InvalidInput(f"unknown generator {config.generator!r}")
    if len(config.values) != arity:
        raise InvalidInput(f"generator {config.generator} takes {arity} values, got {len(config.values)}")
    values = config.values
    if config.generator == "complete-bipartite":
        generated = gen_complete_bipartite(int(values[0]), int(values[1]))
    elif config.generator == "random":
        generated = gen_random_avg_degree(int(values[0]), values[1], config.seed)
    elif config.generator == "theta":
        generated = gen_theta([int(v) for v in values])
    else:
        generated = gen_layered_overflow(int(values[0]), int(values[1]))

    payload = {
        "schema": 1,
        "metadata": generated.metadata,
        "n": generated.graph.vertex_count,
        "m": generated.graph.edge_count,
        "certificate": None if generated.certificate is None else generated.certificate.model_dump(mode="json"),
    }
    text = serialize_edge_list(generated.graph)
    if config.output:
        with open(config.output, "w") as handle:
            handle.write(text)
        payload["edge_list_path"] = config.output
    else:
        payload["edge_list"] = text
    return payload, EXIT_OK


def stats(config):
    g = load_graph(config.input)
    params = config.params()
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges())
    cores = nx.core_number(nxg) if g.vertex_count else {}
    part = partition_vertices(g, DeletionTrace.empty(g), params)
    payload = {
        "schema": 1,
        "n": g.vertex_count,
        "m": g.edge_count,
        "average_degree": g.average_degree(),
        "degree_histogram": np.bincount(g.degrees()).tolist() if g.vertex_count else [],
        "components": len(connected_components(g)),
        "bipartite": is_bipartite(g),
        "max_core_number": max(cores.values(), default=0),
        "partition_preview": {
            "v1": len(part.v1),
            "v2": len(part.v2),
            "u": len(part.u_set),
            "m": part.m,
            "diagnostics": part.diagnostics,
        },
    }
    return payload, EXIT_OK


HANDLERS = {
    "find": find,
    "disjoint": disjoint,
    "verify": verify,
    "oracle": oracle,
    "gen": gen,
    "stats": stats,
}
