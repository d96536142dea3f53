import json
import logging
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..core.certificates import Cycle, CycleFamily
from ..core.verify import verify_certificate
from ..errors import BudgetExceeded, EvenCyclesError, GreedyStuck

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Stage(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    detail: str
    ok: bool


class SearchReport(BaseModel):
    """Outcome of one search plus its stage log; serializes to the versioned JSON report."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcome: Literal["success", "failure"]
    family: Optional[CycleFamily] = None
    stages: tuple[Stage, ...] = ()
    params: dict = {}
    oracle: Optional[dict] = None

    @property
    def ok(self):
        return self.outcome == "success"

    def with_oracle(self, oracle):
        return self.model_copy(update={"oracle": oracle})

    def to_dict(self):
        data = {
            "schema": SCHEMA_VERSION,
            "outcome": self.outcome,
            "family": None,
            "r": None,
            "disjoint": None,
            "stages": [stage.model_dump() for stage in self.stages],
            "params": self.params,
        }
        if self.family is not None:
            data["family"] = [list(c.vertices) for c in self.family.cycles]
            data["r"] = self.family.r
            data["disjoint"] = self.family.disjoint
        if self.oracle is not None:
            data["oracle"] = self.oracle
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


class StageLog:
    """
    Ordered stage log of a single run. Every entry is also logged at INFO;
    a stage's family is accepted only after verification against the input.
    """

    def __init__(self, g, params):
        self.g = g
        self.params = params
        self.stages = []

    def record(self, name, ok, detail):
        logger.info("stage %s: %s (%s)", name, "ok" if ok else "failed", detail)
        self.stages.append(Stage(name=name, detail=str(detail), ok=ok))

    def attempt(self, name, fn, *args, **kwargs):
        """Run one stage; an EvenCyclesError is recorded as its failure and None returned."""
        try:
            return fn(*args, **kwargs)
        except EvenCyclesError as e:
            if isinstance(e, (GreedyStuck, BudgetExceeded)):
                logger.warning("stage %s: %s", name, e)
            self.record(name, False, f"{type(e).__name__}: {e}")
            return None

    def accept(self, name, family, detail=""):
        """True when family is k disjoint cycles of consecutive even lengths in g."""
        if family is None:
            return False
        verdict = verify_certificate(self.g, family)
        if not verdict or not family.disjoint or family.k != self.params.k:
            logger.error("stage %s produced an invalid family: %s", name, verdict.reason or "wrong shape")
            self.record(name, False, f"rejected certificate: {verdict.invariant or 'shape'}")
            return False
        self.record(name, True, detail or f"lengths {family.lengths}")
        return True

    def run(self, name, fn, *args):
        """attempt + accept: the verified family of one stage, or None."""
        before = len(self.stages)
        family = self.attempt(name, fn, *args)
        if family is None:
            if len(self.stages) == before:
                self.record(name, False, "no family")
            return None
        return family if self.accept(name, family) else None

    def report(self, family=None):
        return SearchReport(
            outcome="success" if family is not None else "failure",
            family=family,
            stages=tuple(self.stages),
            params=self.params.echo(),
        )


def family_from_report(data):
    """Rebuild the CycleFamily of a serialized report (None for failures)."""
    if data.get("family") is None:
        return None
    cycles = tuple(Cycle(vertices=tuple(c)) for c in data["family"])
    return CycleFamily(cycles=cycles, r=int(data["r"]), disjoint=bool(data.get("disjoint")))
