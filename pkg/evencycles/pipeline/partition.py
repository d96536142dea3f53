import logging
import math
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.graph import count_edges_between, count_edges_within
from .params import Mode

logger = logging.getLogger(__name__)


class Partition(BaseModel):
    """
    V1' is what survives the deletion rounds and V2' what they removed.
    High-degree survivors (U) move to V2; M is the heavy part of V2, ordered
    by number of V1 neighbours, most first.
    """

    model_config = ConfigDict(frozen=True)

    v1_prime: frozenset[int]
    v2_prime: frozenset[int]
    u_set: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    m_set: tuple[int, ...]
    diagnostics: dict = {}

    @property
    def m(self):
        return len(self.m_set)

    @model_validator(mode="after")
    def _check(self):
        if self.v1 != self.v1_prime - self.u_set or self.v2 != self.v2_prime | self.u_set:
            raise ValueError("V1/V2 do not match V1', V2' and U")
        if not set(self.m_set) <= self.v2:
            raise ValueError("M must lie in V2")
        return self


class CycleSchedule(BaseModel):
    """Half lengths c_i = k+2-i and the largest prefix ell whose anchor demand fits in m."""

    model_config = ConfigDict(frozen=True)

    half_lengths: tuple[int, ...]
    ell: int

    @classmethod
    def build(cls, k, m):
        half = tuple(k + 2 - i for i in range(1, k + 1))
        demand = 0
        ell = 0
        for c in half:
            demand += (c + 1) // 2
            if demand > m:
                break
            ell += 1
        return cls(half_lengths=half, ell=ell)

    def demand(self, count=None):
        count = self.ell if count is None else count
        return sum((c + 1) // 2 for c in self.half_lengths[:count])

    def lengths(self):
        return [2 * c for c in self.half_lengths]


def _regimes(n, k, e1, e12, u_count, m, params):
    log_n = math.log2(n) if n >= 2 else 1.0
    regimes = {
        "sparse_v1": e1 <= Fraction(7 * n, 8),
        "moderate_v1": Fraction(7 * n, 8) < e1 <= (2 * k + 1) * n,
        "dense_v1": e1 > (2 * k + 1) * n,
        "u_bound_ok": u_count <= (16 * k + 2) * log_n,
        "m_interval_ok": Fraction(5 * k, 2) < m < Fraction((k + 3) * k, 2),
    }
    if params.mode == Mode.ASYMPTOTIC:
        regimes["asymptotic_sparse_v1"] = e1 < params.eps * n / 4
        regimes["e12"] = str(Fraction(e12, n) if n else 0)
    return regimes


def partition_vertices(g, trace, params):
    n = g.vertex_count
    k = params.k
    v1_prime = frozenset(trace.terminal_vertices)
    v2_prime = frozenset(g.vertices()) - v1_prime
    cap = params.degree_cap(n)
    u_set = frozenset(v for v in v1_prime if g.degree(v) >= cap)
    v1 = v1_prime - u_set
    v2 = v2_prime | u_set

    heavy_bound = params.heavy * n
    into_v1 = {v: sum(1 for u in g.neighbors(v) if u in v1) for v in v2}
    m_set = tuple(sorted((v for v in v2 if into_v1[v] > heavy_bound), key=lambda v: (-into_v1[v], v)))

    e1 = count_edges_within(g, v1)
    e12 = count_edges_between(g, v1, v2)
    e2 = count_edges_within(g, v2)
    diagnostics = {
        "n": n,
        "degree_cap": str(cap),
        "e_v1": e1,
        "e_v1_v2": e12,
        "e_v2": e2,
        "v1": len(v1),
        "v2": len(v2),
        "u": len(u_set),
        "m": len(m_set),
        "regimes": _regimes(n, k, e1, e12, len(u_set), len(m_set), params),
    }
    logger.info("partition: |V1|=%d |V2|=%d |U|=%d |M|=%d e(V1)=%d e(V1,V2)=%d",
                len(v1), len(v2), len(u_set), len(m_set), e1, e12)
    return Partition(
        v1_prime=v1_prime,
        v2_prime=v2_prime,
        u_set=u_set,
        v1=v1,
        v2=v2,
        m_set=m_set,
        diagnostics=diagnostics,
    )
