import math
from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import settings
from ..core.numbers import Rational, log_base


class Mode(str, Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"
    K2 = "k2"


class Params(BaseModel):
    """Knobs of one pipeline run; thresholds default to the values the constructions were proven with."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(ge=2)
    eps: Rational = Field(default_factory=lambda: settings.eps)
    mode: Mode = Mode.EXACT
    heavy_threshold: Optional[Rational] = None
    degree_cap_scale: Rational = Fraction(1)
    depth_budget: Optional[int] = Field(default=None, ge=2)
    type_density_divisor: int = Field(default=10, ge=1)
    per_r_budget: int = Field(default=200_000, gt=0)
    budget: int = Field(default_factory=lambda: settings.budget, gt=0)
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)

    @model_validator(mode="after")
    def _check(self):
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.mode == Mode.K2 and self.k != 2:
            raise ValueError("mode k2 requires k = 2")
        if self.degree_cap_scale <= 0:
            raise ValueError("degree_cap_scale must be positive")
        heavy = self.heavy
        if not 0 < heavy < 1:
            raise ValueError(f"heavy threshold {heavy} must lie in (0, 1)")
        return self

    @property
    def s(self):
        """2 + 3 + ... + (k+1): vertices per side consumed by cycles of lengths 4..2k+2."""
        return (self.k * self.k + 3 * self.k) // 2

    @property
    def heavy(self):
        if self.heavy_threshold is not None:
            return self.heavy_threshold
        if self.mode == Mode.ASYMPTOTIC:
            return Fraction(1 - 1 / (self.k * math.sqrt(self.k))).limit_denominator(10**6)
        return 1 - Fraction(self.eps) / self.k

    def depth_budget_for(self, n):
        """t = ceil(log_{1+1/(4k)} n) + 1, unless overridden."""
        if self.depth_budget is not None:
            return self.depth_budget
        return max(2, int(math.ceil(log_base(n, 1 + Fraction(1, 4 * self.k)) - 1e-9)) + 1)

    def degree_cap(self, n):
        """The n / log2 n degree cap separating U from V1, floored at 1."""
        if n < 2:
            return Fraction(1)
        return max(Fraction(1), self.degree_cap_scale * Fraction(n) / Fraction(math.log2(n)).limit_denominator(10**6))

    def lengths(self, r):
        return [2 * r + 2 * j for j in range(self.k)]

    def echo(self):
        data = self.model_dump(mode="json")
        data["s"] = self.s
        data["heavy"] = str(self.heavy)
        return data
