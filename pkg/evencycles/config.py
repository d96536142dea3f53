import os
from fractions import Fraction

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from .core.numbers import Rational

load_dotenv()


class Settings(BaseModel):
    """Process-wide defaults, read from the environment (and an optional .env file)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eps: Rational = Fraction(1)
    mode: str = "exact"
    budget: int = Field(default=10**8, gt=0)
    jobs: int = Field(default=1, ge=1)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls):
        return cls(
            eps=os.getenv("EVENCYCLES_EPS", "1"),
            mode=os.getenv("EVENCYCLES_MODE", "exact"),
            budget=int(os.getenv("EVENCYCLES_BUDGET", str(10**8))),
            jobs=int(os.getenv("EVENCYCLES_JOBS", "1")),
            log_level=os.getenv("EVENCYCLES_LOG_LEVEL", "WARNING").upper(),
        )


settings = Settings.from_env()
