"""Exact rationals for thresholds, epsilons and average degrees."""

import math
from fractions import Fraction
from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer


def parse_rational(value):
    """Accept ints, Fractions, decimal strings ("0.5"), ratio strings ("3/2") and floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite number: {value}")
        return Fraction(value).limit_denominator(10**6)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational: {value!r}") from e
    raise ValueError(f"not a rational: {value!r}")


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(lambda q: str(q), return_type=str),
]


def log_base(value, base):
    """log_base(value) as a float; 0 for value <= 1."""
    if value <= 1:
        return 0.0
    return math.log(value) / math.log(float(base))
