"""Exact rational scalars, and the invertible step of the difference calculus.

Scalars are arbitrary-precision rationals (``fractions.Fraction``): always in
lowest terms with a positive denominator, so equal values have equal
representations and nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce an int, string or Fraction to an exact Scalar.

    Floats are refused: they have already rounded, and letting one in would
    silently poison every exact result downstream.
    """
    if isinstance(value, float):
        raise TypeError(
            f"refusing inexact float {value!r}; pass a Fraction, an int or a 'p/q' string"
        )
    return Fraction(value)


def parse_scalar(text: str) -> Fraction:
    """Parse 'p/q' or plain 'p', with an optional leading sign."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_scalar(value: Fraction) -> str:
    """Render as 'p/q', or as 'p' when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class Step:
    """Grid spacing of the difference calculus.  Must be invertible: h != 0."""

    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "h", as_scalar(self.h))
        if self.h == 0:
            raise ValueError("step h must be nonzero")
