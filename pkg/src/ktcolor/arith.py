"""Exact rational coordinates.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator and uses Python's unbounded integers, so it is the rational type
used throughout the package. This module adds the small surface the rest of
the code relies on: checked construction, a three-way comparison, and the
``"p/q"`` text format used by the instance files.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_TEXT = re.compile(r"-?\d+(/\d+)?")


class RationalError(ValueError):
    """Raised for a zero denominator or malformed rational text."""


def make(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise RationalError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def compare(a: Fraction, b: Fraction) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return (a > b) - (a < b)


def parse(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus, decimal digits only)."""
    if not isinstance(text, str) or not _TEXT.fullmatch(text):
        raise RationalError(f"malformed rational {text!r}")
    num, _, den = text.partition("/")
    return make(int(num), int(den) if den else 1)


def render(r: Fraction) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse(value)
    raise RationalError(f"not an exact rational: {value!r}")


def common_scale(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for an empty input).

    Multiplying every value by this integer gives integers in the same order,
    which is how the colorers keep the hot path in plain int comparisons.
    """
    scale = 1
    for v in values:
        scale = lcm(scale, v.denominator)
    return scale
