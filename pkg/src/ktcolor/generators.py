"""Instance generators.

``theorem2`` builds the unit-interval stream on which Kierstead-Trotter uses
``3x - 3`` colors while the clique number is ``x``. The random generators are
seeded test fuel: ``random.Random`` (Mersenne Twister) drives integer draws that
are turned into exact rationals with a fixed denominator.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import floor
from typing import List

from .arith import as_rational
from .model import Instance


class ParameterError(ValueError):
    pass


def arrival_permutation(a: int) -> int:
    """Index swap used by the middle phase: 3 and 4 trade places, all else fixed."""
    return {3: 4, 4: 3}.get(a, a)


def theorem2_lefts(x: int) -> List[List[Fraction]]:
    """Left endpoints of the three phases, each in arrival order."""
    if not isinstance(x, int) or isinstance(x, bool) or x < 3:
        raise ParameterError(f"x must be an integer >= 3, got {x!r}")
    step = 1 - Fraction(1, x)
    phase_a = [(i - 1) * step for i in range(1, x + 3)]
    phase_b = []
    for j in range(2, x):
        for a in range(1, x - j + 4):
            i = arrival_permutation(a)
            phase_b.append((i - 1) * step + Fraction(j - 1, x))
    base = (x + 1) * step
    phase_c = [base + 1 + Fraction(1, x), base + 2 + Fraction(2, x),
               base + 1 + Fraction(2, x), base + 2 + Fraction(1, x)]
    return [phase_a, phase_b, phase_c]


def theorem2_size(x: int) -> int:
    return (x + 1) * (x + 2) // 2 + x


def gen_theorem2(x: int) -> Instance:
    """Unit intervals forcing Kierstead-Trotter to 3x - 3 colors with clique number x."""
    return Instance.from_lefts(l for phase in theorem2_lefts(x) for l in phase)


def _grid(value: Fraction, denominator: int) -> int:
    return floor(value * denominator)


def gen_random_unit(n: int, seed: int, span=100, denominator: int = 1000) -> Instance:
    """``n`` unit intervals with left endpoints uniform on the grid ``k/denominator`` in ``[0, span]``."""
    span = as_rational(span)
    if n < 0 or span <= 0 or denominator < 1:
        raise ParameterError("need n >= 0, span > 0, denominator >= 1")
    rng = random.Random(seed)
    top = _grid(span, denominator)
    return Instance.from_lefts(Fraction(rng.randint(0, top), denominator) for _ in range(n))


def gen_random_general(n: int, seed: int, span=100, max_len=3,
                       denominator: int = 1000) -> Instance:
    """Like :func:`gen_random_unit` but each length is drawn from ``(0, max_len]`` on the grid.

    If ``max_len`` is finer than the grid, every length equals ``max_len``.
    """
    span, max_len = as_rational(span), as_rational(max_len)
    if n < 0 or span <= 0 or max_len <= 0 or denominator < 1:
        raise ParameterError("need n >= 0, span > 0, max_len > 0, denominator >= 1")
    rng = random.Random(seed)
    top = _grid(span, denominator)
    longest = _grid(max_len, denominator)
    pairs = []
    for _ in range(n):
        left = Fraction(rng.randint(0, top), denominator)
        length = Fraction(rng.randint(1, longest), denominator) if longest >= 1 else max_len
        pairs.append((left, left + length))
    return Instance.from_endpoints(pairs)
