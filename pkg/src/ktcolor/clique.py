"""Maximum cliques of interval sets via endpoint sweeps.

For intervals a clique is a set sharing a common point, so the clique number
is the largest number of half-open intervals covering one point, and it is
attained at some left endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional

from .model import Interval

_CLOSE, _OPEN = 0, 1  # closings sort before openings: touching intervals share no point


@dataclass(frozen=True)
class CliqueWitness:
    size: int
    point: Optional[Fraction]
    member_ids: FrozenSet[int]


def _sweep(intervals, lo=None, hi=None):
    """Return (best count, point) over the events, optionally clipped to [lo, hi)."""
    events = []
    for v in intervals:
        left = v.left if lo is None else max(v.left, lo)
        right = v.right if hi is None else min(v.right, hi)
        if left >= right:
            continue
        events.append((left, _OPEN))
        events.append((right, _CLOSE))
    events.sort()
    best, point, active = 0, None, 0
    for x, kind in events:
        if kind == _OPEN:
            active += 1
            if active > best:
                best, point = active, x
        else:
            active -= 1
    return best, point


def _witness(intervals, point) -> CliqueWitness:
    if point is None:
        return CliqueWitness(0, None, frozenset())
    members = frozenset(v.id for v in intervals if v.contains(point))
    return CliqueWitness(len(members), point, members)


def omega(intervals: Iterable[Interval]) -> CliqueWitness:
    """Maximum clique of the intersection graph, with a point every member covers."""
    intervals = list(intervals)
    _, point = _sweep(intervals)
    return _witness(intervals, point)


def omega_containing(intervals: Iterable[Interval], v: Interval) -> CliqueWitness:
    """Maximum clique containing ``v`` among ``intervals`` plus ``v`` itself.

    Only points inside ``v`` matter, so every interval is clipped to ``v``'s span
    before the sweep. ``v`` is counted once even if it is already in the set.
    """
    pool = [u for u in intervals if u != v]
    pool.append(v)
    _, point = _sweep(pool, v.left, v.right)
    return _witness(pool, point)
