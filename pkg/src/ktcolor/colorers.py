"""Online colorers for interval streams.

``KiersteadTrotter`` gives each arrival ``v`` a level, the least ``j`` such that
the largest clique containing ``v`` among already-placed intervals of level at
most ``j`` (plus ``v`` itself) has at most ``j`` members, then First-Fit colors
``v`` against the intervals of that level only, from a palette reserved for the
level. ``FirstFit`` is the plain greedy baseline and ``offline_optimal`` the
left-to-right sweep that uses exactly the clique number of colors.

Colors are ``Assignment(level, color)`` pairs, so palettes of different levels
are disjoint by construction.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .arith import common_scale, render
from .model import Assignment, ColoringResult, Instance, Interval

_INT64_SAFE = 2**62


def _first_free(used) -> int:
    color = 1
    while color in used:
        color += 1
    return color


class OnlineColorer:
    """Shared state: placed intervals kept sorted by left endpoint.

    Coordinates are only ever compared (and subtracted for the longest length
    seen), so they may be Fractions or integers from an order-preserving
    rescaling. ``dtype`` is the numpy dtype used for neighbor arrays.
    """

    name = "online"

    def __init__(self, dtype=object):
        self.dtype = dtype
        self._lefts: list = []
        self._rights: list = []
        self._levels: List[int] = []
        self._colors: List[int] = []
        self._max_length = None
        self.assignments: List[Assignment] = []

    def __len__(self):
        return len(self.assignments)

    def _neighbors(self, left, right):
        """Arrays (lefts, rights, levels, colors) of placed intervals meeting [left, right)."""
        if self._max_length is None:
            empty = np.empty(0, dtype=self.dtype)
            return empty, empty, np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        lo = bisect_right(self._lefts, left - self._max_length)
        hi = bisect_left(self._lefts, right)
        lefts = np.array(self._lefts[lo:hi], dtype=self.dtype)
        rights = np.array(self._rights[lo:hi], dtype=self.dtype)
        levels = np.array(self._levels[lo:hi], dtype=np.int64)
        colors = np.array(self._colors[lo:hi], dtype=np.int64)
        keep = rights > left
        return lefts[keep], rights[keep], levels[keep], colors[keep]

    def _insert(self, left, right, level, color):
        at = bisect_right(self._lefts, left)
        self._lefts.insert(at, left)
        self._rights.insert(at, right)
        self._levels.insert(at, level)
        self._colors.insert(at, color)
        length = right - left
        if self._max_length is None or length > self._max_length:
            self._max_length = length
        assignment = Assignment(level, color)
        self.assignments.append(assignment)
        return assignment

    def _check_next(self, v: Interval):
        if v.id != len(self.assignments):
            raise ValueError(f"expected arrival {len(self.assignments)}, got id {v.id}")

    def add(self, v: Interval) -> Assignment:
        """Color the next arrival irrevocably."""
        self._check_next(v)
        return self.place(v.left, v.right)

    def place(self, left, right) -> Assignment:
        raise NotImplementedError

    def result(self) -> ColoringResult:
        return ColoringResult(self.name, tuple(self.assignments))


class FirstFit(OnlineColorer):
    name = "first_fit"

    def place(self, left, right) -> Assignment:
        _, _, _, colors = self._neighbors(left, right)
        return self._insert(left, right, 1, _first_free(set(colors.tolist())))


def level_search(lefts, rights, levels, left, right) -> Tuple[int, object, int]:
    """Least ``j`` whose level-``<= j`` clique through ``[left, right)`` has ``<= j`` members.

    ``lefts``/``rights``/``levels`` describe the placed intervals meeting
    ``[left, right)``. Returns ``(level, witness point, witness size)`` where the
    witness is a point of ``[left, right)`` realizing that clique.
    """
    if len(levels) == 0:
        return 1, left, 1
    points = np.unique(np.concatenate(([left], np.maximum(lefts, left)))).astype(lefts.dtype)
    covers = (lefts[None, :] <= points[:, None]) & (rights[None, :] > points[:, None])
    top = int(levels.max())
    by_level = levels[:, None] == np.arange(1, top + 1)[None, :]
    # per point: number of neighbors of level <= j covering it, j = 1..top
    cumulative = np.cumsum(covers.astype(np.int64) @ by_level.astype(np.int64), axis=1)
    clique = cumulative.max(axis=0) + 1
    fits = clique <= np.arange(1, top + 1)
    if fits.any():
        level = int(np.argmax(fits)) + 1
    else:
        # every neighbor already counts; the clique size stops growing past `top`
        level = max(top + 1, int(clique[-1]))
    column = min(level, top) - 1
    at = int(np.argmax(cumulative[:, column]))
    return level, points[at], int(cumulative[at, column]) + 1


class KiersteadTrotter(OnlineColorer):
    name = "kt"

    def __init__(self, dtype=object):
        super().__init__(dtype)
        self.witnesses: List[Tuple[object, int]] = []

    def level_of(self, v: Interval) -> int:
        """Level the next arrival would get; the state is not changed."""
        self._check_next(v)
        lefts, rights, levels, _ = self._neighbors(v.left, v.right)
        return level_search(lefts, rights, levels, v.left, v.right)[0]

    def place(self, left, right) -> Assignment:
        lefts, rights, levels, colors = self._neighbors(left, right)
        level, point, size = level_search(lefts, rights, levels, left, right)
        color = _first_free(set(colors[levels == level].tolist()))
        self.witnesses.append((point, size))
        return self._insert(left, right, level, color)


def offline_optimal(instance: Instance) -> ColoringResult:
    """Sweep by left endpoint, reusing the smallest color whose holder has already ended."""
    colors = [0] * len(instance)
    free: List[int] = []
    active: List[Tuple[Fraction, int]] = []
    opened = 0
    for v in sorted(instance, key=lambda u: (u.left, u.id)):
        while active and active[0][0] <= v.left:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            color = heapq.heappop(free)
        else:
            opened += 1
            color = opened
        colors[v.id] = color
        heapq.heappush(active, (v.right, color))
    return ColoringResult("offline_optimal", tuple(Assignment(1, c) for c in colors))


ONLINE = {"kt": KiersteadTrotter, "first_fit": FirstFit}
ALIASES = {
    "kt": "kt", "kierstead_trotter": "kt", "kierstead-trotter": "kt",
    "ff": "first_fit", "first_fit": "first_fit", "first-fit": "first_fit",
    "opt": "offline_optimal", "offline_optimal": "offline_optimal",
    "offline-optimal": "offline_optimal",
}


def canonical_name(algorithm: str) -> str:
    try:
        return ALIASES[algorithm.lower()]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; "
                         f"choose from {sorted(set(ALIASES))}") from None


def _scaled(instance: Instance):
    """Integer endpoints in the same order as the originals, and the scale used."""
    scale = common_scale(x for v in instance for x in (v.left, v.right))
    pairs = [((v.left * scale).numerator, (v.right * scale).numerator) for v in instance]
    big = max((max(abs(l), abs(r)) for l, r in pairs), default=0)
    return pairs, scale, (np.int64 if big < _INT64_SAFE else object)


def run(algorithm: str, instance: Instance, trace: Optional[List[dict]] = None) -> ColoringResult:
    """Color ``instance`` with the named algorithm.

    Online algorithms see the arrivals one by one. Endpoints are rescaled by the
    common denominator first so the sweeps compare integers; the map preserves
    order exactly, so the coloring is the one the Fractions would give. If
    ``trace`` is a list, one record per arrival is appended (KT only).
    """
    name = canonical_name(algorithm)
    if name == "offline_optimal":
        return offline_optimal(instance)
    pairs, scale, dtype = _scaled(instance)
    colorer = ONLINE[name](dtype=dtype)
    for left, right in pairs:
        colorer.place(left, right)
    if trace is not None and name == "kt":
        for i, (a, (point, size)) in enumerate(zip(colorer.assignments, colorer.witnesses)):
            trace.append({
                "id": i,
                "level": a.level,
                "color": a.color,
                "clique_witness_point": render(Fraction(int(point), scale)),
                "clique_witness_size": size,
            })
    return colorer.result()
