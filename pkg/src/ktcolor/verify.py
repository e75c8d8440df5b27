"""Checks on colorings: properness, color-count bounds, level structure.

Bounds are looked up by algorithm and by whether the instance is unit:

* Kierstead-Trotter, unit lengths: at most ``3w - 3`` colors; level 1 uses one
  color, level 2 at most two, every other level at most three.
* Kierstead-Trotter, any lengths: at most ``3w - 2``; levels >= 2 at most three.
* First-Fit, unit lengths: at most ``2w - 1``.
* Offline optimal: exactly ``w``.

``w`` is the clique number and the ``3w - 3``-style limits are floored at 1 so
that a clique number of 1 still allows one color.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .clique import omega
from .colorers import canonical_name
from .model import ColoringResult, Instance, InstanceError, intersects, is_unit


class NotApplicableError(ValueError):
    pass


class OracleLimitError(ValueError):
    pass


def _limit(formula):
    return lambda w: max(1, formula(w))


# (algorithm, unit?) -> [(bound name, limit as a function of the clique number)]
COLOR_BOUNDS = {
    ("kt", True): [("kt_unit_3w-3", _limit(lambda w: 3 * w - 3))],
    ("kt", False): [("kt_general_3w-2", _limit(lambda w: 3 * w - 2))],
    ("first_fit", True): [("first_fit_unit_2w-1", _limit(lambda w: 2 * w - 1))],
    ("first_fit", False): [],
}


def palette_limit(level: int, unit: bool) -> int:
    if level == 1:
        return 1
    if level == 2 and unit:
        return 2
    return 3


@dataclass
class VerificationReport:
    algorithm: str
    n: int
    unit: bool
    omega: int
    distinct_colors: int
    violations: List[Tuple[int, int]] = field(default_factory=list)
    per_level_palette_sizes: Dict[int, int] = field(default_factory=dict)
    bounds: Dict[str, dict] = field(default_factory=dict)
    level2_matching: Optional[bool] = None

    @property
    def proper(self) -> bool:
        return not self.violations

    @property
    def ok(self) -> bool:
        return (self.proper
                and all(b["satisfied"] for b in self.bounds.values())
                and self.level2_matching is not False)

    def failures(self) -> List[str]:
        out = [f"intervals {a} and {b} intersect and share a color" for a, b in self.violations]
        out += [f"bound {name}: {b['value']} vs limit {b['limit']}"
                for name, b in self.bounds.items() if not b["satisfied"]]
        if self.level2_matching is False:
            out.append("some level-2 interval meets two other level-2 intervals")
        return out

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": self.n,
            "unit": self.unit,
            "omega": self.omega,
            "distinct_colors": self.distinct_colors,
            "proper": self.proper,
            "violations": [list(p) for p in self.violations],
            "per_level_palette_sizes": {str(k): v for k, v in self.per_level_palette_sizes.items()},
            "bounds": self.bounds,
            "level2_matching": self.level2_matching,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def overlapping_pairs(intervals) -> List[Tuple[int, int]]:
    """All intersecting id pairs ``(a, b)``, ``a < b``, by a left-to-right sweep."""
    pairs = []
    active = []
    for v in sorted(intervals, key=lambda u: (u.left, u.id)):
        active = [u for u in active if u.right > v.left]
        pairs.extend((min(u.id, v.id), max(u.id, v.id)) for u in active)
        active.append(v)
    return sorted(pairs)


def improper_pairs(instance: Instance, result: ColoringResult) -> List[Tuple[int, int]]:
    classes = defaultdict(list)
    for v, a in zip(instance, result.assignments):
        classes[a].append(v)
    return sorted(p for members in classes.values() for p in overlapping_pairs(members))


def _require_cover(instance: Instance, result: ColoringResult):
    if len(result) != len(instance):
        raise InstanceError(f"result colors {len(result)} intervals, instance has {len(instance)}")


def check_level2_matching(instance: Instance, result: ColoringResult) -> bool:
    """True iff each level-2 interval meets at most one other level-2 interval."""
    _require_cover(instance, result)
    if not is_unit(instance):
        raise NotApplicableError("the level-2 matching property is stated for unit intervals")
    level2 = [v for v, a in zip(instance, result.assignments) if a.level == 2]
    degree = defaultdict(int)
    for a, b in overlapping_pairs(level2):
        degree[a] += 1
        degree[b] += 1
    return all(d <= 1 for d in degree.values())


def check(instance: Instance, result: ColoringResult) -> VerificationReport:
    _require_cover(instance, result)
    name = canonical_name(result.algorithm)
    unit = is_unit(instance)
    w = omega(instance).size
    colors = result.distinct_colors
    report = VerificationReport(
        algorithm=name, n=len(instance), unit=unit, omega=w, distinct_colors=colors,
        violations=improper_pairs(instance, result),
    )
    if name == "offline_optimal":
        report.bounds["offline_exact_w"] = {"limit": w, "value": colors, "satisfied": colors == w}
        return report
    for bound, limit in COLOR_BOUNDS[(name, unit)]:
        report.bounds[bound] = {"limit": limit(w), "value": colors, "satisfied": colors <= limit(w)}
    if name == "kt":
        report.per_level_palette_sizes = result.palette_sizes()
        for level, size in report.per_level_palette_sizes.items():
            cap = palette_limit(level, unit)
            report.bounds[f"palette_level_{level}"] = {
                "limit": cap, "value": size, "satisfied": size <= cap}
        if unit:
            report.level2_matching = check_level2_matching(instance, result)
    return report


def chromatic_brute(instance: Instance, limit: int = 15) -> int:
    """Chromatic number of the intersection graph by backtracking (small inputs only)."""
    n = len(instance)
    if n > limit:
        raise OracleLimitError(f"{n} intervals exceeds the brute-force limit of {limit}")
    adj = [[j for j in range(n) if j != i and intersects(instance[i], instance[j])]
           for i in range(n)]
    order = sorted(range(n), key=lambda i: -len(adj[i]))

    def colorable(k):
        color = [0] * n

        def place(pos):
            if pos == n:
                return True
            v = order[pos]
            taken = {color[u] for u in adj[v]}
            # a fresh color is interchangeable with any other unused one
            fresh_seen = False
            for c in range(1, k + 1):
                if c in taken:
                    continue
                fresh = all(c != color[u] for u in order[:pos])
                if fresh:
                    if fresh_seen:
                        continue
                    fresh_seen = True
                color[v] = c
                if place(pos + 1):
                    return True
                color[v] = 0
            return False

        return place(0)

    k = 0
    while not colorable(k):
        k += 1
    return k
