"""Intervals, arrival sequences and colorings, plus their file formats.

Intervals are half-open, ``[left, right)``: two intervals that only touch at an
endpoint do not conflict, and a point belongs to an interval when
``left <= point < right``. Instances are stored as JSON Lines, one ``{"id", "left", "right"}`` object per
arrival; colorings as a single JSON document.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .arith import RationalError, as_rational, render

PathLike = Union[str, Path]


class InstanceError(ValueError):
    """Invalid interval, instance or coloring data."""


@dataclass(frozen=True)
class Interval:
    id: int
    left: Fraction
    right: Fraction

    def __post_init__(self):
        try:
            object.__setattr__(self, "left", as_rational(self.left))
            object.__setattr__(self, "right", as_rational(self.right))
        except RationalError as exc:
            raise InstanceError(str(exc)) from None
        if not isinstance(self.id, int) or self.id < 0:
            raise InstanceError(f"interval id must be a non-negative int, got {self.id!r}")
        if not self.left < self.right:
            raise InstanceError(
                f"interval {self.id} has non-positive length: "
                f"[{render(self.left)}, {render(self.right)}]"
            )

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def contains(self, point: Fraction) -> bool:
        return self.left <= point < self.right

    def __str__(self):
        return f"v{self.id}[{render(self.left)}, {render(self.right)})"


def intersects(a: Interval, b: Interval) -> bool:
    return a.left < b.right and b.left < a.right


@dataclass(frozen=True)
class Instance:
    """Intervals in arrival order; ``intervals[i].id == i``."""

    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        for i, v in enumerate(self.intervals):
            if v.id != i:
                raise InstanceError(f"arrival {i} carries id {v.id}; ids must be 0..n-1 in order")

    @classmethod
    def from_endpoints(cls, pairs: Iterable[Tuple[object, object]]) -> "Instance":
        return cls(tuple(Interval(i, l, r) for i, (l, r) in enumerate(pairs)))

    @classmethod
    def from_lefts(cls, lefts: Iterable[object], length=1) -> "Instance":
        """Fixed-length intervals (unit by default) from their left endpoints."""
        length = as_rational(length)
        return cls.from_endpoints((l, as_rational(l) + length) for l in lefts)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]


def is_unit(instance: Instance) -> bool:
    return all(v.right - v.left == 1 for v in instance)


@dataclass(frozen=True)
class Assignment:
    """Global color of one interval: the palette (level) and the index within it."""

    level: int
    color: int


@dataclass(frozen=True)
class ColoringResult:
    """Per-arrival assignments of one algorithm run.

    Algorithms without levels record level 1 everywhere, so ``color`` carries
    the whole color. Two intervals share a color iff their assignments are equal.
    """

    algorithm: str
    assignments: Tuple[Assignment, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "assignments", tuple(self.assignments))
        for a in self.assignments:
            if a.level < 1 or a.color < 1:
                raise InstanceError(f"levels and colors are positive integers, got {a}")

    def __len__(self):
        return len(self.assignments)

    @property
    def distinct_colors(self) -> int:
        return len(set(self.assignments))

    @property
    def max_level(self) -> int:
        return max((a.level for a in self.assignments), default=0)

    def palette_sizes(self) -> Dict[int, int]:
        """Number of distinct color indices used in each level, keyed by level."""
        used = defaultdict(set)
        for a in self.assignments:
            used[a.level].add(a.color)
        return {level: len(used[level]) for level in sorted(used)}

    def levels(self) -> List[int]:
        return [a.level for a in self.assignments]

    def colors(self) -> List[int]:
        return [a.color for a in self.assignments]


# -- persistence ----------------------------------------------------------------

def dumps_instance(instance: Instance) -> str:
    return "".join(
        json.dumps({"id": v.id, "left": render(v.left), "right": render(v.right)},
                   separators=(",", ":")) + "\n"
        for v in instance
    )


def save(instance: Instance, path: PathLike) -> None:
    Path(path).write_text(dumps_instance(instance), encoding="utf-8")


def loads_instance(text: str, source: str = "<string>") -> Instance:
    intervals = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        where = f"{source}:{lineno}"
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"{where}: not valid JSON ({exc.msg})") from None
        if not isinstance(obj, dict) or set(obj) != {"id", "left", "right"}:
            raise InstanceError(f"{where}: expected an object with keys id, left, right")
        if obj["id"] != len(intervals) or isinstance(obj["id"], bool):
            raise InstanceError(f"{where}: id {obj['id']!r} breaks the sequence 0..n-1 "
                                f"(expected {len(intervals)})")
        if not isinstance(obj["left"], str) or not isinstance(obj["right"], str):
            raise InstanceError(f"{where}: endpoints must be \"p/q\" strings")
        try:
            intervals.append(Interval(obj["id"], obj["left"], obj["right"]))
        except InstanceError as exc:
            raise InstanceError(f"{where}: {exc}") from None
    return Instance(tuple(intervals))


def load(path: PathLike) -> Instance:
    path = Path(path)
    return loads_instance(path.read_text(encoding="utf-8"), source=str(path))


def result_to_dict(result: ColoringResult) -> dict:
    return {
        "algorithm": result.algorithm,
        "assignments": [{"id": i, "level": a.level, "color": a.color}
                        for i, a in enumerate(result.assignments)],
        "distinct_colors": result.distinct_colors,
    }


def result_from_dict(obj: dict) -> ColoringResult:
    try:
        rows = obj["assignments"]
        assignments = []
        for i, row in enumerate(rows):
            if row["id"] != i:
                raise InstanceError(f"assignment {i} carries id {row['id']!r}")
            assignments.append(Assignment(int(row["level"]), int(row["color"])))
        result = ColoringResult(str(obj["algorithm"]), tuple(assignments))
    except (KeyError, TypeError) as exc:
        raise InstanceError(f"malformed result document: {exc!r}") from None
    if "distinct_colors" in obj and obj["distinct_colors"] != result.distinct_colors:
        raise InstanceError(
            f"result claims {obj['distinct_colors']} colors but assignments use "
            f"{result.distinct_colors}"
        )
    return result


def dumps_result(result: ColoringResult) -> str:
    return json.dumps(result_to_dict(result), indent=2) + "\n"


def save_result(result: ColoringResult, path: PathLike) -> None:
    Path(path).write_text(dumps_result(result), encoding="utf-8")


def load_result(path: PathLike) -> ColoringResult:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: not valid JSON ({exc.msg})") from None
    return result_from_dict(obj)
