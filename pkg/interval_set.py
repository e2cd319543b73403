"""
Compact subsets of the real line as finite unions of closed intervals.

A set is stored as sorted, pairwise-disjoint closed intervals [a_i, b_i]
with b_i < a_{i+1}. Endpoints are compared exactly; callers who need a fuzzy
merge must round their inputs first.
"""
import re
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from errors import EmptySetError, LiteralParseError, NegativeRadiusError

Interval = Tuple[float, float]

_LITERAL_PART = re.compile(r"^\[\s*([^,\[\]]+?)\s*,\s*([^,\[\]]+?)\s*\]$")


def _merge(raw: Sequence[Sequence[float]]) -> List[Interval]:
    if len(raw) == 0:
        raise EmptySetError()

    pairs = []
    for pair in raw:
        if len(pair) != 2:
            raise ValueError(f"interval must be a pair, got {pair!r}")
        a, b = float(pair[0]), float(pair[1])
        if a > b:
            raise ValueError(f"interval [{a}, {b}] has a > b")
        pairs.append((a, b))

    pairs.sort()
    merged = [pairs[0]]
    for a, b in pairs[1:]:
        last_a, last_b = merged[-1]
        # touching intervals merge too
        if a <= last_b:
            merged[-1] = (last_a, max(last_b, b))
        else:
            merged.append((a, b))
    return merged


class IntervalUnion(BaseModel):
    """A nonempty compact set A = [a_1, b_1] u ... u [a_N, b_N]."""

    model_config = ConfigDict(frozen=True)

    intervals: Tuple[Interval, ...]

    @field_validator("intervals", mode="before")
    @classmethod
    def _normalize(cls, value):
        return tuple(_merge(value))

    @property
    def count(self) -> int:
        return len(self.intervals)

    @property
    def lo(self) -> float:
        return self.intervals[0][0]

    @property
    def hi(self) -> float:
        return self.intervals[-1][1]

    @property
    def gaps(self) -> List[float]:
        """Widths a_{i+1} - b_i of the bounded gaps, left to right."""
        return [
            self.intervals[i + 1][0] - self.intervals[i][1]
            for i in range(self.count - 1)
        ]

    def length(self) -> float:
        return sum(b - a for a, b in self.intervals)

    def is_convex(self) -> bool:
        return self.count == 1

    def contains(self, x: float) -> bool:
        return any(a <= x <= b for a, b in self.intervals)

    def to_literal(self) -> str:
        return "u".join(f"[{a!r},{b!r}]" for a, b in self.intervals)


def normalize(raw: Sequence[Sequence[float]]) -> IntervalUnion:
    """
    Build an IntervalUnion from raw pairs: sort, then merge overlapping or
    touching intervals.

    Raises:
        EmptySetError: if raw is empty
    """
    # merge here so EmptySetError is not wrapped in a ValidationError
    return IntervalUnion(intervals=_merge(raw))


def dilate(A: IntervalUnion, t: float) -> IntervalUnion:
    """
    A + t[-1, 1] = {x : dist(x, A) <= t}.

    Gaps are closed by comparing their width with 2t rather than comparing
    the moved endpoints, so a gap closes exactly at t = gap / 2.
    """
    if t < 0:
        raise NegativeRadiusError()
    if t == 0:
        return A

    groups = []
    start, end = A.intervals[0]
    for gap, (a, b) in zip(A.gaps, A.intervals[1:]):
        if gap <= 2 * t:
            end = b
        else:
            groups.append((start - t, end + t))
            start, end = a, b
    groups.append((start - t, end + t))
    return IntervalUnion(intervals=groups)


def dilate_by(A: IntervalUnion, t: float, lo: float, hi: float) -> IntervalUnion:
    """A + t[lo, hi] for a (possibly asymmetric) segment [lo, hi] containing 0."""
    if t < 0:
        raise NegativeRadiusError()
    if lo > hi:
        raise ValueError(f"segment [{lo}, {hi}] has lo > hi")
    return normalize([(a + t * lo, b + t * hi) for a, b in A.intervals])


def merge_times(A: IntervalUnion) -> List[float]:
    """
    Radii at which consecutive gaps close, sorted.

    The gap (b_i, a_{i+1}) closes at t_i = (a_{i+1} - b_i) / 2.
    """
    return sorted(gap / 2 for gap in A.gaps)


def convexity_threshold(A: IntervalUnion) -> float:
    """t_0 = max_i (a_{i+1} - b_i) / 2; dilate(A, t) is an interval iff t >= t_0."""
    times = merge_times(A)
    return times[-1] if times else 0.0


def components_at(A: IntervalUnion, t: float, after: bool = True) -> List[Tuple[int, int]]:
    """
    Index ranges (first, last) of the original intervals forming each
    component of the dilation at radius t.

    With after=True a gap closing exactly at t counts as closed (the closed
    dilation); with after=False it still counts as open (the open dilation,
    i.e. the structure just before t).
    """
    groups = []
    first = 0
    for i, gap in enumerate(A.gaps):
        closed = gap <= 2 * t if after else gap < 2 * t
        if not closed:
            groups.append((first, i))
            first = i + 1
    groups.append((first, A.count - 1))
    return groups


def parse_set_literal(text: str) -> IntervalUnion:
    """
    Parse a set literal such as "[0,1]u[2,3]".

    Raises:
        LiteralParseError: on any malformed component
    """
    parts = [part.strip() for part in text.strip().split("u")]
    if not parts or any(part == "" for part in parts):
        raise LiteralParseError(f"malformed set literal: {text!r}")

    raw = []
    for part in parts:
        match = _LITERAL_PART.match(part)
        if match is None:
            raise LiteralParseError(f"malformed set component: {part!r}")
        try:
            a, b = float(match.group(1)), float(match.group(2))
        except ValueError:
            raise LiteralParseError(f"non-numeric endpoint in {part!r}")
        if a > b:
            raise LiteralParseError(f"component {part!r} has a > b")
        raw.append((a, b))
    return normalize(raw)
