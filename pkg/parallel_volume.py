"""
Parallel μ-volume t ↦ V(t) = μ(A + t[-1, 1]) of a compact set A ⊂ R.

Between breakpoints the dilation has a fixed set of components, each
contributing one ∫ψ over [a - t, b + t], so V, V' and V'' are sums of
closed-form terms over the surviving endpoints:

    V'(t)  = Σ ψ(b + t) + ψ(a - t)
    V''(t) = Σ ψ'(b + t) - ψ'(a - t)

Breakpoints are the merge times of A plus the times at which a surviving
endpoint crosses the edge of supp(μ).
"""
import math
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

import config
from errors import CurveVanishesError, NegativeRadiusError, OneSidedOnlyError, ParameterRangeError
from interval_set import IntervalUnion, components_at, merge_times
from measure1d import Density1D, density_derivative, density_limit, integrate, is_smooth

CrossingKind = Literal["merge", "leaving", "entering"]


class Crossing(BaseModel):
    """One breakpoint of a VolumeCurve and what happens there."""

    model_config = ConfigDict(frozen=True)

    t: float
    kind: CrossingKind


class VolumeCurve(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    set: IntervalUnion
    measure: Density1D
    crossings: Tuple[Crossing, ...] = ()

    @property
    def breakpoints(self) -> List[float]:
        return sorted({c.t for c in self.crossings})

    def is_breakpoint(self, t: float) -> bool:
        return any(abs(t - bp) <= config.BREAKPOINT_ATOL * max(1.0, bp) for bp in self.breakpoints)

    def kinds_at(self, t: float) -> List[str]:
        return [c.kind for c in self.crossings if abs(t - c.t) <= config.BREAKPOINT_ATOL * max(1.0, c.t)]


def _endpoint_lifetimes(A: IntervalUnion) -> List[Tuple[float, int, float]]:
    """(position, direction, death time) for every endpoint; direction +1 moves right."""
    half_gaps = [gap / 2 for gap in A.gaps]
    endpoints = []
    for i, (a, b) in enumerate(A.intervals):
        left_death = half_gaps[i - 1] if i > 0 else math.inf
        right_death = half_gaps[i] if i < A.count - 1 else math.inf
        endpoints.append((a, -1, left_death))
        endpoints.append((b, +1, right_death))
    return endpoints


def _support_crossings(A: IntervalUnion, measure: Density1D) -> List[Crossing]:
    lo, hi = measure.support
    crossings = []
    for x, direction, death in _endpoint_lifetimes(A):
        for edge in (lo, hi):
            if not math.isfinite(edge):
                continue
            t = (edge - x) * direction
            if t <= 0 or t >= death:
                continue
            # moving right across lo, or left across hi, enters the support
            entering = (direction > 0 and edge == lo) or (direction < 0 and edge == hi)
            crossings.append(Crossing(t=t, kind="entering" if entering else "leaving"))
    return crossings


def volume_curve(A: IntervalUnion, measure: Density1D) -> VolumeCurve:
    """Build the curve of A under measure, with merge and support-crossing breakpoints."""
    crossings = [Crossing(t=t, kind="merge") for t in merge_times(A)]
    crossings.extend(_support_crossings(A, measure))
    crossings.sort(key=lambda c: c.t)
    return VolumeCurve(set=A, measure=measure, crossings=tuple(crossings))


def _components(c: VolumeCurve, t: float, after: bool) -> List[Tuple[float, float]]:
    intervals = c.set.intervals
    return [
        (intervals[first][0], intervals[last][1])
        for first, last in components_at(c.set, t, after=after)
    ]


def evaluate(c: VolumeCurve, t: float) -> float:
    """
    V(t) = μ(A + t[-1, 1]); at a merge time the merged (closed) dilation is used.

    Raises:
        NegativeRadiusError: if t < 0
    """
    if t < 0:
        raise NegativeRadiusError()
    return sum(integrate(c.measure, a - t, b + t) for a, b in _components(c, t, after=True))


def derivative_right(c: VolumeCurve, t: float) -> float:
    """V'_+(t): ψ summed over the boundary of the closed dilation, limits taken outward."""
    if t < 0:
        raise NegativeRadiusError()
    d = c.measure
    return sum(
        density_limit(d, b + t, +1) + density_limit(d, a - t, -1)
        for a, b in _components(c, t, after=True)
    )


def derivative_left(c: VolumeCurve, t: float) -> float:
    """
    V'_-(t): ψ summed over the boundary of the open dilation A + t(-1, 1).

    Components merging exactly at t are still separate here, so their
    touching point is counted from both sides.
    """
    if t <= 0:
        raise ParameterRangeError(f"left derivative needs t > 0, got {t}")
    d = c.measure
    return sum(
        density_limit(d, b + t, -1) + density_limit(d, a - t, +1)
        for a, b in _components(c, t, after=False)
    )


def second_derivative_fd(c: VolumeCurve, t: float, h: Optional[float] = None) -> float:
    """
    Central second difference of evaluate with one Richardson step.

    The step shrinks so that [t - 2h, t + 2h] stays inside [0, ∞) and clear
    of breakpoints.
    """
    if h is None:
        h = max(config.FD_SECOND_STEP, config.FD_SECOND_STEP * t)
    clearance = [abs(t - bp) for bp in c.breakpoints] + [t]
    h = min([h] + [gap / 4 for gap in clearance if gap > 0])

    def central(step: float) -> float:
        return (evaluate(c, t + step) - 2 * evaluate(c, t) + evaluate(c, t - step)) / step ** 2

    return (4 * central(h / 2) - central(h)) / 3


def second_derivative(c: VolumeCurve, t: float) -> float:
    """
    V''(t) away from breakpoints.

    Closed form Σ ψ'(b + t) - ψ'(a - t) for densities with an analytic ψ';
    finite differences of evaluate for tabulated densities.

    Raises:
        OneSidedOnlyError: if t is a breakpoint
    """
    if t <= 0:
        raise ParameterRangeError(f"second derivative needs t > 0, got {t}")
    if c.is_breakpoint(t):
        raise OneSidedOnlyError(f"one-sided only: t = {t} is a breakpoint")
    if not is_smooth(c.measure):
        return second_derivative_fd(c, t)
    d = c.measure
    return sum(
        density_derivative(d, b + t) - density_derivative(d, a - t)
        for a, b in _components(c, t, after=True)
    )


class JunctionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: float
    kinds: List[str]
    left: float
    right: float
    left_s: float
    right_s: float
    holds: bool


def _power_derivative(v: float, dv: float, s: float) -> float:
    """(V^s)' for s != 0, (log V)' for s = 0."""
    if s == 0:
        return dv / v
    return s * v ** (s - 1) * dv


def junction_check(c: VolumeCurve, s: float) -> List[JunctionResult]:
    """
    Compare one-sided derivatives of V^s (log V for s = 0) at every breakpoint:
    left >= right for s >= 0, left <= right for s < 0.

    An "entering" breakpoint (an endpoint moving into supp(μ)) may legitimately
    fail the ordering; it is reported through `kinds`.

    Raises:
        CurveVanishesError: if V = 0 at a breakpoint
    """
    results = []
    for t0 in c.breakpoints:
        v = evaluate(c, t0)
        if v <= 0:
            raise CurveVanishesError(f"curve vanishes at breakpoint t = {t0}")
        left = derivative_left(c, t0)
        right = derivative_right(c, t0)
        left_s = _power_derivative(v, left, s)
        right_s = _power_derivative(v, right, s)
        slack = config.CLOSED_FORM_TOL * max(1.0, abs(left_s), abs(right_s))
        holds = left_s <= right_s + slack if s < 0 else left_s >= right_s - slack
        results.append(JunctionResult(
            t=t0, kinds=c.kinds_at(t0), left=left, right=right,
            left_s=left_s, right_s=right_s, holds=holds,
        ))
    return results


class CurveRow(BaseModel):
    """One CSV row of a sampled curve; None marks an undefined cell."""

    model_config = ConfigDict(frozen=True)

    t: float
    V: float
    V_left_deriv: Optional[float] = None
    V_right_deriv: Optional[float] = None
    V_second_deriv: Optional[float] = None


def tabulate(c: VolumeCurve, ts: List[float]) -> List[CurveRow]:
    """Sample V and its derivatives; second derivatives are blank at breakpoints."""
    rows = []
    for t in ts:
        left = derivative_left(c, t) if t > 0 else None
        second = None
        if t > 0 and not c.is_breakpoint(t):
            second = second_derivative(c, t)
        rows.append(CurveRow(
            t=t, V=evaluate(c, t), V_left_deriv=left,
            V_right_deriv=derivative_right(c, t), V_second_deriv=second,
        ))
    return rows
