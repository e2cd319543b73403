"""
Tests for the parallel μ-volume curve and its one-sided derivatives
"""
import math

import pytest
from hypothesis import given, settings, strategies as st

from errors import NegativeRadiusError, OneSidedOnlyError
from grid_function import sample
from interval_set import dilate, normalize
from measure1d import gaussian, integrate, lebesgue, power, tabulated, uniform
from parallel_volume import (
    derivative_left,
    derivative_right,
    evaluate,
    junction_check,
    second_derivative,
    second_derivative_fd,
    tabulate,
    volume_curve,
)

TWO_INTERVALS = normalize([(0, 1), (2, 3)])


def test_lebesgue_curve_values_and_merge():
    c = volume_curve(TWO_INTERVALS, lebesgue())
    assert c.breakpoints == [0.5]
    assert evaluate(c, 0) == 2
    assert evaluate(c, 0.25) == 3
    assert evaluate(c, 1) == 5
    # four endpoints before the merge, two after
    assert derivative_right(c, 0.25) == 4
    assert derivative_left(c, 0.5) == 4
    assert derivative_right(c, 0.5) == 2


def test_negative_radius():
    c = volume_curve(TWO_INTERVALS, lebesgue())
    with pytest.raises(NegativeRadiusError):
        evaluate(c, -1)


def test_support_crossings_are_classified():
    c = volume_curve(normalize([(1, 2)]), uniform(1.0, 0, 5))
    kinds = {crossing.t: crossing.kind for crossing in c.crossings}
    assert kinds == {1.0: "leaving", 3.0: "leaving"}
    assert evaluate(c, 4) == 5
    assert derivative_left(c, 1.0) == 2
    assert derivative_right(c, 1.0) == 1

    outside = volume_curve(normalize([(-2, -1)]), uniform(1.0, 0, 5))
    assert [(x.t, x.kind) for x in outside.crossings] == [(1.0, "entering"), (6.0, "leaving")]


def test_second_derivative_closed_form_and_breakpoint():
    d = power(2.0, 0.0, 0.0, 10.0)
    c = volume_curve(normalize([(2, 3), (5, 6)]), d)
    t = 0.3
    expected = sum(
        0.5 * (b + t) ** -0.5 - 0.5 * (a - t) ** -0.5 for a, b in ((2, 3), (5, 6))
    )
    assert second_derivative(c, t) == pytest.approx(expected, rel=1e-12)
    assert second_derivative_fd(c, t) == pytest.approx(expected, rel=1e-5)
    with pytest.raises(OneSidedOnlyError, match="one-sided only"):
        second_derivative(c, 1.0)


def test_gaussian_curve_matches_dilation():
    d = gaussian(0.0, 1.0)
    A = normalize([(-1, -0.5), (0.5, 2)])
    c = volume_curve(A, d)
    for t in (0.0, 0.2, 0.5, 0.75, 1.5):
        expected = sum(integrate(d, a, b) for a, b in dilate(A, t).intervals)
        assert evaluate(c, t) == pytest.approx(expected, abs=1e-15)


def test_tabulated_density_second_derivative_by_differences():
    d = tabulated(sample(lambda x: 1 + x ** 2 / 10, -5.0, 5.0, 2001))
    c = volume_curve(normalize([(-1, 1)]), d)
    # V'' = ψ'(1 + t) - ψ'(-1 - t) = 2 (1 + t) / 5 up to interpolation
    assert second_derivative(c, 0.5) == pytest.approx(0.6, rel=1e-3)


def test_junction_ordering_on_lebesgue():
    c = volume_curve(TWO_INTERVALS, lebesgue())
    for s in (-1.0, 0.0, 0.5, 1.0):
        (result,) = junction_check(c, s)
        assert result.kinds == ["merge"]
        assert result.left == 4 and result.right == 2
        assert result.holds


def test_junction_reports_entering_crossing():
    c = volume_curve(normalize([(-2, -1), (2, 3)]), uniform(1.0, 0, 5))
    entering = [r for r in junction_check(c, 0.5) if "entering" in r.kinds]
    assert len(entering) == 1
    # the right derivative jumps up when an endpoint enters the support
    assert entering[0].right > entering[0].left
    assert not entering[0].holds


def test_tabulate_blanks_second_derivative_at_breakpoints():
    c = volume_curve(TWO_INTERVALS, lebesgue())
    rows = tabulate(c, [0.0, 0.25, 0.5, 1.0])
    assert rows[0].V_left_deriv is None
    assert rows[0].V_second_deriv is None
    assert rows[1].V_second_deriv == 0
    assert rows[2].V_second_deriv is None
    assert [row.V for row in rows] == [2, 3, 4, 5]


segments = st.lists(st.integers(min_value=1, max_value=63), min_size=2, max_size=10, unique=True)


def _inside(points):
    points = sorted(points)[: len(points) // 2 * 2]
    return normalize([(points[i] / 8, points[i + 1] / 8) for i in range(0, len(points), 2)])


@settings(max_examples=50, deadline=None)
@given(segments, st.integers(min_value=0, max_value=64))
def test_derivative_left_dominates_right_inside_support(points, k):
    A = _inside(points)
    c = volume_curve(A, power(0.5, 0.5, 0.0, 8.0))
    t = k / 8
    if t > 0:
        assert derivative_left(c, t) >= derivative_right(c, t) - 1e-12


@settings(max_examples=50, deadline=None)
@given(segments, st.floats(min_value=0, max_value=4), st.floats(min_value=0, max_value=4))
def test_volume_is_monotone(points, s, ds):
    c = volume_curve(_inside(points), gaussian(4.0, 2.0))
    assert evaluate(c, s + ds) >= evaluate(c, s) - 1e-15


def test_lebesgue_curve_is_polynomial_between_merges():
    A = normalize([(0, 1), (3, 4), (4.5, 5)])
    c = volume_curve(A, lebesgue())
    for t in (0.1, 0.5, 1.2):
        closed = A.length() + 2 * t + sum(min(gap, 2 * t) for gap in A.gaps)
        assert evaluate(c, t) == pytest.approx(closed)
    assert math.isclose(derivative_right(c, 2.0), 2.0)
