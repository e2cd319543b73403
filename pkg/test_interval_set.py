"""
Tests for interval unions, dilation and the set literal parser
"""
import pytest
from hypothesis import given, strategies as st

from errors import EmptySetError, LiteralParseError, NegativeRadiusError
from interval_set import (
    components_at,
    convexity_threshold,
    dilate,
    dilate_by,
    merge_times,
    normalize,
    parse_set_literal,
)


def test_normalize_merges_touching_and_overlapping():
    A = normalize([(2, 3), (0, 1), (1, 1.5), (2.5, 4)])
    assert A.intervals == ((0.0, 1.5), (2.0, 4.0))
    assert A.count == 2
    assert A.gaps == [0.5]


def test_normalize_rejects_empty():
    with pytest.raises(EmptySetError, match="empty set"):
        normalize([])


def test_dilate_closes_gap_exactly_at_half_width():
    A = normalize([(0, 1), (2, 3)])
    assert dilate(A, 0.25).intervals == ((-0.25, 1.25), (1.75, 3.25))
    assert dilate(A, 0.5).intervals == ((-0.5, 3.5),)
    assert dilate(A, 1).length() == 5


def test_dilate_zero_and_negative():
    A = normalize([(0, 1)])
    assert dilate(A, 0) == A
    with pytest.raises(NegativeRadiusError):
        dilate(A, -0.1)


def test_merge_times_and_threshold():
    A = normalize([(0, 1), (2, 3), (3.5, 4)])
    assert merge_times(A) == [0.25, 0.5]
    assert convexity_threshold(A) == 0.5
    assert convexity_threshold(normalize([(0, 1)])) == 0.0


def test_components_at_open_and_closed_structure():
    A = normalize([(0, 1), (2, 3), (3.5, 4)])
    assert components_at(A, 0.25, after=True) == [(0, 0), (1, 2)]
    assert components_at(A, 0.25, after=False) == [(0, 0), (1, 1), (2, 2)]
    assert components_at(A, 1.0) == [(0, 2)]


def test_dilate_by_asymmetric_body():
    A = normalize([(0, 1), (2, 3)])
    assert dilate_by(A, 0.5, 0, 1).intervals == ((0.0, 1.5), (2.0, 3.5))
    assert dilate_by(A, 1.0, 0, 1).intervals == ((0.0, 4.0),)
    assert dilate_by(A, 0.5, -1, 1) == dilate(A, 0.5)


def test_parse_set_literal():
    A = parse_set_literal("[0,1]u[2, 3]")
    assert A.intervals == ((0.0, 1.0), (2.0, 3.0))
    assert parse_set_literal(A.to_literal()) == A


@pytest.mark.parametrize("text", ["", "[0,1]u", "(0,1)", "[a,1]", "[2,1]", "[0,1,2]"])
def test_parse_set_literal_rejects_malformed(text):
    with pytest.raises(LiteralParseError):
        parse_set_literal(text)


endpoints = st.lists(st.integers(min_value=-40, max_value=40), min_size=2, max_size=10, unique=True)
radii = st.integers(min_value=0, max_value=40).map(lambda k: k / 8)


def _union(points):
    points = sorted(points)
    if len(points) % 2:
        points = points[:-1]
    return normalize([(points[i] / 8, points[i + 1] / 8) for i in range(0, len(points), 2)])


@given(endpoints, radii, radii)
def test_dilation_is_a_semigroup(points, s, t):
    A = _union(points)
    assert dilate(dilate(A, s), t) == dilate(A, s + t)


@given(endpoints, radii)
def test_dilation_is_convex_past_threshold(points, t):
    A = _union(points)
    assert dilate(A, t).is_convex() == (t >= convexity_threshold(A))


@given(endpoints, radii)
def test_dilated_length_formula(points, t):
    A = _union(points)
    closed = [min(gap, 2 * t) for gap in A.gaps]
    assert dilate(A, t).length() == pytest.approx(A.length() + 2 * t + sum(closed))
