"""
Tests for s-means and the s-concavity certifiers
"""
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from concavity import (
    check_gamma_concave_fn,
    check_s_concave,
    check_s_concave_samples,
    s_mean,
)
from errors import InsufficientDataError, ParameterRangeError
from grid_function import sample


def test_s_mean_special_cases():
    assert s_mean(1, 4, 0.5, 1) == pytest.approx(2.5, rel=1e-15)
    assert s_mean(1, 4, 0.5, 0) == pytest.approx(2.0)
    assert s_mean(1, 4, 0.5, -1) == pytest.approx(1.6)
    assert s_mean(1, 4, 0.5, math.inf) == 4
    assert s_mean(1, 4, 0.5, -math.inf) == 1
    assert s_mean(3, 7, 0.0, 0.5) == pytest.approx(3)
    assert s_mean(3, 7, 1.0, 0.5) == pytest.approx(7)


def test_s_mean_rejects_bad_input():
    with pytest.raises(ParameterRangeError):
        s_mean(0, 1, 0.5, 1)
    with pytest.raises(ParameterRangeError):
        s_mean(1, 1, 1.5, 1)


@given(
    st.floats(min_value=0.01, max_value=100),
    st.floats(min_value=0.01, max_value=100),
    st.floats(min_value=0, max_value=1),
    st.integers(min_value=-20, max_value=20).map(lambda k: k / 4),
    st.integers(min_value=0, max_value=20).map(lambda k: k / 4),
)
def test_s_mean_is_monotone_in_s(a, b, lam, s, ds):
    assert s_mean(a, b, lam, s) <= s_mean(a, b, lam, s + ds) * (1 + 1e-12)


def test_concave_function_passes():
    report = check_s_concave(lambda t: math.sqrt(1 + t), 0, 3, 1.0)
    assert report.passed
    assert report.violation_count == 0
    assert report.worst_deficit == 0


def test_convex_function_fails_with_positive_deficit():
    report = check_s_concave(lambda t: 1 + t ** 2, 0, 1, 1.0)
    assert report.verdict == "fail"
    assert report.violation_count > 0
    assert report.worst_deficit > 0.05
    worst = report.violations[0]
    assert worst.deficit == report.worst_deficit


def test_gaussian_is_log_concave_but_not_concave():
    gauss = lambda t: math.exp(-t * t / 2)  # noqa: E731
    assert check_s_concave(gauss, -3, 3, 0.0).passed
    assert not check_s_concave(gauss, -3, 3, 1.0).passed


def test_power_of_linear_is_exactly_s_concave():
    # (1 + t)^(1/s) is s-affine
    for s in (-1.0, 0.25, 0.5):
        assert check_s_concave(lambda t: (1 + t) ** (1 / s), 0, 2, s).passed


def test_zero_nodes_are_skipped_and_reported():
    report = check_s_concave(lambda t: max(0.0, 1 - t), 0, 2, 1.0)
    assert report.passed
    assert any("skipped" in note for note in report.notes)


def test_zero_between_positive_nodes_is_a_violation():
    report = check_s_concave(lambda t: abs(t - 1), 0, 2, -math.inf)
    assert report.verdict == "fail"


def test_insufficient_data():
    with pytest.raises(InsufficientDataError, match="insufficient data"):
        check_s_concave(lambda t: 0.0, 0, 1, 0.5)


def test_samples_use_node_triples():
    ts = np.linspace(0, 2, 21)
    assert check_s_concave_samples(ts, np.sqrt(1 + ts), 1.0).passed
    report = check_s_concave_samples(ts, 1 + ts ** 2, 1.0)
    assert report.verdict == "fail"
    assert all(0 < v.lam < 1 for v in report.violations)


def test_samples_are_thinned_for_long_curves():
    ts = np.linspace(0, 1, 1001)
    report = check_s_concave_samples(ts, np.log(2 + ts), 1.0)
    assert report.passed
    assert any("thinned" in note for note in report.notes)


def test_samples_reject_unsorted_abscissae():
    with pytest.raises(ParameterRangeError):
        check_s_concave_samples([0, 2, 1], [1, 1, 1], 1.0)


def test_gamma_concave_function():
    hat = sample(lambda x: np.maximum(0.0, 1 - np.abs(x)), -2, 2, 401)
    assert check_gamma_concave_fn(hat, 1.0).passed
    gauss = sample(lambda x: np.exp(-x ** 2 / 2), -4, 4, 401)
    assert check_gamma_concave_fn(gauss, 0.0).passed
    assert not check_gamma_concave_fn(gauss, 1.0).passed


@given(st.floats(min_value=0.1, max_value=10), st.floats(min_value=-1, max_value=0.9))
def test_verdict_is_scale_invariant(c, s):
    f = lambda t: (2 + t) ** 0.5  # noqa: E731
    base = check_s_concave(f, 0, 1, s)
    scaled = check_s_concave(lambda t: c * f(t), 0, 1, s)
    assert base.verdict == scaled.verdict


@pytest.mark.parametrize("s", [1e-6, 1e-10, 1e-14, 1e-17, -1e-17, 2.57e-257, -2.57e-257])
def test_s_mean_near_zero_tends_to_geometric(s):
    assert s_mean(1, 9, 0.5, s) == pytest.approx(3.0, rel=1e-5)
    assert s_mean(2, 8, 0.5, s) == pytest.approx(4.0, rel=1e-5)


def test_s_mean_is_monotone_near_zero():
    assert s_mean(2, 8, 0.5, 1e-10) <= s_mean(2, 8, 0.5, 1e-6)
    assert s_mean(2, 8, 0.5, -1e-6) <= s_mean(2, 8, 0.5, -1e-10)
    assert s_mean(2, 8, 0.5, 0) <= s_mean(2, 8, 0.5, 1e-17) * (1 + 1e-15)


def test_s_mean_does_not_overflow():
    assert s_mean(1e300, 1e-300, 0.5, 3.0) == pytest.approx(1e300 * 0.5 ** (1 / 3), rel=1e-12)
    assert s_mean(1e-300, 1e300, 0.5, -3.0) == pytest.approx(1e-300 * 0.5 ** (-1 / 3), rel=1e-12)


@pytest.mark.parametrize("s", [1e-17, -1e-17, 2.57e-257])
def test_verdict_near_zero_is_scale_invariant(s):
    f = lambda t: (2 + t) ** 0.5  # noqa: E731
    base = check_s_concave(f, 0, 1, s)
    scaled = check_s_concave(lambda t: 0.5 * f(t), 0, 1, s)
    assert base.verdict == scaled.verdict == "pass"


@given(
    st.floats(min_value=-1, max_value=3),
    st.integers(min_value=-8, max_value=8).map(lambda k: k / 4),
    st.integers(min_value=1, max_value=8).map(lambda k: k / 4),
)
def test_passing_at_s_implies_passing_below(a, s, ds):
    f = lambda t: (1 + t) ** a  # noqa: E731
    if check_s_concave(f, 0, 2, s).passed:
        assert check_s_concave(f, 0, 2, s - ds).passed
