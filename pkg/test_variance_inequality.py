"""
Tests for both sides of the variance inequality
"""
import numpy as np
import pytest

from errors import GridTooNarrowError, HypothesisViolatedError, NotConvexError, ParameterRangeError, SuperlinearityError
from grid_function import sample
from hopf_lax import power_cost
from variance_inequality import bl_check, bl_check_log, corollary_check

QUADRATIC = sample(lambda x: x ** 2 / 2, -25.0, 25.0, 2001)


@pytest.mark.parametrize("t", [0.0, 1.0, 3.0])
def test_log_mode_matches_gaussian_moments(t):
    result = bl_check_log(QUADRATIC, t)
    assert result.lhs == pytest.approx(2 / (1 + t) ** 2, rel=0.01)
    assert result.rhs == pytest.approx(4 / (1 + t) ** 2, rel=0.01)
    assert result.slack > 0
    assert result.verdict == "pass"
    assert result.mode == "log"


def test_log_mode_is_stable_under_refinement():
    coarse = bl_check_log(QUADRATIC, 1.0)
    fine = bl_check_log(sample(lambda x: x ** 2 / 2, -25.0, 25.0, 4001), 1.0)
    assert fine.lhs == pytest.approx(coarse.lhs, rel=0.01)
    assert fine.rhs == pytest.approx(coarse.rhs, rel=0.01)


@pytest.mark.parametrize("t", [0.0, 0.5])
def test_bl_check_is_stable_under_refinement(t):
    coarse = bl_check(sample(lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001), power_cost(2), -0.25, t)
    fine = bl_check(sample(lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 8001), power_cost(2), -0.25, t)
    assert fine.lhs == pytest.approx(coarse.lhs, rel=0.01, abs=1e-6)
    assert fine.rhs == pytest.approx(coarse.rhs, rel=0.01)
    assert fine.verdict == coarse.verdict == "pass"


@pytest.mark.parametrize("potential,lo,hi,n,gamma", [
    (np.cosh, -15.0, 15.0, 3001, -0.25),
    (lambda x: 1 + x ** 2, -400.0, 400.0, 16001, -0.5),
    (lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001, -0.25),
])
def test_corollary_is_stable_under_refinement(potential, lo, hi, n, gamma):
    coarse = corollary_check(sample(potential, lo, hi, n), power_cost(2), gamma)
    fine = corollary_check(sample(potential, lo, hi, 2 * n - 1), power_cost(2), gamma)
    assert fine.lhs == pytest.approx(coarse.lhs, rel=0.01, abs=1e-6)
    assert fine.rhs == pytest.approx(coarse.rhs, rel=0.01)


def test_bl_check_on_shifted_quadratic():
    phi = sample(lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001)
    result = bl_check(phi, power_cost(2), -0.25, 0.0)
    assert result.s == pytest.approx(-1 / 3)
    assert result.lhs >= 0
    assert result.slack == pytest.approx(0.029, abs=0.005)
    assert result.verdict == "pass"


def test_bl_check_after_hopf_lax():
    phi = sample(lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001)
    result = bl_check(phi, power_cost(2), -0.25, 0.5)
    assert result.verdict == "pass"
    assert result.t == 0.5


def test_corollary_on_one_plus_square():
    phi = sample(lambda x: 1 + x ** 2, -400.0, 400.0, 16001)
    result = corollary_check(phi, power_cost(2), -0.5)
    assert result.lhs == pytest.approx(0.25, rel=0.02)
    assert result.rhs == pytest.approx(0.75, rel=0.02)
    assert result.verdict == "pass"


def test_corollary_on_cosh():
    phi = sample(np.cosh, -15.0, 15.0, 3001)
    result = corollary_check(phi, power_cost(2), -0.25)
    assert result.lhs == pytest.approx(0.0533, rel=0.02)
    assert result.rhs == pytest.approx(0.1014, rel=0.02)
    assert result.slack == pytest.approx(0.048, abs=0.003)


def test_corollary_on_shifted_quadratic():
    phi = sample(lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001)
    assert corollary_check(phi, power_cost(2), -0.25).slack >= -1e-6


def test_constant_potential_has_no_edge_guard():
    phi = sample(lambda x: np.full_like(x, 2.0), -5.0, 5.0, 501)
    result = corollary_check(phi, power_cost(2), -0.5)
    assert result.lhs == pytest.approx(0.0, abs=1e-12)
    assert any("vanish" in note for note in result.notes)


def test_rejections():
    concave = sample(lambda x: -x ** 2, -2.0, 2.0, 201)
    with pytest.raises(NotConvexError):
        bl_check_log(concave, 0.0)
    with pytest.raises(SuperlinearityError, match="superlinearity required"):
        corollary_check(QUADRATIC, power_cost(1), -0.5)
    with pytest.raises(ParameterRangeError):
        bl_check(QUADRATIC, power_cost(2), 0.0, 0.0)
    below_zero = sample(lambda x: x ** 2 / 2 - 1, -25.0, 25.0, 2001)
    with pytest.raises(HypothesisViolatedError):
        bl_check(below_zero, power_cost(2), -0.5, 0.0)


def test_narrow_grid_is_refused():
    phi = sample(lambda x: x ** 2 / 2, -2.0, 2.0, 201)
    with pytest.raises(GridTooNarrowError, match="grid too narrow"):
        bl_check_log(phi, 0.0)
