"""
Both sides of the variance inequality behind s-concavity of F(t), in one
dimension.

With h = Q_t φ and dμ ∝ h^(1/γ) dz:

    Var_μ(G) <= -γ/(1-γ) ∫ h'' V*'(h')² / h dμ + (γ - s)/(1-γ) (∫ G dμ)²,
    G = V*(h') / h

The γ = 0 form (V = |y|²/2, dμ ∝ e^(-h)) compares Var_μ((h')²) with
4 ∫ h'' (h')² dμ. The t = 0 form with V in place of V* is the weighted
Brascamp-Lieb-type corollary.
"""
import math
import sys
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import trapezoid

import config
from errors import (
    GridTooNarrowError,
    HypothesisViolatedError,
    NotConvexError,
    ParameterRangeError,
    SuperlinearityError,
)
from grid_function import GridFunction
from hopf_lax import PowerCost, hopf_lax, legendre_conjugate, power_cost
from measure1d import s_of_gamma

CheckMode = Literal["bl", "log", "corollary"]


class BLCheckResult(BaseModel):
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    mode: CheckMode
    t: float
    lhs: float
    rhs: float
    slack: float
    gamma: float
    s: float
    n: int
    dz: float
    verdict: Literal["pass", "fail"]
    notes: List[str] = []


def _require_convex(phi: GridFunction):
    if not phi.present.all():
        raise ParameterRangeError("φ must be present at every grid node")
    values = phi.values
    second = values[2:] - 2 * values[1:-1] + values[:-2]
    floor = -config.CONVEXITY_TOL * max(1.0, float(np.abs(values).max()))
    if (second < floor).any():
        worst = int(np.argmin(second)) + 1
        raise NotConvexError(f"input is not convex near z = {phi.nodes[worst]:.6g}")


def _derivatives(h: np.ndarray, dz: float):
    first = np.gradient(h, dz, edge_order=2)
    second = np.empty_like(h)
    second[1:-1] = (h[2:] - 2 * h[1:-1] + h[:-2]) / dz ** 2
    second[0], second[-1] = second[1], second[-2]
    return first, second


def _normalized(weight: np.ndarray, nodes: np.ndarray) -> np.ndarray:
    mu = weight / trapezoid(weight, nodes)
    mass = trapezoid(mu, nodes)
    if abs(mass - 1) > config.NORMALIZATION_TOL:
        raise ParameterRangeError(f"μ normalization drifted: ∫dμ = {mass!r}")
    return mu


def _edge_guard(mu: np.ndarray, dz: float, integrands, notes: List[str]):
    edge_mass = max(mu[0], mu[-1]) * dz / 2
    if edge_mass <= config.MU_BOUNDARY_TOL:
        return
    if not any(np.any(values) for values in integrands):
        notes.append("μ does not decay on the grid; integrands vanish identically")
        return
    raise GridTooNarrowError(f"grid too narrow: μ-mass {edge_mass:.3g} in an edge cell")


def _result(mode, t, lhs, rhs, gamma, s, phi, notes) -> BLCheckResult:
    slack = rhs - lhs
    result = BLCheckResult(
        mode=mode, t=t, lhs=lhs, rhs=rhs, slack=slack, gamma=gamma, s=s,
        n=phi.n, dz=phi.dz,
        verdict="pass" if slack >= -config.BL_SLACK_TOL else "fail",
        notes=notes,
    )
    print(f"[BLCheck] {mode} t={t:g}: lhs={lhs:.6g} rhs={rhs:.6g} -> {result.verdict}", file=sys.stderr)
    return result


def _weighted_sides(G, H, mu, nodes, gamma, s):
    mean_g = trapezoid(G * mu, nodes)
    variance = trapezoid((G - mean_g) ** 2 * mu, nodes)
    rhs = -gamma / (1 - gamma) * trapezoid(H * mu, nodes) + (gamma - s) / (1 - gamma) * mean_g ** 2
    return float(variance), float(rhs)


def _check_exponents(V: PowerCost, gamma: float):
    if V.p == 1:
        raise SuperlinearityError()
    if V.p == math.inf:
        raise ParameterRangeError("the indicator cost has no variance form")
    if not -1 < gamma < 0:
        raise ParameterRangeError(f"γ must lie in (-1, 0), got {gamma}")


def _positive_potential(h: np.ndarray):
    if not np.isfinite(h).all() or (h <= 0).any():
        raise HypothesisViolatedError("hypothesis violated: Q_tφ must stay positive on the grid")


def bl_check(
    phi: GridFunction,
    V: PowerCost,
    gamma: float,
    t: float,
    s: Optional[float] = None,
) -> BLCheckResult:
    """
    Variance inequality at time t for the convex potential φ.

    s defaults to γ / (1 + γ).

    Raises:
        NotConvexError: if φ has a negative second difference
        HypothesisViolatedError: if Q_tφ <= 0 somewhere on the grid
        GridTooNarrowError: if μ keeps mass at the grid edges
    """
    _check_exponents(V, gamma)
    if t < 0:
        raise ParameterRangeError(f"t must be >= 0, got {t}")
    _require_convex(phi)
    s = s_of_gamma(gamma) if s is None else s

    h = phi.values if t == 0 else hopf_lax(phi, V, t, refine=True).values
    _positive_potential(h)
    nodes = phi.nodes
    h1, h2 = _derivatives(h, phi.dz)
    conjugate = legendre_conjugate(V)
    G = conjugate.value(h1) / h
    H = h2 * conjugate.derivative(h1) ** 2 / h

    notes = []
    mu = _normalized(h ** (1 / gamma), nodes)
    _edge_guard(mu, phi.dz, (G, H), notes)
    lhs, rhs = _weighted_sides(G, H, mu, nodes, gamma, s)
    return _result("bl", t, lhs, rhs, gamma, s, phi, notes)


def bl_check_log(phi: GridFunction, t: float) -> BLCheckResult:
    """γ = 0, V = |y|²/2: Var_μ((h')²) against 4 ∫ h'' (h')² dμ with dμ ∝ e^(-h)."""
    if t < 0:
        raise ParameterRangeError(f"t must be >= 0, got {t}")
    _require_convex(phi)
    h = phi.values if t == 0 else hopf_lax(phi, power_cost(2.0), t, refine=True).values
    if not np.isfinite(h).all():
        raise HypothesisViolatedError("hypothesis violated: Q_tφ must be finite on the grid")

    nodes = phi.nodes
    h1, h2 = _derivatives(h, phi.dz)
    slope = h1 ** 2
    energy = h2 * slope

    notes = []
    mu = _normalized(np.exp(-(h - h.min())), nodes)
    _edge_guard(mu, phi.dz, (h1, energy), notes)
    mean_slope = trapezoid(slope * mu, nodes)
    lhs = float(trapezoid((slope - mean_slope) ** 2 * mu, nodes))
    rhs = float(4 * trapezoid(energy * mu, nodes))
    return _result("log", t, lhs, rhs, 0.0, 0.0, phi, notes)


def corollary_check(phi: GridFunction, V: PowerCost, gamma: float) -> BLCheckResult:
    """
    Weighted Brascamp-Lieb-type inequality at t = 0, with G = V(φ')/φ,
    Hessian term φ'' V'(φ')² / φ and dμ ∝ φ^(1/γ).

    Raises:
        SuperlinearityError: if p = 1
    """
    _check_exponents(V, gamma)
    _require_convex(phi)
    h = phi.values
    _positive_potential(h)
    nodes = phi.nodes
    h1, h2 = _derivatives(h, phi.dz)
    G = V.value(h1) / h
    H = h2 * V.derivative(h1) ** 2 / h
    s = s_of_gamma(gamma)

    notes = []
    mu = _normalized(h ** (1 / gamma), nodes)
    _edge_guard(mu, phi.dz, (G, H), notes)
    lhs, rhs = _weighted_sides(G, H, mu, nodes, gamma, s)
    return _result("corollary", 0.0, lhs, rhs, gamma, s, phi, notes)
