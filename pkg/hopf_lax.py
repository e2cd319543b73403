"""
1-D Hopf-Lax operator and the functional parallel volume.

    Q_t u(z) = inf_x  u(x) + t V((z - x) / t),     V(y) = |y|^p / p

h_t^(γ) = (Q_t f^γ)^(1/γ) for γ < 0 and exp(-Q_t(-log f)) for γ = 0;
F(t) = ∫ h_t^(γ). The infimum runs over the present nodes of the input grid,
in dense blocks of output points.
"""
import math
import sys
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.integrate import quad, trapezoid

import config
from concavity import ConcavityReport, check_gamma_concave_fn, check_s_concave_samples
from errors import (
    EmptyDomainError,
    GridTooNarrowError,
    HypothesisViolatedError,
    OutOfTheoremRangeError,
    ParameterRangeError,
)
from grid_function import GridFunction, sample
from measure1d import s_of_gamma

__all__ = [
    "GridFunction", "sample", "PowerCost", "power_cost", "legendre_conjugate",
    "hopf_lax", "hopf_lax_at", "h_t", "functional_volume", "check_theorem_B",
    "check_prop_52", "sup_convolution_volumes", "range_notes", "pde_residual",
]

TailMode = Literal["guard", "extend"]

# (z - x) / t lands a few ulps outside [-1, 1] on exact grid alignments
_INDICATOR_SLACK = 1e-12

UNVERIFIED_NOTE = "unverified: outside the proven range γ in (-1, 0]"


class PowerCost(BaseModel):
    """
    V(y) = |y|^p / p for p in [1, ∞]; p = ∞ is the indicator cost of [-1, 1]
    (0 inside, +∞ outside), which turns h_t into a set dilation.
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    p: float

    @field_validator("p")
    @classmethod
    def _at_least_one(cls, p):
        if not p >= 1:
            raise ValueError(f"power cost needs p >= 1, got {p}")
        return p

    @property
    def q(self) -> float:
        """Conjugate exponent, 1/p + 1/q = 1."""
        if self.p == 1:
            return math.inf
        if self.p == math.inf:
            return 1.0
        return self.p / (self.p - 1)

    @property
    def is_indicator(self) -> bool:
        return self.p == math.inf

    def value(self, y) -> np.ndarray:
        y = np.abs(np.asarray(y, dtype=float))
        if self.p == math.inf:
            return np.where(y <= 1 + _INDICATOR_SLACK, 0.0, np.inf)
        if self.p == 1:
            return y
        return y ** self.p / self.p

    def derivative(self, y) -> np.ndarray:
        """V'(y) = sign(y) |y|^(p-1); only for finite p."""
        if self.p == math.inf:
            raise ParameterRangeError("the indicator cost has no derivative")
        y = np.asarray(y, dtype=float)
        if self.p == 1:
            return np.sign(y)
        return np.sign(y) * np.abs(y) ** (self.p - 1)

    def describe(self) -> str:
        if self.p == math.inf:
            return "indicator of [-1, 1]"
        return f"|y|^{self.p:g}/{self.p:g}"


def power_cost(p: float) -> PowerCost:
    """
    Raises:
        ParameterRangeError: if p < 1
    """
    if not p >= 1:
        raise ParameterRangeError(f"power cost needs p >= 1, got {p}")
    return PowerCost(p=p)


def legendre_conjugate(V: PowerCost) -> PowerCost:
    """V*(u) = sup_x (xu - V(x)) = |u|^q / q; p = 1 gives the indicator cost."""
    return power_cost(V.q)


def _inf_convolution(u: GridFunction, V: PowerCost, t: float, z: np.ndarray, refine: bool) -> np.ndarray:
    """min over present nodes x of u(x) + t V((z - x) / t); +inf where nothing is reachable."""
    if t <= 0:
        raise ParameterRangeError(f"Hopf-Lax needs t > 0, got {t}")
    present = u.present
    if not present.any():
        raise EmptyDomainError()

    node_index = np.flatnonzero(present)
    x = u.nodes[present]
    ux = u.values[present]
    refine = refine and 1 < V.p < math.inf
    # neighbours usable for the parabola must be present and grid-adjacent
    has_left = np.zeros(x.size, dtype=bool)
    has_right = np.zeros(x.size, dtype=bool)
    has_left[1:] = np.diff(node_index) == 1
    has_right[:-1] = np.diff(node_index) == 1

    z = np.atleast_1d(np.asarray(z, dtype=float))
    out = np.empty(z.size)
    for start in range(0, z.size, config.HOPF_LAX_BLOCK):
        zb = z[start:start + config.HOPF_LAX_BLOCK]
        cost = ux[None, :] + t * V.value((zb[:, None] - x[None, :]) / t)
        k = np.argmin(cost, axis=1)
        rows = np.arange(zb.size)
        best = cost[rows, k]
        if refine:
            ok = has_left[k] & has_right[k] & np.isfinite(best)
            km = np.where(ok, k - 1, k)
            kp = np.where(ok, k + 1, k)
            c_minus, c_plus = cost[rows, km], cost[rows, kp]
            a = (c_minus + c_plus - 2 * best) / 2
            b = (c_plus - c_minus) / 2
            ok &= a > 0
            best = np.where(ok, best - b ** 2 / (4 * np.where(ok, a, 1.0)), best)
        out[start:start + zb.size] = best
    return out


def hopf_lax(u: GridFunction, V: PowerCost, t: float, refine: bool = False) -> GridFunction:
    """
    Q_t u on the nodes of u's grid; unreachable nodes come back absent.

    With refine=True (p in (1, ∞) only) the discrete minimum is corrected by
    the vertex of the parabola through the minimizing node and its two
    neighbours.

    Raises:
        EmptyDomainError: if u has no present value
    """
    values = _inf_convolution(u, V, t, u.nodes, refine)
    return u.with_values(np.where(np.isfinite(values), values, np.nan))


def hopf_lax_at(u: GridFunction, V: PowerCost, t: float, z, refine: bool = False) -> np.ndarray:
    """Q_t u at arbitrary points z (inside or outside the grid); +inf where unreachable."""
    return _inf_convolution(u, V, t, np.asarray(z, dtype=float), refine)


def _check_gamma(gamma: float, allow_any_gamma: bool):
    if gamma > 0:
        raise OutOfTheoremRangeError(
            f"out of theorem range: the Hopf-Lax representation of h_t needs γ <= 0, got {gamma}"
        )
    if not (-1 < gamma <= 0) and not allow_any_gamma:
        raise OutOfTheoremRangeError(f"out of theorem range: γ = {gamma} is not in (-1, 0]")


def range_notes(gamma: float) -> List[str]:
    """Report notes for γ; empty inside the proven range (-1, 0]."""
    return [] if -1 < gamma <= 0 else [f"γ = {gamma:g}: {UNVERIFIED_NOTE}"]


def _potential(f: GridFunction, gamma: float) -> GridFunction:
    """f^γ (γ < 0) or -log f (γ = 0), with f = 0 mapped to absent."""
    values = np.nan_to_num(f.values, nan=0.0)
    if (values < 0).any():
        raise ParameterRangeError("f must be non-negative")
    if not (values > 0).any():
        raise EmptyDomainError("empty domain: f is identically 0")
    positive = values > 0
    safe = np.where(positive, values, 1.0)
    potential = safe ** gamma if gamma < 0 else -np.log(safe)
    return f.with_values(np.where(positive, potential, np.nan))


def _from_potential(q: np.ndarray, gamma: float) -> np.ndarray:
    finite = np.isfinite(q)
    safe = np.where(finite, q, 1.0)
    h = safe ** (1 / gamma) if gamma < 0 else np.exp(-safe)
    return np.where(finite, h, 0.0)


def h_t(
    f: GridFunction,
    gamma: float,
    V: PowerCost,
    t: float,
    refine: bool = False,
    allow_any_gamma: bool = False,
) -> GridFunction:
    """
    Functional parallel set h_t^(γ) on f's grid; h_0 = f.

    Raises:
        OutOfTheoremRangeError: if γ is outside (-1, 0] and allow_any_gamma is False
        EmptyDomainError: if f is identically 0
    """
    _check_gamma(gamma, allow_any_gamma)
    potential = _potential(f, gamma)
    if t == 0:
        return f.with_values(np.nan_to_num(f.values, nan=0.0))
    q = _inf_convolution(potential, V, t, f.nodes, refine)
    return f.with_values(_from_potential(q, gamma))


def _tail_mass(potential: GridFunction, gamma: float, V: PowerCost, t: float, refine: bool) -> float:
    def integrand(z):
        q = hopf_lax_at(potential, V, t, [z], refine)
        return float(_from_potential(q, gamma)[0])

    options = dict(limit=config.TAIL_QUAD_LIMIT, epsrel=config.TAIL_QUAD_EPSREL)
    left, _ = quad(integrand, -np.inf, potential.z_lo, **options)
    right, _ = quad(integrand, potential.z_hi, np.inf, **options)
    return left + right


def functional_volume(
    f: GridFunction,
    gamma: float,
    V: PowerCost,
    t_grid: Sequence[float],
    tails: TailMode = "guard",
    refine: bool = False,
    allow_any_gamma: bool = False,
) -> List[Tuple[float, float]]:
    """
    F(t) = ∫ h_t^(γ)(z) dz for each t in t_grid.

    tails="guard" integrates over the grid only and refuses grids where h_t
    still carries mass at the edges; tails="extend" adds the two tails
    beyond the grid by adaptive quadrature of the pointwise Hopf-Lax value.

    Raises:
        GridTooNarrowError: in guard mode, if h_t at a boundary node exceeds
            HT_BOUNDARY_TOL * max h_t
    """
    _check_gamma(gamma, allow_any_gamma)
    if any(t < 0 for t in t_grid):
        raise ParameterRangeError("t-grid values must be >= 0")
    potential = _potential(f, gamma)
    nodes = f.nodes

    print(f"[HopfLax] F(t) for γ={gamma:g}, V={V.describe()}, "
          f"{len(t_grid)} t-values, n={f.n}, tails={tails}", file=sys.stderr)
    for note in range_notes(gamma):
        print(f"[HopfLax] {note}", file=sys.stderr)
    volumes = []
    for t in t_grid:
        h = h_t(f, gamma, V, t, refine=refine, allow_any_gamma=allow_any_gamma).values
        if tails == "guard":
            edge = max(h[0], h[-1])
            if edge > config.HT_BOUNDARY_TOL * h.max():
                raise GridTooNarrowError(
                    f"grid too narrow: h_t at the grid edge is {edge:.3g} (max {h.max():.3g}) at t = {t}"
                )
        volume = float(trapezoid(h, nodes))
        if tails == "extend" and t > 0:
            volume += _tail_mass(potential, gamma, V, t, refine)
        volumes.append((float(t), volume))
    return volumes


def check_theorem_B(
    f: GridFunction,
    gamma: float,
    p: float,
    t_grid: Sequence[float],
    tol: Optional[float] = None,
    tails: TailMode = "extend",
    refine: bool = True,
    allow_any_gamma: bool = False,
) -> ConcavityReport:
    """Concavity (s = 1) of the sampled F(t)."""
    tol = config.GRID_TOL if tol is None else tol
    volumes = functional_volume(
        f, gamma, power_cost(p), t_grid, tails=tails, refine=refine, allow_any_gamma=allow_any_gamma,
    )
    ts, fs = zip(*volumes)
    report = check_s_concave_samples(ts, fs, 1.0, tol)
    notes = range_notes(gamma)
    if notes:
        report = report.model_copy(update={"notes": report.notes + notes})
    print(f"[HopfLax] concavity of F γ={gamma:g} p={p:g}: {report.verdict}", file=sys.stderr)
    return report


def _combine(fv: np.ndarray, gv: np.ndarray, gamma: float, t: float) -> np.ndarray:
    """(f^γ + t g^γ)^(1/γ), or f g^t for γ = 0; 0 where f or g vanishes."""
    alive = (fv > 0) & (gv > 0)
    safe_f = np.where(alive, fv, 1.0)
    safe_g = np.where(alive, gv, 1.0)
    if gamma == 0:
        combined = safe_f * safe_g ** t
    else:
        combined = (safe_f ** gamma + t * safe_g ** gamma) ** (1 / gamma)
    return np.where(alive, combined, 0.0)


def _positive_nodes(fn: GridFunction, name: str) -> Tuple[np.ndarray, np.ndarray]:
    values = np.nan_to_num(fn.values, nan=0.0)
    keep = values > 0
    if not keep.any():
        raise EmptyDomainError(f"empty domain: {name} is identically 0")
    return fn.nodes[keep], values[keep]


def _sup_convolution(f: GridFunction, g: GridFunction, gamma: float, t: float, z: np.ndarray) -> np.ndarray:
    """
    sup over z = x + t y of the combination of f(x) and g(y), f and g linear
    between nodes and 0 off their grids.

    The sup is taken over both breakpoint families: y on g's nodes with f
    interpolated at z - t y, and x on f's nodes with g interpolated at
    (z - x) / t. At t = 0 only the first applies and h_0 = f.
    """
    x, fx = _positive_nodes(f, "f")
    y, gy = _positive_nodes(g, "g")
    out = np.zeros(z.size)
    for start in range(0, z.size, config.HOPF_LAX_BLOCK):
        zb = z[start:start + config.HOPF_LAX_BLOCK]
        f_at = np.nan_to_num(f.interpolate(zb[:, None] - t * y[None, :]), nan=0.0)
        best = _combine(f_at, gy[None, :], gamma, t).max(axis=1)
        if t > 0:
            g_at = np.nan_to_num(g.interpolate((zb[:, None] - x[None, :]) / t), nan=0.0)
            best = np.maximum(best, _combine(fx[None, :], g_at, gamma, t).max(axis=1))
        out[start:start + zb.size] = best
    return out


def sup_convolution_volumes(
    f: GridFunction, g: GridFunction, gamma: float, t_grid: Sequence[float],
) -> List[float]:
    """
    F(t) = ∫ h_t for the sup-convolution h_t of f and g. Every t, t = 0
    included, integrates on the same z grid: f's spacing, padded by one node
    beyond the reachable range on each side.
    """
    if any(t < 0 for t in t_grid):
        raise ParameterRangeError("t-grid values must be >= 0")
    t_max = max(t_grid)
    dz = f.dz
    z_lo = f.z_lo + t_max * min(g.z_lo, 0.0) - dz
    z_hi = f.z_hi + t_max * max(g.z_hi, 0.0) + dz
    n = int(math.ceil((z_hi - z_lo) / dz)) + 1
    z = z_lo + dz * np.arange(n)
    return [float(trapezoid(_sup_convolution(f, g, gamma, t, z), z)) for t in t_grid]


def check_prop_52(
    f: GridFunction,
    g: GridFunction,
    gamma: float,
    t_grid: Sequence[float],
    tol: Optional[float] = None,
    precheck: bool = True,
) -> ConcavityReport:
    """
    s-concavity, s = γ / (1 + γ), of F(t) = ∫ h_t for two γ-concave functions
    f and g, with F from sup_convolution_volumes.

    Raises:
        HypothesisViolatedError: if f or g fails the γ-concavity precheck
    """
    if gamma < -1:
        raise ParameterRangeError(f"γ must be >= -1, got {gamma}")
    tol = config.GRID_TOL if tol is None else tol
    if precheck:
        for name, fn in (("f", f), ("g", g)):
            if not check_gamma_concave_fn(fn, gamma).passed:
                raise HypothesisViolatedError(f"hypothesis violated: {name} is not {gamma:g}-concave")

    volumes = sup_convolution_volumes(f, g, gamma, t_grid)
    s = s_of_gamma(gamma)
    report = check_s_concave_samples(list(t_grid), volumes, s, tol)
    print(f"[HopfLax] sup-convolution check γ={gamma:g} (s={s:g}): {report.verdict}", file=sys.stderr)
    return report


def pde_residual(
    u: GridFunction,
    V: PowerCost,
    t: float,
    dt: float,
    dz: float,
    window: Optional[Tuple[float, float]] = None,
) -> float:
    """
    max over grid nodes in the window of |∂_t Q_t u + V*(∂_z Q_t u)|, by central
    differences of the refined pointwise Hopf-Lax value.

    The default window is the middle half of u's grid; a window (lo, hi)
    keeps nodes with lo < |z| < hi.
    """
    if not 1 < V.p < math.inf:
        raise ParameterRangeError(f"the residual needs a finite conjugate cost (1 < p < ∞), got p = {V.p}")
    if not 0 < dt < t:
        raise ParameterRangeError(f"need 0 < δt < t, got δt = {dt}, t = {t}")
    if not dz > 0:
        raise ParameterRangeError(f"need δz > 0, got {dz}")

    nodes = u.nodes
    if window is None:
        quarter = (u.z_hi - u.z_lo) / 4
        z = nodes[(nodes >= u.z_lo + quarter) & (nodes <= u.z_hi - quarter)]
    else:
        lo, hi = window
        z = nodes[(np.abs(nodes) > lo) & (np.abs(nodes) < hi)]
    if z.size == 0:
        raise EmptyDomainError("empty domain: no grid node inside the residual window")

    dq_dt = (hopf_lax_at(u, V, t + dt, z, True) - hopf_lax_at(u, V, t - dt, z, True)) / (2 * dt)
    dq_dz = (hopf_lax_at(u, V, t, z + dz, True) - hopf_lax_at(u, V, t, z - dz, True)) / (2 * dz)
    residual = dq_dt + legendre_conjugate(V).value(dq_dz)
    return float(np.max(np.abs(residual)))
