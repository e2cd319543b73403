"""
One-dimensional measures with density, and the s / γ exponent arithmetic.

Density kinds:
- lebesgue:  ψ ≡ 1
- uniform:   ψ = C 1_[a,b]
- power:     ψ(x) = (x + p)^(1/γ) 1_[a,b](x), the γ-affine extremal densities
- gaussian:  N(mean, stddev²)
- tabulated: linear interpolation of a GridFunction, 0 outside its range

integrate() is exact for the first four kinds (erf for the Gaussian) and
trapezoidal for tabulated densities.
"""
import math
from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import trapezoid
from scipy.special import ndtr

from errors import GammaInfiniteError, HypothesisViolatedError, ParameterRangeError
from grid_function import GridFunction

DensityKind = Literal["lebesgue", "uniform", "power", "gaussian", "tabulated"]

_SQRT_2PI = math.sqrt(2 * math.pi)


class Density1D(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: DensityKind
    C: Optional[float] = None
    a: Optional[float] = None
    b: Optional[float] = None
    gamma: Optional[float] = None
    p: Optional[float] = None
    mean: Optional[float] = None
    stddev: Optional[float] = None
    grid: Optional[GridFunction] = None

    @property
    def support(self) -> Tuple[float, float]:
        if self.kind in ("uniform", "power"):
            return self.a, self.b
        if self.kind == "tabulated":
            return self.grid.z_lo, self.grid.z_hi
        return -math.inf, math.inf

    def describe(self) -> str:
        if self.kind == "lebesgue":
            return "lebesgue"
        if self.kind == "uniform":
            return f"uniform:{self.C!r}:{self.a!r}:{self.b!r}"
        if self.kind == "power":
            return f"power:{self.gamma!r}:{self.p!r}:{self.a!r}:{self.b!r}"
        if self.kind == "gaussian":
            return f"gauss:{self.mean!r}:{self.stddev!r}"
        return f"tabulated[{self.grid.z_lo!r},{self.grid.z_hi!r};n={self.grid.n}]"


def lebesgue() -> Density1D:
    return Density1D(kind="lebesgue")


def uniform(C: float, a: float, b: float) -> Density1D:
    if not C > 0:
        raise ParameterRangeError(f"uniform density needs C > 0, got {C}")
    if not a < b:
        raise ParameterRangeError(f"uniform density needs a < b, got [{a}, {b}]")
    return Density1D(kind="uniform", C=C, a=a, b=b)


def power(gamma: float, p: float, a: float, b: float) -> Density1D:
    """ψ(x) = (x + p)^(1/γ) on [a, b]; requires x + p >= 0 on [a, b]."""
    if gamma == 0 or not math.isfinite(gamma):
        raise ParameterRangeError(f"power density needs a finite γ != 0, got {gamma}")
    if not a < b:
        raise ParameterRangeError(f"power density needs a < b, got [{a}, {b}]")
    if a + p < 0:
        raise ParameterRangeError(f"x + p < 0 at x = {a} (p = {p})")
    return Density1D(kind="power", gamma=gamma, p=p, a=a, b=b)


def gaussian(mean: float, stddev: float) -> Density1D:
    if not stddev > 0:
        raise ParameterRangeError(f"gaussian density needs stddev > 0, got {stddev}")
    return Density1D(kind="gaussian", mean=mean, stddev=stddev)


def tabulated(grid: GridFunction) -> Density1D:
    values = grid.values
    if not grid.present.all():
        raise ParameterRangeError("tabulated density cannot have absent nodes")
    if (values < 0).any():
        raise ParameterRangeError("tabulated density must be non-negative")
    return Density1D(kind="tabulated", grid=grid)


def _power(base: float, exponent: float) -> float:
    if base == 0:
        if exponent < 0:
            return math.inf
        return 1.0 if exponent == 0 else 0.0
    return base ** exponent


def _power_antiderivative(d: Density1D, x: float) -> float:
    base = x + d.p
    if d.gamma == -1:
        return math.log(base) if base > 0 else -math.inf
    exponent = (d.gamma + 1) / d.gamma
    return d.gamma / (d.gamma + 1) * _power(base, exponent)


def _gaussian_mass(d: Density1D, a: float, b: float) -> float:
    za = (a - d.mean) / d.stddev
    zb = (b - d.mean) / d.stddev
    # use the upper tail on the right of the mean to keep relative precision
    if za > 0:
        return float(ndtr(-za) - ndtr(-zb))
    return float(ndtr(zb) - ndtr(za))


def _tabulated_mass(d: Density1D, a: float, b: float) -> float:
    grid = d.grid
    nodes = grid.nodes
    inner = (nodes > a) & (nodes < b)
    xs = np.concatenate(([a], nodes[inner], [b]))
    ys = np.interp(xs, nodes, grid.values)
    return float(trapezoid(ys, xs))


def integrate(d: Density1D, a: float, b: float) -> float:
    """
    μ([a, b]), clipped silently to the support of the density.

    Raises:
        ParameterRangeError: if a > b
    """
    if a > b:
        raise ParameterRangeError(f"integration bounds out of order: [{a}, {b}]")

    lo, hi = d.support
    a, b = max(a, lo), min(b, hi)
    if a >= b:
        return 0.0

    if d.kind == "lebesgue":
        return b - a
    if d.kind == "uniform":
        return d.C * (b - a)
    if d.kind == "power":
        return _power_antiderivative(d, b) - _power_antiderivative(d, a)
    if d.kind == "gaussian":
        return _gaussian_mass(d, a, b)
    return _tabulated_mass(d, a, b)


def _smooth_value(d: Density1D, x: float) -> float:
    """Density formula without the support indicator."""
    if d.kind == "lebesgue":
        return 1.0
    if d.kind == "uniform":
        return d.C
    if d.kind == "power":
        return _power(x + d.p, 1 / d.gamma)
    if d.kind == "gaussian":
        z = (x - d.mean) / d.stddev
        return math.exp(-0.5 * z * z) / (d.stddev * _SQRT_2PI)
    return float(np.interp(x, d.grid.nodes, d.grid.values))


def density_at(d: Density1D, x: float) -> float:
    """ψ(x); 0 outside the (closed) support."""
    lo, hi = d.support
    if x < lo or x > hi:
        return 0.0
    return _smooth_value(d, x)


def density_limit(d: Density1D, x: float, side: int) -> float:
    """One-sided limit ψ(x+) for side = +1, ψ(x-) for side = -1."""
    lo, hi = d.support
    if side > 0:
        inside = lo <= x < hi
    else:
        inside = lo < x <= hi
    if not inside:
        return 0.0
    return _smooth_value(d, x)


def density_derivative(d: Density1D, x: float) -> float:
    """ψ'(x) at a point strictly inside the support (0 outside)."""
    lo, hi = d.support
    if x <= lo or x >= hi:
        return 0.0
    if d.kind in ("lebesgue", "uniform"):
        return 0.0
    if d.kind == "power":
        return _power(x + d.p, (1 - d.gamma) / d.gamma) / d.gamma
    if d.kind == "gaussian":
        return -(x - d.mean) / d.stddev ** 2 * _smooth_value(d, x)
    nodes = d.grid.nodes
    k = int(np.clip(np.searchsorted(nodes, x) - 1, 0, d.grid.n - 2))
    return float((d.grid.values[k + 1] - d.grid.values[k]) / d.grid.dz)


def is_smooth(d: Density1D) -> bool:
    """True when density_derivative gives ψ' in closed form."""
    return d.kind != "tabulated"


class SConcavityClass(BaseModel):
    """An s-concave measure class on R^n, s in [-inf, +inf]."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    s: float
    n: int = 1

    @property
    def admits_density(self) -> bool:
        return self.s <= 1 / self.n

    @property
    def gamma(self) -> float:
        return gamma_of_s(self.s, self.n)

    @classmethod
    def from_gamma(cls, gamma: float, n: int = 1) -> "SConcavityClass":
        return cls(s=s_of_gamma(gamma, n), n=n)


def gamma_of_s(s: float, n: int = 1) -> float:
    """
    γ = s / (1 - s n), the density exponent of an s-concave measure on R^n.

    Raises:
        GammaInfiniteError: if s n = 1
    """
    if n < 1:
        raise ParameterRangeError(f"dimension must be >= 1, got {n}")
    if s * n == 1:
        raise GammaInfiniteError()
    if s == -math.inf:
        return -1.0 / n
    return s / (1 - s * n)


def s_of_gamma(gamma: float, n: int = 1) -> float:
    """s = γ / (1 + γ n); γ = -1/n gives s = -inf."""
    if n < 1:
        raise ParameterRangeError(f"dimension must be >= 1, got {n}")
    if gamma == math.inf:
        return 1.0 / n
    if 1 + gamma * n == 0:
        return -math.inf
    return gamma / (1 + gamma * n)


def alpha_of(beta: float, gamma: float) -> float:
    """
    Exponent α with 1/α = 1/β + 1/γ: the product of a β-concave and a
    γ-concave function is α-concave when β + γ >= 0.

    Raises:
        HypothesisViolatedError: if β + γ < 0
    """
    if beta + gamma < 0:
        raise HypothesisViolatedError()
    if beta == math.inf:
        return gamma
    if gamma == math.inf:
        return beta
    if beta == 0 or gamma == 0:
        return 0.0
    if beta + gamma == 0:
        # 1/α = 0 from opposite signs: only quasi-concavity survives
        return -math.inf
    return beta * gamma / (beta + gamma)
