"""
Uniformly sampled functions on an interval of the real line.

Absent values (f^γ where f = 0, -log 0, indicator exteriors) are stored as
NaN; every consumer skips them.
"""
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

ABSENT = np.nan

# in units of dz; absorbs rounding of points computed to land on the grid edges
_EDGE_SLACK = 1e-9


class GridFunction(BaseModel):
    """values[k] = u(z_lo + k * dz), dz = (z_hi - z_lo) / (n - 1)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    z_lo: float
    z_hi: float
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _as_readonly_array(cls, value):
        array = np.array(value, dtype=float)
        if array.ndim != 1:
            raise ValueError("values must be one-dimensional")
        array.flags.writeable = False
        return array

    @model_validator(mode="after")
    def _check_shape(self):
        if not self.z_lo < self.z_hi:
            raise ValueError(f"need z_lo < z_hi, got [{self.z_lo}, {self.z_hi}]")
        if self.values.size < 2:
            raise ValueError("a grid function needs at least 2 nodes")
        if np.isinf(self.values).any():
            raise ValueError("infinite values must be encoded as absent (NaN)")
        return self

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def dz(self) -> float:
        return (self.z_hi - self.z_lo) / (self.n - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.z_lo, self.z_hi, self.n)

    @property
    def present(self) -> np.ndarray:
        return np.isfinite(self.values)

    def with_values(self, values) -> "GridFunction":
        return GridFunction(z_lo=self.z_lo, z_hi=self.z_hi, values=values)

    def interpolate(self, x) -> np.ndarray:
        """Linear interpolation; NaN outside [z_lo, z_hi] or next to an absent node."""
        x = np.asarray(x, dtype=float)
        position = (x - self.z_lo) / self.dz
        inside = (position >= -_EDGE_SLACK) & (position <= self.n - 1 + _EDGE_SLACK)
        position = np.clip(position, 0, self.n - 1)
        k = np.clip(np.floor(position), 0, self.n - 2).astype(int)
        w = position - k
        left = self.values[k]
        right = self.values[k + 1]
        # exact node hits must not pick up an absent neighbour
        value = np.where(w == 0, left, np.where(w == 1, right, (1 - w) * left + w * right))
        return np.where(inside, value, np.nan)


def sample(fn: Callable[[np.ndarray], np.ndarray], z_lo: float, z_hi: float, n: int) -> GridFunction:
    """Sample a vectorized function on n uniform nodes."""
    nodes = np.linspace(z_lo, z_hi, n)
    return GridFunction(z_lo=z_lo, z_hi=z_hi, values=np.asarray(fn(nodes), dtype=float))
