"""Uniform time/space grids and trapezoid quadrature helpers.

All integrals in the package are trapezoid sums on these grids; grid
refinement is the convergence control.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class UniformGrid:
    """Uniform 1-D grid on [start, end] with n samples (endpoints included)."""

    start: float
    end: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"grid needs at least 2 samples, got n={self.n}")
        if not np.isfinite(self.start) or not np.isfinite(self.end):
            raise ValueError("grid endpoints must be finite")
        if self.end <= self.start:
            raise ValueError(f"grid span must be positive, got [{self.start}, {self.end}]")

    @property
    def spacing(self) -> float:
        return (self.end - self.start) / (self.n - 1)

    @property
    def span(self) -> float:
        return self.end - self.start

    @cached_property
    def points(self) -> np.ndarray:
        p = np.linspace(self.start, self.end, self.n)
        p.flags.writeable = False
        return p

    @cached_property
    def weights(self) -> np.ndarray:
        """Trapezoid quadrature weights."""
        w = np.full(self.n, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        w.flags.writeable = False
        return w

    def integrate(self, samples: np.ndarray) -> float:
        return float(np.dot(self.weights, samples))

    def inner(self, a: np.ndarray, b: np.ndarray) -> float:
        return float(np.dot(self.weights * a, b))

    def cumintegrate(self, samples: np.ndarray) -> np.ndarray:
        """Cumulative trapezoid integral, zero at the first sample."""
        out = np.zeros(self.n)
        out[1:] = np.cumsum(0.5 * (samples[1:] + samples[:-1])) * self.spacing
        return out


class TimeGrid(UniformGrid):
    """Interaction-time grid [0, T_W] in dimensionless units."""


class SpaceGrid(UniformGrid):
    """Cell-depth grid [0, L] in dimensionless optical-depth units."""


def make_time_grid(t_w: float, n_t: int) -> TimeGrid:
    """Uniform grid covering [0, t_w] with n_t samples."""
    if not np.isfinite(t_w) or t_w <= 0:
        raise ValueError(f"writing time must be positive, got {t_w}")
    return TimeGrid(0.0, float(t_w), int(n_t))


def make_space_grid(length: float, n_z: int) -> SpaceGrid:
    """Uniform grid covering [0, length] with n_z samples."""
    if not np.isfinite(length) or length <= 0:
        raise ValueError(f"cell length must be positive, got {length}")
    return SpaceGrid(0.0, float(length), int(n_z))
