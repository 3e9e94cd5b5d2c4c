"""Hermite-Gaussian supermode basis and inner-product machinery.

The supermode of index k >= 1 is the Hermite-Gaussian function of order
k - 1 centered inside the interaction window; k = 1 is the plain
Gaussian. Profiles are unit-normalized under the grid's trapezoid
quadrature, so the basis is orthonormal on [0, T_W] up to boundary
truncation (audited by :func:`gram_matrix`).
"""

from dataclasses import dataclass

import numpy as np

from .grids import TimeGrid, UniformGrid

NORM_TOL = 1e-6


@dataclass(frozen=True)
class ModeProfile:
    """Real sampled time profile (signal mode, output field, ...)."""

    grid: TimeGrid
    samples: np.ndarray
    label: int | None = None

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.shape != (self.grid.n,):
            raise ValueError(
                f"sample count {samples.shape} does not match grid ({self.grid.n},)")
        if not np.all(np.isfinite(samples)):
            raise ValueError("profile samples must be finite")
        samples = samples.copy()
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)

    def norm(self) -> float:
        """Quadrature L2 norm."""
        return float(np.sqrt(self.grid.inner(self.samples, self.samples)))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm() - 1.0) <= NORM_TOL

    def normalized(self, label: int | None = None) -> "ModeProfile":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero profile")
        return ModeProfile(self.grid, self.samples / n, label if label is not None else self.label)


@dataclass(frozen=True)
class HermiteBasisConfig:
    """Placement of the Hermite-Gaussian basis on the time window.

    center sits at T_W/2 by default; the width sets the scale the
    source leaves free. The Gram gate in the tests is the acceptance
    check for a (center, width) choice.
    """

    center: float
    width: float
    max_index: int = 6

    def __post_init__(self):
        if self.width <= 0:
            raise ValueError(f"basis width must be positive, got {self.width}")
        if self.max_index < 1:
            raise ValueError(f"max_index must be >= 1, got {self.max_index}")


def default_basis_config(t_w: float, max_index: int = 6) -> HermiteBasisConfig:
    """Default placement: centered, width T_W/10."""
    return HermiteBasisConfig(center=t_w / 2.0, width=t_w / 10.0, max_index=max_index)


def hermite_mode(k: int, grid: TimeGrid, cfg: HermiteBasisConfig) -> ModeProfile:
    """Supermode profile L_k on the grid, unit-normalized.

    L_k(t) = N_k H_{k-1}((t - c)/w) exp(-(t - c)^2 / (2 w^2)) with the
    normalization fixed numerically under trapezoid quadrature.
    """
    if not 1 <= k <= cfg.max_index:
        raise ValueError(f"mode index {k} outside 1..{cfg.max_index}")
    if not grid.start < cfg.center < grid.end:
        raise ValueError(
            f"basis center {cfg.center} outside grid interior ({grid.start}, {grid.end})")
    xi = (grid.points - cfg.center) / cfg.width
    coef = np.zeros(k)
    coef[-1] = 1.0
    samples = np.polynomial.hermite.hermval(xi, coef) * np.exp(-0.5 * xi * xi)
    nrm = np.sqrt(grid.inner(samples, samples))
    return ModeProfile(grid, samples / nrm, label=k)


def hermite_basis(grid: TimeGrid, cfg: HermiteBasisConfig) -> list[ModeProfile]:
    return [hermite_mode(k, grid, cfg) for k in range(1, cfg.max_index + 1)]


def _check_same_grid(a: UniformGrid, b: UniformGrid):
    if a != b:
        raise ValueError(f"grid mismatch: {a} vs {b}")


def overlap(a: ModeProfile, b: ModeProfile) -> float:
    """Trapezoid inner product of two profiles on a shared grid."""
    _check_same_grid(a.grid, b.grid)
    return a.grid.inner(a.samples, b.samples)


def gram_matrix(modes: list[ModeProfile]) -> np.ndarray:
    """Symmetric matrix of pairwise overlaps."""
    if not modes:
        raise ValueError("need at least one mode")
    grid = modes[0].grid
    for m in modes[1:]:
        _check_same_grid(grid, m.grid)
    stack = np.stack([m.samples for m in modes])
    g = (stack * grid.weights) @ stack.T
    return 0.5 * (g + g.T)
