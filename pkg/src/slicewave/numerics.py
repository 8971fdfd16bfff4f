"""Shared grids, quadrature rules, norms, and half-line truncation plans.

Composite Simpson is the reference rule for oscillatory transform
integrands; trapezoid is used for norms because it is robust to endpoint
kinks.  Both are exposed as weight vectors so callers can fuse the rule
into vectorized kernel evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "UniformGrid",
    "HalfLinePlan",
    "Tolerances",
    "simpson_weights",
    "trapezoid_weights",
    "integrate_simpson",
    "integrate_trapezoid",
    "lp_norm",
    "plan_halfline",
]


@dataclass(frozen=True)
class Tolerances:
    """Central tolerance record; every suite reads these defaults."""

    quadrature_tol: float = 1e-9
    identity_tol: float = 1e-10
    theorem_tol: float = 1e-6
    support_tol: float = 1e-6


@dataclass(frozen=True)
class UniformGrid:
    """Closed interval [lo, hi] sampled at `count` equispaced nodes."""

    lo: float
    hi: float
    count: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError(f"grid requires lo < hi, got [{self.lo}, {self.hi}]")
        if self.count < 2:
            raise ValueError(f"grid requires at least 2 nodes, got {self.count}")

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / (self.count - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        return abs(self.lo + self.hi) <= tol * max(1.0, abs(self.hi))


def simpson_weights(count: int, spacing: float) -> np.ndarray:
    """Composite Simpson weights for `count` equispaced nodes.

    Simpson needs an odd node count; an even count is handled by applying
    Simpson to the first count-1 nodes and closing the last interval with
    a trapezoid panel.
    """
    if count < 3:
        raise ValueError(f"Simpson rule needs at least 3 nodes, got {count}")
    if count % 2 == 1:
        w = np.ones(count)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return w * (spacing / 3.0)
    w = np.zeros(count)
    w[: count - 1] = simpson_weights(count - 1, spacing)
    w[-2] += spacing / 2.0
    w[-1] += spacing / 2.0
    return w


def trapezoid_weights(count: int, spacing: float) -> np.ndarray:
    if count < 2:
        raise ValueError(f"trapezoid rule needs at least 2 nodes, got {count}")
    w = np.full(count, spacing)
    w[0] = w[-1] = spacing / 2.0
    return w


def integrate_simpson(values: np.ndarray, grid: UniformGrid) -> np.ndarray | float:
    """Composite-Simpson integral of node values along axis 0.

    `values` may be scalar samples of shape (N,) or stacked coefficient
    rows of shape (N, d); the result matches the trailing shape.
    """
    values = np.asarray(values)
    if values.shape[0] != grid.count:
        raise ValueError(
            f"value count {values.shape[0]} does not match grid count {grid.count}"
        )
    w = simpson_weights(grid.count, grid.spacing)
    return np.tensordot(w, values, axes=(0, 0))


def integrate_trapezoid(values: np.ndarray, grid: UniformGrid) -> np.ndarray | float:
    values = np.asarray(values)
    if values.shape[0] != grid.count:
        raise ValueError(
            f"value count {values.shape[0]} does not match grid count {grid.count}"
        )
    w = trapezoid_weights(grid.count, grid.spacing)
    return np.tensordot(w, values, axes=(0, 0))


def node_magnitudes(values: np.ndarray) -> np.ndarray:
    """Per-node magnitude: |v_i| for scalars, Frobenius norm for rows."""
    values = np.asarray(values)
    if np.iscomplexobj(values):
        mags = np.abs(values)
        if values.ndim == 1:
            return mags
        return np.sqrt((mags**2).sum(axis=-1))
    if values.ndim == 1:
        return np.abs(values)
    return np.sqrt((values**2).sum(axis=-1))


def lp_norm(values: np.ndarray, grid: UniformGrid, p: float) -> float:
    """Trapezoid-weighted L^p norm of sampled values; p = inf is the max.

    Node magnitudes are Frobenius norms when `values` carries coefficient
    rows, so the norm applies uniformly to scalar and algebra-valued data.
    """
    if p < 1:
        raise ValueError(f"lp_norm requires p >= 1, got {p}")
    mags = node_magnitudes(values)
    if mags.shape[0] != grid.count:
        raise ValueError(
            f"value count {mags.shape[0]} does not match grid count {grid.count}"
        )
    if math.isinf(p):
        return float(mags.max())
    w = trapezoid_weights(grid.count, grid.spacing)
    return float((w * mags**p).sum() ** (1.0 / p))


@dataclass(frozen=True)
class HalfLinePlan:
    """Truncation plan for integrals over (-inf, 0] against e^{decay*w}.

    The cutoff W satisfies e^{-decay*W} * mass_bound <= tol, so the
    discarded tail is below tol/decay in integral mass.
    """

    decay_rate: float
    tol: float
    mass_bound: float
    cutoff: float
    count: int

    def grid(self) -> UniformGrid:
        return UniformGrid(-self.cutoff, 0.0, self.count)

    def tail_bound(self) -> float:
        """Analytic bound on the discarded tail integral mass."""
        return self.mass_bound * math.exp(-self.decay_rate * self.cutoff) / self.decay_rate


def plan_halfline(
    decay_rate: float,
    tol: float,
    density: float = 128.0,
    mass_bound: float = 1.0,
) -> HalfLinePlan:
    """Plan a half-line grid on [-W, 0] for integrands bounded by
    mass_bound * e^{decay_rate * w}.

    `density` is nodes per unit w; the node count is clamped to
    [65, 2**20] and forced odd for the Simpson rule.  Reconstructions at
    the boundary (decay_rate <= 0) cannot be truncated and are rejected.
    """
    if decay_rate <= 0:
        raise ValueError(
            "half-line truncation requires a positive decay rate; "
            "boundary targets (u = 0) cannot be reconstructed"
        )
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    cutoff = math.log(max(mass_bound, tol) / tol) / decay_rate
    cutoff = max(cutoff, 1.0 / decay_rate)
    count = int(min(max(math.ceil(cutoff * density), 65), 2**20))
    if count % 2 == 0:
        count += 1
    return HalfLinePlan(decay_rate, tol, mass_bound, cutoff, count)
