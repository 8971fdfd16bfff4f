"""Slice-plane machinery: extension and representation formulas, the
even/odd pair decomposition, holomorphic splitting along frame blades,
intrinsic components, and a discrete Cauchy-Riemann residual.

A function value on the slice of I lives in the plane spanned by 1 and I;
general algebra-valued data decomposes into such plane-valued components
along the blades of a completed frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    BasisFrame,
    ImaginaryUnit,
    Multivector,
    Paravector,
    frame_change_matrix,
    imaginary_unit_of,
    mv_mul,
)
from .numerics import UniformGrid

__all__ = [
    "SliceComplex",
    "SlicePair",
    "SampledSliceFunction",
    "alpha_beta",
    "ext_eval",
    "representation_eval",
    "split_holomorphic",
    "intrinsic_decompose",
    "cr_residual",
    "embed_complex",
    "project_complex",
]


@dataclass(frozen=True)
class SliceComplex:
    """Point u + I v tagged with its slice unit I."""

    u: float
    v: float
    slice: ImaginaryUnit

    def conj(self) -> "SliceComplex":
        return SliceComplex(self.u, -self.v, self.slice)

    def to_paravector(self) -> Paravector:
        return self.slice.to_paravector(self.u, self.v)

    def as_complex(self) -> complex:
        return complex(self.u, self.v)


@dataclass(frozen=True)
class SlicePair:
    """Function values at the mirror pair u +- J v on one slice."""

    fplus: Multivector
    fminus: Multivector
    J: ImaginaryUnit
    u: float
    v: float

    def __post_init__(self) -> None:
        if self.fplus.n != self.fminus.n or self.fplus.n != self.J.n:
            raise ValueError("slice pair members live in different algebras")


def embed_complex(values: np.ndarray, unit: ImaginaryUnit) -> np.ndarray:
    """Complex samples a + i b -> coefficient rows a * 1 + b * I."""
    values = np.asarray(values, dtype=complex)
    flat = values.reshape(-1)
    out = np.zeros(flat.shape + (1 << unit.n,))
    out[:, 0] = flat.real
    for i, c in enumerate(unit.uvec):
        out[:, 1 << i] += flat.imag * c
    return out.reshape(values.shape + (1 << unit.n,))


def project_complex(rows: np.ndarray, unit: ImaginaryUnit) -> np.ndarray:
    """Slice-plane coordinates (a, b) of rows a * 1 + b * I, as a + i b."""
    rows = np.asarray(rows, dtype=float)
    a = rows[..., 0]
    b = np.zeros_like(a)
    for i, c in enumerate(unit.uvec):
        b = b + rows[..., 1 << i] * c
    return a + 1j * b


@dataclass(frozen=True)
class SampledSliceFunction:
    """Samples of a slice restriction on a uniform v-grid (optionally u x v).

    values has shape (Nv, 2^n) for boundary-style data or (Nu, Nv, 2^n)
    when a u-grid is present.  Pairing v with -v requires the v-grid to be
    symmetric about 0.
    """

    slice: ImaginaryUnit
    vgrid: UniformGrid
    values: np.ndarray
    ugrid: UniformGrid | None = None

    def __post_init__(self) -> None:
        if self.vgrid.count < 8:
            raise ValueError("sampled slice function needs at least 8 v-nodes")
        vals = np.asarray(self.values, dtype=float)
        dim = 1 << self.slice.n
        if self.ugrid is None:
            expected = (self.vgrid.count, dim)
        else:
            expected = (self.ugrid.count, self.vgrid.count, dim)
        if vals.shape != expected:
            raise ValueError(f"values shape {vals.shape} does not match grids {expected}")
        object.__setattr__(self, "values", vals)

    def require_symmetric(self) -> None:
        if not self.vgrid.is_symmetric():
            raise ValueError("operation requires a v-grid symmetric about 0")


def alpha_beta(p: SlicePair) -> tuple[Multivector, Multivector]:
    """Even/odd pair of the mirror values: alpha + I_x beta rebuilds f.

    alpha = (f(u-Jv) + f(u+Jv)) / 2 and beta = J (f(u-Jv) - f(u+Jv)) / 2;
    both are independent of which slice supplied the mirror values.
    """
    alpha = 0.5 * (p.fminus + p.fplus)
    beta = 0.5 * mv_mul(p.J.to_multivector(), p.fminus - p.fplus)
    return alpha, beta


def ext_eval(p: SlicePair, target: ImaginaryUnit) -> Multivector:
    """Slice extension: value at u + Kv from mirror values on another slice.

    Restriction to the source slice must reproduce the stored value
    bit-exactly, so that case short-circuits the formula (whose K*J
    product would otherwise reintroduce rounding).
    """
    if target.uvec == p.J.uvec:
        return p.fplus
    alpha, beta = alpha_beta(p)
    return alpha + mv_mul(target.to_multivector(), beta)


def representation_eval(p: SlicePair, x: Paravector, tol: float = 1e-10) -> Multivector:
    """Two-point evaluation at x = u + I_x v from mirror values at u +- Jv.

    Computed as ((1 - I_x J)/2) f(u+Jv) + ((1 + I_x J)/2) f(u-Jv), which
    must agree with ext_eval at I_x; x has to sit on the sphere through
    the pair's (u, v).
    """
    scale = 1.0 + abs(p.u) + abs(p.v)
    if abs(x.x0 - p.u) > tol * scale or abs(x.vec_norm() - abs(p.v)) > tol * scale:
        raise ValueError(
            f"point ({x.x0}, |vec|={x.vec_norm():.6g}) does not match "
            f"slice pair at (u={p.u}, v={p.v})"
        )
    n = p.fplus.n
    one = Multivector.scalar(n, 1.0)
    ix_j = mv_mul(imaginary_unit_of(x).to_multivector(), p.J.to_multivector())
    plus_coef = 0.5 * (one - ix_j)
    minus_coef = 0.5 * (one + ix_j)
    return mv_mul(plus_coef, p.fplus) + mv_mul(minus_coef, p.fminus)


def _paired_alpha_beta_grid(
    fplus: np.ndarray, fminus: np.ndarray, unit: ImaginaryUnit
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized alpha/beta over (..., dim) coefficient rows."""
    L = unit.left_matrix()
    alpha = 0.5 * (fminus + fplus)
    beta = 0.5 * (fminus - fplus) @ L.T
    return alpha, beta


def _mirror_values(f: SampledSliceFunction) -> np.ndarray:
    """Values at (u, -v) nodes, assuming a symmetric v-grid."""
    f.require_symmetric()
    return f.values[..., ::-1, :] if f.ugrid is not None else f.values[::-1, :]


def split_holomorphic(
    f: SampledSliceFunction, frame: BasisFrame
) -> dict[int, np.ndarray]:
    """Split slice data into plane-valued holomorphic components.

    Returns one complex array per blade subset of the frame units
    {2, ..., n} (bitmask keys over those units); component A' carries
    a + i b with the sampled value equal to sum (a + I_1 b) I_{A'}.
    The frame's first unit must be the data's slice.
    """
    if not f.slice.close_to(frame.units[0], tol=1e-12):
        raise ValueError("frame's first unit must equal the sampled slice")
    n = frame.n
    dim = 1 << n
    M = frame_change_matrix(frame)
    flat = f.values.reshape(-1, dim)
    coords = np.linalg.solve(M, flat.T).T.reshape(f.values.shape)
    out: dict[int, np.ndarray] = {}
    for sub in range(1 << (n - 1)):
        bits = sub << 1  # blade over units {2..n}
        out[bits] = coords[..., bits] + 1j * coords[..., bits | 1]
    return out


def recompose_split(
    components: dict[int, np.ndarray], frame: BasisFrame
) -> np.ndarray:
    """Inverse of split_holomorphic: coefficient rows from components."""
    M = frame_change_matrix(frame)
    n = frame.n
    shape = next(iter(components.values())).shape
    coords = np.zeros(shape + (1 << n,))
    for bits, comp in components.items():
        coords[..., bits] = comp.real
        coords[..., bits | 1] = comp.imag
    return coords @ M.T


def intrinsic_decompose(
    fplus_grid: SampledSliceFunction,
    fminus_grid: SampledSliceFunction,
    frame: BasisFrame,
) -> dict[int, np.ndarray]:
    """Intrinsic components h_A from mirror sample grids.

    Per node, alpha expands as sum Re{h_A} I_A and beta as sum Im{h_A} I_A
    over all 2^n frame blades; returns complex arrays keyed by the blade
    bitmask.  Both grids must share the slice, which must lead the frame.
    """
    if fplus_grid.vgrid != fminus_grid.vgrid or fplus_grid.ugrid != fminus_grid.ugrid:
        raise ValueError("mirror grids do not match")
    if not fplus_grid.slice.close_to(fminus_grid.slice, tol=1e-12):
        raise ValueError("mirror grids carry different slices")
    if not fplus_grid.slice.close_to(frame.units[0], tol=1e-12):
        raise ValueError("frame's first unit must equal the sampled slice")
    n = frame.n
    dim = 1 << n
    alpha, beta = _paired_alpha_beta_grid(
        fplus_grid.values, fminus_grid.values, frame.units[0]
    )
    M = frame_change_matrix(frame)
    re = np.linalg.solve(M, alpha.reshape(-1, dim).T).T.reshape(alpha.shape)
    im = np.linalg.solve(M, beta.reshape(-1, dim).T).T.reshape(beta.shape)
    return {bits: re[..., bits] + 1j * im[..., bits] for bits in range(dim)}


def recompose_intrinsic(
    components: dict[int, np.ndarray], frame: BasisFrame
) -> np.ndarray:
    """Coefficient rows of sum h_A I_A at the +v nodes."""
    M = frame_change_matrix(frame)
    L1 = frame.units[0].left_matrix()
    n = frame.n
    shape = next(iter(components.values())).shape
    re = np.zeros(shape + (1 << n,))
    im = np.zeros(shape + (1 << n,))
    for bits, comp in components.items():
        re[..., bits] = comp.real
        im[..., bits] = comp.imag
    alpha = re @ M.T
    beta = im @ M.T
    return alpha + beta @ L1.T


def cr_residual(f: SampledSliceFunction) -> tuple[float, float]:
    """Max-norm residuals of the slice Cauchy-Riemann system on the grid.

    alpha and beta come from the mirror pairing at +-v, derivatives are
    second-order central differences, and residuals are taken over
    interior nodes only.  Returns (max |d_u a - d_v b|, max |d_v a + d_u b|).
    """
    if f.ugrid is None:
        raise ValueError("Cauchy-Riemann residual needs a 2-D u x v grid")
    if f.ugrid.count < 3 or f.vgrid.count < 3:
        raise ValueError("grid too small for central differences")
    alpha, beta = _paired_alpha_beta_grid(f.values, _mirror_values(f), f.slice)
    hu = f.ugrid.spacing
    hv = f.vgrid.spacing
    d_u = lambda g: (g[2:, 1:-1, :] - g[:-2, 1:-1, :]) / (2 * hu)
    d_v = lambda g: (g[1:-1, 2:, :] - g[1:-1, :-2, :]) / (2 * hv)
    r1 = d_u(alpha) - d_v(beta)
    r2 = d_v(alpha) + d_u(beta)
    frob = lambda r: float(np.sqrt((r**2).sum(axis=-1)).max())
    return frob(r1), frob(r2)
