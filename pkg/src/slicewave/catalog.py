"""Closed-form test functions with paired spectra and densities.

Every entry couples a vectorized slice-plane evaluator with the closed
form of its half-line or band-limited transform, so theorem checks always
run against an independent analytic oracle.  The pairs themselves are
validated by dense quadrature before any suite uses them (`oracle_check`).

Families
--------
hardy-rational    f(z) = 1/(z+a)^k      <->  sqrt(2 pi) (-w)^{k-1} e^{aw} / (k-1)!
bandlimited-sinc  f(z) = sin(Bz)/z      <->  sqrt(pi/2) on [-B, B]
bandlimited-fejer f(z) = c sin^2(Bz/2)/z^2  <->  triangle (1 - |w|/B) on [-B, B]
bergman-rational  f(z) = (1/sqrt(2 pi)) (z+a)^{-2}  <->  density (-w) e^{aw}
negative-control  boundary 1/(a^2+v^2)  <->  two-sided sqrt(pi/2) e^{-a|w|} / a
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import ImaginaryUnit, Multivector, Paravector, imaginary_unit_of
from .fourier import LineSamples
from .numerics import UniformGrid, plan_halfline, simpson_weights
from .slices import embed_complex

__all__ = [
    "CatalogEntry",
    "IntrinsicFunction",
    "ScalarBoundaryFunction",
    "catalog_lookup",
    "catalog_names",
    "oracle_check",
    "OracleCheckError",
]

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


class OracleCheckError(RuntimeError):
    """A catalog evaluator/spectrum pair failed its dense-quadrature check."""


class IntrinsicFunction:
    """Slice-preserving function defined by one complex evaluator.

    The same complex map phi drives every slice: the value at u + Iv is
    phi(u + iv) embedded in the plane of I, so magnitudes are
    slice-independent and cross-slice checks have an exact reference.
    """

    def __init__(self, name: str, fn: Callable[[np.ndarray], np.ndarray]):
        self.name = name
        self.fn = fn

    def complex_values(self, z) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(z, dtype=complex)), dtype=complex)

    def rows(self, unit: ImaginaryUnit, u: float, vnodes: np.ndarray) -> np.ndarray:
        vals = self.complex_values(u + 1j * np.asarray(vnodes, dtype=float))
        return embed_complex(vals, unit)

    def real_axis_rows(self, n: int, xi: np.ndarray) -> np.ndarray:
        """Samples on the real axis, where intrinsic values are real scalars."""
        vals = self.complex_values(np.asarray(xi, dtype=float) + 0j)
        out = np.zeros((vals.shape[0], 1 << n))
        out[:, 0] = vals.real
        return out

    def magnitudes(self, unit: ImaginaryUnit, unodes, vnodes) -> np.ndarray:
        z = np.asarray(unodes, dtype=float)[:, None] + 1j * np.asarray(
            vnodes, dtype=float
        )[None, :]
        return np.abs(self.complex_values(z))

    def eval(self, x: Paravector) -> Multivector:
        unit = imaginary_unit_of(x)
        val = self.complex_values(np.array([complex(x.x0, x.vec_norm())]))
        return Multivector(unit.n, embed_complex(val, unit)[0])

    def boundary_samples(self, unit: ImaginaryUnit, grid: UniformGrid) -> LineSamples:
        return LineSamples(grid, self.rows(unit, 0.0, grid.nodes()))

    def shifted_boundary_samples(
        self, unit: ImaginaryUnit, grid: UniformGrid, shift: float
    ) -> LineSamples:
        return LineSamples(grid, self.rows(unit, shift, grid.nodes()))


class ScalarBoundaryFunction:
    """Real scalar boundary data with no slice structure (negative controls)."""

    def __init__(self, name: str, fn: Callable[[np.ndarray], np.ndarray]):
        self.name = name
        self.fn = fn

    def rows(self, unit: ImaginaryUnit, u: float, vnodes: np.ndarray) -> np.ndarray:
        if u != 0.0:
            raise ValueError(f"{self.name} provides boundary data only")
        vals = np.asarray(self.fn(np.asarray(vnodes, dtype=float)), dtype=float)
        out = np.zeros((vals.shape[0], 1 << unit.n))
        out[:, 0] = vals
        return out

    def boundary_samples(self, unit: ImaginaryUnit, grid: UniformGrid) -> LineSamples:
        return LineSamples(grid, self.rows(unit, 0.0, grid.nodes()))


@dataclass(frozen=True)
class CatalogEntry:
    """Named closed-form pair with its parameters and oracle identifiers."""

    name: str
    family: str
    params: dict[str, float] = field(default_factory=dict)
    evaluator_id: str = ""
    spectrum_id: str = ""

    def describe(self) -> str:
        ps = " ".join(f"{k}={v:g}" for k, v in sorted(self.params.items()))
        return f"{self.name} [{self.family}] {ps}".strip()


def _hardy_rational(a: float, k: int):
    if a <= 0 or k not in (1, 2, 3):
        raise ValueError(f"hardy-rational needs a > 0 and k in {{1,2,3}}, got a={a} k={k}")
    fn = IntrinsicFunction(f"hardy-rational a={a:g} k={k}", lambda z: (z + a) ** (-k))
    fact = math.factorial(k - 1)

    def spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return np.where(w <= 0.0, SQRT_TWO_PI * (-w) ** (k - 1) * np.exp(a * w) / fact, 0.0)

    return fn, spectrum


def _bandlimited_sinc(B: float):
    if B <= 0:
        raise ValueError(f"bandlimited-sinc needs B > 0, got {B}")

    def phi(z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, complex(B))
        nz = np.abs(z) > 0
        out[nz] = np.sin(B * z[nz]) / z[nz]
        return out

    fn = IntrinsicFunction(f"bandlimited-sinc B={B:g}", phi)

    def spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return np.where(np.abs(w) <= B, math.sqrt(math.pi / 2.0), 0.0)

    return fn, spectrum


def _bandlimited_fejer(B: float):
    if B <= 0:
        raise ValueError(f"bandlimited-fejer needs B > 0, got {B}")
    scale = 4.0 / (B * SQRT_TWO_PI)

    def phi(z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, complex(B / SQRT_TWO_PI))
        nz = np.abs(z) > 0
        out[nz] = scale * np.sin(B * z[nz] / 2.0) ** 2 / z[nz] ** 2
        return out

    fn = IntrinsicFunction(f"bandlimited-fejer B={B:g}", phi)

    def spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return np.where(np.abs(w) <= B, 1.0 - np.abs(w) / B, 0.0)

    return fn, spectrum


def _bergman_rational(a: float):
    if a <= 0:
        raise ValueError(f"bergman-rational needs a > 0, got {a}")
    fn = IntrinsicFunction(
        f"bergman-rational a={a:g}", lambda z: (z + a) ** (-2.0) / SQRT_TWO_PI
    )

    def density(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return np.where(w <= 0.0, (-w) * np.exp(a * w), 0.0)

    return fn, density


def _negative_control(a: float):
    if a <= 0:
        raise ValueError(f"negative-control needs a > 0, got {a}")
    fn = ScalarBoundaryFunction(
        f"negative-control a={a:g}", lambda v: 1.0 / (a**2 + v**2)
    )

    def spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return math.sqrt(math.pi / 2.0) / a * np.exp(-a * np.abs(w))

    return fn, spectrum


_FAMILIES = {
    "hardy-rational": (_hardy_rational, {"a": 1.0, "k": 2}),
    "bandlimited-sinc": (_bandlimited_sinc, {"B": 1.0}),
    "bandlimited-fejer": (_bandlimited_fejer, {"B": 1.0}),
    "bergman-rational": (_bergman_rational, {"a": 1.0}),
    "negative-control": (_negative_control, {"a": 1.0}),
}


def catalog_names() -> list[str]:
    out = []
    for family, (_, defaults) in _FAMILIES.items():
        ps = " ".join(f"{k}={v:g}" for k, v in defaults.items())
        out.append(f"{family} {ps}".strip())
    return out


def catalog_lookup(name: str):
    """Resolve 'family key=value ...' to (entry, evaluator, spectrum closure).

    The spectrum closure is the paired transform for transform families and
    the half-line density for the Bergman family.
    """
    tokens = name.split()
    if not tokens:
        raise KeyError("empty catalog name")
    family = tokens[0]
    if family not in _FAMILIES:
        raise KeyError(f"unknown catalog family {family!r}; see list-catalog")
    builder, defaults = _FAMILIES[family]
    params = dict(defaults)
    for tok in tokens[1:]:
        if "=" not in tok:
            raise KeyError(f"malformed catalog parameter {tok!r}")
        key, val = tok.split("=", 1)
        if key not in params:
            raise KeyError(f"unknown parameter {key!r} for family {family!r}")
        params[key] = type(defaults[key])(float(val))
    fn, spectrum = builder(**params)
    entry = CatalogEntry(
        name=f"{family} " + " ".join(f"{k}={v:g}" for k, v in params.items()),
        family=family,
        params={k: float(v) for k, v in params.items()},
        evaluator_id=f"{family}:evaluator",
        spectrum_id=f"{family}:spectrum",
    )
    return entry, fn, spectrum


def _dense_halfline_value(spectrum, z: complex) -> complex:
    plan = plan_halfline(z.real, 1e-16, density=512.0)
    grid = plan.grid()
    w = grid.nodes()
    vals = np.exp(z * w) * spectrum(w)
    wts = simpson_weights(grid.count, grid.spacing)
    return complex((wts * vals).sum()) / SQRT_TWO_PI


def _dense_band_value(spectrum, B: float, z: complex) -> complex:
    grid = UniformGrid(-B, B, 8193)
    w = grid.nodes()
    vals = np.exp(1j * z * w) * spectrum(w)
    wts = simpson_weights(grid.count, grid.spacing)
    return complex((wts * vals).sum()) / SQRT_TWO_PI


def _dense_twosided_value(spectrum, decay: float, v: float) -> complex:
    halfwidth = 40.0 / decay
    grid = UniformGrid(-halfwidth, halfwidth, 16385)
    w = grid.nodes()
    vals = np.exp(1j * v * w) * spectrum(w)
    wts = simpson_weights(grid.count, grid.spacing)
    return complex((wts * vals).sum()) / SQRT_TWO_PI


def oracle_check(name: str, tol: float = 1e-10) -> float:
    """Dense-quadrature consistency of one evaluator/spectrum pair.

    Inverts the closed-form spectrum numerically at a handful of points
    and compares with the evaluator; returns the max abs deviation and
    raises OracleCheckError beyond `tol`.
    """
    entry, fn, spectrum = catalog_lookup(name)
    worst = 0.0
    if entry.family in ("hardy-rational", "bergman-rational"):
        # both pairs satisfy f(z) = (1/sqrt(2 pi)) int_{-inf}^0 e^{zw} sigma(w) dw
        for z in [complex(0.6, -1.3), complex(1.0, 0.0), complex(2.5, 2.0)]:
            got = _dense_halfline_value(spectrum, z)
            want = complex(fn.complex_values(np.array([z]))[0])
            worst = max(worst, abs(got - want))
    elif entry.family in ("bandlimited-sinc", "bandlimited-fejer"):
        B = entry.params["B"]
        for z in [complex(0.0, 0.0), complex(1.7, 0.4), complex(-2.0, 1.0)]:
            got = _dense_band_value(spectrum, B, z)
            want = complex(fn.complex_values(np.array([z]))[0])
            worst = max(worst, abs(got - want))
    elif entry.family == "negative-control":
        a = entry.params["a"]
        for v in [0.0, 0.8, 3.0]:
            got = _dense_twosided_value(spectrum, a, v)
            want = 1.0 / (a**2 + v**2)
            worst = max(worst, abs(got - want))
    if worst > tol:
        raise OracleCheckError(
            f"catalog pair {entry.name!r} failed its dense-quadrature "
            f"self-check: max deviation {worst:.3e} > {tol:.1e}"
        )
    return worst
