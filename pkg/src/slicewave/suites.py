"""Verification suites wired to the library operations.

Each suite emits CheckRecord rows: a measured quantity, the threshold it
must meet, and a statement slug identifying which mathematical fact the
check exercises.  Suites are deterministic given the configured seed and
run sequentially unless suite-level parallelism is requested.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import (
    BasisFrame,
    BladeIndex,
    ImaginaryUnit,
    Multivector,
    Paravector,
    blade_product,
    complete_basis,
    frame_blades,
    frame_change_matrix,
    frame_coords,
    imaginary_unit_of,
    left_mult_matrix,
    mv_mul,
    mv_mul_rows,
)
from .catalog import catalog_lookup, catalog_names, oracle_check
from .config import SuiteConfig
from .fourier import (
    LineSamples,
    SpectrumSamples,
    cft_forward,
    cft_inverse,
    hausdorff_young_margin,
    plancherel_defect,
    support_fraction,
)
from .numerics import (
    UniformGrid,
    lp_norm,
    plan_halfline,
    simpson_weights,
    trapezoid_weights,
)
from .paley_wiener import (
    BandlimitedSpectrum,
    BergmanDensity,
    GrowthBound,
    HardyBoundaryData,
    NotHardyDataError,
    bergman_density_extract,
    bergman_norm,
    bergman_norm_margins,
    bergman_pointwise_margins,
    bergman_synthesize,
    boundary_on_slice,
    cauchy_kernel,
    cauchy_kernel_quadrature,
    hardy_kernel,
    hardy_kernel_quadrature,
    hardy_norm,
    hardy_reconstruct_fourier,
    hardy_reconstruct_poisson,
    hardy_slice_spectrum,
    hardy_support_check,
    poisson_kernel,
    pw_growth_margin,
    pw_kernel,
    pw_kernel_quadrature,
    pw_synthesize,
)
from .report import CheckRecord, Report
from .slices import (
    SampledSliceFunction,
    SliceComplex,
    SlicePair,
    alpha_beta,
    cr_residual,
    embed_complex,
    ext_eval,
    intrinsic_decompose,
    project_complex,
    recompose_intrinsic,
    recompose_split,
    representation_eval,
    split_holomorphic,
)

__all__ = ["run_suite", "build_slice_set", "SUITE_ORDER"]

SUITE_ORDER = ("algebra", "splitting", "fourier", "hardy", "compact-pw", "bergman")


def build_slice_set(n: int, count: int, rng_seed: int) -> list[ImaginaryUnit]:
    """Slice units from a seeded frame plus normalized midpoints.

    The first unit is a random seed direction, completed to a frame; the
    remaining slots alternate frame units and midpoints (I_r + I_s)/|.|.
    """
    rng = np.random.default_rng(rng_seed)
    seed_vec = rng.standard_normal(n)
    seed = ImaginaryUnit.make(seed_vec)
    frame = complete_basis(seed, rng_seed + 1)
    slices = [frame.units[0]]
    idx = 1
    while len(slices) < count and idx < n:
        slices.append(frame.units[idx])
        idx += 1
    r = 0
    while len(slices) < count:
        a = frame.units[r % n].vec_array()
        b = frame.units[(r + 1) % n].vec_array()
        slices.append(ImaginaryUnit.make(a + b))
        r += 1
    return slices[:count]


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.records: list[CheckRecord] = []
        self._t0 = time.perf_counter()

    def add(self, check: str, anchor: str, value: float, threshold: float, *,
            direction: str = "le") -> None:
        """direction 'le': pass if value <= threshold; 'ge': value >= threshold."""
        now = time.perf_counter()
        runtime = (now - self._t0) * 1e3
        self._t0 = now
        passed = value <= threshold if direction == "le" else value >= threshold
        self.records.append(
            CheckRecord(self.suite, check, anchor, float(value), float(threshold),
                        bool(passed), runtime)
        )


# ---------------------------------------------------------------------------
# algebra


def _suite_algebra(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("algebra")
    tol = cfg.tolerances

    # exhaustive blade associativity and anticommutation, n <= 4
    violations = 0
    for n in range(1, 5):
        dim = 1 << n
        for a in range(dim):
            for b in range(dim):
                sab, ab = blade_product(BladeIndex(n, a), BladeIndex(n, b))
                for c in range(dim):
                    s1, left = blade_product(ab, BladeIndex(n, c))
                    sbc, bc = blade_product(BladeIndex(n, b), BladeIndex(n, c))
                    s2, right = blade_product(BladeIndex(n, a), bc)
                    if sab * s1 != sbc * s2 or left.bits != right.bits:
                        violations += 1
    rec.add("blade-associativity-exhaustive", "blade-associativity", violations, 0)

    anti = 0
    for n in range(1, 5):
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                er, es = BladeIndex(n, 1 << (r - 1)), BladeIndex(n, 1 << (s - 1))
                s1, b1 = blade_product(er, es)
                s2, b2 = blade_product(es, er)
                total = Multivector.basis_blade(n, b1.bits, s1) + Multivector.basis_blade(n, b2.bits, s2)
                want = Multivector.scalar(n, -2.0 if r == s else 0.0)
                if not total.allclose(want, tol=0.0):
                    anti += 1
    rec.add("blade-anticommutation-exhaustive", "blade-relations", anti, 0)

    # 20 seeded frames: defining relations within 1e-12
    rng = np.random.default_rng(cfg.rng_seed)
    worst = 0.0
    for k in range(20):
        seed = ImaginaryUnit.make(rng.standard_normal(cfg.n))
        frame = complete_basis(seed, cfg.rng_seed + 100 + k)
        worst = max(worst, frame.anticommutator_defect())
    rec.add("frame-anticommutator-20-seeds", "frame-relations", worst, 1e-12)

    # paravector norm multiplicativity within 4 ulp
    worst = 0.0
    for _ in range(200):
        x = Paravector.make(rng.standard_normal(), rng.standard_normal(cfg.n))
        prod = mv_mul(x.to_multivector(), x.conj().to_multivector())
        worst = max(worst, abs(prod.norm() - x.norm() ** 2) / x.norm() ** 2)
    rec.add("paravector-norm-multiplicativity", "paravector-inverse", worst,
            4 * np.finfo(float).eps)

    # paravector inverse identity
    worst = 0.0
    for _ in range(100):
        x = Paravector.make(rng.standard_normal(), rng.standard_normal(cfg.n))
        prod = mv_mul(x.to_multivector(), x.inv().to_multivector())
        worst = max(worst, float(np.abs(prod.coeffs - Multivector.scalar(cfg.n, 1.0).coeffs).max()))
    rec.add("paravector-inverse-identity", "paravector-inverse", worst, 1e-12)

    # frame coordinate round trips within 1e-10
    worst = 0.0
    for k in range(100):
        seed = ImaginaryUnit.make(rng.standard_normal(cfg.n))
        frame = complete_basis(seed, cfg.rng_seed + 300 + k)
        coords = rng.standard_normal(1 << cfg.n)
        m = Multivector(cfg.n, frame_change_matrix(frame) @ coords)
        worst = max(worst, float(np.abs(frame_coords(m, frame) - coords).max()))
    rec.add("frame-coords-roundtrip", "frame-decomposition", worst, 1e-10)
    return rec.records


# ---------------------------------------------------------------------------
# splitting


def _random_slice_field(rng, n: int, grid: UniformGrid) -> np.ndarray:
    return rng.standard_normal((grid.count, 1 << n))


def _suite_splitting(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("splitting")
    tol = cfg.tolerances
    rng = np.random.default_rng(cfg.rng_seed + 1)
    vgrid = UniformGrid(-2.0, 2.0, 33)

    worst_rec, worst_pyth = 0.0, 0.0
    for k in range(100):
        n = (2, 3, 4)[k % 3]
        seed = ImaginaryUnit.make(rng.standard_normal(n))
        frame = complete_basis(seed, cfg.rng_seed + 500 + k)
        vals = _random_slice_field(rng, n, vgrid)
        f = SampledSliceFunction(frame.units[0], vgrid, vals)
        comps = split_holomorphic(f, frame)
        back = recompose_split(comps, frame)
        worst_rec = max(worst_rec, float(np.abs(back - vals).max()))
        sq = sum(np.abs(c) ** 2 for c in comps.values())
        worst_pyth = max(worst_pyth, float(np.abs(sq - (vals**2).sum(axis=-1)).max()))
    rec.add("split-recompose-identity", "splitting-lemma", worst_rec, tol.identity_tol)
    rec.add("split-pythagorean-identity", "splitting-pythagorean", worst_pyth, tol.identity_tol)

    # intrinsic decomposition: recomposition and the sqrt(2)/2 bound
    _, fh, _ = catalog_lookup("hardy-rational a=1 k=2")
    worst_rec, worst_bound = 0.0, -math.inf
    for k in range(40):
        n = (2, 3)[k % 2]
        seed = ImaginaryUnit.make(rng.standard_normal(n))
        frame = complete_basis(seed, cfg.rng_seed + 700 + k)
        unit = frame.units[0]
        if k % 2 == 0:
            vplus = rng.standard_normal((vgrid.count, 1 << n))
            vminus = rng.standard_normal((vgrid.count, 1 << n))
        else:
            vplus = fh.rows(unit, 1.0, vgrid.nodes())
            vminus = fh.rows(unit, 1.0, -vgrid.nodes())
        fp = SampledSliceFunction(unit, vgrid, vplus)
        fm = SampledSliceFunction(unit, vgrid, vminus)
        comps = intrinsic_decompose(fp, fm, frame)
        back = recompose_intrinsic(comps, frame)
        worst_rec = max(worst_rec, float(np.abs(back - vplus).max()))
        mag_p = np.sqrt((vplus**2).sum(axis=-1))
        mag_m = np.sqrt((vminus**2).sum(axis=-1))
        envelope = (math.sqrt(2.0) / 2.0) * (mag_m + mag_p)
        for comp in comps.values():
            worst_bound = max(worst_bound, float((np.abs(comp) - envelope).max()))
    rec.add("intrinsic-recompose-identity", "intrinsic-decomposition", worst_rec, tol.identity_tol)
    rec.add("intrinsic-component-bound", "intrinsic-bound", worst_bound, tol.identity_tol)

    # representation formula: both forms agree; I-independence of alpha/beta
    slices = build_slice_set(cfg.n, max(3, cfg.slice_count), cfg.rng_seed + 2)
    worst_forms, worst_indep, worst_restrict = 0.0, 0.0, 0.0
    for k in range(30):
        u0, v0 = rng.standard_normal() * 0.5 + 1.5, rng.standard_normal() + 0.5
        phi = fh.complex_values(np.array([complex(u0, v0), complex(u0, -v0)]))
        target = ImaginaryUnit.make(rng.standard_normal(cfg.n))
        x = target.to_paravector(u0, abs(v0))
        ab_ref = None
        for J in slices:
            fplus = Multivector(cfg.n, fh.rows(J, u0, np.array([abs(v0)]))[0])
            fminus = Multivector(cfg.n, fh.rows(J, u0, np.array([-abs(v0)]))[0])
            pair = SlicePair(fplus, fminus, J, u0, abs(v0))
            via_rep = representation_eval(pair, x)
            via_ext = ext_eval(pair, imaginary_unit_of(x))
            worst_forms = max(worst_forms, float(np.abs(via_rep.coeffs - via_ext.coeffs).max()))
            worst_restrict = max(worst_restrict,
                                 float(np.abs(ext_eval(pair, J).coeffs - fplus.coeffs).max()))
            ab = alpha_beta(pair)
            if ab_ref is None:
                ab_ref = ab
            else:
                worst_indep = max(
                    worst_indep,
                    float(np.abs(ab[0].coeffs - ab_ref[0].coeffs).max()),
                    float(np.abs(ab[1].coeffs - ab_ref[1].coeffs).max()),
                )
    rec.add("representation-two-forms-agree", "representation-formula", worst_forms, 1e-12)
    rec.add("extension-restricts-to-data", "slice-extension", worst_restrict, 0.0)
    rec.add("even-odd-pair-slice-independence", "even-odd-pair", worst_indep, 1e-12)

    # Cauchy-Riemann residuals: h^2 convergence on z^2, zero on constants,
    # and an order-one residual on the mirrored (anti-holomorphic) field
    # cubic: central differences carry an exact h^2/6 * f''' error term,
    # so halving h divides the residual by four (quadratics sit at the
    # rounding floor and show no trend)
    unit = slices[0]
    ratios = []
    prev = None
    for count in (17, 33, 65):
        ug = UniformGrid(0.5, 1.5, count)
        vg = UniformGrid(-1.0, 1.0, count)
        z = ug.nodes()[:, None] + 1j * vg.nodes()[None, :]
        f2d = SampledSliceFunction(unit, vg, embed_complex(z**3, unit), ugrid=ug)
        r1, r2 = cr_residual(f2d)
        resid = max(r1, r2)
        if prev is not None:
            ratios.append(prev / max(resid, 1e-300))
        prev = resid
    rec.add("cauchy-riemann-h2-convergence", "cauchy-riemann-system",
            min(ratios) if ratios else 0.0, 3.5, direction="ge")

    ug = UniformGrid(0.5, 1.5, 33)
    vg = UniformGrid(-1.0, 1.0, 33)
    z = ug.nodes()[:, None] + 1j * vg.nodes()[None, :]
    const = SampledSliceFunction(unit, vg, embed_complex(np.full_like(z, 2.5 + 0j), unit), ugrid=ug)
    r1, r2 = cr_residual(const)
    rec.add("cauchy-riemann-constant-zero", "cauchy-riemann-system", max(r1, r2), 1e-13)

    anti = SampledSliceFunction(unit, vg, embed_complex(np.conj(z), unit), ugrid=ug)
    r1, r2 = cr_residual(anti)
    rec.add("cauchy-riemann-mirror-detected", "cauchy-riemann-system", max(r1, r2), 1.0,
            direction="ge")
    return rec.records


# ---------------------------------------------------------------------------
# fourier


def _line_from_catalog(name: str, unit: ImaginaryUnit, grid: UniformGrid) -> LineSamples:
    """Catalog line data: slice boundary for half-space families, real axis
    for band-limited ones."""
    entry, fn, _ = catalog_lookup(name)
    if entry.family.startswith("bandlimited"):
        return LineSamples(grid, fn.real_axis_rows(unit.n, grid.nodes()))
    return fn.boundary_samples(unit, grid)


def _suite_fourier(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("fourier")
    tol = cfg.tolerances
    rng = np.random.default_rng(cfg.rng_seed + 2)
    n = cfg.n
    unit = build_slice_set(n, 1, cfg.rng_seed + 3)[0]
    line_grid = UniformGrid(-cfg.grids.line_halfwidth, cfg.grids.line_halfwidth,
                            cfg.grids.line_count)
    wgrid = UniformGrid(-cfg.grids.spectral_halfwidth, cfg.grids.spectral_halfwidth,
                        cfg.grids.spectral_count)

    # linearity: the two evaluation orders agree to a few ulp of the
    # no-cancellation accumulation scale sum_j W_j |a f_j + g_j|
    f1 = _random_line(rng, n, line_grid)
    f2 = _random_line(rng, n, line_grid)
    a = 1.7
    combo = a * f1.values + f2.values
    lhs = cft_forward(LineSamples(line_grid, combo), unit, wgrid)
    rhs_c = a * cft_forward(f1, unit, wgrid).coeffs + cft_forward(f2, unit, wgrid).coeffs
    acc_scale = float(
        (simpson_weights(line_grid.count, line_grid.spacing)
         * np.sqrt((combo**2).sum(axis=1))).sum()
    ) / math.sqrt(2.0 * math.pi)
    # two accumulation passes on each side: budget 4 ulp per pass
    rec.add("transform-linearity", "transform-definition",
            float(np.abs(lhs.coeffs - rhs_c).max()) / acc_scale, 8 * np.finfo(float).eps)

    # left-module order: right constants commute out exactly; left ones do not
    g = np.sin(line_grid.nodes()) * np.exp(-line_grid.nodes() ** 2 / 8.0)  # odd, smooth
    scalar_rows = np.zeros((line_grid.count, 1 << n))
    scalar_rows[:, 0] = g
    c = Multivector.basis_blade(n, 0b11, 2.0) + Multivector.scalar(n, 0.5)
    Rc = np.zeros((1 << n, 1 << n))
    for bits in range(1 << n):
        Rc[:, bits] = mv_mul(Multivector.basis_blade(n, bits), c).coeffs
    fc = LineSamples(line_grid, scalar_rows @ Rc.T)
    lhs = cft_forward(fc, unit, wgrid).coeffs
    rhs = cft_forward(LineSamples(line_grid, scalar_rows), unit, wgrid).coeffs @ Rc.T
    acc_scale = float(
        (simpson_weights(line_grid.count, line_grid.spacing) * np.abs(g)).sum()
    ) * max(1.0, c.norm()) / math.sqrt(2.0 * math.pi)
    rec.add("right-constant-commutes", "left-module-order",
            float(np.abs(lhs - rhs).max()) / acc_scale, 4 * np.finfo(float).eps)

    e2 = ImaginaryUnit.axis(n, 2)
    L2 = left_mult_matrix(e2.to_multivector())
    left_data = LineSamples(line_grid, scalar_rows @ L2.T)
    lhs = cft_forward(left_data, unit, wgrid).coeffs
    rhs = cft_forward(LineSamples(line_grid, scalar_rows), unit, wgrid).coeffs @ L2.T
    rec.add("left-constant-does-not-commute", "left-module-order",
            float(np.abs(lhs - rhs).max()), 1e-3, direction="ge")

    # blade-carried data round-trips through the transform
    blade_rows = scalar_rows @ left_mult_matrix(Multivector.basis_blade(n, 0b11)).T
    s = cft_forward(LineSamples(line_grid, blade_rows), unit, wgrid)
    back = cft_inverse(s, line_grid)
    rec.add("blade-data-roundtrip", "transform-inversion",
            float(np.abs(back.values - blade_rows).max()), tol.theorem_tol)

    # Plancherel on the catalog at reference grids
    worst = 0.0
    for name in catalog_names():
        f = _line_from_catalog(name, unit, line_grid)
        worst = max(worst, plancherel_defect(f, unit, wgrid))
    rec.add("plancherel-catalog", "plancherel", worst, tol.theorem_tol)

    # Plancherel defect ladder: shrink >= 4x per doubling until <= 1e-9
    defects = []
    for k, (nn, mm) in enumerate([(1025, 513), (2049, 1025), (4097, 2049)]):
        grid_k = UniformGrid(-cfg.grids.line_halfwidth, cfg.grids.line_halfwidth, nn)
        wg_k = UniformGrid(-cfg.grids.spectral_halfwidth, cfg.grids.spectral_halfwidth, mm)
        f = _line_from_catalog("hardy-rational a=1 k=2", unit, grid_k)
        defects.append(plancherel_defect(f, unit, wg_k))
    worst_ratio = math.inf
    for d0, d1 in zip(defects, defects[1:]):
        if d0 > 1e-9:
            worst_ratio = min(worst_ratio, d0 / max(d1, 1e-300))
    rec.add("plancherel-doubling-ratio", "plancherel", worst_ratio, 4.0, direction="ge")
    rec.add("plancherel-ladder-floor", "plancherel", defects[-1], 1e-9)

    # scaling exactness: defect is scale invariant
    f = _line_from_catalog("hardy-rational a=1 k=2", unit, line_grid)
    d1 = plancherel_defect(f, unit, wgrid)
    d2 = plancherel_defect(LineSamples(line_grid, 3.25 * f.values), unit, wgrid)
    rec.add("plancherel-scale-invariance", "plancherel", abs(d1 - d2), 1e-12)

    # round trip on the windowed rational: floor and doubling behavior
    sigma = cfg.grids.line_halfwidth / 4.0
    wide_w = UniformGrid(-cfg.grids.spectral_halfwidth, cfg.grids.spectral_halfwidth, 4097)
    errs = []
    for nn in (1025, 2049, 4097):
        grid_k = UniformGrid(-cfg.grids.line_halfwidth, cfg.grids.line_halfwidth, nn)
        v = grid_k.nodes()
        vals = np.zeros((nn, 1 << n))
        vals[:, 0] = 1.0 / (1.0 + v**2) * np.exp(-((v / sigma) ** 2))
        f = LineSamples(grid_k, vals)
        back = cft_inverse(cft_forward(f, unit, wide_w), grid_k)
        errs.append(float(np.abs(back.values - f.values).max()))
    worst_ratio = math.inf
    for e0, e1 in zip(errs, errs[1:]):
        if e0 > tol.theorem_tol:
            worst_ratio = min(worst_ratio, e0 / max(e1, 1e-300))
    rec.add("roundtrip-doubling-ratio", "transform-inversion", worst_ratio, 4.0,
            direction="ge")
    rec.add("roundtrip-floor", "transform-inversion", errs[-1], tol.theorem_tol)

    # Hausdorff-Young margins over the configured exponents
    worst = -math.inf
    f = _line_from_catalog("hardy-rational a=1 k=2", unit, line_grid)
    for p in cfg.p_values:
        worst = max(worst, -(hausdorff_young_margin(f, unit, p, wgrid)))
    rec.add("hausdorff-young-margins", "hausdorff-young", worst, tol.theorem_tol)

    # conjugation symmetry for real-valued data: conj(F f)(-w) = (F f)(w)
    v = line_grid.nodes()
    vals = np.zeros((line_grid.count, 1 << n))
    vals[:, 0] = 1.0 / (1.0 + v**2)
    s = cft_forward(LineSamples(line_grid, vals), unit, wgrid)
    z = project_complex(s.coeffs, unit)
    rec.add("real-data-spectrum-conjugation", "spectrum-conjugation",
            float(np.abs(np.conj(z[::-1]) - z).max()), 1e-10)

    # support fraction sanity: box spectrum inside its own band, half outside
    box_grid = UniformGrid(-1.0, 1.0, 2049)
    box = np.zeros((box_grid.count, 1 << n))
    box[:, 0] = 1.0
    sb = SpectrumSamples(unit, box_grid, box)
    rec.add("support-box-inside", "hardy-spectral-support",
            support_fraction(sb, (-1.0, 1.0)), 0.0)
    frac = support_fraction(sb, (0.0, 1.0))
    rec.add("support-box-half", "hardy-spectral-support", abs(frac - 0.5), 1e-3)
    return rec.records


def _random_line(rng, n: int, grid: UniformGrid) -> LineSamples:
    v = grid.nodes()
    base = np.exp(-(v**2) / 8.0)
    vals = rng.standard_normal((1, 1 << n)) * base[:, None]
    return LineSamples(grid, vals)


# ---------------------------------------------------------------------------
# hardy


def _suite_hardy(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("hardy")
    tol = cfg.tolerances
    rng = np.random.default_rng(cfg.rng_seed + 3)
    n = cfg.n
    slices = build_slice_set(n, max(3, cfg.slice_count), cfg.rng_seed + 4)
    I = slices[0]
    grid = UniformGrid(-cfg.grids.hardy_halfwidth, cfg.grids.hardy_halfwidth,
                       cfg.grids.hardy_count)
    entry, fh, spectrum_fn = catalog_lookup("hardy-rational a=1 k=2")
    bd = HardyBoundaryData(I, fh.boundary_samples(I, grid))

    frac, peak = hardy_support_check(bd, tol)
    rec.add("hardy-support-fraction", "hardy-spectral-support", frac, tol.support_tol)

    _, fneg, _ = catalog_lookup("negative-control a=1")
    neg_grid = UniformGrid(-cfg.grids.line_halfwidth, cfg.grids.line_halfwidth,
                           cfg.grids.line_count)
    bd_neg = HardyBoundaryData(I, fneg.boundary_samples(I, neg_grid))
    frac_neg, _ = hardy_support_check(bd_neg, tol)
    rec.add("negative-control-support-fraction", "hardy-spectral-support",
            frac_neg, 0.4, direction="ge")
    try:
        hardy_reconstruct_fourier(bd_neg, I.to_paravector(1.0, 0.0), tol)
        rejected = 0.0
    except NotHardyDataError:
        rejected = 1.0
    rec.add("negative-control-rejected", "hardy-spectral-support", rejected, 1.0,
            direction="ge")

    # probes: 20 on the data slice, 20 spread across other slices; the
    # canonical unit of a point with v < 0 is the negated slice unit, so
    # spectra are cached per canonical unit
    def _probes(units, count):
        out = []
        for k in range(count):
            unit = units[k % len(units)]
            out.append(unit.to_paravector(0.6 + 2.4 * rng.random(),
                                          -3.0 + 6.0 * rng.random()))
        return out

    same_probes = _probes([I], 20)
    cross_probes = _probes(slices[1:], 20)

    # plan decay: smallest probe x0 plus the catalog spectrum's own e^{aw};
    # the cache key rounds the canonical unit so renormalization jitter in
    # the last ulp cannot duplicate a slice's spectrum
    spectra: dict[tuple, SpectrumSamples] = {}

    def _spectrum_for(x):
        unit = imaginary_unit_of(x)
        key = tuple(round(c, 12) for c in unit.uvec)
        if key not in spectra:
            spectra[key] = hardy_slice_spectrum(bd, unit, 0.5 + 1.0,
                                                max(1.0, peak))
        return spectra[key]

    def _recon_error(probes):
        worst = 0.0
        for x in probes:
            got = hardy_reconstruct_fourier(bd, x, tol, check_support=False,
                                            spectrum=_spectrum_for(x))
            want = fh.eval(x)
            worst = max(worst, (got - want).norm() / want.norm())
        return worst

    rec.add("synthesis-same-slice-20", "hardy-synthesis", _recon_error(same_probes),
            tol.theorem_tol)
    rec.add("synthesis-cross-slice-20", "hardy-synthesis", _recon_error(cross_probes),
            tol.theorem_tol)

    # Poisson route agrees with the spectral route on the data slice
    worst = 0.0
    for x in same_probes:
        u0, v0 = x.x0, float(np.dot(x.vec_array(), I.vec_array()))
        target = SliceComplex(u0, v0, I)
        via_poisson = hardy_reconstruct_poisson(bd, target)
        via_fourier = hardy_reconstruct_fourier(bd, x, tol, check_support=False,
                                                spectrum=_spectrum_for(x))
        worst = max(worst, (via_poisson - via_fourier).norm())
    rec.add("poisson-vs-spectral-agreement", "hardy-poisson-route", worst, 1e-5)

    # kernel reproduction at probes on >= 3 slices, including off-data slices
    wts = trapezoid_weights(grid.count, grid.spacing)
    worst = 0.0
    for x in (same_probes[:4] + cross_probes[:8]):
        rows = hardy_kernel(x, I, grid.nodes())
        rep = (wts[:, None] * mv_mul_rows(rows, bd.samples.values, n)).sum(axis=0)
        want = fh.eval(x)
        worst = max(worst, float(np.abs(rep - want.coeffs).max()) / want.norm())
    rec.add("kernel-reproduction", "hardy-kernel-reproduction", worst, 1e-5)

    # closed forms vs half-line quadrature
    worst_c, worst_h = 0.0, 0.0
    for k in range(50):
        u0, v0 = 0.3 + 2.7 * rng.random(), -4.0 + 8.0 * rng.random()
        unit = slices[k % len(slices)]
        plan = plan_halfline(u0, 1e-13, density=256.0)
        zc = SliceComplex(u0, v0, unit)
        worst_c = max(worst_c, float(np.abs(
            cauchy_kernel(zc).coeffs - cauchy_kernel_quadrature(zc, plan).coeffs).max()))
        x = unit.to_paravector(u0, v0)
        xi = -3.0 + 6.0 * rng.random()
        worst_h = max(worst_h, float(np.abs(
            hardy_kernel(x, I, xi)[0] - hardy_kernel_quadrature(x, I, xi, plan)).max()))
    rec.add("cauchy-kernel-quadrature-agreement", "cauchy-kernel", worst_c,
            tol.quadrature_tol)
    rec.add("hardy-kernel-quadrature-agreement", "cauchy-kernel", worst_h,
            tol.quadrature_tol)

    # Poisson kernel: symmetry, value at (1, 0), and mass
    rec.add("poisson-value-origin", "poisson-kernel",
            abs(poisson_kernel(1.0, 0.0) - 1.0 / math.pi), 1e-15)
    v = np.linspace(-3.0, 3.0, 7)
    rec.add("poisson-symmetry", "poisson-kernel",
            float(np.abs(poisson_kernel(0.7, v) - poisson_kernel(0.7, -v)).max()), 0.0)
    # the truncated mass equals (2/pi) atan(V/u) analytically; quadrature
    # must hit that value tightly, and it sits within 1e-4 of unit mass
    worst_quad, worst_one = 0.0, 0.0
    for u0 in (0.1, 1.0, 10.0):
        mg = UniformGrid(-1e4 * u0, 1e4 * u0, 2**17 + 1)
        mass = float((trapezoid_weights(mg.count, mg.spacing) * poisson_kernel(u0, mg.nodes())).sum())
        expected = 2.0 / math.pi * math.atan(1e4)
        worst_quad = max(worst_quad, abs(mass - expected))
        worst_one = max(worst_one, abs(mass - 1.0))
    rec.add("poisson-mass-quadrature", "poisson-kernel", worst_quad, 1e-8)
    rec.add("poisson-mass-normalization", "poisson-kernel", worst_one, 1e-4)

    # spectrum slice-invariance for intrinsic data transported by extension
    wcmp = UniformGrid(-12.0, 0.0, 257)
    ref = None
    worst = 0.0
    for unit in slices[:3]:
        line = boundary_on_slice(bd, unit)
        z = project_complex(cft_forward(line, unit, wcmp).coeffs, unit)
        if ref is None:
            ref = z
        else:
            worst = max(worst, float(np.abs(z - ref).max()))
    rec.add("spectrum-slice-invariance", "spectrum-slice-invariance", worst, 1e-8)

    # slice norms: intrinsic data gives identical boundary norms per slice
    norms = [lp_norm(boundary_on_slice(bd, unit).values, grid, 2.0) for unit in slices]
    rec.add("hardy-norm-slice-spread", "hardy-norm-definition",
            max(norms) - min(norms), 1e-10)
    # interior line norms do not exceed the boundary norm and decrease in u
    worst = -math.inf
    prev = lp_norm(bd.samples.values, grid, 2.0)
    for u0 in (0.25, 0.5, 1.0, 2.0, 4.0):
        cur = lp_norm(fh.rows(I, u0, grid.nodes()), grid, 2.0)
        worst = max(worst, cur - prev)
        prev = cur
    rec.add("hardy-norm-u-monotonicity", "hardy-norm-definition", worst, 1e-12)
    return rec.records


# ---------------------------------------------------------------------------
# compact-pw


def _suite_compact(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("compact-pw")
    tol = cfg.tolerances
    rng = np.random.default_rng(cfg.rng_seed + 4)
    n = cfg.n
    slices = build_slice_set(n, max(5, cfg.slice_count), cfg.rng_seed + 5)
    B = 1.0

    entry_s, sinc, box = catalog_lookup(f"bandlimited-sinc B={B:g}")
    band_grid = UniformGrid(-B, B, 1025)
    coeffs = np.zeros((band_grid.count, 1 << n))
    coeffs[:, 0] = box(band_grid.nodes())
    bl = BandlimitedSpectrum(B, SpectrumSamples(slices[0], band_grid, coeffs))

    # synthesis matches the slice closed form on five slices
    worst = 0.0
    for k in range(20):
        unit = slices[k % 5]
        x = unit.to_paravector(-3.0 + 6.0 * rng.random(), -3.0 + 6.0 * rng.random())
        got = pw_synthesize(bl, x)
        want = sinc.eval(x)
        worst = max(worst, (got - want).norm() / want.norm())
    rec.add("sinc-synthesis-closed-form", "bandlimit-synthesis", worst, tol.theorem_tol)

    # growth bound with the explicit constant sqrt(2B/2pi) ||f|R||_2;
    # the norm is taken on the spectral side where the band grid is exact
    C = math.sqrt(2.0 * B / (2.0 * math.pi)) * lp_norm(coeffs, band_grid, 2.0)
    gb = GrowthBound(B, C)
    probes = [slices[k % 5].to_paravector(-6.0 + 12.0 * rng.random(),
                                          -6.0 + 12.0 * rng.random())
              for k in range(1000)]
    probes.append(slices[0].to_paravector(0.0, 0.0))  # equality point
    margin = pw_growth_margin(sinc.eval, gb, probes)
    rec.add("growth-margin-explicit-constant", "bandlimit-growth-bound", margin,
            -1e-9, direction="ge")

    # negative control: spectrum leaking 10% beyond the claimed band
    leak_grid = UniformGrid(-1.1 * B, 1.1 * B, 1025)
    leak_coeffs = np.zeros((leak_grid.count, 1 << n))
    leak_coeffs[:, 0] = math.sqrt(math.pi / 2.0)
    leak = BandlimitedSpectrum(1.1 * B, SpectrumSamples(slices[0], leak_grid, leak_coeffs))
    far_probes = [slices[k % 5].to_paravector(0.0, 44.0 + 2.0 * k)
                  for k in range(10)]
    leak_margin = pw_growth_margin(lambda x: pw_synthesize(leak, x), gb, far_probes)
    rec.add("growth-leak-detected", "bandlimit-growth-bound", leak_margin, 0.0)

    # kernel reproduction on the fast-decaying band-limited member
    entry_f, fej, _ = catalog_lookup(f"bandlimited-fejer B={B:g}")
    rep_grid = UniformGrid(-400.0, 400.0, 1601)
    fvals = fej.real_axis_rows(n, rep_grid.nodes())
    wts = trapezoid_weights(rep_grid.count, rep_grid.spacing)
    worst = 0.0
    for k in range(12):
        unit = slices[k % 5]
        x = unit.to_paravector(-2.0 + 4.0 * rng.random(), -2.0 + 4.0 * rng.random())
        rows = pw_kernel(x, rep_grid.nodes(), B)
        rep = (wts[:, None] * mv_mul_rows(rows, fvals, n)).sum(axis=0)
        want = fej.eval(x)
        worst = max(worst, float(np.abs(rep - want.coeffs).max()) / want.norm())
    rec.add("kernel-reproduction-offslice", "bandlimit-kernel-reproduction", worst, 1e-5)

    # the slowly decaying member needs a very wide line; tail goes as 1/V
    wide = UniformGrid(-12800.0, 12800.0, 51201)
    svals = sinc.real_axis_rows(n, wide.nodes())
    wts = trapezoid_weights(wide.count, wide.spacing)
    x = slices[1].to_paravector(0.7, 1.1)
    rep = (wts[:, None] * mv_mul_rows(pw_kernel(x, wide.nodes(), B), svals, n)).sum(axis=0)
    want = sinc.eval(x)
    rec.add("kernel-reproduction-slow-tail", "bandlimit-kernel-reproduction",
            float(np.abs(rep - want.coeffs).max()) / want.norm(), 1e-4)

    # degenerate kernel value is exactly B/pi at coincident real points
    kd = pw_kernel(slices[0].to_paravector(2.0, 0.0), 2.0, B)[0]
    want0 = np.zeros(1 << n)
    want0[0] = B / math.pi
    rec.add("kernel-degenerate-value", "bandlimit-kernel-reproduction",
            float(np.abs(kd - want0).max()), 0.0)

    # closed form vs direct band quadrature
    worst = 0.0
    for k in range(50):
        unit = slices[k % 5]
        x = unit.to_paravector(-2.0 + 4.0 * rng.random(), -2.0 + 4.0 * rng.random())
        xi = -2.0 + 4.0 * rng.random()
        worst = max(worst, float(np.abs(
            pw_kernel(x, xi, B)[0] - pw_kernel_quadrature(x, xi, B)).max()))
    rec.add("kernel-quadrature-agreement", "bandlimit-kernel-reproduction", worst,
            tol.quadrature_tol)
    return rec.records


# ---------------------------------------------------------------------------
# bergman


def _suite_bergman(cfg: SuiteConfig) -> list[CheckRecord]:
    rec = _Recorder("bergman")
    tol = cfg.tolerances
    rng = np.random.default_rng(cfg.rng_seed + 5)
    n = cfg.n
    slices = build_slice_set(n, max(3, cfg.slice_count), cfg.rng_seed + 6)
    I = slices[0]
    entry, fb, dens = catalog_lookup("bergman-rational a=1")

    plan = plan_halfline(2.0, 1e-15, density=256.0)
    dgrid = plan.grid()
    d = BergmanDensity(I, dgrid, dens(dgrid.nodes()) + 0j, p=2.0,
                       evaluator=lambda w: dens(w) + 0j)

    # synthesis matches the closed form on and off the seed slice
    worst = 0.0
    for k in range(12):
        unit = slices[k % len(slices)]
        x = unit.to_paravector(0.4 + 2.6 * rng.random(), -2.0 + 4.0 * rng.random())
        got = bergman_synthesize(d, x)
        want = fb.eval(x)
        worst = max(worst, (got - want).norm() / want.norm())
    rec.add("density-synthesis-closed-form", "bergman-synthesis", worst, tol.theorem_tol)

    # equality case: both norm margins vanish up to truncation
    fwd, conv = bergman_norm_margins(fb, d, slices=[I])
    rec.add("equality-forward-margin", "bergman-forward-norm", abs(fwd), 1e-4)
    rec.add("equality-converse-margin", "bergman-converse-norm", abs(conv), 1e-4)

    # p = 1 member (cubic pole; the quadratic one is not area-integrable
    # at p = 1): forward inequality with the sup-form weight
    _, f3, spec3 = catalog_lookup("hardy-rational a=1 k=3")
    d1 = BergmanDensity(I, dgrid, spec3(dgrid.nodes()) + 0j, p=1.0)
    fwd1, conv1 = bergman_norm_margins(f3, d1, slices=[I])
    rec.add("p1-forward-margin", "bergman-forward-norm", fwd1, -1e-4, direction="ge")

    # delta-independence of extraction, compared with the common damping
    # e^{delta_max w} that keeps the amplified factors bounded
    ex_grid = UniformGrid(-cfg.grids.extraction_halfwidth, cfg.grids.extraction_halfwidth,
                          cfg.grids.extraction_count)
    wcmp = UniformGrid(-12.0, 0.0, 257)
    deltas = (0.25, 0.5, 1.0)
    d0 = max(deltas)
    damped = {}
    for delta in deltas:
        bdd = HardyBoundaryData(I, fb.shifted_boundary_samples(I, ex_grid, delta))
        dd = bergman_density_extract(bdd, delta, wgrid=wcmp, tols=tol,
                                     check_support=False)
        damped[delta] = dd.values * np.exp(d0 * wcmp.nodes())
    scale = float(np.abs(damped[d0]).max())
    worst = max(float(np.abs(damped[a] - damped[d0]).max()) / scale for a in deltas)
    rec.add("extraction-delta-independence", "bergman-density-shift", worst,
            tol.theorem_tol)

    # extracted density matches the closed form away from w = 0
    wint = wcmp.nodes() <= -0.25
    ref = dens(wcmp.nodes()) * np.exp(d0 * wcmp.nodes())
    worst = float(np.abs(damped[1.0][wint] - ref[wint]).max()) / scale
    rec.add("extraction-matches-closed-form", "bergman-density-shift", worst, 1e-5)

    # interior growth constants: stable under probe-count doubling
    bnorm = bergman_norm(fb, 2.0, [I])
    def _probe_box(count):
        out = []
        for k in range(count):
            unit = slices[k % len(slices)]
            out.append(unit.to_paravector(0.25 + 3.75 * rng.random(),
                                          -4.0 + 8.0 * rng.random()))
        return out
    c_half = bergman_pointwise_margins(fb, 2.0, _probe_box(40), bnorm)
    c_full = bergman_pointwise_margins(fb, 2.0, _probe_box(80), bnorm)
    rel_jump = abs(c_full - c_half) / c_half
    rec.add("pointwise-constant-stability", "bergman-pointwise-bound", rel_jump, 0.10)

    # exponent sanity at p = 1 on the cubic member: the weighted magnitude
    # stays bounded along the real direction
    u = np.linspace(1.0, 400.0, 64)
    ratio = np.abs(f3.complex_values(u + 0j)) * u ** (4.0 - 2.0 / 1.0)
    rec.add("pointwise-exponent-sanity", "bergman-pointwise-bound",
            float(ratio.max()), 2.0)

    # area norms: slice spread for intrinsic data
    norms = [bergman_norm(fb, 2.0, [unit],
                          UniformGrid(0.0, 20.0, 513), UniformGrid(-40.0, 40.0, 513))
             for unit in slices[:3]]
    rec.add("bergman-norm-slice-spread", "bergman-norm-definition",
            max(norms) - min(norms), 1e-10)
    return rec.records


_SUITE_FUNCS = {
    "algebra": _suite_algebra,
    "splitting": _suite_splitting,
    "fourier": _suite_fourier,
    "hardy": _suite_hardy,
    "compact-pw": _suite_compact,
    "bergman": _suite_bergman,
}


def run_suite(cfg: SuiteConfig, parallel: bool = False) -> Report:
    """Execute the configured suites and assemble the report.

    Catalog oracle self-checks run first; a failure aborts before any
    theorem check.  Records are merged in canonical suite order so the
    output does not depend on scheduling.
    """
    cfg.validate()
    oracle_devs = {name: oracle_check(name) for name in catalog_names()}

    selected = [s for s in SUITE_ORDER if s in cfg.suites]
    results: dict[str, list[CheckRecord]] = {}
    if parallel and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=len(selected)) as pool:
            futures = {s: pool.submit(_SUITE_FUNCS[s], cfg) for s in selected}
            for s, fut in futures.items():
                results[s] = fut.result()
    else:
        for s in selected:
            results[s] = _SUITE_FUNCS[s](cfg)

    slices_used = [list(u.uvec) for u in
                   build_slice_set(cfg.n, cfg.slice_count, cfg.rng_seed + 4)]
    report = Report(
        meta={
            "config": cfg.to_dict(),
            "slices": slices_used,
            "oracle_self_check": {k: float(v) for k, v in sorted(oracle_devs.items())},
        }
    )
    for s in selected:
        report.records.extend(results[s])
    return report
