"""Numerical slice-plane Clifford Fourier analysis.

A library plus verification CLI for Clifford-algebra slice function
machinery: exact blade arithmetic, slice extension and splitting, the
one-dimensional left-sided Clifford Fourier transform, and the Hardy,
band-limited, and Bergman reconstruction routes with their reproducing
kernels.
"""

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
    mv_mul,
)
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
    HalfLinePlan,
    Tolerances,
    UniformGrid,
    integrate_simpson,
    lp_norm,
    plan_halfline,
)
from .paley_wiener import (
    BandlimitedSpectrum,
    BergmanDensity,
    GrowthBound,
    HardyBoundaryData,
    bergman_density_extract,
    bergman_norm,
    bergman_norm_margins,
    bergman_synthesize,
    cauchy_kernel,
    hardy_kernel,
    hardy_norm,
    hardy_reconstruct_fourier,
    hardy_reconstruct_poisson,
    poisson_kernel,
    pw_growth_margin,
    pw_kernel,
    pw_synthesize,
)
from .slices import (
    SampledSliceFunction,
    SliceComplex,
    SlicePair,
    alpha_beta,
    cr_residual,
    ext_eval,
    intrinsic_decompose,
    representation_eval,
    split_holomorphic,
)

__version__ = "0.1.0"
