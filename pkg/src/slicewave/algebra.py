"""Real Clifford algebra with negative-definite signature: e_i^2 = -1.

Basis blades are indexed by bitmasks over the generators {1, ..., n}
(bit i-1 set means e_i participates), so blade e_A * e_B lands on the
symmetric difference A ^ B with a sign from transposition counting and
one factor -1 per repeated generator.  Multivector products go through a
cached Cayley table; the naive double loop over 4^n coefficient pairs is
deliberate, since n <= 12 keeps it cheap at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "MAX_DIMENSION",
    "BladeIndex",
    "Multivector",
    "Paravector",
    "ImaginaryUnit",
    "BasisFrame",
    "blade_product",
    "mv_mul",
    "mv_mul_rows",
    "left_mult_matrix",
    "imaginary_unit_of",
    "complete_basis",
    "frame_blades",
    "frame_change_matrix",
    "frame_coords",
]

MAX_DIMENSION = 12

# |x_vec| below this (relative) threshold counts as a real-axis point and
# maps to the canonical unit e_1; slice values at real points are
# I-independent so any unit serves.
REAL_AXIS_EPS = 1e-14


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"algebra dimension must be in [1, {MAX_DIMENSION}], got {n}")


@dataclass(frozen=True)
class BladeIndex:
    """Ordered generator subset encoded as a bitmask; 0 is the scalar blade."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"blade bits {self.bits:#x} out of range for n={self.n}")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    @property
    def grade(self) -> int:
        return int(self.bits).bit_count()

    def __str__(self) -> str:
        if self.bits == 0:
            return "1"
        return "e" + "".join(str(i) for i in self.indices)


def _blade_sign(a: int, b: int) -> int:
    """Sign of e_A e_B: transposition count plus -1 per repeated index."""
    swaps = 0
    rest = a
    for i in range(max(a.bit_length(), b.bit_length())):
        if b >> i & 1:
            # indices of A strictly greater than i must hop over this one
            swaps += (rest >> (i + 1)).bit_count()
    repeats = (a & b).bit_count()
    return -1 if (swaps + repeats) % 2 else 1


def blade_product(a: BladeIndex, b: BladeIndex) -> tuple[int, BladeIndex]:
    """Product of two basis blades: (sign, e_{A xor B})."""
    if a.n != b.n:
        raise ValueError(f"blade dimensions differ: {a.n} != {b.n}")
    return _blade_sign(a.bits, b.bits), BladeIndex(a.n, a.bits ^ b.bits)


@lru_cache(maxsize=MAX_DIMENSION)
def _cayley_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(signs, indices) for all blade pairs; indices[a, b] = a ^ b."""
    dim = 1 << n
    signs = np.empty((dim, dim), dtype=np.int8)
    for a in range(dim):
        for b in range(dim):
            signs[a, b] = _blade_sign(a, b)
    idx = np.bitwise_xor.outer(np.arange(dim), np.arange(dim)).astype(np.intp)
    return signs, idx


class Multivector:
    """Element of the algebra: 2^n real coefficients indexed by blade bitmask."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: np.ndarray | None = None):
        _check_n(n)
        dim = 1 << n
        if coeffs is None:
            arr = np.zeros(dim)
        else:
            arr = np.asarray(coeffs, dtype=float).copy()
            if arr.shape != (dim,):
                raise ValueError(f"expected {dim} coefficients for n={n}, got {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def scalar(cls, n: int, value: float) -> "Multivector":
        dim = 1 << n
        c = np.zeros(dim)
        c[0] = value
        return cls(n, c)

    @classmethod
    def basis_blade(cls, n: int, bits: int, value: float = 1.0) -> "Multivector":
        dim = 1 << n
        if not 0 <= bits < dim:
            raise ValueError(f"blade bits {bits:#x} out of range for n={n}")
        c = np.zeros(dim)
        c[bits] = value
        return cls(n, c)

    @classmethod
    def from_vector(cls, vec: np.ndarray) -> "Multivector":
        """Grade-1 element with the given generator coefficients."""
        vec = np.asarray(vec, dtype=float)
        n = vec.shape[0]
        _check_n(n)
        c = np.zeros(1 << n)
        for i in range(n):
            c[1 << i] = vec[i]
        return cls(n, c)

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def vector_part(self) -> np.ndarray:
        return np.array([self.coeffs[1 << i] for i in range(self.n)])

    def norm(self) -> float:
        """Frobenius norm of the coefficient vector."""
        return float(np.sqrt((self.coeffs**2).sum()))

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_same(other)
        return Multivector(self.n, self.coeffs + other.coeffs)

    def __sub__(self, other: "Multivector") -> "Multivector":
        self._check_same(other)
        return Multivector(self.n, self.coeffs - other.coeffs)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        return Multivector(self.n, self.coeffs * float(other))

    def __rmul__(self, other):
        # scalar * multivector; multivector * multivector goes via __mul__
        return Multivector(self.n, self.coeffs * float(other))

    def _check_same(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise ValueError(f"algebra dimensions differ: {self.n} != {other.n}")

    def allclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        self._check_same(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __repr__(self) -> str:
        terms = []
        for bits, c in enumerate(self.coeffs):
            if c != 0.0:
                terms.append(f"{c:+g}*{BladeIndex(self.n, bits)}")
        return " ".join(terms) if terms else "0"


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product, the bilinear extension of blade_product."""
    if a.n != b.n:
        raise ValueError(f"algebra dimensions differ: {a.n} != {b.n}")
    signs, idx = _cayley_table(a.n)
    out = np.zeros(1 << a.n)
    contrib = (signs * a.coeffs[:, None]) * b.coeffs[None, :]
    np.add.at(out, idx, contrib)
    return Multivector(a.n, out)


def left_mult_matrix(m: Multivector) -> np.ndarray:
    """Matrix L with L @ x.coeffs == (m * x).coeffs for every x."""
    dim = 1 << m.n
    signs, idx = _cayley_table(m.n)
    L = np.zeros((dim, dim))
    cols = np.broadcast_to(np.arange(dim)[None, :], (dim, dim))
    np.add.at(L, (idx, cols), signs * m.coeffs[:, None])
    return L


@lru_cache(maxsize=8)
def _structure_tensor(n: int) -> np.ndarray:
    """Dense product tensor T with (xy)_c = sum_ab T[a,b,c] x_a y_b; n <= 6."""
    if n > 6:
        raise ValueError("structure tensor is only materialized for n <= 6")
    dim = 1 << n
    signs, idx = _cayley_table(n)
    T = np.zeros((dim, dim, dim))
    rows = np.broadcast_to(np.arange(dim)[:, None], (dim, dim))
    cols = np.broadcast_to(np.arange(dim)[None, :], (dim, dim))
    T[rows, cols, idx] = signs
    T.flags.writeable = False
    return T


def mv_mul_rows(x: np.ndarray, y: np.ndarray, n: int) -> np.ndarray:
    """Batched geometric product of coefficient rows of shape (..., 2^n)."""
    return np.einsum("...a,...b,abc->...c", x, y, _structure_tensor(n))


@dataclass(frozen=True)
class Paravector:
    """Point x0 + x1 e_1 + ... + xn e_n of the (n+1)-dimensional slice domain."""

    x0: float
    xvec: tuple[float, ...]

    @classmethod
    def make(cls, x0: float, xvec) -> "Paravector":
        vec = tuple(float(x) for x in np.asarray(xvec, dtype=float))
        _check_n(len(vec))
        return cls(float(x0), vec)

    @property
    def n(self) -> int:
        return len(self.xvec)

    def vec_array(self) -> np.ndarray:
        return np.array(self.xvec)

    def vec_norm(self) -> float:
        return float(np.sqrt(sum(x * x for x in self.xvec)))

    def norm(self) -> float:
        return float(np.sqrt(self.x0**2 + sum(x * x for x in self.xvec)))

    def conj(self) -> "Paravector":
        return Paravector(self.x0, tuple(-x for x in self.xvec))

    def inv(self) -> "Paravector":
        n2 = self.norm() ** 2
        if n2 == 0.0:
            raise ZeroDivisionError("cannot invert the zero paravector")
        return Paravector(self.x0 / n2, tuple(-x / n2 for x in self.xvec))

    def to_multivector(self) -> Multivector:
        c = np.zeros(1 << self.n)
        c[0] = self.x0
        for i, x in enumerate(self.xvec):
            c[1 << i] = x
        return Multivector(self.n, c)


@dataclass(frozen=True)
class ImaginaryUnit:
    """Unit 1-vector I with I*I = -1; tags a slice plane R + I R."""

    uvec: tuple[float, ...]

    @classmethod
    def make(cls, uvec) -> "ImaginaryUnit":
        vec = np.asarray(uvec, dtype=float)
        _check_n(vec.shape[0])
        norm = float(np.sqrt((vec**2).sum()))
        if norm == 0.0:
            raise ValueError("imaginary unit requires a nonzero vector part")
        return cls(tuple(vec / norm))

    @classmethod
    def axis(cls, n: int, k: int) -> "ImaginaryUnit":
        """The generator e_k as a unit, k in {1, ..., n}."""
        _check_n(n)
        if not 1 <= k <= n:
            raise ValueError(f"axis index {k} out of range for n={n}")
        vec = np.zeros(n)
        vec[k - 1] = 1.0
        return cls(tuple(vec))

    @property
    def n(self) -> int:
        return len(self.uvec)

    def vec_array(self) -> np.ndarray:
        return np.array(self.uvec)

    def to_multivector(self) -> Multivector:
        return Multivector.from_vector(self.vec_array())

    def left_matrix(self) -> np.ndarray:
        return _unit_left_matrix(self.n, self.uvec)

    def to_paravector(self, u: float, v: float) -> Paravector:
        """The point u + I v on this unit's slice."""
        return Paravector(float(u), tuple(v * x for x in self.uvec))

    def close_to(self, other: "ImaginaryUnit", tol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        return bool(
            np.max(np.abs(self.vec_array() - other.vec_array())) <= tol
        )


@lru_cache(maxsize=256)
def _unit_left_matrix(n: int, uvec: tuple[float, ...]) -> np.ndarray:
    L = left_mult_matrix(Multivector.from_vector(np.array(uvec)))
    L.flags.writeable = False
    return L


def imaginary_unit_of(x: Paravector) -> ImaginaryUnit:
    """The slice unit x_vec/|x_vec|; real-axis points map to e_1."""
    vn = x.vec_norm()
    if vn <= REAL_AXIS_EPS * (1.0 + x.norm()):
        return ImaginaryUnit.axis(x.n, 1)
    return ImaginaryUnit(tuple(v / vn for v in x.xvec))


@dataclass(frozen=True)
class BasisFrame:
    """Units I_1, ..., I_n satisfying I_r I_s + I_s I_r = -2 delta_rs."""

    units: tuple[ImaginaryUnit, ...]

    @property
    def n(self) -> int:
        return len(self.units)

    def anticommutator_defect(self) -> float:
        """Max deviation of I_r I_s + I_s I_r from -2 delta_rs, per coefficient."""
        worst = 0.0
        mvs = [u.to_multivector() for u in self.units]
        n = self.n
        for r in range(n):
            for s in range(n):
                acomm = mv_mul(mvs[r], mvs[s]) + mv_mul(mvs[s], mvs[r])
                target = Multivector.scalar(n, -2.0 if r == s else 0.0)
                worst = max(worst, float(np.max(np.abs(acomm.coeffs - target.coeffs))))
        return worst


def complete_basis(seed: ImaginaryUnit, rng_seed: int) -> BasisFrame:
    """Complete a seed unit to a full anticommuting frame.

    For unit 1-vectors the anticommutation relations reduce to Euclidean
    orthonormality of the direction vectors, so Gram-Schmidt over seeded
    pseudo-random candidates does the job; the seed makes frame sweeps in
    tests reproducible.
    """
    n = seed.n
    rng = np.random.default_rng(rng_seed)
    vecs = [seed.vec_array()]
    for _ in range(1, n):
        for attempt in range(16):
            cand = rng.standard_normal(n)
            for v in vecs:
                cand -= np.dot(cand, v) * v
            norm = float(np.sqrt((cand**2).sum()))
            if norm > 1e-8:
                vecs.append(cand / norm)
                break
        else:
            raise RuntimeError(
                "basis completion failed: 16 successive candidates were "
                "linearly dependent"
            )
    frame = BasisFrame(tuple(ImaginaryUnit(tuple(v)) for v in vecs))
    defect = frame.anticommutator_defect()
    if defect > 1e-12:
        raise RuntimeError(f"frame anticommutator defect {defect:.3e} exceeds 1e-12")
    return frame


def frame_blades(frame: BasisFrame) -> list[Multivector]:
    """All products I_A, indexed by bitmask A over the frame units."""
    n = frame.n
    dim = 1 << n
    blades: list[Multivector] = [Multivector.scalar(n, 1.0)] * dim
    unit_mvs = [u.to_multivector() for u in frame.units]
    for bits in range(1, dim):
        low = bits & -bits
        rest = bits ^ low
        k = low.bit_length() - 1
        if rest == 0:
            blades[bits] = unit_mvs[k]
        else:
            # ascending index order: I_{i1} I_{i2} ... with i1 < i2 < ...
            blades[bits] = mv_mul(unit_mvs[k], blades[rest])
    return blades


def frame_change_matrix(frame: BasisFrame) -> np.ndarray:
    """Matrix M whose column A holds the e-basis coordinates of I_A."""
    blades = frame_blades(frame)
    return np.column_stack([b.coeffs for b in blades])


def frame_coords(m: Multivector, frame: BasisFrame) -> np.ndarray:
    """Coordinates c with sum_A c_A I_A = m, via a linear solve."""
    if m.n != frame.n:
        raise ValueError(f"algebra dimensions differ: {m.n} != {frame.n}")
    M = frame_change_matrix(frame)
    try:
        return np.linalg.solve(M, m.coeffs)
    except np.linalg.LinAlgError as exc:
        raise ValueError("frame change matrix is singular; frame invalid") from exc
