import numpy as np
import pytest

from slicewave.algebra import (
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


def brute_blade_product(a_idx: tuple[int, ...], b_idx: tuple[int, ...]):
    """Oracle: multiply generator strings by adjacent swaps and e_i^2 = -1."""
    symbols = list(a_idx) + list(b_idx)
    sign = 1
    # bubble sort, counting swaps
    changed = True
    while changed:
        changed = False
        for i in range(len(symbols) - 1):
            if symbols[i] > symbols[i + 1]:
                symbols[i], symbols[i + 1] = symbols[i + 1], symbols[i]
                sign = -sign
                changed = True
    # cancel adjacent equal pairs with a -1 each
    out = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == symbols[i + 1]:
            sign = -sign
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return sign, tuple(out)


class TestBladeProduct:
    def test_square_of_generator(self):
        sign, blade = blade_product(BladeIndex(2, 0b01), BladeIndex(2, 0b01))
        assert sign == -1 and blade.bits == 0

    def test_identity_blade(self):
        sign, blade = blade_product(BladeIndex(2, 0), BladeIndex(2, 0b10))
        assert sign == 1 and blade.bits == 0b10

    def test_bivector_times_generator(self):
        sign, blade = blade_product(BladeIndex(2, 0b11), BladeIndex(2, 0b01))
        assert sign == 1 and blade.bits == 0b10  # e2

    def test_against_string_oracle_exhaustive(self):
        for n in range(1, 5):
            for a in range(1 << n):
                for b in range(1 << n):
                    sign, blade = blade_product(BladeIndex(n, a), BladeIndex(n, b))
                    osign, oidx = brute_blade_product(
                        BladeIndex(n, a).indices, BladeIndex(n, b).indices
                    )
                    assert sign == osign
                    assert blade.indices == oidx

    def test_associativity_exhaustive_n4(self):
        n = 4
        for a in range(1 << n):
            for b in range(1 << n):
                sab, ab = blade_product(BladeIndex(n, a), BladeIndex(n, b))
                for c in range(1 << n):
                    s1, left = blade_product(ab, BladeIndex(n, c))
                    sbc, bc = blade_product(BladeIndex(n, b), BladeIndex(n, c))
                    s2, right = blade_product(BladeIndex(n, a), bc)
                    assert sab * s1 == sbc * s2 and left.bits == right.bits

    def test_anticommutation(self):
        n = 4
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                er = Multivector.basis_blade(n, 1 << (r - 1))
                es = Multivector.basis_blade(n, 1 << (s - 1))
                total = mv_mul(er, es) + mv_mul(es, er)
                want = Multivector.scalar(n, -2.0 if r == s else 0.0)
                assert total.allclose(want, tol=0.0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            blade_product(BladeIndex(2, 1), BladeIndex(3, 1))


class TestMultivector:
    def test_unit_element(self):
        rng = np.random.default_rng(0)
        m = Multivector(3, rng.standard_normal(8))
        one = Multivector.scalar(3, 1.0)
        assert mv_mul(one, m).allclose(m, tol=0.0)
        assert mv_mul(m, one).allclose(m, tol=0.0)

    def test_unit_imaginary_squares_to_minus_one(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            unit = ImaginaryUnit.make(rng.standard_normal(4))
            sq = mv_mul(unit.to_multivector(), unit.to_multivector())
            assert sq.allclose(Multivector.scalar(4, -1.0), tol=8 * np.finfo(float).eps)

    def test_expansion_example(self):
        e1 = Multivector.basis_blade(2, 0b01)
        e2 = Multivector.basis_blade(2, 0b10)
        got = mv_mul(e1 + e2, e1 - e2)
        want = Multivector.basis_blade(2, 0b11, -2.0)
        assert got.allclose(want, tol=0.0)

    def test_mul_matches_rows_product(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((5, 8))
        b = rng.standard_normal((5, 8))
        rows = mv_mul_rows(a, b, 3)
        for i in range(5):
            direct = mv_mul(Multivector(3, a[i]), Multivector(3, b[i]))
            assert np.allclose(rows[i], direct.coeffs, atol=1e-14)

    def test_left_matrix(self):
        rng = np.random.default_rng(3)
        m = Multivector(3, rng.standard_normal(8))
        x = Multivector(3, rng.standard_normal(8))
        assert np.allclose(left_mult_matrix(m) @ x.coeffs, mv_mul(m, x).coeffs)

    def test_dimension_cap(self):
        with pytest.raises(ValueError):
            Multivector(13)

    def test_immutability(self):
        m = Multivector.scalar(2, 1.0)
        with pytest.raises(AttributeError):
            m.n = 3
        with pytest.raises(ValueError):
            m.coeffs[0] = 2.0


class TestParavector:
    def test_conj_and_norm(self):
        x = Paravector.make(3.0, [4.0, 0.0])
        assert x.conj().xvec == (-4.0, 0.0)
        assert x.norm() == pytest.approx(5.0)
        assert x.conj().norm() == x.norm()

    def test_inverse_of_generator(self):
        x = Paravector.make(0.0, [1.0, 0.0])
        inv = x.inv()
        assert inv.x0 == 0.0 and inv.xvec == (-1.0, 0.0)

    def test_inverse_identity_by_product(self):
        x = Paravector.make(1.0, [1.0, 1.0])
        prod = mv_mul(x.inv().to_multivector(), x.to_multivector())
        assert prod.allclose(Multivector.scalar(2, 1.0), tol=1e-15)

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            Paravector.make(0.0, [0.0, 0.0]).inv()

    def test_norm_multiplicativity(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            x = Paravector.make(rng.standard_normal(), rng.standard_normal(3))
            prod = mv_mul(x.to_multivector(), x.conj().to_multivector())
            assert abs(prod.norm() - x.norm() ** 2) <= 4 * np.finfo(float).eps * x.norm() ** 2


class TestImaginaryUnitOf:
    def test_single_axis(self):
        x = Paravector.make(2.0, [0.0, 3.0])
        assert imaginary_unit_of(x).uvec == (0.0, 1.0)

    def test_normalizes_vector_part(self):
        x = Paravector.make(1.0, [1.0, 1.0])
        got = np.array(imaginary_unit_of(x).uvec)
        assert np.allclose(got, [1.0, 1.0] / np.sqrt(2.0))

    def test_real_axis_convention(self):
        x = Paravector.make(5.0, [0.0, 0.0, 0.0])
        assert imaginary_unit_of(x).uvec == (1.0, 0.0, 0.0)


class TestFrames:
    def test_seeded_completion_n3(self):
        frame = complete_basis(ImaginaryUnit.axis(3, 1), rng_seed=11)
        assert frame.units[0].uvec == (1.0, 0.0, 0.0)
        assert frame.anticommutator_defect() <= 1e-12

    def test_n2_frame_is_perpendicular_axis(self):
        frame = complete_basis(ImaginaryUnit.axis(2, 2), rng_seed=7)
        assert frame.units[0].uvec == (0.0, 1.0)
        assert abs(abs(frame.units[1].uvec[0]) - 1.0) <= 1e-12
        assert abs(frame.units[1].uvec[1]) <= 1e-12

    def test_determinism(self):
        a = complete_basis(ImaginaryUnit.axis(4, 1), rng_seed=3)
        b = complete_basis(ImaginaryUnit.axis(4, 1), rng_seed=3)
        assert all(u.uvec == v.uvec for u, v in zip(a.units, b.units))

    def test_standard_frame_change_matrix_is_identity(self):
        from slicewave.algebra import BasisFrame

        frame = BasisFrame(tuple(ImaginaryUnit.axis(3, k) for k in (1, 2, 3)))
        assert np.allclose(frame_change_matrix(frame), np.eye(8), atol=0.0)

    def test_unit_coordinate(self):
        frame = complete_basis(ImaginaryUnit.make([1.0, 2.0, 2.0]), rng_seed=5)
        coords = frame_coords(frame.units[1].to_multivector(), frame)
        want = np.zeros(8)
        want[0b10] = 1.0
        assert np.allclose(coords, want, atol=1e-12)

    def test_coords_roundtrip_random(self):
        rng = np.random.default_rng(6)
        for k in range(100):
            n = (2, 3, 4)[k % 3]
            frame = complete_basis(ImaginaryUnit.make(rng.standard_normal(n)), rng_seed=k)
            coords = rng.standard_normal(1 << n)
            blades = frame_blades(frame)
            m = Multivector(n)
            for c, b in zip(coords, blades):
                m = m + float(c) * b
            assert np.abs(frame_coords(m, frame) - coords).max() <= 1e-10
