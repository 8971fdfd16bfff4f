import math

import numpy as np
import pytest

from slicewave.numerics import (
    HalfLinePlan,
    UniformGrid,
    integrate_simpson,
    lp_norm,
    plan_halfline,
    simpson_weights,
    trapezoid_weights,
)


class TestUniformGrid:
    def test_nodes_and_spacing(self):
        g = UniformGrid(-1.0, 1.0, 5)
        assert g.spacing == pytest.approx(0.5)
        assert np.allclose(g.nodes(), [-1.0, -0.5, 0.0, 0.5, 1.0])

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            UniformGrid(1.0, -1.0, 5)
        with pytest.raises(ValueError):
            UniformGrid(0.0, 1.0, 1)

    def test_symmetry_flag(self):
        assert UniformGrid(-2.0, 2.0, 9).is_symmetric()
        assert not UniformGrid(0.0, 2.0, 9).is_symmetric()


class TestSimpson:
    def test_constant_on_unit_interval(self):
        g = UniformGrid(0.0, 1.0, 9)
        assert integrate_simpson(np.ones(9), g) == pytest.approx(1.0, abs=1e-15)

    def test_exact_on_cubics(self):
        g = UniformGrid(0.0, 1.0, 9)
        v = g.nodes()
        assert integrate_simpson(v**2, g) == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert integrate_simpson(v**3, g) == pytest.approx(0.25, abs=1e-15)

    def test_sin_classical_value(self):
        g = UniformGrid(0.0, math.pi, 65)
        assert integrate_simpson(np.sin(g.nodes()), g) == pytest.approx(2.0, abs=1e-8)

    def test_even_count_falls_back_to_trapezoid_tail(self):
        g = UniformGrid(0.0, 1.0, 8)
        v = g.nodes()
        # quadratic no longer exact, but close
        assert integrate_simpson(v**2, g) == pytest.approx(1.0 / 3.0, abs=1e-2)

    def test_needs_three_nodes(self):
        with pytest.raises(ValueError):
            simpson_weights(2, 0.5)

    def test_vector_values(self):
        g = UniformGrid(0.0, 1.0, 9)
        vals = np.stack([g.nodes() ** 2, np.ones(9)], axis=1)
        out = integrate_simpson(vals, g)
        assert out == pytest.approx([1.0 / 3.0, 1.0], abs=1e-15)

    def test_gaussian_convergence_rate(self):
        # error shrinks by >= 15x per doubling until the 1e-13 floor
        exact = math.sqrt(math.pi) * math.erf(8.0)
        errs = []
        for count in (17, 33, 65, 129, 257):
            g = UniformGrid(-8.0, 8.0, count)
            errs.append(abs(float(integrate_simpson(np.exp(-g.nodes() ** 2), g)) - exact))
        for e0, e1 in zip(errs, errs[1:]):
            if e0 <= 1e-13:
                break
            assert e0 / max(e1, 1e-300) >= 15.0


class TestLpNorm:
    def test_constant_all_p(self):
        g = UniformGrid(0.0, 1.0, 33)
        vals = np.ones(33)
        for p in (1.0, 1.5, 2.0, math.inf):
            assert lp_norm(vals, g, p) == pytest.approx(1.0, rel=1e-12)

    def test_rational_l2_closed_form(self):
        # integral of (1+v^2)^-2 over R is pi/2
        g = UniformGrid(-200.0, 200.0, 2**15 + 1)
        vals = 1.0 / (1.0 + g.nodes() ** 2)
        assert lp_norm(vals, g, 2.0) == pytest.approx(math.sqrt(math.pi / 2.0), abs=1e-6)

    def test_inf_is_max(self):
        g = UniformGrid(0.0, 1.0, 9)
        vals = np.linspace(-3.0, 5.0, 9)
        assert lp_norm(vals, g, math.inf) == 5.0

    def test_homogeneity(self):
        rng = np.random.default_rng(5)
        g = UniformGrid(-1.0, 1.0, 17)
        vals = rng.standard_normal((17, 4))
        for p in (1.0, 2.0):
            a = lp_norm(3.5 * vals, g, p)
            b = 3.5 * lp_norm(vals, g, p)
            assert abs(a - b) <= 4 * np.finfo(float).eps * b

    def test_rejects_p_below_one(self):
        g = UniformGrid(0.0, 1.0, 9)
        with pytest.raises(ValueError):
            lp_norm(np.ones(9), g, 0.5)


class TestHalfLinePlan:
    def test_cutoff_values(self):
        assert plan_halfline(1.0, 1e-12).cutoff == pytest.approx(math.log(1e12), rel=1e-12)
        assert plan_halfline(10.0, 1e-12).cutoff == pytest.approx(math.log(1e12) / 10.0, rel=1e-12)

    def test_rejects_nonpositive_decay(self):
        with pytest.raises(ValueError):
            plan_halfline(0.0, 1e-12)
        with pytest.raises(ValueError):
            plan_halfline(-1.0, 1e-12)

    def test_tail_bound_guarantee(self):
        # discarded tail of e^{decay*w} * mass below tol/decay by construction
        plan = plan_halfline(2.0, 1e-10, mass_bound=7.0)
        assert plan.tail_bound() <= 1e-10 / 2.0 * (1.0 + 1e-12)

    def test_count_is_odd_and_clamped(self):
        p = plan_halfline(1.0, 1e-12, density=1.0)
        assert p.count >= 65 and p.count % 2 == 1
        grid = p.grid()
        assert grid.lo == -p.cutoff and grid.hi == 0.0


def test_trapezoid_weights_sum_to_length():
    w = trapezoid_weights(11, 0.1)
    assert w.sum() == pytest.approx(1.0, rel=1e-12)
