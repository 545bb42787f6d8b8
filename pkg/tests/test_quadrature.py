"""Quadrature layer: Gauss-Legendre, weighted tensor grids, circle rule."""

import math

import numpy as np
import pytest

from dunkl_frft.errors import DomainError, RangeError
from dunkl_frft.polyengine import HermiteBasis
from dunkl_frft.quadrature import (
    QuadGrid,
    build_grid,
    circle_grid,
    circle_identity_residual,
    gauss_legendre,
    inner_product,
    jacobi_halfline,
)
from dunkl_frft.specfun import Multiplicity, gamma_fn


class TestGaussLegendre:
    def test_one_point(self):
        x, w = gauss_legendre(1)
        assert x[0] == pytest.approx(0.0, abs=1e-15)
        assert w[0] == pytest.approx(2.0, rel=1e-15)

    def test_two_point(self):
        x, w = gauss_legendre(2)
        assert sorted(x) == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], rel=1e-14)
        assert list(w) == pytest.approx([1.0, 1.0], rel=1e-14)

    def test_monomial_exactness_n16(self):
        x, w = gauss_legendre(16)
        for k in range(32):
            exact = 2.0 / (k + 1) if k % 2 == 0 else 0.0
            assert np.sum(w * x**k) == pytest.approx(exact, abs=1e-14)

    def test_weight_sum(self):
        for n in (5, 64, 512):
            _, w = gauss_legendre(n)
            assert np.sum(w) == pytest.approx(2.0, rel=1e-14)

    def test_range(self):
        with pytest.raises(RangeError):
            gauss_legendre(0)
        with pytest.raises(RangeError):
            gauss_legendre(513)


class TestBuildGrid:
    def test_gaussian_integral_mu_zero(self):
        grid = build_grid(Multiplicity([0.0]), L=8.0, n=80)
        val = grid.integrate(lambda p: np.exp(-p[..., 0] ** 2))
        assert val == pytest.approx(math.sqrt(math.pi), abs=1e-10)

    def test_abs_weight_moment(self):
        # integral |y| e^{-y^2} dy = Gamma(1) = 1 (substitution t = y^2)
        grid = build_grid(Multiplicity([0.5]), L=8.0, n=80)
        val = grid.integrate(lambda p: np.exp(-p[..., 0] ** 2))
        assert val == pytest.approx(1.0, abs=1e-12)

    def test_two_dim_product_moment(self):
        grid = build_grid(Multiplicity([0.3, 0.7]), L=8.0, n=40)
        val = grid.integrate(lambda p: np.exp(-np.sum(p**2, axis=-1)))
        assert val == pytest.approx(gamma_fn(0.8) * gamma_fn(1.2), rel=1e-12)

    def test_calibration_invariant(self):
        for mu in ([0.0], [0.3], [1.7], [0.3, 0.7]):
            mult = Multiplicity(mu)
            grid = build_grid(mult, n=40)
            total = float(np.sum(grid.weights * np.exp(-np.sum(grid.nodes**2, axis=-1))))
            assert total == pytest.approx(1.0 / mult.mehta_constant, rel=1e-9)

    def test_no_node_at_cusp(self):
        grid = build_grid(Multiplicity([0.3]), n=40)
        assert np.min(np.abs(grid.axes_nodes[0])) > 0.0

    def test_validation(self):
        with pytest.raises(DomainError):
            build_grid(Multiplicity([0.5]), L=-1.0)
        with pytest.raises(DomainError):
            build_grid(Multiplicity([0.5]), n=4)

    def test_json_roundtrip(self):
        grid = build_grid(Multiplicity([0.3, 0.7]), L=6.0, n=24)
        desc = grid.to_json()
        clone = QuadGrid.from_json(desc)
        assert clone.to_json() == desc
        assert np.allclose(clone.nodes, grid.nodes)

    def test_tail_control_doubling_box(self):
        # doubling L at fixed density moves Hermite inner products < 1e-10
        mult = Multiplicity([0.7])
        basis = HermiteBasis(mult, 8)
        vals = {}
        for L, n in ((8.0, 80), (16.0, 160)):
            grid = build_grid(mult, L=L, n=n)
            mat = basis.axis_matrix(0, grid.axes_nodes[0])
            vals[L] = (mat * grid.axes_weights[0][None, :]) @ mat.T
        assert np.max(np.abs(vals[8.0] - vals[16.0])) < 1e-10


class TestInnerProduct:
    def setup_method(self):
        self.mult = Multiplicity([0.5])
        self.grid = build_grid(self.mult, n=80)
        self.basis = HermiteBasis(self.mult, 4)

    def test_ground_state_normalized(self):
        h0 = self.basis.function((0,))
        assert inner_product(h0, h0, self.grid).real == pytest.approx(1.0, abs=1e-10)

    def test_odd_pair_vanishes(self):
        h0 = self.basis.function((0,))
        h1 = self.basis.function((1,))
        assert abs(inner_product(h0, h1, self.grid)) <= 1e-12

    def test_degree_two_laguerre_norm(self):
        # normalization against the Laguerre norm Gamma(m+a+1)/m!
        h2 = self.basis.function((2,))
        assert inner_product(h2, h2, self.grid).real == pytest.approx(1.0, abs=1e-9)


class TestJacobiHalfline:
    def test_plain_exponent_matches_legendre(self):
        t, wt = jacobi_halfline(20, 0.0, 2.0)
        val = np.sum(wt * np.exp(-t))
        assert val == pytest.approx(1.0 - math.exp(-2.0), rel=1e-14)

    def test_cusp_weight_moment(self):
        t, wt = jacobi_halfline(60, 0.6, 8.0)
        val = np.sum(wt * np.exp(-(t**2)))
        assert val == pytest.approx(0.5 * gamma_fn(0.8), rel=1e-13)

    def test_errors(self):
        with pytest.raises(DomainError):
            jacobi_halfline(10, -1.0, 1.0)


class TestCircleGrid:
    def test_total_mass_exactly_one(self):
        circle = circle_grid(64)
        assert np.sum(circle.weights) == pytest.approx(1.0, rel=1e-15)

    def test_surface_weight_vs_beta_identity(self):
        # d_k for mu = (0.3, 0.7) equals B(0.8, 1.2)/pi
        mult = Multiplicity([0.3, 0.7])
        circle = circle_grid(1 << 22)
        d_k = circle.surface_weight_mass(mult)
        beta = gamma_fn(0.8) * gamma_fn(1.2) / gamma_fn(2.0)
        assert d_k == pytest.approx(beta / math.pi, rel=1e-9)

    def test_mehta_surface_relation(self):
        # c_k^-1 = pi^(N/2) Gamma(lambda+1) d_k / Gamma(N/2) for N = 2
        for mu in ((0.0, 0.0), (0.3, 0.7)):
            assert circle_identity_residual(Multiplicity(mu), n=1 << 22) <= 1e-9

    def test_minimum_size(self):
        with pytest.raises(DomainError):
            circle_grid(4)
