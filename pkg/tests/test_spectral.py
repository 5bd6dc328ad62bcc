import math

import pytest

from dtmoments.errors import CapExceededError
from dtmoments.quasinil import tstt_moment
from dtmoments.spectral import (
    SUPPORT_UPPER,
    density_grid,
    density_moment,
    density_point_at,
    phi_at,
    rho,
    rho_prime,
)


class TestRho:
    def test_midpoint(self):
        assert abs(rho(math.pi / 2) - 2 / math.pi) < 1e-15

    def test_endpoint_limits(self):
        assert rho(0.0) == math.e
        assert rho(math.pi) == 0.0
        assert abs(rho(1e-8) - math.e) < 1e-12

    def test_strictly_decreasing_on_grid(self):
        vals = [rho(math.pi * i / 1001) for i in range(1, 1001)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(ValueError):
            rho(-0.1)
        with pytest.raises(ValueError):
            rho(3.2)

    def test_prime_negative(self):
        for v in (0.3, 1.0, 2.0, 3.0):
            assert rho_prime(v) < 0

    def test_prime_matches_finite_difference(self):
        for v in (0.5, 1.2, 2.4):
            h = 1e-6
            fd = (rho(v + h) - rho(v - h)) / (2 * h)
            assert abs(rho_prime(v) - fd) < 1e-7


class TestPhi:
    def test_value_where_exponentials_cancel(self):
        assert abs(phi_at(2 / math.pi) - 1 / math.pi) < 1e-12

    def test_domain(self):
        for bad in (0.0, -1.0, math.e, 3.0):
            with pytest.raises(ValueError):
                phi_at(bad)

    def test_nonnegative_on_grid(self):
        pts = density_grid(1000)
        assert all(p.phi >= 0 for p in pts)
        assert all(0 < p.x < SUPPORT_UPPER for p in pts)

    def test_located_parameter_is_consistent(self):
        pt = density_point_at(1.0)
        assert abs(rho(pt.v) - 1.0) < 1e-12
        assert pt.phi == phi_at(1.0)

    def test_near_edge_square_root_shape(self):
        x = math.e - 1e-3
        ratio = phi_at(x) / math.sqrt(math.e - x)
        target = math.sqrt(2) / (math.pi * math.e**1.5)
        assert abs(ratio / target - 1) < 0.02

    def test_small_x_spike_approaches_asymptote(self):
        # the 1/(x log^2 x) shape has O(1/log x) corrections, so the product
        # creeps toward 1 extremely slowly (still ~1.28 at x = 1e-6); probe
        # the limit on the parametric curve itself, where no inversion is
        # needed and x can go far below bisection resolution
        products = []
        for u in (0.1, 0.02, 0.005):
            v = math.pi - u
            x = rho(v)
            phi = math.sin(v) * math.exp(-v * math.cos(v) / math.sin(v)) / math.pi
            products.append(phi * x * math.log(x) ** 2)
        assert all(p > 1 for p in products)
        assert all(a > b for a, b in zip(products, products[1:]))
        assert products[-1] < 1.02

    def test_small_x_product_frozen_value(self):
        # the true product at x = 1e-6, pinned so regressions surface
        got = phi_at(1e-6) * 1e-6 * math.log(1e-6) ** 2
        assert abs(got - 1.27990) < 1e-3


class TestDensityMoments:
    def test_total_mass(self):
        assert abs(density_moment(0) - 1.0) <= 1e-10

    def test_first_and_fourth(self):
        assert abs(density_moment(1) - 0.5) <= 1e-8
        assert abs(density_moment(4) - 32.0 / 15.0) <= 1e-8

    def test_matches_closed_form_through_six(self):
        for p in range(1, 7):
            assert abs(density_moment(p) - float(tstt_moment(p))) <= 1e-8

    def test_cap(self):
        with pytest.raises(CapExceededError):
            density_moment(9)
        assert density_moment(9, max_p=9) > 0

    def test_support_stays_below_e(self):
        pts = density_grid(500)
        assert max(p.x for p in pts) <= SUPPORT_UPPER
