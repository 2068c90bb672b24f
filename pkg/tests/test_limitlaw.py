import math

import numpy as np
import pytest

from periodic_ctqw import (
    LimitLaw,
    MassError,
    PositionDistribution,
    RegimeError,
    WalkParams,
    distribution,
    empirical_cdf_distance,
    empirical_moment,
    finite_t_approximation,
    limit_cdf,
    limit_density,
    limit_moment,
    moment_limit_via_h,
)
from periodic_ctqw.quadrature import adaptive_integrate

SQRT2 = math.sqrt(2.0)
GXI = 1.0 / (2.0 * SQRT2)


@pytest.fixture
def law():
    return LimitLaw(gamma_xi_abs=GXI)


def density_integral_oracle(law, a, b):
    """Integrate the density with the sine substitution x = 2*gxi*sin(theta)."""
    edge = 2.0 * law.gamma_xi_abs
    ta = math.asin(max(-1.0, min(1.0, a / edge)))
    tb = math.asin(max(-1.0, min(1.0, b / edge)))
    # dx = edge*cos(theta) dtheta cancels the singular denominator
    return (tb - ta) / math.pi


class TestDensity:
    def test_center_value(self, law):
        assert limit_density(law, 0.0) == pytest.approx(SQRT2 / math.pi,
                                                        abs=1e-15)

    def test_quarter_point(self, law):
        # 4*gxi^2 = 1/2, so at x = 0.5 the density is 2/pi
        assert limit_density(law, 0.5) == pytest.approx(2.0 / math.pi,
                                                        abs=1e-15)

    def test_outside_support(self, law):
        assert limit_density(law, 2.0 * GXI) == 0.0
        assert limit_density(law, -0.9) == 0.0

    def test_normalization(self, law):
        # sine substitution regularizes the endpoint singularities; the
        # density evaluated along the substitution must integrate to 1
        edge = 2.0 * law.gamma_xi_abs

        def substituted(theta):
            x = edge * np.sin(theta)
            return limit_density(law, x) * edge * np.cos(theta)

        eps = 1e-12  # stay inside the open support
        quad = adaptive_integrate(substituted, -math.pi / 2 + eps,
                                  math.pi / 2 - eps,
                                  rel_tol=1e-12, abs_tol=1e-13, min_nodes=128)
        assert quad == pytest.approx(1.0, abs=1e-10)


class TestCdf:
    def test_center(self, law):
        assert limit_cdf(law, 0.0) == 0.5

    def test_edges(self, law):
        assert limit_cdf(law, 2 * GXI) == 1.0
        assert limit_cdf(law, -2 * GXI) == 0.0
        assert limit_cdf(law, 5.0) == 1.0

    def test_closed_form_value(self, law):
        # x = gxi: 1/2 + arcsin(1/2)/pi = 2/3
        assert limit_cdf(law, GXI) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_matches_density_integral(self, law):
        for x in np.linspace(-2 * GXI, 2 * GXI, 50):
            expect = density_integral_oracle(law, -2 * GXI, x)
            assert limit_cdf(law, x) == pytest.approx(expect, abs=1e-9)

    def test_nondecreasing(self, law):
        xs = np.linspace(-1.0, 1.0, 1001)
        vals = limit_cdf(law, xs)
        assert np.all(np.diff(vals) >= 0.0)


class TestFiniteTimeApproximation:
    def test_center_value(self, law):
        expect = 1.0 / (math.pi * 2 * GXI * 500.0)
        assert finite_t_approximation(law, 0, 500.0) == pytest.approx(
            expect, abs=1e-18)

    def test_outside_support(self, law):
        assert finite_t_approximation(law, 354, 500.0) == 0.0

    def test_symmetric(self, law):
        xs = np.arange(-300, 301)
        vals = finite_t_approximation(law, xs, 500.0)
        assert np.array_equal(vals, vals[::-1])

    def test_riemann_sum_near_one(self, law):
        # the integer sum converges to 1 like t^(-1/2); the edge cells of
        # the inverse-square-root singularity dominate the deficit, which
        # measures 0.0174 at t=500 and drops under 0.01 by t=2000
        def deficit(t):
            xs = np.arange(-math.ceil(2 * GXI * t) - 1,
                           math.ceil(2 * GXI * t) + 2)
            return abs(np.sum(finite_t_approximation(law, xs, t)) - 1.0)

        d500, d2000 = deficit(500.0), deficit(2000.0)
        assert d2000 < d500
        assert d500 < 0.02
        assert d2000 < 0.01


class TestMoments:
    def test_trivial_orders(self, law):
        assert limit_moment(law, 0) == 1.0
        assert limit_moment(law, 1) == 0.0

    def test_second_moment(self, law):
        assert limit_moment(law, 2) == pytest.approx(0.25, abs=1e-15)

    def test_fourth_moment_half(self):
        assert limit_moment(LimitLaw(0.5), 4) == pytest.approx(0.375,
                                                               abs=1e-15)

    def test_moment_quadrature_oracle(self, law):
        # substitution x = 2*gxi*sin(theta) makes the integral regular
        edge = 2 * GXI
        for r in range(0, 9):
            val = adaptive_integrate(
                lambda th: (edge * np.sin(th)) ** r / math.pi,
                -math.pi / 2, math.pi / 2, rel_tol=1e-12, abs_tol=1e-13,
                min_nodes=128)
            assert limit_moment(law, r) == pytest.approx(float(val), abs=1e-10)

    def test_via_h_identity(self, generic_params):
        law = LimitLaw.from_params(generic_params)
        for r in range(0, 9):
            assert moment_limit_via_h(generic_params, r) == pytest.approx(
                limit_moment(law, r), abs=1e-8)

    def test_via_h_negative_product(self, generic_negative):
        assert moment_limit_via_h(generic_negative, 4) == pytest.approx(
            0.375, abs=1e-8)
        assert moment_limit_via_h(generic_negative, 1) == 0.0

    def test_via_h_equal_magnitude_rejected(self, equal_params):
        with pytest.raises(RegimeError):
            moment_limit_via_h(equal_params, 2)


class TestEmpirical:
    def test_point_mass_moments(self):
        dist = PositionDistribution(t=0.0, positions=np.array([0]),
                                    probs=np.array([1.0]))
        assert empirical_moment(dist, 0) == 1.0
        assert empirical_moment(dist, 2) == 0.0

    def test_low_mass_rejected(self):
        dist = PositionDistribution(t=1.0, positions=np.array([0]),
                                    probs=np.array([0.5]))
        with pytest.raises(MassError):
            empirical_moment(dist, 2)
        with pytest.raises(MassError):
            empirical_cdf_distance(dist, LimitLaw(GXI))

    def test_point_mass_distance(self, law):
        dist = PositionDistribution(t=0.0, positions=np.array([0]),
                                    probs=np.array([1.0]))
        assert empirical_cdf_distance(dist, law) == pytest.approx(0.5,
                                                                  abs=1e-12)

    def test_convergence_of_distance(self, generic_params):
        law = LimitLaw.from_params(generic_params)
        d50 = empirical_cdf_distance(distribution(generic_params, 50.0), law)
        d200 = empirical_cdf_distance(distribution(generic_params, 200.0), law)
        assert d200 < d50


def test_law_depends_only_on_smaller_magnitude():
    a = LimitLaw.from_params(WalkParams(GXI, 1.0 / SQRT2))
    b = LimitLaw.from_params(WalkParams(GXI, 10.0))
    xs = np.linspace(-0.8, 0.8, 201)
    da = limit_density(a, xs)
    db = limit_density(b, xs)
    assert np.max(np.abs(da - db)) <= 1e-15


def test_equal_magnitude_law_uses_gamma0(equal_params):
    law = LimitLaw.from_params(equal_params)
    assert law.gamma_xi_abs == abs(equal_params.gamma0)
