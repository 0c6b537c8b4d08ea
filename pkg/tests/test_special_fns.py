"""Kernel integral bounds against the quadrature oracle, and the incomplete
gamma paths against direct integration."""

import math

import pytest
from scipy.integrate import quad

from chebybound import special_fns as sf
from chebybound.errors import DomainError

Z_GRID = [1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0]
X_GRID = [1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0]


def test_kernel_symmetry_and_values():
    assert sf.bessel_kernel(3.0, 1.0) == pytest.approx(math.exp(-3.0), rel=1e-15)
    for z, t in [(1.0, 2.5), (7.0, 0.3), (20.0, 1.9)]:
        assert sf.bessel_kernel(z, t) == pytest.approx(sf.bessel_kernel(z, 1.0 / t),
                                                       rel=1e-14)
    assert sf.bessel_kernel(2.0, 2.0) == pytest.approx(math.exp(-2.5), rel=1e-15)


def test_kernel_domain():
    with pytest.raises(DomainError):
        sf.bessel_kernel(0.0, 1.0)
    with pytest.raises(DomainError):
        sf.bessel_kernel(1.0, 0.0)


class TestKIntegral:
    def test_complementarity(self):
        for nu in (1.0, 2.0):
            for z in (1.0, 5.0, 20.0):
                for x in (1.5, 3.0, 10.0):
                    lhs = sf.k_integral(nu, z, x) + sf.k_integral(-nu, z, 1.0 / x)
                    rhs = sf.k_integral(nu, z, 0.0)
                    assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_full_integral_below_closed_bound(self):
        assert sf.k_integral(1.0, 10.0, 0.0) <= \
            math.sqrt(math.pi / 20.0) * math.exp(-10.0) * (1 + 3.0 / 80.0)

    def test_monotone_decreasing_in_x(self):
        vals = [sf.k_integral(1.0, 5.0, x) for x in (0.0, 1.0, 2.0, 4.0, 8.0)]
        assert vals == sorted(vals, reverse=True)

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.k_integral(1.0, 0.01, 1.0)
        with pytest.raises(DomainError):
            sf.k_integral(5.0, 1.0, 1.0)


@pytest.mark.parametrize("z", Z_GRID)
@pytest.mark.parametrize("x", X_GRID)
def test_upper_bounds_dominate_oracle(z, x):
    k1 = sf.k_integral(1.0, z, x)
    k2 = sf.k_integral(2.0, z, x)
    assert sf.k1_upper(z, x) > k1
    assert sf.k2_upper(z, x) > k2
    assert sf.q_upper(1.0, z, x) > k1
    assert sf.k2_via_q(z, x) > k2


@pytest.mark.parametrize("z", [0.5, 1.0, 3.0, 10.0, 30.0, 100.0])
def test_at0_bounds_dominate(z):
    assert sf.k1_at0_upper(z) >= sf.k_integral(1.0, z, 0.0)
    assert sf.k2_at0_upper(z) >= sf.k_integral(2.0, z, 0.0)


def test_at0_ratio_tends_to_one():
    r = [sf.k2_at0_upper(z) / sf.k1_at0_upper(z) for z in (1.0, 10.0, 100.0, 500.0)]
    assert r == sorted(r, reverse=True)
    assert r[-1] == pytest.approx(1.0, abs=4e-3)


def test_k1_upper_limit_toward_1():
    # y -> 0 reduces the bound to (e^-z/2z)(1 + (3/8+z) sqrt(2) sqrt(pi/z)/2)
    z = 5.0
    got = sf.k1_upper(z, 1.0 + 1e-13)
    expect = math.exp(-z) / (2 * z) * (
        1.0 + (3 / 8 + z) * math.sqrt(2.0) * 0.5 * math.sqrt(math.pi / z))
    assert got == pytest.approx(expect, rel=1e-5)


def test_k2_upper_positive_finite():
    v = sf.k2_upper(20.0, 1.5)
    assert 0.0 < v < math.inf


def test_q_upper_blows_up_near_1():
    assert sf.q_upper(1.0, 5.0, 1.0 + 1e-9) > sf.q_upper(1.0, 5.0, 1.1) * 1e6


def test_bounds_domain():
    for fn in (sf.k1_upper, sf.k2_upper, sf.k2_via_q):
        with pytest.raises(DomainError):
            fn(5.0, 1.0)
    with pytest.raises(DomainError):
        sf.q_upper(2.0, 5.0, 3.0)


def test_bounds_monotone_decreasing_in_x():
    for fn in (sf.k1_upper, sf.k2_upper, sf.k2_via_q):
        vals = [fn(8.0, x) for x in (1.3, 2.0, 3.5, 7.0)]
        assert vals == sorted(vals, reverse=True)


def test_log_variants_consistent():
    for z in (2.0, 20.0):
        for x in (1.2, 4.0):
            assert math.exp(sf.log_k1_upper(z, x)) == pytest.approx(
                sf.k1_upper(z, x), rel=1e-12)
            assert math.exp(sf.log_k2_upper(z, x)) == pytest.approx(
                sf.k2_upper(z, x), rel=1e-12)
            assert sf.log_k2_best_upper(z, x) <= sf.log_k2_upper(z, x)


def test_log_k2_best_handles_extreme_arguments():
    # arguments from the far end of the bound tables: the linear-scale value
    # underflows but the log stays finite
    val = sf.log_k2_best_upper(42.72, 34.72)
    assert -800.0 < val < -700.0


class TestIncGamma:
    def test_gamma_1_is_exp(self):
        for x in (0.5, 2.0, 10.0):
            assert sf.upper_inc_gamma(1.0, x) == pytest.approx(math.exp(-x), rel=1e-14)

    @pytest.mark.parametrize("a", [-2.0, -1.0, -0.5, 0.5])
    @pytest.mark.parametrize("x", [0.5, 2.0, 10.0, 40.0])
    def test_recurrence_vs_quadrature(self, a, x):
        ref, _ = quad(lambda t: t ** (a - 1.0) * math.exp(-t), x, x + 250.0,
                      epsabs=0.0, epsrel=1e-13, limit=500)
        assert sf.upper_inc_gamma(a, x) == pytest.approx(ref, rel=1e-10)

    @pytest.mark.parametrize("a", [-2.0, -1.0, -0.3])
    @pytest.mark.parametrize("x", [0.05, 0.15, 0.29])
    def test_small_x_fallback(self, a, x):
        ref, _ = quad(lambda t: t ** (a - 1.0) * math.exp(-t), x, x + 250.0,
                      epsabs=0.0, epsrel=1e-13, limit=500)
        assert sf.upper_inc_gamma(a, x) == pytest.approx(ref, rel=1e-9)

    def test_integral_identity_negative_orders(self):
        # direct quadrature of t^-2 e^-t and t^-3 e^-t
        for a in (-1.0, -2.0):
            x = 1.7
            ref, _ = quad(lambda t: t ** (a - 1.0) * math.exp(-t), x, 300.0,
                          epsabs=0.0, epsrel=1e-13, limit=500)
            assert sf.upper_inc_gamma(a, x) == pytest.approx(ref, rel=1e-10)

    def test_three_term_pinch(self):
        # x^nu e^-x/(x+1-nu) < Gamma(nu,x) < x^(nu-3) e^-x (x^2+(nu-1)x+(nu-1)(nu-2))
        for nu in (-2.0, -1.0, -0.5, 0.5):
            for x in (0.8, 3.0, 15.0):
                g = sf.upper_inc_gamma(nu, x)
                lo = x ** nu * math.exp(-x) / (x + 1.0 - nu)
                hi = x ** (nu - 3.0) * math.exp(-x) * (
                    x * x + (nu - 1.0) * x + (nu - 1.0) * (nu - 2.0))
                assert lo < g < hi

    def test_sandwich(self):
        for a in (-2.0, -0.5, 0.5, 1.0):
            for x in (0.5, 2.0, 10.0):
                lo, hi = sf.inc_gamma_sandwich(a, x)
                g = sf.upper_inc_gamma(a, x)
                assert lo <= g <= hi

    def test_sandwich_tight_at_a1(self):
        lo, hi = sf.inc_gamma_sandwich(1.0, 3.0)
        assert lo == hi == pytest.approx(math.exp(-3.0), rel=1e-15)

    def test_sandwich_ratio_tends_to_one(self):
        ratios = []
        for x in (1.0, 10.0, 100.0, 500.0):
            lo, hi = sf.inc_gamma_sandwich(-1.0, x)
            ratios.append(hi / lo)
        assert ratios == sorted(ratios, reverse=True)
        assert ratios[-1] == pytest.approx(1.0, abs=5e-3)

    def test_near_zero_order_flagged(self):
        with pytest.raises(DomainError):
            sf.upper_inc_gamma(1e-12, 2.0)
        # a = 0 itself goes through the exponential-integral branch
        ref, _ = quad(lambda t: math.exp(-t) / t, 2.0, 300.0,
                      epsabs=0.0, epsrel=1e-13, limit=500)
        assert sf.upper_inc_gamma(0.0, 2.0) == pytest.approx(ref, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.upper_inc_gamma(-5.0, 1.0)
        with pytest.raises(DomainError):
            sf.upper_inc_gamma(0.5, 0.0)
        with pytest.raises(DomainError):
            sf.inc_gamma_sandwich(1.5, 1.0)
