"""The density device against direct tabulated sums, and the closed-form
integrals against quadrature."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from chebybound import zero_sums as zs
from chebybound.config import A_DEFAULT
from chebybound.errors import DomainError

TWO_PI = 2.0 * math.pi


class TestPhiSpec:
    def test_pivot_of_damped_weight(self):
        phi = zs.PhiSpec("damped", m=3, X=4.0)
        assert phi.pivot() == pytest.approx(math.exp(4.0 / 2.0), rel=1e-14)

    def test_decreasing_weights_pivot_at_zero(self):
        assert zs.PhiSpec("power", m=2).pivot() == 0.0
        assert zs.PhiSpec("reciprocal").pivot() == 0.0

    def test_damped_maximum_at_pivot(self):
        phi = zs.PhiSpec("damped", m=1, X=3.0)
        w = phi.pivot()
        assert phi(w) > phi(w * 0.8)
        assert phi(w) > phi(w * 1.25)

    def test_validation(self):
        with pytest.raises(DomainError):
            zs.PhiSpec("damped", m=1, X=0.0)
        with pytest.raises(DomainError):
            zs.PhiSpec("nope")


class TestClosedForms:
    def test_integral_power_vs_quadrature(self):
        got = zs.integral_power(100.0, 1e6, 2)
        ref, _ = quad(lambda y: y ** -3 * math.log(y / TWO_PI), 100.0, 1e6,
                      epsabs=0.0, epsrel=1e-13, limit=400)
        assert got == pytest.approx(ref, rel=1e-12)

    def test_integral_power_infinite_v(self):
        u, m = 50.0, 3
        finite = zs.integral_power(u, 1e9, m)
        inf = zs.integral_power(u, math.inf, m)
        assert inf >= finite
        assert inf > zs.integral_power(u, 1e3, m)
        assert inf == pytest.approx((1 + m * math.log(u / TWO_PI)) / (m * m * u ** m),
                                    rel=1e-14)

    def test_integral_power_at_2pi_e(self):
        u = TWO_PI * math.e
        assert zs.integral_power(u, math.inf, 1) == pytest.approx(2.0 / u, rel=1e-14)

    def test_integral_power_domain(self):
        with pytest.raises(DomainError):
            zs.integral_power(5.0, 10.0, 1)
        with pytest.raises(DomainError):
            zs.integral_power(10.0, 100.0, 0)

    def test_integral_damped_vs_quadrature(self):
        for (u, v, m, X) in [(50.0, 1e5, 2, 3.0), (100.0, 1e4, 1, 5.0),
                             (20.0, 2e6, 3, 2.0)]:
            got = zs.integral_damped(u, v, m, X, mode="reference")
            ref, _ = quad(lambda y: y ** -(m + 1) * math.exp(-X * X / math.log(y))
                          * math.log(y / TWO_PI), u, v,
                          epsabs=0.0, epsrel=1e-13, limit=600)
            assert got == pytest.approx(ref, rel=1e-9)

    def test_integral_damped_infinite_v(self):
        got = zs.integral_damped(100.0, math.inf, 2, 3.0, mode="reference")
        big = zs.integral_damped(100.0, 1e9, 2, 3.0, mode="reference")
        assert got >= big
        assert got == pytest.approx(big, rel=1e-6)

    def test_certified_dominates_reference(self):
        for (u, m, X) in [(50.0, 2, 3.0), (100.0, 1, 5.0), (1e3, 2, 4.0)]:
            cert = zs.integral_damped(u, math.inf, m, X, mode="certified")
            ref = zs.integral_damped(u, math.inf, m, X, mode="reference")
            assert cert >= ref

    def test_integral_damped_m0_vs_quadrature(self):
        got = zs.integral_damped_m0(100.0, 1e4, 5.0)
        ref, _ = quad(lambda y: math.exp(-25.0 / math.log(y)) / y
                      * math.log(y / TWO_PI), 100.0, 1e4,
                      epsabs=0.0, epsrel=1e-13, limit=600)
        assert got == pytest.approx(ref, rel=1e-9)

    def test_integral_damped_m0_degenerate(self):
        assert zs.integral_damped_m0(50.0, 50.0, 4.0) == 0.0

    def test_integral_damped_m0_rejects_infinity(self):
        with pytest.raises(DomainError):
            zs.integral_damped_m0(100.0, math.inf, 3.0)


class TestSumUpper:
    def test_oracle_dominance_random_instances(self, table_1000):
        rng = np.random.default_rng(0)
        checked = 0
        while checked < 50:
            kind = ["power", "damped", "reciprocal"][int(rng.integers(3))]
            m = int(rng.integers(1, 4))
            X = float(rng.uniform(1.5, 4.0))
            phi = zs.PhiSpec(kind, m=m, X=X)
            U = float(rng.uniform(2 * math.pi + 0.5, 400.0))
            V = float(rng.uniform(U + 1.0, 1000.0))
            j = 0 if V >= phi.pivot() else 1
            bound = zs.sum_over_zeros_upper(phi, U, V, j, table_1000,
                                            mode="reference")
            direct = zs.tabulated_sum(phi, U, V, table_1000)
            assert bound >= direct
            checked += 1

    def test_empty_interval_leaves_error_terms(self, table_1000):
        phi = zs.PhiSpec("power", m=1)
        got = zs.sum_over_zeros_upper(phi, 100.0, 100.0, 0, table_1000)
        # no zeros counted, integrals vanish, census terms remain non-negative
        assert 0.0 <= got < 1.0
        assert zs.tabulated_sum(phi, 100.0, 100.0, table_1000) == 0.0

    def test_density_prefactor_reproduces_chain_constant(self):
        # {1/2pi + q(A)} 2 sqrt(pi/4) appears as 0.28209479177389 in the
        # damped-block chain at U = A
        val = (1.0 / TWO_PI + zs.q_density(A_DEFAULT)) * 2.0 * math.sqrt(math.pi / 4.0)
        assert val == pytest.approx(0.28209479177389, rel=1e-11)

    def test_reciprocal_block_matches_inline_assembly(self, table_1000):
        # independent re-derivation of the first-block display at (D, T1):
        # merged density factor applies since D > 2pi
        D, T1 = 700.0, 950.0
        phi = zs.PhiSpec("reciprocal")
        got = zs.sum_over_zeros_upper(phi, D, T1, 0, table_1000)
        n_d = table_1000.count_below(D)
        n_t = table_1000.count_below(T1)
        from chebybound.zeros import count_slack, smooth_count
        integral = 0.5 * (math.log(T1 / TWO_PI) ** 2 - math.log(D / TWO_PI) ** 2)
        q_d = (0.137 * math.log(D) + 0.443) / (D * math.log(D) * math.log(D / TWO_PI))
        main = (1.0 / TWO_PI + q_d) * integral
        e0 = 2.0 * count_slack(D) / D \
            + (n_t - smooth_count(T1) - count_slack(T1)) / T1 \
            - (n_d - smooth_count(D) + count_slack(D)) / D
        assert got == pytest.approx(main + e0, rel=1e-9)

    def test_monotonicity_in_endpoints(self, table_1000):
        phi = zs.PhiSpec("damped", m=1, X=2.0)
        lo = zs.sum_over_zeros_upper(phi, 40.0, 500.0, 0, table_1000,
                                     mode="reference")
        hi = zs.sum_over_zeros_upper(phi, 40.0, 900.0, 0, table_1000,
                                     mode="reference")
        assert hi >= lo * (1 - 1e-12)
        narrower = zs.sum_over_zeros_upper(phi, 60.0, 900.0, 0, table_1000,
                                           mode="reference")
        assert narrower <= hi * (1 + 1e-12)

    def test_sign_condition_enforced(self, table_1000):
        phi = zs.PhiSpec("damped", m=1, X=3.0)   # pivot e^{3/sqrt 2} ~ 8.3
        with pytest.raises(DomainError):
            # V below the pivot with j = 0 violates (-1)^j (V - W) >= 0
            zs.sum_over_zeros_upper(phi, 7.0, 8.0, 0, table_1000)

    def test_infinite_v_needs_integrable_weight(self, table_1000):
        with pytest.raises(DomainError):
            zs.sum_over_zeros_upper(zs.PhiSpec("reciprocal"), 20.0, math.inf,
                                    0, table_1000)

    def test_above_table_height_uses_envelope(self, table_1000):
        # V beyond the certified height still yields a finite valid bound
        phi = zs.PhiSpec("power", m=2)
        bound = zs.sum_over_zeros_upper(phi, 500.0, 5e4, 0, table_1000)
        direct = zs.tabulated_sum(phi, 500.0, 1000.0, table_1000)
        assert bound >= direct
