"""Exact Chebyshev functions, the identity chain, li, and the truncated
zero-sum approximation."""

import math

import mpmath
import numpy as np
import pytest

from chebybound import chebyshev as ch
from chebybound.errors import DomainError, LimitError
from chebybound.sieve import (SieveEngine, base_primes, integer_kth_root,
                              prime_power_jumps)


class TestSieve:
    def test_base_primes_small(self):
        assert base_primes(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_pi_1e6(self, engine_small):
        # independent simple-sieve oracle
        assert engine_small.pi(1e6) == int(base_primes(10 ** 6).size) == 78498

    def test_theta_small_values(self, engine_small):
        assert engine_small.theta(2.0) == pytest.approx(math.log(2), rel=1e-15)
        assert engine_small.theta(1.9) == 0.0
        brute = math.fsum(math.log(p) for p in base_primes(100).tolist())
        assert engine_small.theta(100.0) == pytest.approx(brute, abs=1e-12)

    def test_theta_streamed_matches_prefix(self):
        # force the streaming path with a small prefix and compare
        eng = SieveEngine(limit=10 ** 6, prefix_limit=10 ** 4)
        ref = SieveEngine(limit=10 ** 6)
        assert eng.theta(987654.0) == pytest.approx(ref.theta(987654.0), abs=1e-8)
        assert eng.pi(987654.0) == ref.pi(987654.0)

    def test_limit_enforced(self, engine_small):
        with pytest.raises(LimitError):
            engine_small.theta(3e6)

    def test_integer_kth_root_exactness(self):
        # float roots misclassify near-power boundaries; the integer walk
        # must not
        for p, k in [(10 ** 10, 2), (999999999999, 3), (2 ** 60, 5)]:
            r = integer_kth_root(p, k)
            assert r ** k <= p < (r + 1) ** k
        n = 10 ** 14
        assert integer_kth_root(n ** 2, 2) == n
        assert integer_kth_root(n ** 2 - 1, 2) == n - 1

    def test_prime_power_jumps(self):
        # 100 = 2^2 5^2 is not a prime power and must not appear
        vals, logs = prime_power_jumps(100)
        assert vals.tolist() == [4, 8, 9, 16, 25, 27, 32, 49, 64, 81]
        assert logs[0] == pytest.approx(math.log(2))
        assert logs[-1] == pytest.approx(math.log(3))


class TestPsiTheta:
    def test_psi_10(self, engine_small):
        expected = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
        assert ch.psi_from_theta(10.0, engine_small) == pytest.approx(
            expected, abs=1e-12)

    def test_psi_below_2(self, engine_small):
        assert ch.psi_from_theta(1.5, engine_small) == 0.0

    def test_psi_at_least_theta(self, engine_small):
        for x in (10.0, 1000.0, 99991.0, 1e6):
            assert ch.psi_from_theta(x, engine_small) >= engine_small.theta(x)

    def test_jump_structure_matches_von_mangoldt(self, engine_small):
        # psi increases by exactly Lambda(n) at each n <= 2000
        import sympy  # factorization oracle for the jump sizes
        psi_vals = [ch.psi_from_theta(float(n), engine_small)
                    for n in range(1, 2001)]
        for n in range(2, 2001):
            jump = psi_vals[n - 1] - psi_vals[n - 2]
            f = sympy.factorint(n)
            lam = math.log(next(iter(f))) if len(f) == 1 else 0.0
            assert jump == pytest.approx(lam, abs=1e-9)

    def test_moebius_round_trip(self, engine_small):
        rng = np.random.default_rng(1)
        for x in rng.uniform(2.0, 2e6, size=40):
            assert ch.theta_from_psi_moebius(x, engine_small) == pytest.approx(
                engine_small.theta(x), abs=1e-9)

    def test_moebius_small_cases(self, engine_small):
        assert ch.theta_from_psi_moebius(2.0, engine_small) == pytest.approx(
            math.log(2), rel=1e-14)
        assert ch.theta_from_psi_moebius(3.9, engine_small) == pytest.approx(
            math.log(2) + math.log(3), rel=1e-14)

    def test_apostol_gap_bound(self, engine_small):
        for x in (16.0, 1000.0, 12345.0, 1e6):
            psi = ch.psi_from_theta(x, engine_small)
            theta = engine_small.theta(x)
            gap = (psi - theta) / x
            assert 0.0 <= gap <= math.log(x) ** 2 / (2 * math.log(2) * math.sqrt(x))

    def test_pi_sandwich(self, engine_small):
        for x in (100.0, 5000.0, 1e6):
            s = ch.sample(x, engine_small)
            assert s.psi / math.log(s.x) < s.pi < s.Pi


class TestBigPiAndLi:
    def test_big_pi_structure(self, engine_small):
        x = 1e4
        pi_x = engine_small.pi(x)
        got = ch.big_pi(x, engine_small)
        assert got > pi_x
        expected = sum(engine_small.pi(integer_kth_root(int(x), m)) / m
                       for m in range(1, 14))
        assert got == pytest.approx(expected, rel=1e-14)

    def test_li2_value(self):
        assert ch.li_at_2() == pytest.approx(1.04516, abs=5e-6)
        assert ch.li_at_2() == pytest.approx(float(mpmath.li(2)), abs=1e-8)

    def test_li_against_reference(self):
        for x in (10.0, 1e4, 1e8):
            assert ch.li(x) == pytest.approx(float(mpmath.li(x)), rel=1e-10)

    def test_two_over_log_two(self):
        assert 2.0 / math.log(2.0) == pytest.approx(2.88539, abs=5e-6)

    def test_li_domain(self):
        with pytest.raises(DomainError):
            ch.li(1.5)


class TestExplicitPsi:
    def test_k0_base(self, table_1000):
        x = 100.5
        expected = x - math.log(2 * math.pi) - 0.5 * math.log(1 - x ** -2)
        assert ch.explicit_psi(x, 0, table_1000) == pytest.approx(expected,
                                                                  rel=1e-14)

    def test_truncation_error_shrinks_in_rms(self, table_1000, engine_small):
        rng = np.random.default_rng(2)
        xs = rng.uniform(100.0, 1e4, size=32)
        xs += 0.5 - (xs % 1.0)          # push off integers (and prime powers)
        K = table_1000.count

        def rms(k):
            errs = [ch.explicit_psi(x, k, table_1000)
                    - ch.psi_from_theta(x, engine_small) for x in xs]
            return math.sqrt(np.mean(np.square(errs)))

        assert rms(K) < rms(K // 4)

    def test_jump_tracked_near_prime_power(self, table_1000, engine_small):
        # around 128 = 2^7 the formula's jump approximates Lambda = log 2
        below = ch.explicit_psi(127.9, table_1000.count, table_1000)
        above = ch.explicit_psi(128.1, table_1000.count, table_1000)
        assert (above - below) == pytest.approx(math.log(2), abs=0.25)

    def test_half_weight_convention(self, table_1000, engine_small):
        plain = ch.explicit_psi(128.0, 100, table_1000)
        halved = ch.explicit_psi(128.0, 100, table_1000,
                                 half_weight_at_jump=True, engine=engine_small)
        assert halved - plain == pytest.approx(0.5 * math.log(2), rel=1e-12)

    def test_too_many_pairs(self, table_1000):
        with pytest.raises(DomainError):
            ch.explicit_psi(100.0, table_1000.count + 1, table_1000)


class TestSample:
    def test_fields(self, engine_small):
        s = ch.sample(1000.0, engine_small)
        assert s.psi >= s.theta >= 0.0
        assert s.pi == 168
        assert isinstance(s.pi, int)
        gap = sum(engine_small.theta(integer_kth_root(1000, m))
                  for m in range(2, 10))
        assert s.psi - s.theta == pytest.approx(gap, abs=1e-12)
