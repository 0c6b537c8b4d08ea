"""Bessel-type kernel integrals, their closed-form upper bounds, and the
upper incomplete gamma function.

The kernel is K_nu(z, x) = (1/2) int_x^inf t^(nu-1) exp(-z(t + 1/t)/2) dt.
Reference values come from adaptive quadrature; the closed-form bounds are
what the certified bound assembly consumes.  Every bound also exists in a
log variant because the downstream products span ~10^±310 and must be
assembled in log space.

Note on the order-2 bound: the erfc coefficient is (105/(128z) + 15/8 + z).
The + z mirrors the order-1 bound's (3/8 + z) and is required for the bound
to dominate the integral at all; dropping it under-counts the Gaussian-tail
mass by a factor ~z.
"""

from __future__ import annotations

import math

from scipy.integrate import quad
from scipy.special import erfc, erfcx, exp1, gamma as gamma_fn, gammaincc

from .errors import DomainError
from .rounding import round_up

_SQRT2 = math.sqrt(2.0)
_QUAD_RELTOL = 1e-12


def bessel_kernel(z: float, t: float) -> float:
    """H^z(t) = exp(-z (t + 1/t) / 2); symmetric under t -> 1/t."""
    if z <= 0.0 or t <= 0.0:
        raise DomainError("bessel_kernel needs z > 0 and t > 0")
    return math.exp(-0.5 * z * (t + 1.0 / t))


def _kernel_cutoff(z: float, nu: float, lo: float) -> float:
    """t beyond which the integrand drops 1e30 below its value at max(lo, 1)."""
    t = max(lo, 1.0) + 1.0
    for _ in range(4):
        t = max(lo, 1.0) + (2.0 / z) * (70.0 + max(nu - 1.0, 0.0) * math.log(t))
    return t + 10.0


def k_integral(nu: float, z: float, x: float) -> float:
    """Reference K_nu(z, x) by adaptive quadrature, relative tolerance 1e-12.

    The integrand peaks at t = 1; for x < 1 the piece over (x, 1] is mapped
    through t -> 1/t onto [1, 1/x), which removes the t^(nu-1) endpoint
    blowup for nu < 1.
    """
    if z < 0.1:
        raise DomainError("k_integral supported for z >= 0.1")
    if abs(nu) > 4.0:
        raise DomainError("k_integral supported for |nu| <= 4")
    if x < 0.0:
        raise DomainError("k_integral needs x >= 0")

    def piece(alpha: float, a: float, b: float) -> float:
        val, err = quad(lambda t: t ** (alpha - 1.0) * math.exp(-0.5 * z * (t + 1.0 / t)),
                        a, b, epsabs=0.0, epsrel=_QUAD_RELTOL, limit=400)
        if val != 0.0 and err > 100.0 * _QUAD_RELTOL * abs(val):
            raise ArithmeticError(f"kernel quadrature did not converge on [{a}, {b}]")
        return val

    hi = _kernel_cutoff(z, abs(nu), x)
    if x >= 1.0:
        return 0.5 * piece(nu, x, hi)
    total = piece(nu, 1.0, hi)
    total += piece(-nu, 1.0, min(1.0 / x, hi) if x > 0.0 else hi)
    return 0.5 * total


def _y_of(x: float) -> float:
    return (math.sqrt(x) - 1.0 / math.sqrt(x)) / _SQRT2


def gaussian_tail(z: float, y: float) -> float:
    """int_y^inf exp(-z w^2) dw for y >= 0, by the complementary error function."""
    return round_up(0.5 * math.sqrt(math.pi / z) * erfc(y * math.sqrt(z)))


def _log_gaussian_tail(z: float, y: float) -> float:
    # log of the tail via the scaled erfcx, safe for huge y sqrt(z)
    u = y * math.sqrt(z)
    return math.log(0.5 * math.sqrt(math.pi / z)) + math.log(erfcx(u)) - u * u


def k1_upper(z: float, x: float) -> float:
    """Closed-form upper bound for K_1(z, x), x > 1."""
    return math.exp(log_k1_upper(z, x))


def log_k1_upper(z: float, x: float) -> float:
    if x <= 1.0:
        raise DomainError("k1_upper needs x > 1; split the integral below t=1 first")
    y = _y_of(x)
    lead = (1.0 + 3.0 * _SQRT2 * y / 8.0)
    a = math.log(lead) - z * y * y
    b = math.log((3.0 / 8.0 + z) * _SQRT2) + _log_gaussian_tail(z, y)
    return -z - math.log(2.0 * z) + _logaddexp(a, b) + math.log1p(2.0 ** -30)


def k2_upper(z: float, x: float) -> float:
    """Closed-form upper bound for K_2(z, x), x > 1 (see module note on +z)."""
    return math.exp(log_k2_upper(z, x))


def log_k2_upper(z: float, x: float) -> float:
    if x <= 1.0:
        raise DomainError("k2_upper needs x > 1")
    y = _y_of(x)
    c = 105.0 / (128.0 * z) + 15.0 / 8.0
    poly = (35.0 * _SQRT2 / 64.0 * y ** 3 + 2.0 * y * y
            + c * _SQRT2 * y + 2.0 + 2.0 / z)
    a = math.log(poly) - z * y * y
    b = math.log((c + z) * _SQRT2) + _log_gaussian_tail(z, y)
    return -z - math.log(2.0 * z) + _logaddexp(a, b) + math.log1p(2.0 ** -30)


def k1_at0_upper(z: float) -> float:
    """Upper bound for the full integral K_1(z) = K_1(z, 0)."""
    return round_up(math.sqrt(math.pi / (2.0 * z)) * math.exp(-z) * (1.0 + 3.0 / (8.0 * z)))


def k2_at0_upper(z: float) -> float:
    """Upper bound for K_2(z) = K_2(z, 0)."""
    return round_up(math.sqrt(math.pi / (2.0 * z)) * math.exp(-z)
                    * (1.0 + 15.0 / (8.0 * z) + 105.0 / (128.0 * z * z)))


def log_k2_at0_upper(z: float) -> float:
    return (0.5 * math.log(math.pi / (2.0 * z)) - z
            + math.log1p(15.0 / (8.0 * z) + 105.0 / (128.0 * z * z))
            + math.log1p(2.0 ** -30))


def q_upper(nu: float, z: float, x: float) -> float:
    """Q_nu(z, x) = x^(nu+1) H^z(x) / (z (x^2 - 1)); dominates K_nu for nu <= 1."""
    return math.exp(log_q_upper(nu, z, x))


def log_q_upper(nu: float, z: float, x: float) -> float:
    if nu > 1.0:
        raise DomainError("q_upper requires nu <= 1")
    if x <= 1.0:
        raise DomainError("q_upper blows up at x = 1; needs x > 1")
    return ((nu + 1.0) * math.log(x) - 0.5 * z * (x + 1.0 / x)
            - math.log(z * (x * x - 1.0)) + math.log1p(2.0 ** -30))


def k2_via_q(z: float, x: float) -> float:
    """K_2(z, x) < (x + 2/z) Q_1(z, x); the sharper route for x well above 1."""
    return math.exp(log_k2_via_q(z, x))


def log_k2_via_q(z: float, x: float) -> float:
    return math.log(x + 2.0 / z) + log_q_upper(1.0, z, x)


def log_k2_best_upper(z: float, x: float) -> float:
    """Smallest of the three valid order-2 upper bounds (log scale)."""
    best = log_k2_at0_upper(z)
    if x > 1.0:
        best = min(best, log_k2_upper(z, x), log_k2_via_q(z, x))
    return best


def _logaddexp(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


# -- incomplete gamma ----------------------------------------------------------

_RECURRENCE_FLOOR = 0.3


def upper_inc_gamma(a: float, x: float) -> float:
    """Gamma(a, x) = int_x^inf t^(a-1) e^-t dt for a in [-4, 1], x > 0.

    Descends the recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^-x) / a from
    a starting value in (0, 1]; the subtraction is stable for x >= 0.3 and a
    quadrature path covers smaller x.
    """
    if x <= 0.0:
        raise DomainError("upper_inc_gamma needs x > 0")
    if not -4.0 <= a <= 1.0:
        raise DomainError("upper_inc_gamma supported for a in [-4, 1]")
    if a != 0.0 and abs(a) < 1e-9:
        raise DomainError("a indistinguishable from 0; use the a = 0 branch")
    if x < _RECURRENCE_FLOOR:
        return _inc_gamma_quad(a, x)

    steps = 0
    a0 = a
    while a0 <= 0.0:
        a0 += 1.0
        steps += 1
    val = math.exp(-x) if a0 == 1.0 else float(gammaincc(a0, x)) * float(gamma_fn(a0))
    cur_a = a0
    for _ in range(steps):
        cur_a -= 1.0
        if cur_a == 0.0:
            val = float(exp1(x))
        else:
            val = (val - x ** cur_a * math.exp(-x)) / cur_a
    return val


def _inc_gamma_quad(a: float, x: float) -> float:
    # substitute t = x e^u so the small-t behaviour is explicit in the weight
    hi = math.log((x + 60.0 + 10.0 * abs(a)) / x)
    val, err = quad(lambda u: (x * math.exp(u)) ** a * math.exp(-x * math.exp(u)),
                    0.0, hi, epsabs=0.0, epsrel=_QUAD_RELTOL, limit=400)
    if val != 0.0 and err > 1e3 * _QUAD_RELTOL * abs(val):
        raise ArithmeticError("incomplete-gamma quadrature did not converge")
    return val


def inc_gamma_sandwich(a: float, x: float) -> tuple[float, float]:
    """Two-sided pinch for Gamma(a, x), a <= 1: ((1+x)^(a-1) e^-x, x^(a-1) e^-x)."""
    if a > 1.0:
        raise DomainError("sandwich holds for a <= 1")
    if x <= 0.0:
        raise DomainError("sandwich needs x > 0")
    e = math.exp(-x)
    return (1.0 + x) ** (a - 1.0) * e, x ** (a - 1.0) * e
