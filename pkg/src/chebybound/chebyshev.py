"""Exact Chebyshev functions psi, theta, pi, the weighted counter Pi, the
logarithmic integral, and the truncated zero-sum approximation of psi."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .errors import DomainError
from .sieve import SieveEngine, integer_kth_root
from .zeros import ZeroTable

LOG_2PI = math.log(2.0 * math.pi)

# mu(k) for k = 1..64; k never exceeds log2(x) here
_MU = [0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0, -1, 0, -1, 0,
       1, 1, -1, 0, 0, 1, 0, 0, -1, -1, -1, 0, 1, 1, 1, 0, -1, 1, 1, 0, -1,
       -1, -1, 0, 0, 1, -1, 0, 0, 0, 1, 0, -1, 0, 1, 0, 1, 1, -1, 0, -1, 1,
       0, 0]


@dataclass(frozen=True)
class ChebyshevSample:
    """Exact values at one point, produced by sieving."""

    x: float
    psi: float
    theta: float
    pi: int
    Pi: float


def sieve_theta(x: float, engine: SieveEngine) -> float:
    return engine.theta(x)


def sieve_pi(x: float, engine: SieveEngine) -> int:
    return engine.pi(x)


def psi_from_theta(x: float, engine: SieveEngine) -> float:
    """psi(x) = sum over m <= log2(x) of theta(x^(1/m)), roots taken exactly."""
    if x < 1.0:
        raise DomainError("psi needs x >= 1")
    n = int(math.floor(x))
    if n < 2:
        return 0.0
    total = 0.0
    for m in range(1, n.bit_length()):
        r = integer_kth_root(n, m)
        if r < 2:
            break
        total += engine.theta(r)
    return total


def theta_from_psi_moebius(x: float, engine: SieveEngine) -> float:
    """Moebius-inverted reconstruction sum_k mu(k) psi(x^(1/k)); equals
    sieve_theta(x) exactly up to summation order."""
    if x < 1.0:
        raise DomainError("needs x >= 1")
    n = int(math.floor(x))
    if n < 2:
        return 0.0
    total = 0.0
    for k in range(1, n.bit_length()):
        mu = _MU[k]
        if mu == 0:
            continue
        r = integer_kth_root(n, k)
        if r < 2:
            break
        total += mu * psi_from_theta(r, engine)
    return total


def big_pi(x: float, engine: SieveEngine) -> float:
    """Pi(x) = sum over m of pi(x^(1/m)) / m; the Stieltjes integral of
    d psi / log t over [2, x] evaluates to the same number."""
    if x < 2.0:
        raise DomainError("Pi needs x >= 2")
    n = int(math.floor(x))
    total = 0.0
    for m in range(1, n.bit_length()):
        r = integer_kth_root(n, m)
        if r < 2:
            break
        total += engine.pi(r) / m
    return total


@lru_cache(maxsize=1)
def li_at_2() -> float:
    """li(2) by the symmetric principal value through the pole at t = 1.

    (t-1)/log t extends analytically across t = 1, so the Cauchy-weight
    quadrature of it against 1/(t-1) on [0, 2] is exactly the principal
    value."""

    def smooth(t: float) -> float:
        if t <= 0.0:
            return 0.0          # (t-1)/log t -> 0 as t -> 0+
        if t == 1.0:
            return 1.0
        return (t - 1.0) / math.log(t)

    val, err = quad(smooth, 0.0, 2.0, weight="cauchy", wvar=1.0)
    if err > 1e-7:
        raise ArithmeticError("principal-value quadrature did not converge")
    return val


def li(x: float) -> float:
    """Principal-value logarithmic integral, li(2) + int_2^x dt/log t."""
    if x < 2.0:
        raise DomainError("li supported for x >= 2")
    tail, err = quad(lambda t: 1.0 / math.log(t), 2.0, x,
                     epsabs=0.0, epsrel=1e-12, limit=400)
    if tail != 0.0 and err > 1e-8 * abs(tail):
        raise ArithmeticError("li quadrature did not converge")
    return li_at_2() + tail


def explicit_psi(x: float, n_pairs: int, table: ZeroTable, *,
                 half_weight_at_jump: bool = False,
                 engine: SieveEngine | None = None) -> float:
    """Truncated zero-sum approximation of psi:

        x - 2 sum_{k<=K} Re(x^rho_k / rho_k) - log 2pi - (1/2) log(1 - x^-2)

    with rho_k = 1/2 + i gamma_k from the table.  With the jump convention
    enabled, the value at a prime power approximates psi(x) - Lambda(x)/2,
    so half the local jump is added back (needs an engine to detect it).
    """
    if x <= 1.0:
        raise DomainError("explicit_psi needs x > 1")
    if n_pairs > table.count:
        raise DomainError(f"requested {n_pairs} zero pairs, table has {table.count}")
    lx = math.log(x)
    base = x - LOG_2PI - 0.5 * math.log1p(-1.0 / (x * x))
    if n_pairs > 0:
        g = table.gammas[:n_pairs]
        rho = 0.5 + 1j * g
        terms = np.exp(1j * g * lx) / rho
        base -= 2.0 * math.sqrt(x) * float(terms.real.sum())
    if half_weight_at_jump:
        lam = _von_mangoldt_at(x)
        if lam:
            if engine is None:
                raise DomainError("jump convention needs a sieve engine")
            base += 0.5 * lam
    return base


def _von_mangoldt_at(x: float) -> float:
    n = int(round(x))
    if abs(x - n) > 1e-9 or n < 2:
        return 0.0
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            q = n
            while q % p == 0:
                q //= p
            return math.log(p) if q == 1 else 0.0
    return math.log(n)  # n itself prime


def sample(x: float, engine: SieveEngine) -> ChebyshevSample:
    """Exact (psi, theta, pi, Pi) at x."""
    return ChebyshevSample(
        x=x,
        psi=psi_from_theta(x, engine),
        theta=engine.theta(x),
        pi=engine.pi(x),
        Pi=big_pi(x, engine),
    )
