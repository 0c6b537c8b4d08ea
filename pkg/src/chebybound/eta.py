"""Coefficients eta_k with |psi(x) - x| < eta_k x / log^k x, and the linear
theta coefficients, both derived by stepping through a grid of per-b bound
certificates.

On each grid interval [b_i, b_(i+1)) the certificate eps_i holds throughout,
so |psi - x| < eps_i log^k(x) * x/log^k(x) <= eps_i b_(i+1)^k * x/log^k(x).
The theta variants add the psi-theta gap, bounded by c1 sqrt(x) + c2 x^(1/3)
with range-dependent constants; the combined expression
(eps_i + c1 e^(-t/2) + c2 e^(-2t/3)) t^k is increasing in t over every
interval used here (the decaying corrections are dominated by eps_i), so the
interval supremum sits at the right endpoint.  Regime boundaries of the
correction constants are inserted as extra sample points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import reference_data as ref
from .epsilon import BoundParams, epsilon_for
from .errors import CoverageError, DomainError
from .zeros import ZeroTable

_GRID_END = 5700.0
_MAX_GAP = 320.0   # widest step in the bundled grid is 300


@dataclass(frozen=True)
class EtaReport:
    k: int
    value: float
    argmax_b: float
    variant: str


@dataclass(frozen=True)
class ThetaLinearBounds:
    """Linear pinch theta(x) <> coeff * x with the branch breakdown."""

    upper: float                   # theta(x) < upper * x for all x > 0
    lower: float                   # binding branch: 8e11 <= x < 1e16
    lower_1e16: float              # branch x >= 1e16
    lower_1e8: float               # branch x >= 1e8
    upper_argmax_b: float


def published_certificates(b_min: float) -> list[tuple[float, float]]:
    """(b, epsilon) pairs straight from the bundled reference rows."""
    return [(b, eps) for b, _m, _d, eps in ref.eta_grid_rows(b_min)]


def computed_certificates(b_min: float,
                          table: ZeroTable | None = None) -> list[tuple[float, float]]:
    """(b, epsilon) pairs recomputed by the engine at the bundled (m, delta)."""
    out = []
    for b, m, delta, _eps in ref.eta_grid_rows(b_min):
        cert = epsilon_for(BoundParams(b=b, m=m, delta=delta), table)
        out.append((b, cert.epsilon))
    return out


def _check_coverage(certs: list[tuple[float, float]], b_min: float) -> None:
    if not certs:
        raise CoverageError("empty certificate grid")
    bs = [b for b, _ in certs]
    if bs != sorted(bs):
        raise CoverageError("certificate grid must be ascending in b")
    if bs[0] > b_min + 1e-9:
        raise CoverageError(f"grid starts at {bs[0]}, above b_min={b_min}")
    if bs[-1] < _GRID_END - 1e-9:
        raise CoverageError(f"grid ends at {bs[-1]}, below {_GRID_END}")
    gaps = [b2 - b1 for b1, b2 in zip(bs, bs[1:])]
    if gaps and max(gaps) > _MAX_GAP:
        raise CoverageError(f"grid hole of width {max(gaps):.0f}")


def _gap_constants(log_x: float, side: str) -> tuple[float, float]:
    """(c_sqrt, c_cbrt) bounding psi - theta from the given side at this x."""
    table = ref.PSI_THETA_CORRECTIONS[side]
    c1, c2 = table[0][1], table[0][2]
    for thresh, a, b in table:
        if log_x >= thresh - 1e-12:
            c1, c2 = a, b
    return c1, c2


def _interval_points(b1: float, b2: float) -> list[float]:
    pts = {b1, b2}
    for thresh, _a, _b in ref.PSI_THETA_CORRECTIONS["upper"]:
        if b1 < thresh < b2:
            pts.add(thresh)
    return sorted(pts)


def _theta_defect(eps: float, t: float, k: int) -> float:
    """(eps + c1 e^(-t/2) + c2 e^(-2t/3)) t^k with the regime constants at t."""
    c1, c2 = _gap_constants(t, "upper")
    return (eps + c1 * math.exp(-t / 2.0) + c2 * math.exp(-2.0 * t / 3.0)) * t ** k


def _asymptotic_tail(k: int, b_end: float, variant: str) -> float:
    """sup over b >= b_end of eps(e^b) b^k; decreasing there since the decay
    scale X = sqrt(b/R0) is far above 2k + 3/4 for every grid end used."""
    from .epsilon import best_analytic
    eps_end = best_analytic(b_end)[0]
    if variant == "theta":
        return _theta_defect(eps_end, b_end, k)
    return eps_end * b_end ** k


def eta_coeffs(k: int, b_min: float, certs: list[tuple[float, float]],
               variant: str = "psi") -> EtaReport:
    """eta_k over x >= e^b_min from a certificate grid covering [b_min, 5700].

    variant 'psi' uses the certificates as-is; 'theta' adds the psi-theta
    gap corrections.
    """
    if not 1 <= k <= 4:
        raise DomainError("eta_coeffs supports k in 1..4")
    if variant not in ("psi", "theta"):
        raise DomainError(f"unknown variant {variant!r}")
    _check_coverage(certs, b_min)

    best, best_b = 0.0, certs[0][0]
    for (b1, eps), (b2, _e2) in zip(certs, certs[1:]):
        if variant == "psi":
            val = eps * b2 ** k
        else:
            val = max(_theta_defect(eps, t, k) for t in _interval_points(b1, b2))
        if val > best:
            best, best_b = val, b1

    tail = _asymptotic_tail(k, certs[-1][0], variant)
    if tail > best:
        best, best_b = tail, certs[-1][0]
    return EtaReport(k=k, value=best, argmax_b=best_b, variant=variant)


def theta_coefficient_bounds(certs: list[tuple[float, float]]) -> ThetaLinearBounds:
    """Linear theta coefficients by interval stepping over the certificates.

    Upper: theta < psi - (gap lower bound); the per-interval coefficient
    1 + eps_i - c1 e^(-t/2) - c2 e^(-2t/3) increases in t, so its supremum
    sits at the right endpoint.  Lower: theta > psi - (gap upper bound),
    infimum at the left endpoint.  Below 8e11 the upper side falls back to
    the classical theta(x) < x.
    """
    _check_coverage(certs, ref.B_8E11)

    upper, upper_b = 1.0, 0.0
    for (b1, eps), (b2, _e2) in zip(certs, certs[1:]):
        for t in _interval_points(b1, b2):
            c1, c2 = _gap_constants(t, "lower")
            coeff = 1.0 + eps - c1 * math.exp(-t / 2.0) - c2 * math.exp(-2.0 * t / 3.0)
            if coeff > upper:
                upper, upper_b = coeff, b1

    def branch_lower(b_lo: float, b_hi: float) -> float:
        worst = math.inf
        for (b1, eps), (b2, _e2) in zip(certs, certs[1:]):
            if b2 <= b_lo + 1e-12 or b1 >= b_hi - 1e-12:
                continue
            t = max(b1, b_lo)
            c1, c2 = _gap_constants(t, "upper")
            worst = min(worst, 1.0 - eps - c1 * math.exp(-t / 2.0)
                        - c2 * math.exp(-2.0 * t / 3.0))
        return worst

    lower_mid = branch_lower(ref.B_8E11, ref.B_1E16)
    lower_hi = branch_lower(ref.B_1E16, certs[-1][0])
    # x >= 1e8 branch: stepped fixed envelopes below 8e11, certificates above
    lower_lo = lower_mid
    steps = ref.SCHOENFELD_STEPS + [(ref.B_8E11, None)]
    for (t, c), (t_next, _c2) in zip(steps, steps[1:]):
        csq, ccb = _gap_constants(t, "upper")
        lower_lo = min(lower_lo, 1.0 - c - csq * math.exp(-t / 2.0)
                       - ccb * math.exp(-2.0 * t / 3.0))

    return ThetaLinearBounds(upper=upper, lower=lower_mid, lower_1e16=lower_hi,
                             lower_1e8=lower_lo, upper_argmax_b=upper_b)
