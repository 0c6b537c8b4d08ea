"""Inequality verification against exact sieve values.

Both psi - theta and psi - x are step functions between jumps while every
comparator used here increases, so each inequality is settled by checking
the two one-sided extrema around every jump in range: just after a jump for
upper bounds, just before the next jump for lower bounds.  Scans therefore
touch every prime (and prime power) in range rather than sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .epsilon import BoundParams, epsilon_for
from .errors import DomainError
from .sieve import SieveEngine, base_primes, prime_power_jumps

E_18_42 = math.exp(18.42)
E_19 = math.exp(19.0)


@dataclass
class ScanReport:
    ineq_id: str
    lo: float
    hi: float
    checked: int
    violations: int
    worst_x: float
    min_margin: float

    @property
    def ok(self) -> bool:
        return self.violations == 0


@dataclass(frozen=True)
class _GapSpec:
    lo: float
    hi: float
    bound: Callable[[np.ndarray], np.ndarray]
    direction: str                # 'upper': gap < bound; 'lower': gap > bound


@dataclass(frozen=True)
class _DevSpec:
    lo: float
    hi: float
    envelope: Callable[[np.ndarray], np.ndarray]   # |psi - x| < envelope


def _cert_18_42_epsilon() -> float:
    return epsilon_for(BoundParams(b=18.42, m=1, delta=4.77e-4)).epsilon


GAP_INEQUALITIES: dict[str, _GapSpec] = {
    "pereira-gap-upper": _GapSpec(
        2.0, 1e8, lambda x: np.sqrt(x) + (4.0 / 3.0) * np.cbrt(x), "upper"),
    "pereira-gap-lower": _GapSpec(
        2187.0, 1e8, lambda x: np.sqrt(x) + (2.0 / 3.0) * np.cbrt(x), "lower"),
    "gap-sqrt-143": _GapSpec(
        121.0, 1e8, lambda x: 1.43 * np.sqrt(x), "upper"),
}

PSI_DEV_INEQUALITIES: dict[str, _DevSpec] = {
    "psi-dev-0242269": _DevSpec(1e8, 1e9, lambda x: 0.0242269 * x / np.log(x)),
    "psi-dev-schoenfeld-e19": _DevSpec(E_19, 1e9, lambda x: 0.00096161 * x),
    "psi-dev-cert-18.42": _DevSpec(
        E_18_42, 1e9, lambda x: _cert_18_42_epsilon() * x),
}

SANDWICH_INEQUALITIES = ("pereira-sandwich-upper", "pereira-sandwich-lower")

ALL_IDS = (tuple(GAP_INEQUALITIES) + tuple(PSI_DEV_INEQUALITIES)
           + SANDWICH_INEQUALITIES)


# -- psi - theta against closed-form comparators --------------------------------


def scan_gap(ineq_id: str, lo: float | None = None, hi: float | None = None) -> ScanReport:
    """Scan a psi-theta inequality over the jump set of psi - theta."""
    spec = GAP_INEQUALITIES[ineq_id]
    lo = spec.lo if lo is None else max(lo, spec.lo)
    hi = spec.hi if hi is None else min(hi, spec.hi)
    vals, logs = prime_power_jumps(int(hi))
    gap_after = np.cumsum(logs)

    worst = math.inf
    worst_x = lo
    violations = 0
    checked = 0

    def consider(margin: np.ndarray, xs: np.ndarray) -> None:
        nonlocal worst, worst_x, violations, checked
        if margin.size == 0:
            return
        checked += int(margin.size)
        violations += int(np.count_nonzero(margin < 0.0))
        i = int(np.argmin(margin))
        if margin[i] < worst:
            worst, worst_x = float(margin[i]), float(xs[i])

    in_range = (vals >= lo) & (vals <= hi)
    if spec.direction == "upper":
        xs = vals[in_range].astype(float)
        consider(spec.bound(xs) - gap_after[in_range], xs)
        # range endpoints where the gap sits between jumps
        for x in (lo, hi):
            g = float(gap_after[np.searchsorted(vals, x, side="right") - 1]) \
                if x >= vals[0] else 0.0
            consider(np.array([spec.bound(np.array([x]))[0] - g]), np.array([x]))
    else:
        # worst lower-side point: just before the next jump (or hi)
        idx = np.flatnonzero((vals[:-1] >= lo) & (vals[:-1] <= hi))
        next_x = np.minimum(vals[1:][idx].astype(float), hi)
        consider(gap_after[idx] - spec.bound(next_x), next_x)
        g_lo = float(gap_after[np.searchsorted(vals, lo, side="right") - 1]) \
            if lo >= vals[0] else 0.0
        first_after = float(vals[np.searchsorted(vals, lo, side="right")]) \
            if lo < vals[-1] else hi
        consider(np.array([g_lo - spec.bound(np.array([min(first_after, hi)]))[0]]),
                 np.array([min(first_after, hi)]))
    return ScanReport(ineq_id, lo, hi, checked, violations, worst_x, worst)


# -- |psi - x| against envelopes, one streaming pass ------------------------------


def scan_psi_deviation(engine: SieveEngine, ids: list[str],
                       lo: float | None = None,
                       hi: float | None = None) -> list[ScanReport]:
    """One segmented pass checking every requested |psi - x| envelope.

    Jumps of psi are the primes plus the higher prime powers; the upper side
    is extremal immediately after a jump, the lower side immediately before
    the next one.
    """
    specs = {i: PSI_DEV_INEQUALITIES[i] for i in ids}
    scan_lo = min(s.lo for s in specs.values()) if lo is None else lo
    scan_hi = max(s.hi for s in specs.values()) if hi is None else hi
    scan_hi = min(scan_hi, float(engine.limit))

    pp_vals, pp_logs = prime_power_jumps(int(scan_hi))
    reports = {i: ScanReport(i, max(specs[i].lo, scan_lo), min(specs[i].hi, scan_hi),
                             0, 0, math.nan, math.inf) for i in ids}

    start = int(math.floor(scan_lo))
    psi_prev = None          # psi value after the last jump seen
    for visit in engine.stream(start, int(scan_hi) + 1):
        i0, i1 = np.searchsorted(pp_vals, [visit.lo, visit.hi])
        xs = np.concatenate([visit.primes.astype(float), pp_vals[i0:i1].astype(float)])
        dl = np.concatenate([np.log(visit.primes.astype(float)), pp_logs[i0:i1]])
        order = np.argsort(xs, kind="stable")
        xs, dl = xs[order], dl[order]
        if psi_prev is None:
            # psi just below the first segment's start
            psi_prev = visit.theta_before + float(pp_logs[:i0].sum())
        psi_after = psi_prev + np.cumsum(dl)
        psi_before = np.concatenate([[psi_prev], psi_after[:-1]])

        for ineq, spec in specs.items():
            rep = reports[ineq]
            sel = (xs >= rep.lo) & (xs <= rep.hi)
            if np.any(sel):
                x_s = xs[sel]
                env = spec.envelope(x_s)
                up = env - (psi_after[sel] - x_s)             # at the jump
                down = env - (x_s - psi_before[sel])          # just before it
                margin = np.minimum(up, down)
                rep.checked += int(2 * x_s.size)
                rep.violations += int(np.count_nonzero(margin < 0.0))
                i = int(np.argmin(margin))
                if margin[i] < rep.min_margin:
                    rep.min_margin = float(margin[i])
                    rep.worst_x = float(x_s[i])
        if xs.size:
            psi_prev = float(psi_after[-1])

    # closing endpoint: x -> hi with psi frozen at its last jump value
    if psi_prev is not None:
        for ineq, spec in specs.items():
            rep = reports[ineq]
            env_hi = float(spec.envelope(np.array([rep.hi]))[0])
            margin = env_hi - (rep.hi - psi_prev)
            rep.checked += 1
            if margin < rep.min_margin:
                rep.min_margin, rep.worst_x = margin, rep.hi
            if margin < 0.0:
                rep.violations += 1
    return [reports[i] for i in ids]


# -- the prime-power sandwich ------------------------------------------------------


def scan_sandwich(ineq_id: str, hi: int = 10 ** 6) -> ScanReport:
    """psi - theta against psi(x^(1/2)) + psi(x^(1/3)) + psi(x^(1/5 or 7)).

    Both sides are constant between integers, so integer arguments settle the
    inequality on the whole range.  The two sides share log-prime terms and
    tie exactly at many x; float margins near zero are re-resolved through
    the integer coefficient vector, where full cancellation is exact.
    """
    if ineq_id not in SANDWICH_INEQUALITIES:
        raise DomainError(f"unknown sandwich inequality {ineq_id!r}")
    upper = ineq_id.endswith("upper")
    psi_cum, theta_cum = _lambda_cumsums(hi)
    n = np.arange(2, hi + 1, dtype=np.int64)
    gap = psi_cum[n] - theta_cum[n]
    rhs = (psi_cum[_int_root(n, 2)] + psi_cum[_int_root(n, 3)]
           + psi_cum[_int_root(n, 5 if upper else 7)])
    margin = (rhs - gap) if upper else (gap - rhs)

    near_tie = np.abs(margin) < 1e-6
    for i in np.flatnonzero(near_tie):
        margin[i] = _sandwich_margin_exact(int(n[i]), upper)
    violations = int(np.count_nonzero(margin < 0.0))
    worst = int(np.argmin(margin))
    return ScanReport(ineq_id, 2.0, float(hi), int(n.size), violations,
                      float(n[worst]), float(margin[worst]))


def _sandwich_margin_exact(x: int, upper: bool) -> float:
    """Signed margin at one integer via net per-prime coefficients.

    An all-zero coefficient vector cancels exactly; a nonzero one is summed
    with exact rounding (fsum), so ties never drift below zero."""
    from .sieve import integer_kth_root

    coeff: dict[int, int] = {}

    def add_theta(r: int, s: int) -> None:
        for p in base_primes(r).tolist():
            coeff[p] = coeff.get(p, 0) + s

    def add_psi(r: int, s: int) -> None:
        m = 1
        while True:
            root = integer_kth_root(r, m)
            if root < 2:
                break
            add_theta(root, s)
            m += 1

    sign = 1 if upper else -1
    for k in (2, 3, 5 if upper else 7):
        add_psi(integer_kth_root(x, k), sign)
    m = 2
    while True:
        root = integer_kth_root(x, m)
        if root < 2:
            break
        add_theta(root, -sign)
        m += 1
    terms = [c * math.log(p) for p, c in coeff.items() if c != 0]
    return math.fsum(terms)


def _lambda_cumsums(hi: int) -> tuple[np.ndarray, np.ndarray]:
    lam = np.zeros(hi + 1)
    theta_only = np.zeros(hi + 1)
    for p in base_primes(hi).tolist():
        lp = math.log(p)
        theta_only[p] = lp
        q = p
        while q <= hi:
            lam[q] = lp
            q *= p
    return np.cumsum(lam), np.cumsum(theta_only)


def _int_root(n: np.ndarray, k: int) -> np.ndarray:
    r = np.floor(n ** (1.0 / k)).astype(np.int64)
    r = np.where((r + 1) ** k <= n, r + 1, r)
    r = np.where(r ** k > n, r - 1, r)
    return r


# -- entry points ---------------------------------------------------------------


def verify_inequality(ineq_id: str, engine: SieveEngine | None = None,
                      lo: float | None = None, hi: float | None = None) -> ScanReport:
    """Scan one inequality; psi-deviation kinds need a sieve engine."""
    if ineq_id in GAP_INEQUALITIES:
        return scan_gap(ineq_id, lo, hi)
    if ineq_id in PSI_DEV_INEQUALITIES:
        if engine is None:
            raise DomainError(f"{ineq_id} needs a sieve engine")
        return scan_psi_deviation(engine, [ineq_id], lo, hi)[0]
    if ineq_id in SANDWICH_INEQUALITIES:
        return scan_sandwich(ineq_id, int(hi) if hi else 10 ** 6)
    raise DomainError(f"unknown inequality {ineq_id!r}")


def run_all(engine: SieveEngine, ids: tuple[str, ...] = ALL_IDS,
            limit: float | None = None) -> list[ScanReport]:
    """Every requested inequality, sharing one pass for the psi deviations."""
    limit = float(engine.limit if limit is None else limit)
    out: list[ScanReport] = []
    dev_ids = [i for i in ids if i in PSI_DEV_INEQUALITIES]
    for ineq_id in ids:
        if ineq_id in GAP_INEQUALITIES:
            out.append(scan_gap(ineq_id, None, min(limit, GAP_INEQUALITIES[ineq_id].hi)))
        elif ineq_id in SANDWICH_INEQUALITIES:
            out.append(scan_sandwich(ineq_id, int(min(limit, 10 ** 6))))
    if dev_ids:
        out.extend(scan_psi_deviation(engine, dev_ids,
                                      hi=min(limit, max(PSI_DEV_INEQUALITIES[i].hi
                                                        for i in dev_ids))))
    order = {i: k for k, i in enumerate(ids)}
    out.sort(key=lambda r: order.get(r.ineq_id, 99))
    return out
