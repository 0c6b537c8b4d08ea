"""Segmented prime sieving with exact theta/pi accumulation.

theta is accumulated as float64 log sums: numpy's pairwise summation inside
each segment, exact (fsum) combination across segments.  At the default
limit 1e9 the accumulated error stays below 1e-6 absolute.

Roots are taken on integers (Newton with a correction step): float roots
misclassify perfect powers near representation boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LimitError

_SEGMENT = 1 << 23          # numbers per segment in the streaming pass
_PREFIX_LIMIT = 1 << 22     # primes up to here kept resident with log cumsums


def base_primes(n: int) -> np.ndarray:
    """All primes <= n by a plain sieve; fine up to ~1e8."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def integer_kth_root(n: int, k: int) -> int:
    """Largest r with r^k <= n, exact for any non-negative integer n."""
    if n < 0 or k < 1:
        raise ValueError("integer_kth_root needs n >= 0, k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def prime_power_jumps(limit: int, min_exp: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """(values, log p) for every p^m <= limit with m >= min_exp, sorted."""
    ps = base_primes(integer_kth_root(limit, min_exp))
    vals, logs = [], []
    for p in ps.tolist():
        lp = math.log(p)
        q = p ** min_exp
        while q <= limit:
            vals.append(q)
            logs.append(lp)
            q *= p
    order = np.argsort(np.array(vals, dtype=np.int64), kind="stable")
    return (np.array(vals, dtype=np.int64)[order],
            np.array(logs, dtype=float)[order])


@dataclass
class SegmentVisit:
    """One streamed segment: the primes it contains and the running totals
    just before its first element."""

    lo: int
    hi: int
    primes: np.ndarray
    theta_before: float
    pi_before: int


class SieveEngine:
    """theta/pi queries up to ``limit`` from a resident prefix plus streaming.

    Queries at or below the prefix are O(log) lookups; larger ones stream
    segments and are cached as checkpoints so repeated scans reuse them.
    """

    def __init__(self, limit: int = 10 ** 9, prefix_limit: int = _PREFIX_LIMIT):
        if limit < 2:
            raise LimitError("limit must be >= 2")
        self.limit = int(limit)
        self.prefix_limit = int(min(prefix_limit, limit))
        self._prefix = base_primes(self.prefix_limit)
        self._prefix_logcum = np.cumsum(np.log(self._prefix.astype(float)))
        self._checkpoints: dict[int, tuple[float, int]] = {}

    # -- queries -----------------------------------------------------------

    def theta(self, x: float) -> float:
        """Exact sum of log p over primes p <= x."""
        return self._theta_pi(x)[0]

    def pi(self, x: float) -> int:
        """Exact count of primes <= x."""
        return self._theta_pi(x)[1]

    def _theta_pi(self, x: float) -> tuple[float, int]:
        if x > self.limit:
            raise LimitError(f"x={x:g} exceeds configured limit {self.limit}")
        if x < 2:
            return 0.0, 0
        n = int(math.floor(x))
        if n <= self.prefix_limit:
            i = int(np.searchsorted(self._prefix, n, side="right"))
            return (float(self._prefix_logcum[i - 1]) if i else 0.0, i)
        if n in self._checkpoints:
            return self._checkpoints[n]
        theta = float(self._prefix_logcum[-1])
        pi = int(self._prefix.size)
        partials = [theta]
        for visit in self.stream(self.prefix_limit + 1, n + 1):
            partials.append(float(np.log(visit.primes.astype(float)).sum()))
            pi += int(visit.primes.size)
        theta = math.fsum(partials)
        self._checkpoints[n] = (theta, pi)
        return theta, pi

    # -- streaming ---------------------------------------------------------

    def stream(self, lo: int, hi: int, segment: int = _SEGMENT):
        """Yield SegmentVisit for [lo, hi) in order, with running totals.

        Segment totals are independent of one another; the reduction is
        associative, so segments could be sieved in parallel and re-merged.
        """
        if segment < (1 << 15):
            raise LimitError("segment size must be at least 2^15")
        lo = max(lo, 2)
        if hi > self.limit + 1:
            raise LimitError(f"stream end {hi} exceeds limit {self.limit}")
        base = base_primes(math.isqrt(max(hi - 1, 4)))
        theta_parts: list[float] = []
        pi_run = 0
        # running totals must start at lo: fold in everything below
        if lo > 2:
            t0, p0 = self._theta_pi(lo - 1)
            theta_parts.append(t0)
            pi_run = p0
        for a in range(lo, hi, segment):
            b = min(a + segment, hi)
            mask = np.ones(b - a, dtype=bool)
            for p in base.tolist():
                if p * p >= b:
                    break
                # p itself survives: the clearing starts at p^2
                start = max(p * p, ((a + p - 1) // p) * p)
                if start < b:
                    mask[start - a:: p] = False
            primes = (np.flatnonzero(mask) + a).astype(np.int64)
            yield SegmentVisit(lo=a, hi=b, primes=primes,
                               theta_before=math.fsum(theta_parts),
                               pi_before=pi_run)
            theta_parts.append(float(np.log(primes.astype(float)).sum()))
            pi_run += int(primes.size)
