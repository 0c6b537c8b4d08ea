"""Zero census up to a configurable height, with a count certificate.

The count of critical-line zeros with 0 < gamma <= T is pinned between
smooth_count(T) +/- count_slack(T); a census that lands outside that window
is rejected.  The finder brackets sign changes of Z on a grid carrying about
four points per unit of expected count and, when the certificate fails,
subdivides the whole grid until the missing pairs appear.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import zeta
from .config import cache_dir
from .errors import CertificationError, DomainError, HeightError
from .rounding import neumaier_sum, round_up

TWO_PI = 2.0 * math.pi

#: Half-width the bisection refines brackets to.
BISECT_TOL = 1e-9

#: Added to the bisection half-width when assigning per-zero error radii,
#: covering the Z evaluation error near a sign change.
ERR_ALLOWANCE = zeta.EVAL_ERROR

_MAX_REFINE_DEPTH = 8
_POINTS_PER_COUNT = 4


def smooth_count(T: float):
    """Main term of the zero-counting function: (T/2pi) log(T/2pi) - T/2pi + 7/8."""
    T = np.asarray(T, dtype=float)
    if np.any(T < 2.0):
        raise DomainError("smooth_count requires T >= 2")
    u = T / TWO_PI
    out = u * np.log(u) - u + 7.0 / 8.0
    return float(out) if out.ndim == 0 else out


def count_slack(T: float):
    """Explicit envelope 0.137 log T + 0.443 log log T + 1.588 for |count - smooth_count|."""
    T = np.asarray(T, dtype=float)
    if np.any(T < 2.0):
        raise DomainError("count_slack requires T >= 2")
    out = 0.137 * np.log(T) + 0.443 * np.log(np.log(T)) + 1.588
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ZeroEntry:
    """One zero ordinate: true value lies in [gamma - err, gamma + err]."""

    index: int
    gamma: float
    err: float


@dataclass(frozen=True)
class SumBound:
    """Rigorous upper bound for a sum over all zeros: finite part + tail."""

    partial: float
    tail: float

    @property
    def total(self) -> float:
        return self.partial + self.tail


class ZeroTable:
    """Ordered zero ordinates, certified exhaustive up to ``height``."""

    def __init__(self, gammas: np.ndarray, errs: np.ndarray, height: float,
                 method: str = zeta.METHOD_VERSION):
        self.gammas = np.ascontiguousarray(gammas, dtype=float)
        self.errs = np.ascontiguousarray(errs, dtype=float)
        self.height = float(height)
        self.method = method
        self._check_invariants()

    # -- structure ----------------------------------------------------------

    @property
    def count(self) -> int:
        return int(self.gammas.size)

    @property
    def entries(self) -> list[ZeroEntry]:
        return [ZeroEntry(i + 1, g, e)
                for i, (g, e) in enumerate(zip(self.gammas, self.errs))]

    def _check_invariants(self) -> None:
        g, e = self.gammas, self.errs
        if g.size == 0:
            return
        if g[0] <= 14.0:
            raise CertificationError(f"first ordinate {g[0]} must exceed 14")
        if np.any(np.diff(g) <= 0):
            raise CertificationError("ordinates must be strictly increasing")
        gaps = np.diff(g)
        if np.any(gaps <= e[1:] + e[:-1]):
            raise CertificationError("adjacent error radii overlap")
        if np.any(g > self.height):
            raise CertificationError("entry above certified height")

    def certify(self) -> None:
        """Assert |count - smooth_count(height)| < count_slack(height)."""
        gap = abs(self.count - smooth_count(self.height))
        slack = count_slack(self.height)
        if not gap < slack:
            raise CertificationError(
                f"census {self.count} at height {self.height:g} misses the "
                f"certificate window by {gap - slack:.2f}"
            )

    def count_below(self, T: float) -> int:
        if T > self.height:
            raise HeightError(f"T={T:g} above certified height {self.height:g}")
        return int(np.searchsorted(self.gammas, T, side="right"))

    # -- persistence ---------------------------------------------------------

    def dumps(self) -> str:
        buf = io.StringIO()
        buf.write("# chebybound zero table\n")
        buf.write(f"# height={self.height:.9f}\n")
        buf.write(f"# count={self.count}\n")
        buf.write(f"# method={self.method}\n")
        buf.write(f"# err_ceiling={self.errs.max() if self.count else 0.0:.6e}\n")
        for i, g in enumerate(self.gammas):
            buf.write(f"{i + 1} {g:.12f}\n")
        return buf.getvalue()

    def save(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps())

    @classmethod
    def load(cls, path: Path) -> "ZeroTable":
        height = None
        method = zeta.METHOD_VERSION
        err_ceiling = BISECT_TOL + ERR_ALLOWANCE
        gammas = []
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                if line.startswith("#"):
                    if "=" in line:
                        key, _, val = line.lstrip("# ").partition("=")
                        if key == "height":
                            height = float(val)
                        elif key == "method":
                            method = val
                        elif key == "err_ceiling":
                            err_ceiling = float(val)
                    continue
                _, g = line.split()
                gammas.append(float(g))
        if height is None:
            raise ValueError(f"{path}: missing height header")
        g = np.array(gammas)
        return cls(g, np.full_like(g, err_ceiling), height, method)


# -- census ------------------------------------------------------------------


def _scan_grid(height: float) -> np.ndarray:
    """t grid with ~4 points per unit of expected count, from 2 to height."""
    qlo = smooth_count(2.0)
    qhi = smooth_count(height)
    qs = np.arange(math.floor(qlo * _POINTS_PER_COUNT),
                   math.ceil(qhi * _POINTS_PER_COUNT) + 1) / _POINTS_PER_COUNT
    # invert smooth_count by Newton; derivative is log(T/2pi)/2pi
    T = np.full(qs.shape, max(30.0, TWO_PI * math.e))
    for _ in range(60):
        T = T - (smooth_count(T) - qs) * TWO_PI / np.log(T / TWO_PI)
        T = np.clip(T, 2.0, None)
    T = np.clip(T, 2.0, height)
    T[0], T[-1] = 2.0, height
    return np.unique(T)


def _eval_z_parallel(ts: np.ndarray, max_height: float, workers: int | None) -> np.ndarray:
    """Z on disjoint slices of ts, evaluated independently and re-merged."""
    if workers is None or workers <= 1 or ts.size < 4096:
        return zeta.hardy_z(ts, max_height=max_height)
    slices = np.array_split(np.arange(ts.size), workers)
    out = np.empty(ts.size)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futs = {pool.submit(zeta.hardy_z, ts[ix], max_height): ix for ix in slices if ix.size}
        for fut, ix in futs.items():
            out[ix] = fut.result()
    return out


def find_zeros(height: float, *, tol: float = BISECT_TOL,
               max_height: float = zeta.MAX_HEIGHT_DEFAULT,
               workers: int | None = None) -> ZeroTable:
    """Locate every zero ordinate <= height and certify the census.

    Raises CertificationError when the count cannot be reconciled with the
    smooth_count +/- count_slack window after the maximum subdivision depth;
    that signals an evaluation-accuracy breakdown, not a recoverable state.
    """
    if not 14.0 < height <= max_height:
        raise DomainError(f"height must lie in (14, {max_height:g}], got {height:g}")

    grid = _scan_grid(height)
    zvals = _eval_z_parallel(grid, max_height, workers)

    lo = smooth_count(height) - count_slack(height)
    hi = smooth_count(height) + count_slack(height)

    for _depth in range(_MAX_REFINE_DEPTH + 1):
        sgn = np.sign(zvals)
        nbrackets = int(np.count_nonzero(sgn[:-1] * sgn[1:] < 0))
        if lo < nbrackets:
            break
        # certificate short: subdivide every interval (also already-bracketed
        # ones, in case a bracket hides a triple) and rescan
        mids = 0.5 * (grid[:-1] + grid[1:])
        zm = _eval_z_parallel(mids, max_height, workers)
        merged = np.empty(grid.size + mids.size)
        merged[0::2], merged[1::2] = grid, mids
        mvals = np.empty_like(merged)
        mvals[0::2], mvals[1::2] = zvals, zm
        grid, zvals = merged, mvals
    else:
        raise CertificationError(
            f"census stuck at {nbrackets} brackets, window ({lo:.2f}, {hi:.2f})"
        )

    sgn = np.sign(zvals)
    idx = np.nonzero(sgn[:-1] * sgn[1:] < 0)[0]
    a, b = grid[idx].copy(), grid[idx + 1].copy()
    za = zvals[idx].copy()

    while a.size and np.max(b - a) > 2.0 * tol:
        mid = 0.5 * (a + b)
        zm = _eval_z_parallel(mid, max_height, workers)
        go_left = za * zm <= 0.0
        b = np.where(go_left, mid, b)
        a = np.where(go_left, a, mid)
        za = np.where(go_left, za, zm)

    gammas = 0.5 * (a + b)
    errs = 0.5 * (b - a) + ERR_ALLOWANCE
    table = ZeroTable(gammas, errs, height)
    table.certify()
    return table


def cached_table(height: float, *, tol: float = BISECT_TOL,
                 directory: Path | None = None, workers: int | None = None) -> ZeroTable:
    """find_zeros with a transparent on-disk cache keyed by (height, method, tol)."""
    directory = Path(directory) if directory else cache_dir()
    name = f"zeros_h{height:g}_t{tol:g}_{zeta.METHOD_VERSION}.txt"
    path = directory / name
    if path.exists():
        return ZeroTable.load(path)
    table = find_zeros(height, tol=tol, workers=workers)
    table.save(path)
    return table


# -- rigorous sums over the table ---------------------------------------------


def sum_inv_rho(table: ZeroTable, D: float) -> float:
    """Upward-rounded sum of (gamma^2 + 1/4)^(-1/2) over 0 < gamma <= D."""
    n = table.count_below(D)
    if n == 0:
        return 0.0
    g = table.gammas[:n]
    return round_up(neumaier_sum(1.0 / np.sqrt(g * g + 0.25)))


def _q_correction(y: float) -> float:
    """(0.137 log y + 0.443) / (y log y log(y/2pi)); valid for y > 2pi."""
    ly = math.log(y)
    return (0.137 * ly + 0.443) / (y * ly * math.log(y / TWO_PI))


def sum_inv_gamma_pow(table: ZeroTable, k: int) -> SumBound:
    """Upper bound for the two-sided sum of |gamma|^(-k) over all zeros.

    Zeros come in symmetric pairs, so the finite part doubles the one-sided
    tabulated sum; the remainder above table.height is bounded by the
    zero-density integral (j = 0, pivot at the origin, V = infinity) whose
    closed form needs height > 2pi.
    """
    if k < 2:
        raise DomainError("sum_inv_gamma_pow requires k >= 2")
    if table.height < 1000.0:
        raise HeightError("table height below 1000 gives uninformative bounds")

    partial = 2.0 * neumaier_sum(np.sort(table.gammas ** (-float(k))))
    partial = round_up(partial)

    U = table.height
    m = k - 1
    # closed form of int_U^inf y^{-k} log(y/2pi) dy, times the density envelope
    main = (1.0 / TWO_PI + _q_correction(U)) \
        * (1.0 + m * math.log(U / TWO_PI)) / (m * m * U ** m)
    # census term: the count at U is known exactly, the V terms vanish at inf
    e0 = (count_slack(U) + smooth_count(U) - table.count) * U ** (-float(k))
    tail = round_up(2.0 * (main + e0))

    if tail > partial:
        raise HeightError(f"tail bound {tail:g} exceeds finite part {partial:g}")
    return SumBound(partial=partial, tail=tail)


def zero_table_correction(table: ZeroTable, D: float, *,
                          zero_sum: float | None = None) -> float:
    """Tabulated-zero correction entering the general-D first-block bound.

    zero_sum overrides the table's own sum of (gamma^2+1/4)^(-1/2); passing
    the classical cap 2 reproduces the fixed-D constants exactly.
    """
    if D < 2.0:
        raise DomainError("correction needs D >= 2")
    s = sum_inv_rho(table, D) if zero_sum is None else zero_sum
    n_d = table.count_below(D)
    ld = math.log(D / TWO_PI)
    lD = math.log(D)
    return (
        s
        - (1.0 / (4.0 * math.pi)) * ((ld - 1.0) ** 2 + 1.0)
        + (1.0 / D) * (0.137 * lD + 0.443 * (math.log(lD) + 1.0 / lD) + 2.6 - n_d)
    )


def density_coefficient(D: float) -> float:
    """4 pi (0.137 + 0.443 / log D); decreasing toward 4 pi * 0.137."""
    if D <= 1.0:
        raise DomainError("density_coefficient needs D > 1")
    return 4.0 * math.pi * (0.137 + 0.443 / math.log(D))
