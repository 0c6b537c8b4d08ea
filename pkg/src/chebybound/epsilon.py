"""Assembly of the explicit bounds epsilon(b) with |psi(x) - x| < epsilon x
for x >= e^b, and the three large-x analytic bound shapes.

Every epsilon splits into four parts:

  * a first block over tabulated-height zeros, discounted by e^(-b/2),
  * a damped block over zeros above the verification height A, carrying the
    exp(-X^2/log gamma) factor from the zero-free region (X = sqrt(b/R0)),
  * the linear smoothing term m delta / 2,
  * the wrap-up term e^-b log 2pi.

The damped block is assembled in log space: its prefactor R_m(delta) z /
(2 m^2 delta^m) and the kernel bounds individually overflow and underflow
float64 over the tabulated b range while their product sits near 1e-12.

The subtracted kernel term of order 1 is dropped (it is non-negative), and
the order-2 kernel takes the smallest of its three closed-form upper bounds,
so the assembled value stays a valid upper bound throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import special_fns as sf
from .config import A_DEFAULT, FIXED_D, KADIRI_R0
from .errors import DomainError
from .rounding import round_up
from .zeros import ZeroTable, count_slack, density_coefficient, smooth_count, \
    zero_table_correction

TWO_PI = 2.0 * math.pi
LOG_2PI = math.log(TWO_PI)

#: Fixed-D first-block constants (valid exactly for D = 963.5670402 with the
#: tabulated-zero sum capped at 2).
_FIXED_D_CONST = 0.1580304
_FIXED_D_COEFF = 2.531837599

#: Rounded-up zero-density factor 1/2pi + q(A).
_DENSITY_UP = 0.159155


class XScale:
    """X = sqrt(log x / R0): the decay scale forced by the zero-free region."""

    def __init__(self, log_x: float, R0: float = KADIRI_R0):
        if log_x <= 0.0:
            raise DomainError("XScale needs log x > 0")
        self.R0 = R0
        self.X = math.sqrt(log_x / R0)


@dataclass(frozen=True)
class BoundParams:
    """Free parameters of one bound row; the bound holds for x >= e^b."""

    b: float
    m: int
    delta: float
    T1: float = 0.0            # 0 -> derive from the cutoff formula
    T2: float = 0.0            # 0 -> damped block without a split
    D: float = FIXED_D
    A: float = A_DEFAULT

    def validate(self) -> None:
        if self.b <= 0.5:
            raise DomainError("needs b > 1/2")
        if self.m < 1:
            raise DomainError("m must be a positive integer")
        window = (1.0 - math.exp(-self.b)) / self.m
        if not 0.0 < self.delta < window:
            raise DomainError(
                f"delta must lie in (0, {window:.3e}) for b={self.b}, m={self.m}")
        if not 2.0 <= self.D <= self.A:
            raise DomainError("D must lie in [2, A]")


@dataclass(frozen=True)
class EpsilonCertificate:
    """A computed epsilon with its component breakdown."""

    params: BoundParams
    epsilon: float
    parts: dict[str, float] = field(compare=False)
    form: str = "basic"

    def check_decomposition(self, rel: float = 1e-14) -> None:
        total = sum(self.parts.values())
        if abs(total - self.epsilon) > rel * self.epsilon:
            raise AssertionError("certificate parts do not sum to epsilon")


def growth_factor(m: int, nu: float) -> float:
    """((1 + nu)^(m+1) + 1)^m; evaluated via logs when the inner power is huge."""
    if nu < 0.0:
        raise DomainError("growth factor needs nu >= 0")
    lg = log_growth_factor(m, nu)
    return math.exp(lg) if lg < 709.0 else math.inf


def log_growth_factor(m: int, nu: float) -> float:
    inner = (m + 1) * math.log1p(nu)
    if inner > 650.0:
        return m * inner          # the +1 is lost below float resolution
    return m * math.log(math.exp(inner) + 1.0)


def cutoff_height(m: int, delta: float) -> float:
    """T separating the two zero blocks: (1/delta)(2 R_m(delta)/(2+m delta))^(1/m)."""
    rm = growth_factor(m, delta)
    return (1.0 / delta) * (2.0 * rm / (2.0 + m * delta)) ** (1.0 / m)


# -- first block ---------------------------------------------------------------


def line_block_bound(params: BoundParams, table: ZeroTable | None = None, *,
                     general_d: bool = False,
                     zero_sum_override: float | None = None) -> float:
    """Upper bound for the 1/sqrt(x)-discounted zero block.

    The fixed-D variant hard-codes the constants valid at D = 963.5670402;
    the general-D variant recomputes them from the zero table at params.D.
    """
    m, delta = params.m, params.delta
    T1 = params.T1 if params.T1 > 0.0 else cutoff_height(m, delta)
    if T1 < params.D:
        raise DomainError(f"cutoff T1={T1:.4g} below D={params.D:.6f}")
    L = math.log(T1 / TWO_PI)
    lead = (L + 1.0 / m) ** 2 + 1.0 / m ** 2
    if general_d:
        if table is None:
            raise DomainError("general-D first block needs a zero table")
        g = zero_table_correction(table, params.D, zero_sum=zero_sum_override)
        c = density_coefficient(params.D)
        bracket = lead + 4.0 * math.pi * g - m * c / ((m + 1) * T1)
    else:
        if abs(params.D - FIXED_D) > 1e-6:
            raise DomainError("fixed-D constants are valid only at D = 963.5670402")
        bracket = lead - _FIXED_D_CONST - _FIXED_D_COEFF * m / ((m + 1) * T1)
    return round_up((2.0 + m * delta) / (4.0 * math.pi) * bracket)


# -- damped block ----------------------------------------------------------------


def _log_phi(m: int, X2: float, y_log: float) -> float:
    """log of exp(-X^2/log y) y^-(m+1) given log y."""
    return -X2 / y_log - (m + 1) * y_log


def _slack_at(T_log: float) -> float:
    """count_slack in terms of log T."""
    return 0.137 * T_log + 0.443 * math.log(T_log) + 1.588


def damped_block_bound(params: BoundParams) -> float:
    """Upper bound for the damped zero block with no split (T2 = 0)."""
    b, m, delta, A = params.b, params.m, params.delta, params.A
    X2 = b / KADIRI_R0
    z = 2.0 * math.sqrt(m * b / KADIRI_R0)
    logA = math.log(A)
    a_prime = (2.0 * m / z) * logA

    log_pref = (math.log(_DENSITY_UP) + log_growth_factor(m, delta)
                + 2.0 * math.log(z) - math.log(2.0 * m * m) - m * math.log(delta))
    kernel_part = math.exp(log_pref + sf.log_k2_best_upper(z, a_prime))

    # census terms at the pivot Y and at A
    w_log = math.sqrt(b / ((m + 1) * KADIRI_R0))
    y_log = max(logA, w_log)
    log_rm_over_dm = log_growth_factor(m, delta) - m * math.log(delta)
    e_part = (2.0 * _slack_at(y_log) * math.exp(log_rm_over_dm + _log_phi(m, X2, y_log))
              - _slack_at(logA) * math.exp(log_rm_over_dm + _log_phi(m, X2, logA)))
    return round_up(kernel_part + e_part)


def damped_block_split_bound(params: BoundParams) -> float:
    """Upper bound for the damped block split at T2, A <= T2 <= exp(X).

    Below the split the damping alone controls the block (incomplete-gamma
    closed form); above it the order-(m+1) decay takes over.  The split only
    has room once exp(X) >= A, i.e. b >= R0 log^2 A (about 4636).
    """
    b, m, delta, A, T2 = params.b, params.m, params.delta, params.A, params.T2
    X2 = b / KADIRI_R0
    X = math.sqrt(X2)
    if not (A <= T2 <= math.exp(min(X, 700.0))):
        raise DomainError("T2 must lie in [A, exp(X)]")
    logA, logT2 = math.log(A), math.log(T2)

    a_pp = b / (KADIRI_R0 * logA)     # X^2 / log A
    t_pp = b / (KADIRI_R0 * logT2)    # X^2 / log T2
    g2 = sf.upper_inc_gamma(-2.0, t_pp) - sf.upper_inc_gamma(-2.0, a_pp)
    g1 = sf.upper_inc_gamma(-1.0, t_pp) - sf.upper_inc_gamma(-1.0, a_pp)
    bracket = X2 * X2 * g2 - X2 * LOG_2PI * g1
    below = (2.0 + m * delta) / (4.0 * math.pi) * bracket
    below += (2.0 + m * delta) / 2.0 * (
        2.0 * _slack_at(logT2) * math.exp(_log_phi(0, X2, logT2))
        - _slack_at(logA) * math.exp(_log_phi(0, X2, logA)))

    # above the split: the no-split block with A replaced by T2 and the
    # census term at A deleted
    z = 2.0 * math.sqrt(m * b / KADIRI_R0)
    t2_prime = (2.0 * m / z) * logT2
    log_pref = (math.log(_DENSITY_UP) + log_growth_factor(m, delta)
                + 2.0 * math.log(z) - math.log(2.0 * m * m) - m * math.log(delta))
    above = math.exp(log_pref + sf.log_k2_best_upper(z, t2_prime))
    log_rm_over_dm = log_growth_factor(m, delta) - m * math.log(delta)
    above += 2.0 * _slack_at(logT2) * math.exp(log_rm_over_dm + _log_phi(m, X2, logT2))

    return round_up(below + above)


# -- the assembled bound ---------------------------------------------------------


def epsilon_for(params: BoundParams, table: ZeroTable | None = None, *,
                general_d: bool = False) -> EpsilonCertificate:
    """Assemble the four-part bound; with T2 > 0 the split form competes
    against the plain form and the smaller one wins."""
    params.validate()
    line = max(line_block_bound(params, table, general_d=general_d), 0.0)
    line_term = math.exp(math.log(line) - params.b / 2.0) if line > 0.0 else 0.0

    damped = damped_block_bound(params)
    form = "basic"
    if params.T2 > 0.0:
        split = damped_block_split_bound(params)
        if split < damped:
            damped, form = split, "split"

    linear_term = params.m * params.delta / 2.0
    wrap_term = math.exp(-params.b) * LOG_2PI
    parts = {
        "line_block": line_term,
        "damped_block": damped,
        "linear": linear_term,
        "wrap": wrap_term,
    }
    return EpsilonCertificate(params=params, epsilon=sum(parts.values()),
                              parts=parts, form=form)


def theta_epsilon(cert: EpsilonCertificate) -> float:
    """Bound for |theta(x) - x|/x from a psi certificate: the psi-theta gap
    contributes at most 1.43/sqrt(x)."""
    return cert.epsilon + 1.43 * math.exp(-cert.params.b / 2.0)


def optimize_row(b: float, table: ZeroTable | None = None, *,
                 m_range: tuple[int, int] = (1, 30),
                 general_d: bool = False, D: float = FIXED_D,
                 A: float = A_DEFAULT) -> EpsilonCertificate:
    """Minimal-epsilon certificate over m and delta at fixed b.

    m is scanned exhaustively; delta over a 40-points-per-decade log grid
    refined by golden-section to 1e-3 relative.  Deterministic.
    """
    if b < 18.0:
        raise DomainError("tabulation starts at b = 18")
    best: EpsilonCertificate | None = None
    for m in range(m_range[0], m_range[1] + 1):
        window = (1.0 - math.exp(-b)) / m
        lo, hi = 1e-15, window * (1.0 - 1e-9)

        def eps_at(delta: float, m=m) -> float:
            p = BoundParams(b=b, m=m, delta=delta, D=D, A=A)
            try:
                return epsilon_for(p, table, general_d=general_d).epsilon
            except DomainError:
                return math.inf

        n = max(2, int(40 * math.log10(hi / lo)))
        grid = [lo * (hi / lo) ** (i / (n - 1)) for i in range(n)]
        vals = [eps_at(d) for d in grid]
        i_best = min(range(n), key=vals.__getitem__)
        if not math.isfinite(vals[i_best]):
            continue
        d_lo = grid[max(0, i_best - 1)]
        d_hi = grid[min(n - 1, i_best + 1)]
        d_opt = _golden_section(eps_at, d_lo, d_hi, rel_tol=1e-3)
        cand = epsilon_for(BoundParams(b=b, m=m, delta=d_opt, D=D, A=A),
                           table, general_d=general_d)
        if best is None or cand.epsilon < best.epsilon:
            best = cand
    if best is None:
        raise DomainError(f"no feasible (m, delta) found at b={b}")
    return best


def _golden_section(f, lo: float, hi: float, rel_tol: float) -> float:
    """Golden-section minimum of f on [lo, hi], working in log coordinates."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = math.log(lo), math.log(hi)
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(math.exp(c)), f(math.exp(d))
    while (b - a) > rel_tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(math.exp(c))
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(math.exp(d))
    return math.exp(0.5 * (a + b))


# -- analytic large-x forms -------------------------------------------------------


def epsilon_asymptotic(log_x: float) -> float:
    """1.062253 (1 - 0.900377/(2X)) X^(3/4) e^-X, for log x >= 110."""
    if log_x < 110.0:
        raise DomainError("asymptotic form certified for log x >= 110")
    X = XScale(log_x).X
    return 1.062253 * (1.0 - 0.900377 / (2.0 * X)) * X ** 0.75 * math.exp(-X)


def epsilon_asymptotic_chain(log_x: float) -> float:
    """The weaker companion form 1.06225193203 (1 + 15/(32X)) X^(3/4) e^-X.

    Dominates epsilon_asymptotic at every valid argument; the two agree only
    in the X -> infinity limit.
    """
    if log_x < 110.0:
        raise DomainError("asymptotic form certified for log x >= 110")
    X = XScale(log_x).X
    return 1.06225193203 * (1.0 + 15.0 / (32.0 * X)) * X ** 0.75 * math.exp(-X)


def smoothing_ratio(log_x: float) -> float:
    """r(x) = 1 + 15/(32X); the squared smoothing loss in the refined form."""
    return 1.0 + 15.0 / (32.0 * XScale(log_x).X)


def epsilon_refined(log_x: float) -> float:
    """epsilon/sqrt(2) {1 + 3 log X/(2 sqrt(pi(4X - 3 log X))) + 3/(2 sqrt(pi X))}.

    Beats epsilon_asymptotic for X >= 33.4 (log x >= 6344) and loses to it
    below X = 33.36.
    """
    if log_x < 110.0:
        raise DomainError("refined form certified for log x >= 110")
    X = XScale(log_x).X
    lx = math.log(X)
    brace = (1.0 + 3.0 * lx / (2.0 * math.sqrt(math.pi * (4.0 * X - 3.0 * lx)))
             + 3.0 / (2.0 * math.sqrt(math.pi * X)))
    return epsilon_asymptotic(log_x) / math.sqrt(2.0) * brace


# -- half-power form and its internal solve ---------------------------------------


@dataclass(frozen=True)
class HalfPowerSolve:
    """Internals of the sqrt(8/pi) X^(1/2) e^-X argument at one x."""

    X: float
    nu: float
    nu0: float
    nu1: float
    Y: float
    G0: float
    G1: float
    G2: float
    G3_bound: float
    L: float
    M: float
    E: float
    delta: float
    log_T2: float
    k_residual: float
    certified: bool            # log x >= 4890


def _half_power_pieces(nu: float, X: float) -> tuple[float, float]:
    G0 = nu * nu * (nu - LOG_2PI / X)
    G1 = nu * nu / (2.0 * nu * nu - 1.0) * (nu + 1.0 / (2.0 * X))
    return G0, G1


def _k_balance(nu: float, X: float) -> float:
    """k(nu): equals 1 exactly when the two T2 definitions coincide."""
    G0, G1 = _half_power_pieces(nu, X)
    if G0 <= 0.0:
        return 0.0
    return (X / TWO_PI) * math.sqrt(G0 ** 3 / G1) \
        * math.exp(-2.0 * X * (1.0 - nu) - X * (1.0 - nu) ** 2 / nu)


def half_power_internals(log_x: float) -> HalfPowerSolve:
    """Solve the balance equation and evaluate every window the argument needs.

    Raises if k(1) <= 1 (X too small to bracket the root).  The solve itself
    is available below the certified floor log x = 4890; the certificate then
    carries certified=False.
    """
    X = XScale(log_x).X
    lo = 1.0 / math.sqrt(2.0) + 1e-12
    if _k_balance(1.0, X) <= 1.0:
        raise DomainError(f"k(1) <= 1 at X={X:.3f}: half-power argument unavailable")
    a, b = lo, 1.0
    for _ in range(200):
        mid = 0.5 * (a + b)
        if _k_balance(mid, X) < 1.0:
            a = mid
        else:
            b = mid
        if b - a < 1e-15:
            break
    nu = 0.5 * (a + b)
    k_res = _k_balance(nu, X) - 1.0

    nu0 = 1.0 - math.log(X / (2.0 * math.pi)) / (2.0 * X)
    nu1 = 1.0 - math.log(X / (5.0 * math.pi)) / (2.0 * X)
    G0, G1 = _half_power_pieces(nu, X)
    Y = X * (1.0 - nu) ** 2 / nu
    delta = (G0 * G1) ** 0.25 * math.sqrt(2.0 / math.pi) * math.exp(-Y / 2.0) \
        * math.sqrt(X) * math.exp(-X)
    log_T2 = nu * X

    # census-density factor at T2, kept in logs since T2 ~ e^X
    log_q_num = math.log(0.137 * log_T2 + 0.443)
    log_q = log_q_num - log_T2 - math.log(log_T2) - math.log(log_T2 - LOG_2PI)
    G2 = (1.0 + TWO_PI * math.exp(log_q)) * (((1.0 + delta) ** 3 + 1.0) / 2.0) ** 2

    G3_bound = G2 * (G0 * G1) ** 0.25 * math.exp(-Y / 2.0) \
        * (1.0 + 0.65 * math.sqrt(X) * math.exp(-X))
    L = (nu ** 6 / (2.0 * nu * nu - 1.0)) ** 0.25
    M = ((1.0 - 1.0 / (nu * X)) * (1.0 + 1.0 / (2.0 * nu * X))
         * math.exp(-2.0 * X * (1.0 - nu) ** 2 / nu)) ** 0.25
    E = math.exp((1.0 / (4.0 * nu1)) * (-1.0 / (2.0 * X) - 2.0 * X * (1.0 - nu1) ** 2))

    solve = HalfPowerSolve(X=X, nu=nu, nu0=nu0, nu1=nu1, Y=Y, G0=G0, G1=G1,
                           G2=G2, G3_bound=G3_bound, L=L, M=M, E=E,
                           delta=delta, log_T2=log_T2, k_residual=k_res,
                           certified=log_x >= 4890.0)
    _assert_half_power_windows(solve)
    return solve


def _assert_half_power_windows(s: HalfPowerSolve) -> None:
    if abs(s.k_residual) > 1e-9:
        raise AssertionError(f"balance residual {s.k_residual:.2e} out of tolerance")
    if not s.nu0 < s.nu < s.nu1:
        raise AssertionError("nu escaped its bracketing window")
    if not (27.0 / 32.0) ** 0.25 < s.L < 1.0:
        raise AssertionError("L outside its window")
    if not s.E < 1.0:
        raise AssertionError("E must stay below 1")
    if s.certified:
        if not s.M < s.E:
            raise AssertionError("M exceeded its envelope E")
        if not s.G3_bound <= 1.0:
            raise AssertionError("headline factor exceeded 1")
        if s.X >= 11.0 and not 0.84375 < s.G0 * s.G1 < 1.0:
            raise AssertionError("G0 G1 outside (0.84375, 1)")
        if not s.G0 / s.G1 < 2.0 * s.nu ** 2 - 1.0 < 1.0:
            raise AssertionError("G0/G1 ordering violated")
        if not s.Y < 0.025:
            raise AssertionError("Y exceeded 0.025")


def epsilon_half_power(log_x: float, *, allow_uncertified: bool = False) -> float:
    """sqrt(8/pi) X^(1/2) e^-X; certified for log x >= 4890."""
    solve = half_power_internals(log_x)
    if not solve.certified and not allow_uncertified:
        raise DomainError("half-power form certified only for log x >= 4890")
    X = solve.X
    return math.sqrt(8.0 / math.pi) * math.sqrt(X) * math.exp(-X)


def best_analytic(log_x: float) -> tuple[float, str]:
    """Smallest applicable analytic form at this x, with provenance."""
    candidates: list[tuple[float, str]] = []
    if log_x >= 110.0:
        candidates.append((epsilon_asymptotic(log_x), "asymptotic"))
        candidates.append((epsilon_refined(log_x), "refined"))
    if log_x >= 4890.0:
        candidates.append((epsilon_half_power(log_x), "half-power"))
    if not candidates:
        raise DomainError("no analytic form applies below log x = 110")
    return min(candidates)
