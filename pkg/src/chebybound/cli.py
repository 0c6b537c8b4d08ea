"""Batch CLI binding the modules into reproducible commands.

Exit codes: 0 success, 1 verification violation, 2 configuration error,
3 certification failure.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

import click
import numpy as np

from . import chebyshev, eta, reports, verify, zeros
from .config import A_DEFAULT, FIXED_D, RunConfig
from .epsilon import (BoundParams, best_analytic, epsilon_for, optimize_row)
from .errors import CertificationError, DomainError
from .reference_data import (FAMILY_A_ROWS, FAMILY_B_ROWS, POWER_SUM_BOUNDS)
from .sieve import SieveEngine

EXIT_VIOLATION = 1
EXIT_CONFIG = 2
EXIT_CERTIFICATION = 3


def _fail(code: int, msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


@click.group()
@click.option("--out", type=click.Path(path_type=Path), default=Path("out"),
              show_default=True, help="Output directory for reports and figures.")
@click.option("--figures/--no-figures", default=True, show_default=True,
              help="Render figures next to the delimited reports.")
@click.option("--mode", type=click.Choice(["certified", "reference"]),
              default="certified", show_default=True)
@click.option("--A", "a_height", type=float, default=A_DEFAULT, show_default=True,
              help="Trusted verification height (count main term = 1e13).")
@click.option("--D", "d_cut", type=float, default=FIXED_D, show_default=True,
              help="Tabulated-zero cutoff for the first block.")
@click.pass_context
def main(ctx, out, figures, mode, a_height, d_cut):
    """Explicit Chebyshev-function bounds from self-computed zero data."""
    cfg = RunConfig(out_dir=out, figures=figures, mode=mode, A=a_height, D=d_cut)
    try:
        cfg.validate()
    except ValueError as exc:
        _fail(EXIT_CONFIG, str(exc))
    ctx.obj = cfg


@main.command("zeros")
@click.option("--height", type=float, default=1000.0, show_default=True)
@click.pass_obj
def cmd_zeros(cfg: RunConfig, height: float):
    """Generate (or load) the zero table and write it out."""
    try:
        table = zeros.cached_table(height)
    except CertificationError as exc:
        _fail(EXIT_CERTIFICATION, str(exc))
    except (DomainError, ValueError) as exc:
        _fail(EXIT_CONFIG, str(exc))
    out = cfg.out_dir / f"zeros_h{height:g}.txt"
    table.save(out)
    click.echo(f"{table.count} zeros up to {height:g} -> {out}")
    if cfg.figures:
        hs = np.linspace(max(20.0, height / 50.0), height, 60)
        counts = [table.count_below(h) for h in hs]
        reports.figure_zero_counts(out.with_suffix(".png"), hs,
                                   np.array(counts, dtype=float),
                                   zeros.smooth_count(hs), zeros.count_slack(hs))


@main.command("sums")
@click.option("--height", type=float, default=5000.0, show_default=True)
@click.option("--k", "ks", multiple=True, type=int, default=(2, 3, 4, 5, 6, 7),
              show_default=True)
@click.pass_obj
def cmd_sums(cfg: RunConfig, height: float, ks):
    """Rigorous bounds for the zero-ordinate power sums."""
    try:
        table = zeros.cached_table(height)
        rows = []
        for k in sorted(ks):
            sb = zeros.sum_inv_gamma_pow(table, k)
            bound = POWER_SUM_BOUNDS.get(k, math.nan)
            rows.append({"k": k, "partial": sb.partial, "tail": sb.tail,
                         "total": sb.total, "bound": bound,
                         "ok": sb.total <= bound if not math.isnan(bound) else True})
    except CertificationError as exc:
        _fail(EXIT_CERTIFICATION, str(exc))
    except (DomainError, ValueError) as exc:
        _fail(EXIT_CONFIG, str(exc))
    path = reports.write_tsv(
        cfg.out_dir / "zero_power_sums.tsv",
        ["k", "partial", "tail", "total", "bound", "ok"],
        [[r["k"], r["partial"], r["tail"], r["total"], r["bound"], r["ok"]]
         for r in rows])
    if cfg.figures:
        reports.figure_sums(path.with_suffix(".png"), rows)
    bad = [r for r in rows if not r["ok"]]
    for r in rows:
        click.echo(f"k={r['k']}: total={r['total']:.8e} bound={r['bound']:.6e} "
                   f"{'ok' if r['ok'] else 'EXCEEDED'}")
    if bad:
        sys.exit(EXIT_VIOLATION)


@main.command("table")
@click.option("--grid", type=str, default="",
              help="Comma-separated b values; empty uses the bundled grid.")
@click.option("--families", type=click.Choice(["a", "b", "both"]), default="both",
              show_default=True)
@click.option("--optimize/--no-optimize", default=False, show_default=True,
              help="Also search (m, delta) per row instead of only recomputing "
                   "at the bundled operating points.")
@click.pass_obj
def cmd_table(cfg: RunConfig, grid: str, families: str, optimize: bool):
    """Recompute the epsilon tables (family A fixed-D; family B general-D 2500)."""
    want = {"a": ["a"], "b": ["b"], "both": ["a", "b"]}[families]
    try:
        table = zeros.cached_table(2500.0) if "b" in want else None
        all_rows = []
        for fam in want:
            src = FAMILY_A_ROWS if fam == "a" else FAMILY_B_ROWS
            rows = _family_rows(fam, src, grid, table, optimize)
            all_rows.extend(rows)
            path = reports.write_tsv(
                cfg.out_dir / f"epsilon_family_{fam}.tsv",
                ["b", "m", "delta", "epsilon", "epsilon_opt", "m_opt", "delta_opt",
                 "published", "ratio", "flag"],
                [[r["b"], r["m"], r["delta"], r["epsilon"], r.get("epsilon_opt", ""),
                  r.get("m_opt", ""), r.get("delta_opt", ""), r["published"],
                  r["ratio"], r["flag"]] for r in rows])
            if cfg.figures:
                reports.figure_epsilon_table(path.with_suffix(".png"), rows)
            flagged = sum(1 for r in rows if r["flag"])
            click.echo(f"family {fam}: {len(rows)} rows -> {path}"
                       + (f" ({flagged} flagged beyond 5%)" if flagged else ""))
    except CertificationError as exc:
        _fail(EXIT_CERTIFICATION, str(exc))
    except (DomainError, ValueError) as exc:
        _fail(EXIT_CONFIG, str(exc))


def _family_rows(fam, src, grid, table, optimize):
    rows = []
    selected = src
    if grid:
        wanted = {float(tok) for tok in grid.split(",")}
        selected = [r for r in src if any(abs(r[0] - w) < 1e-9 for w in wanted)]
    for b, m, delta, eps_pub in selected:
        params = BoundParams(b=b, m=m, delta=delta,
                             D=FIXED_D if fam == "a" else 2500.0)
        cert = epsilon_for(params, table, general_d=(fam == "b"))
        row = {"b": b, "m": m, "delta": delta, "epsilon": cert.epsilon,
               "published": eps_pub, "ratio": cert.epsilon / eps_pub,
               "flag": int(not 0.95 <= cert.epsilon / eps_pub <= 1.05)}
        if optimize:
            best = optimize_row(b, table, general_d=(fam == "b"),
                                D=params.D)
            row.update(epsilon_opt=best.epsilon, m_opt=best.params.m,
                       delta_opt=best.params.delta)
        rows.append(row)
    return rows


@main.command("eta")
@click.option("--b-min", type=float, default=math.log(8e11), show_default=True)
@click.pass_obj
def cmd_eta(cfg: RunConfig, b_min: float):
    """eta_k coefficients for |psi - x| and |theta - x| below x/log^k x."""
    try:
        certs = eta.computed_certificates(b_min)
        rows = []
        for variant in ("psi", "theta"):
            for k in (1, 2, 3, 4):
                rep = eta.eta_coeffs(k, b_min, certs, variant=variant)
                rows.append({"variant": variant, "k": k, "eta": rep.value,
                             "argmax_b": rep.argmax_b})
    except (DomainError, ValueError) as exc:
        _fail(EXIT_CONFIG, str(exc))
    path = reports.write_tsv(cfg.out_dir / "eta_coefficients.tsv",
                             ["variant", "k", "eta", "argmax_b"],
                             [[r["variant"], r["k"], r["eta"], r["argmax_b"]]
                              for r in rows])
    if cfg.figures:
        reports.figure_eta(path.with_suffix(".png"), rows)
    for r in rows:
        click.echo(f"{r['variant']} k={r['k']}: eta={r['eta']:.6e}")


@main.command("verify")
@click.option("--limit", type=int, default=10 ** 9, show_default=True)
@click.option("--ids", type=str, default="", help="Comma-separated inequality ids.")
@click.pass_obj
def cmd_verify(cfg: RunConfig, limit: int, ids: str):
    """Scan the inequality registry against exact sieve values."""
    chosen = tuple(t for t in ids.split(",") if t) or verify.ALL_IDS
    unknown = [i for i in chosen if i not in verify.ALL_IDS]
    if unknown:
        _fail(EXIT_CONFIG, f"unknown inequality ids {unknown}")
    engine = SieveEngine(limit=limit)
    scans = verify.run_all(engine, chosen, limit=float(limit))
    rows = [{"ineq_id": s.ineq_id, "lo": s.lo, "hi": s.hi, "checked": s.checked,
             "violations": s.violations, "worst_x": s.worst_x,
             "min_margin": s.min_margin} for s in scans]
    path = reports.write_tsv(cfg.out_dir / "verification.tsv",
                             ["ineq_id", "lo", "hi", "checked", "violations",
                              "worst_x", "min_margin"],
                             [[r["ineq_id"], r["lo"], r["hi"], r["checked"],
                               r["violations"], r["worst_x"], r["min_margin"]]
                              for r in rows])
    if cfg.figures:
        reports.figure_verify(path.with_suffix(".png"), rows)
    for s in scans:
        state = "ok" if s.ok else f"{s.violations} VIOLATIONS"
        click.echo(f"{s.ineq_id}: {state} (worst margin {s.min_margin:.4g} "
                   f"at x={s.worst_x:.6g}, {s.checked} checks)")
    if any(not s.ok for s in scans):
        sys.exit(EXIT_VIOLATION)


@main.command("eps")
@click.argument("x", type=float)
@click.option("--log", "is_log", is_flag=True,
              help="Interpret X as log x (for x beyond float range).")
@click.option("--limit", type=int, default=10 ** 7, show_default=True,
              help="Sieve budget for the exact small-x path.")
@click.pass_obj
def cmd_eps(cfg: RunConfig, x: float, is_log: bool, limit: int):
    """Best applicable bound for |psi(x) - x| / x, with provenance."""
    try:
        log_x = x if is_log else math.log(x)
        if log_x <= 0:
            _fail(EXIT_CONFIG, "x must exceed 1")
        candidates: list[tuple[float, str]] = []
        if not is_log and x <= min(limit, math.exp(18.42)):
            engine = SieveEngine(limit=max(int(x) + 1, 100))
            psi = chebyshev.psi_from_theta(x, engine)
            candidates.append((abs(psi - x) / x, "exact-sieve"))
        row = _best_row_at(log_x)
        if row is not None:
            cert = epsilon_for(BoundParams(b=row[0], m=row[1], delta=row[2]))
            candidates.append((cert.epsilon, f"table[b={row[0]:g}]"))
        if log_x >= 110.0:
            candidates.append(best_analytic(log_x))
        if not candidates:
            _fail(EXIT_CONFIG, "no bound applies: x below e^18.42 and above the "
                               "sieve budget")
        value, provenance = min(candidates)
        click.echo(f"epsilon={value:.6e} provenance={provenance}")
    except (DomainError, ValueError) as exc:
        _fail(EXIT_CONFIG, str(exc))


def _best_row_at(log_x: float):
    rows = [r for r in FAMILY_A_ROWS if r[0] <= log_x]
    return rows[-1] if rows else None


if __name__ == "__main__":
    main()
