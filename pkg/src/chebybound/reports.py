"""Deterministic TSV report writers and the figures rendered alongside them.

Figures use the Agg backend and are written next to each TSV with the same
basename; TSV bytes are reproducible for fixed inputs (figure bytes are
best-effort: metadata is stripped but the PNG encoder is not pinned).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def write_tsv(path: Path, header: list[str], rows: list[list]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n")
    return path


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _save(fig, path: Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def figure_epsilon_table(path: Path, rows: list[dict]) -> Path:
    """epsilon(b) on a log scale: recomputed, optimized, and published."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    bs = [r["b"] for r in rows]
    ax.semilogy(bs, [r["epsilon"] for r in rows], "o-", ms=3, label="recomputed")
    if any("epsilon_opt" in r for r in rows):
        ax.semilogy(bs, [r.get("epsilon_opt") for r in rows], "s--", ms=3,
                    label="optimized")
    if any(r.get("published") for r in rows):
        ax.semilogy(bs, [r.get("published") for r in rows], "k.", ms=4,
                    label="published")
    ax.set_xlabel("b  (bound valid for x >= e^b)")
    ax.set_ylabel("epsilon")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return _save(fig, path)


def figure_eta(path: Path, rows: list[dict]) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ks = [r["k"] for r in rows if r["variant"] == "psi"]
    ax.semilogy(ks, [r["eta"] for r in rows if r["variant"] == "psi"],
                "o-", label="psi")
    ax.semilogy([r["k"] for r in rows if r["variant"] == "theta"],
                [r["eta"] for r in rows if r["variant"] == "theta"],
                "s--", label="theta")
    ax.set_xlabel("k")
    ax.set_ylabel("eta_k")
    ax.set_xticks(ks)
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return _save(fig, path)


def figure_sums(path: Path, rows: list[dict]) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ks = [r["k"] for r in rows]
    ax.semilogy(ks, [r["total"] for r in rows], "o-", label="computed total")
    ax.semilogy(ks, [r["bound"] for r in rows], "k^--", label="target ceiling")
    ax.set_xlabel("k")
    ax.set_ylabel("sum over zeros of |gamma|^-k")
    ax.set_xticks(ks)
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return _save(fig, path)


def figure_verify(path: Path, rows: list[dict]) -> Path:
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    labels = [r["ineq_id"] for r in rows]
    margins = [max(r["min_margin"], 1e-300) for r in rows]
    colors = ["tab:red" if r["violations"] else "tab:blue" for r in rows]
    ax.barh(labels, margins, color=colors)
    ax.set_xscale("log")
    ax.set_xlabel("worst margin (bound minus attained value)")
    fig.tight_layout()
    return _save(fig, path)


def figure_zero_counts(path: Path, heights, counts, expected, slack) -> Path:
    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    ax.plot(heights, counts, "o", ms=3, label="census")
    ax.plot(heights, expected, "-", label="smooth count")
    ax.fill_between(heights, expected - slack, expected + slack, alpha=0.25,
                    label="certificate window")
    ax.set_xlabel("height")
    ax.set_ylabel("zeros below height")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)
