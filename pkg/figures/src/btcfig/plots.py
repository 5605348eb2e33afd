"""The six figure kinds and their renderers.

Each builder returns a matplotlib Figure; `render` writes it atomically so a
failed render never leaves a partial image.  Validation happens while the
data loads, before any file is touched.

CCDF curves use a log probability axis and are decimated to at most 5000
vertices per curve (endpoints preserved), which keeps multi-million-sample
pools renderable without changing what the plot shows.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .io import InputError, find_runs, load_summary, read_column, read_columns

FIG_KINDS = ("ccdf-prop", "ccdf-conf", "bars-prop", "bars-conf",
             "forks", "fork-gap")

MAX_CURVE_POINTS = 5000

# Deterministic strategy ordering and colors across every figure.
STRATEGY_ORDER = ("normal", "random", "mixed")
COLORS = {"normal": "tab:blue", "random": "tab:orange", "mixed": "tab:green"}


def _strategy_sort(names):
    known = [s for s in STRATEGY_ORDER if s in names]
    extra = sorted(set(names) - set(STRATEGY_ORDER))
    return known + extra


def _color(strategy):
    return COLORS.get(strategy)


def ccdf_points(samples):
    """Empirical P(X > t) at each distinct sample value, descending to 0."""
    ordered = sorted(samples)
    n = len(ordered)
    xs, ps = [], []
    i = 0
    while i < n:
        j = i
        while j < n and ordered[j] == ordered[i]:
            j += 1
        xs.append(ordered[i])
        ps.append((n - j) / n)
        i = j
    return xs, ps


def _decimate(xs, ps):
    n = len(xs)
    if n <= MAX_CURVE_POINTS:
        return xs, ps
    step = (n - 1) / (MAX_CURVE_POINTS - 1)
    idx = [round(k * step) for k in range(MAX_CURVE_POINTS)]
    return [xs[i] for i in idx], [ps[i] for i in idx]


def _ccdf_figure(in_dir, column, title, xlabel, peers, tx_rate):
    runs = find_runs(in_dir, "metrics.csv", peers, tx_rate)
    pools: dict[str, list[float]] = {}
    for run in runs:
        pools.setdefault(run.strategy, []).extend(
            read_column(run.path, column))
    pools = {s: v for s, v in pools.items() if v}
    if not pools:
        raise InputError(f"metrics.csv: no values in column '{column}'")

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for strategy in _strategy_sort(pools):
        xs, ps = _decimate(*ccdf_points(pools[strategy]))
        ax.plot(xs, ps, drawstyle="steps-post", label=strategy,
                color=_color(strategy))
    ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("P(X > t)")
    cells = sorted({(r.peers, r.tx_rate) for r in runs})
    pooled = ", ".join(f"P{p} rate {lam:g}/min" for p, lam in cells)
    ax.set_title(f"{title}\n{pooled}", fontsize=10)
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return fig


def _bars_figure(in_dir, mean_col, ci_col, title, ylabel):
    rows = load_summary(in_dir, (mean_col, ci_col))
    cells = sorted({(r["peers"], r["tx_rate"]) for r in rows})
    strategies = _strategy_sort({r["strategy"] for r in rows})
    by_key = {(r["strategy"], r["peers"], r["tx_rate"]): r for r in rows}

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    width = 0.8 / len(strategies)
    for k, strategy in enumerate(strategies):
        heights, errs = [], []
        for cell in cells:
            row = by_key.get((strategy, *cell))
            heights.append(float(row[mean_col]) if row and row[mean_col] != ""
                           else math.nan)
            errs.append(float(row[ci_col]) if row and row[ci_col] != ""
                        else 0.0)
        positions = [i + (k - (len(strategies) - 1) / 2) * width
                     for i in range(len(cells))]
        ax.bar(positions, heights, width * 0.92, yerr=errs, capsize=4,
               label=strategy, color=_color(strategy))
    ax.set_xticks(range(len(cells)))
    ax.set_xticklabels([f"P{p}\nrate {lam:g}/min" for p, lam in cells])
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.legend()
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    return fig


def _fork_gap_figure(in_dir, peers, tx_rate):
    runs = find_runs(in_dir, "forks.csv", peers, tx_rate)
    pools: dict[str, list[tuple]] = {}
    for run in runs:
        pools.setdefault(run.strategy, []).extend(
            read_columns(run.path, ("main_b_g", "gap")))
    pools = {s: v for s, v in pools.items() if v}
    if not pools:
        raise InputError("forks.csv: no forks recorded")

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for strategy in _strategy_sort(pools):
        xs = [b_g for b_g, _ in pools[strategy]]
        ys = [gap for _, gap in pools[strategy]]
        ax.scatter(xs, ys, s=22, label=strategy, color=_color(strategy),
                   alpha=0.85)
    ax.set_xlabel("winning block generation time (s)")
    ax.set_ylabel("fork inter-generation gap (s)")
    n = sum(len(v) for v in pools.values())
    ax.set_title(f"Fork gaps ({n} forks)")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    return fig


def build_figure(kind, in_dir, peers=None, tx_rate=None):
    """Build one figure kind from an experiment output directory."""
    if kind == "ccdf-prop":
        return _ccdf_figure(in_dir, "propagation",
                            "Transaction propagation CCDF",
                            "propagation time t (s)", peers, tx_rate)
    if kind == "ccdf-conf":
        return _ccdf_figure(in_dir, "confirmation",
                            "Transaction confirmation CCDF",
                            "confirmation time t (s)", peers, tx_rate)
    if kind == "bars-prop":
        return _bars_figure(in_dir, "prop_mean", "prop_ci",
                            "Mean propagation time (95% CI)",
                            "propagation time (s)")
    if kind == "bars-conf":
        return _bars_figure(in_dir, "conf_mean", "conf_ci",
                            "Mean confirmation time (95% CI)",
                            "confirmation time (s)")
    if kind == "forks":
        return _bars_figure(in_dir, "fork_count_mean", "fork_count_ci",
                            "Mean fork count per run (95% CI)",
                            "forks per run")
    if kind == "fork-gap":
        return _fork_gap_figure(in_dir, peers, tx_rate)
    raise InputError(f"unknown figure kind '{kind}'")


# Stripped per format so identical inputs re-render byte-identically.
_METADATA = {
    "png": {"Software": None},
    "svg": {"Date": None},
    "pdf": {"CreationDate": None},
}


def render(kind, in_dir, out_path, peers=None, tx_rate=None) -> None:
    """Build and write one figure atomically."""
    fig = build_figure(kind, in_dir, peers, tx_rate)
    try:
        fmt = (os.path.splitext(out_path)[1][1:] or "png").lower()
        tmp = f"{out_path}.partial"
        fig.savefig(tmp, format=fmt, dpi=150,
                    metadata=_METADATA.get(fmt))
        os.replace(tmp, out_path)
    finally:
        plt.close(fig)
