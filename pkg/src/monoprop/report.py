"""Figures written next to the textual/CSV reports of the command-line tool."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .justsets import JustSet, Window  # noqa: E402


def justset_grid(j: JustSet, window: Window) -> np.ndarray:
    """Boolean membership image, rows k and columns l, over the window."""
    side = window.side
    grid = np.zeros((side, side), dtype=bool)
    for k, l in window.pairs(window.mask(j)):
        grid[k, l] = True
    return grid


def plot_justsets(panels: list[tuple[str, JustSet]], path, window: Window | None = None) -> None:
    """One panel per (title, set), all drawn on a common window."""
    if window is None:
        window = Window.covering(j for _, j in panels)
        # widen tiny windows so the periodic part is visible
        window = Window(window.B, window.M * max(1, -(-8 // window.side)))
    fig, axes = plt.subplots(1, len(panels), figsize=(3.2 * len(panels), 3.4), squeeze=False)
    for ax, (title, j) in zip(axes[0], panels):
        ax.imshow(justset_grid(j, window), origin="lower", cmap="Greys", vmin=0, vmax=1,
                  interpolation="nearest")
        ax.set_title(title, fontsize=9)
        ax.set_xlabel("l")
        ax.set_ylabel("k")
        if window.B:
            ax.axvline(window.B - 0.5, color="tab:red", lw=0.6, ls=":")
            ax.axhline(window.B - 0.5, color="tab:red", lw=0.6, ls=":")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_transitivity(report, path) -> None:
    """Stacked bars of transitive / non-transitive algebras per component count."""
    comps = sorted({r["components"] for r in report.rows})
    sat = [sum(1 for r in report.rows if r["components"] == c and r["transitive"]) for c in comps]
    fail = [sum(1 for r in report.rows if r["components"] == c and not r["transitive"]) for c in comps]
    x = np.arange(len(comps))
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(x, sat, color="tab:blue", label="transitive")
    ax.bar(x, fail, bottom=sat, color="tab:orange", label="not transitive")
    ax.set_xticks(x, [str(c) for c in comps])
    ax.set_xlabel("connected components")
    ax.set_ylabel("algebras")
    kind = "isomorphism classes" if report.canonical else "labeled algebras"
    ax.set_title(f"transitivity, size {report.size} ({kind})", fontsize=10)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
