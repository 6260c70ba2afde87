"""SVG figures of instances and cycles (matplotlib, headless)."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .geometry import convex_hull  # noqa: E402
from .model import ColoredPointSet  # noqa: E402

# red and blue first so bipartite instances read naturally
PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def color_of(c: int) -> str:
    return PALETTE[c % len(PALETTE)]


def draw(ps: ColoredPointSet, cycle: Sequence[int] | None = None, ax=None, labels: bool = False, title: str = ""):
    """Draw points, the dashed hull and optionally a cycle; returns the axes."""
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 5))
    xs = [p[0] for p in ps.points]
    ys = [p[1] for p in ps.points]
    hull = convex_hull(ps.points)
    if len(hull) >= 2:
        hx = [xs[i] for i in hull] + [xs[hull[0]]]
        hy = [ys[i] for i in hull] + [ys[hull[0]]]
        ax.plot(hx, hy, ls="--", lw=0.8, color="0.6", zorder=1)
    if cycle:
        cx = [xs[i] for i in cycle] + [xs[cycle[0]]]
        cy = [ys[i] for i in cycle] + [ys[cycle[0]]]
        ax.plot(cx, cy, lw=1.6, color="black", zorder=2)
    ax.scatter(xs, ys, c=[color_of(c) for c in ps.colors], s=36, edgecolors="black", linewidths=0.5, zorder=3)
    if labels:
        for i, (x, y) in enumerate(ps.points):
            ax.annotate(str(i), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    if title:
        ax.set_title(title, fontsize=9)
    return ax


def render_svg(path: str, ps: ColoredPointSet, cycle: Sequence[int] | None = None, labels: bool = True,
               title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(5, 5))
    try:
        draw(ps, cycle, ax=ax, labels=labels, title=title)
        fig.savefig(path, format="svg", bbox_inches="tight")
    finally:
        plt.close(fig)
