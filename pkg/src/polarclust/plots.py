"""Static figure output for labeled points and dendrograms.

All figures are written as SVG with a pinned hash salt and no embedded
timestamp, so re-running a command on the same inputs produces
byte-identical files.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "polarclust"

import matplotlib.pyplot as plt  # noqa: E402

from .clustering import Dendrogram, Labeling  # noqa: E402
from .geometry import PolarPoint, ReconstructionParams, reconstruct, replicate  # noqa: E402

# Fixed label -> color mapping; -1 is always gray.
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#7f7f7f",
)
OUTLIER_COLOR = "#999999"


def _color(label: int) -> str:
    if label == -1:
        return OUTLIER_COLOR
    return PALETTE[label % len(PALETTE)]


def _save(fig, path: str) -> None:
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def polar_scatter(points: list[PolarPoint], labels: Labeling, path: str) -> None:
    """Scatter on a polar axis, one color per cluster label."""
    fig = plt.figure(figsize=(5, 5))
    ax = fig.add_subplot(111, projection="polar")
    for lab in sorted(set(labels)):
        thetas = [p.theta for p, l in zip(points, labels) if l == lab]
        radii = [p.r for p, l in zip(points, labels) if l == lab]
        name = "outlier" if lab == -1 else f"class {lab}"
        ax.scatter(thetas, radii, c=_color(lab), s=36, label=name)
    ax.legend(loc="upper right", bbox_to_anchor=(1.25, 1.1), fontsize=8)
    _save(fig, path)


def plane_scatter(
    points: list[PolarPoint],
    labels: Labeling,
    params: ReconstructionParams,
    path: str,
) -> None:
    """Scatter of the replicated unrolled plane with period boundaries."""
    base = [reconstruct(p, params) for p in points]
    copies = replicate(base, params)
    fig, ax = plt.subplots(figsize=(2 + 1.6 * params.n_periods, 3.2))
    for lab in sorted(set(labels)):
        xs = [c.point.x_prime for c in copies if labels[c.origin] == lab]
        ys = [c.point.y_prime for c in copies if labels[c.origin] == lab]
        name = "outlier" if lab == -1 else f"class {lab}"
        ax.scatter(xs, ys, c=_color(lab), s=24, label=name)
    for k in range(1, params.n_periods):
        ax.axvline(k * params.period_width, color="#cccccc", linewidth=0.8, zorder=0)
    ax.set_xlabel("x' (arc length)")
    ax.set_ylabel("y' (radius)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    _save(fig, path)


def _leaf_order(d: Dendrogram) -> list[int]:
    """Left-to-right leaf order from a depth-first walk of the merge tree."""
    children = {m.new_id: (m.node_a, m.node_b) for m in d.merges}
    order: list[int] = []
    stack = [d.merges[-1].new_id]
    while stack:
        node = stack.pop()
        if node < d.n_leaves:
            order.append(node)
        else:
            a, b = children[node]
            stack.append(b)
            stack.append(a)
    return order


def dendrogram_plot(
    d: Dendrogram, path: str, leaf_labels: list[str] | None = None
) -> None:
    """Draw the merge tree with a height axis."""
    order = _leaf_order(d)
    xpos = {leaf: i for i, leaf in enumerate(order)}
    height = {i: 0.0 for i in range(d.n_leaves)}
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * d.n_leaves), 4))
    xs: dict[int, float] = {leaf: float(i) for i, leaf in enumerate(order)}
    for m in d.merges:
        xa, xb = xs[m.node_a], xs[m.node_b]
        ha, hb = height[m.node_a], height[m.node_b]
        ax.plot([xa, xa, xb, xb], [ha, m.height, m.height, hb], color="#1f77b4", linewidth=1.2)
        xs[m.new_id] = (xa + xb) / 2.0
        height[m.new_id] = m.height
    names = leaf_labels or [str(i) for i in range(d.n_leaves)]
    ax.set_xticks(range(d.n_leaves))
    ax.set_xticklabels([names[leaf] for leaf in order], rotation=90, fontsize=8)
    ax.set_ylabel("linkage distance")
    fig.tight_layout()
    _save(fig, path)
