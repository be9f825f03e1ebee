"""Matplotlib renderings of graphs, routing trees, and checker witnesses.

Everything draws on a deterministic circular layout so reruns produce the
same image for the same input. Files go wherever the caller points; names
are built from stable identifiers, never from timestamps.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .axioms import Witness
from .graph import Path, RoutingTree, WeightedGraph, format_weight


def _positions(n: int) -> dict[int, tuple[float, float]]:
    # node 0 at twelve o'clock, the rest clockwise
    out = {}
    for v in range(n):
        angle = math.pi / 2 - 2 * math.pi * v / n
        out[v] = (math.cos(angle), math.sin(angle))
    return out


def _edge_list(x) -> set:
    if x is None:
        return set()
    if isinstance(x, Path):
        return set(x.edges)
    if isinstance(x, RoutingTree):
        return set(x.sorted_edges())
    return set(x)


def _draw(ax, g: WeightedGraph, destination: int | None, bold=(), dashed=(), title=""):
    pos = _positions(g.n)
    bold = set(bold)
    dashed = set(dashed)
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[e[0]], pos[e[1]]
        if e in bold:
            style = dict(color="#c22", linewidth=2.6, zorder=2)
        elif e in dashed:
            style = dict(color="#2a7", linewidth=2.2, linestyle="--", zorder=2)
        else:
            style = dict(color="#bbb", linewidth=1.0, zorder=1)
        ax.plot([x1, x2], [y1, y2], **style)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        ax.annotate(
            format_weight(g.weight(e)),
            (mx, my),
            fontsize=8,
            ha="center",
            va="center",
            bbox=dict(boxstyle="round,pad=0.15", fc="white", ec="none", alpha=0.85),
            zorder=3,
        )
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=380, c="white", edgecolors="#333", zorder=4)
        if v == destination:
            ax.scatter([x], [y], s=560, facecolors="none", edgecolors="#333", zorder=4)
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=10, zorder=5)
    ax.set_title(title, fontsize=10)
    ax.set_aspect("equal")
    ax.margins(0.18)
    ax.axis("off")


def render_route(
    g: WeightedGraph, tree: RoutingTree, out_path: str, title: str | None = None
) -> str:
    """One panel: the graph with the routing tree in bold."""
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    _draw(
        ax,
        g,
        tree.destination,
        bold=_edge_list(tree),
        title=title or f"destination {tree.destination}",
    )
    fig.tight_layout()
    fig.savefig(out_path, dpi=130)
    plt.close(fig)
    return out_path


def render_witness(witness: Witness, out_path: str, title: str | None = None) -> str:
    """Expected output dashed, post-transformation output solid."""
    fig, ax = plt.subplots(figsize=(4.6, 4.6))
    kind = witness.transformation.get("kind", "?")
    _draw(
        ax,
        witness.graph,
        witness.destination,
        bold=_edge_list(witness.actual),
        dashed=_edge_list(witness.expected),
        title=title or f"{kind}: expected (dashed) vs actual (solid)",
    )
    fig.tight_layout()
    fig.savefig(out_path, dpi=130)
    plt.close(fig)
    return out_path


def render_comparison(
    g: WeightedGraph,
    destination: int,
    left: RoutingTree,
    right: RoutingTree,
    labels: tuple[str, str],
    out_path: str,
) -> str:
    """Two panels over the same graph; used for divergence witnesses."""
    fig, axes = plt.subplots(1, 2, figsize=(8.4, 4.2))
    for ax, tree, label in zip(axes, (left, right), labels):
        _draw(ax, g, destination, bold=_edge_list(tree), title=label)
    fig.tight_layout()
    fig.savefig(out_path, dpi=130)
    plt.close(fig)
    return out_path


def witness_figures(
    violations: list[Witness], out_dir: str, prefix: str
) -> list[str]:
    """Render every witness to {prefix}-NNN.png under out_dir."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for i, w in enumerate(violations):
        path = os.path.join(out_dir, f"{prefix}-{i:03d}.png")
        written.append(render_witness(w, path))
    return written
