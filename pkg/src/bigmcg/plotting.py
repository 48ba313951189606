"""Draw a ball of the curve graph: one ring per distance from the center."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .tcgraph import Ball  # noqa: E402


def layout(b: Ball) -> list[tuple[float, float]]:
    rings: dict[int, list[int]] = {}
    for i, (_, d) in enumerate(b.vertices):
        rings.setdefault(d, []).append(i)
    pos = [(0.0, 0.0)] * len(b.vertices)
    for d, members in rings.items():
        for k, i in enumerate(members):
            theta = 2 * math.pi * k / len(members) + (0.3 * d)
            pos[i] = (d * math.cos(theta), d * math.sin(theta))
    return pos


def draw_ball(b: Ball, path: str, labels: bool | None = None) -> None:
    if labels is None:
        labels = len(b.vertices) <= 25
    pos = layout(b)
    fig, ax = plt.subplots(figsize=(7, 7))
    for i, j in b.edges:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.7", linewidth=0.8, zorder=1)
    xs, ys = zip(*pos)
    dist = [d for _, d in b.vertices]
    ax.scatter(xs, ys, c=dist, cmap="viridis", s=40, zorder=2)
    if labels:
        for (c, _), (x, y) in zip(b.vertices, pos):
            text = str(c).removeprefix("curve(").removesuffix(")")
            ax.annotate(text, (x, y), fontsize=6, xytext=(3, 3), textcoords="offset points")
    ax.set_title(f"ball of radius {b.radius} around {b.center}", fontsize=8)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
