"""Deterministic SVG rendering of diagrams and dendrograms.

Diagrams follow the usual convention: birth on the horizontal axis, death on
the vertical axis, a diagonal reference line, 0-dimensional features as pink
circles and 1-dimensional ones as dark-blue squares.  Features with infinite
death sit on a dashed horizontal line at the top.  Output is plain SVG text
with no timestamps, so re-rendering is byte-identical.
"""

from __future__ import annotations

import math

from .clustering import Dendrogram
from .persistence import PersistenceDiagram

_SIZE = 480
_MARGIN = 56


def _svg_header(width: int, height: int) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
    )


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_diagram_svg(diagram: PersistenceDiagram, path) -> None:
    """Write a persistence-diagram plot as an SVG file."""
    finite = [f for f in diagram.features if not f.is_infinite]
    values = [f.birth for f in diagram.features] + [f.death for f in finite]
    vmax = max(values + [diagram.max_filtration, 1.0]) * 1.05
    inf_y_value = vmax * 1.08  # dashed reference line for infinite deaths

    span = _SIZE - 2 * _MARGIN

    def sx(v: float) -> float:
        return _MARGIN + span * v / vmax

    def sy(v: float) -> float:
        return _SIZE - _MARGIN - span * min(v, inf_y_value) / (inf_y_value)

    parts = [_svg_header(_SIZE, _SIZE)]
    x0, y0 = _MARGIN, _SIZE - _MARGIN
    x1, y1 = _SIZE - _MARGIN, _MARGIN
    parts.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>\n'
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>\n'
    )
    # diagonal birth == death
    parts.append(
        f'<line x1="{_fmt(sx(0))}" y1="{_fmt(sy(0))}" '
        f'x2="{_fmt(sx(vmax))}" y2="{_fmt(sy(vmax))}" stroke="#999999"/>\n'
    )
    iy = _fmt(sy(inf_y_value))
    parts.append(
        f'<line x1="{x0}" y1="{iy}" x2="{x1}" y2="{iy}" stroke="#555555" '
        f'stroke-dasharray="6,4" class="infinite-line"/>\n'
        f'<text x="{x0 - 26}" y="{float(iy) + 4:.2f}" font-size="13" '
        f'font-family="sans-serif">inf</text>\n'
    )
    for label, pos in (("0", sx(0)), (f"{vmax:.3g}", sx(vmax))):
        parts.append(
            f'<text x="{_fmt(pos)}" y="{y0 + 18}" font-size="12" '
            f'font-family="sans-serif" text-anchor="middle">{label}</text>\n'
        )
    parts.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{_SIZE - 12}" font-size="13" '
        f'font-family="sans-serif" text-anchor="middle">birth</text>\n'
        f'<text x="14" y="{(y0 + y1) / 2:.2f}" font-size="13" '
        f'font-family="sans-serif" text-anchor="middle" '
        f'transform="rotate(-90 14 {(y0 + y1) / 2:.2f})">death</text>\n'
    )
    for f in sorted(diagram.features, key=lambda f: f.sort_key()):
        y = inf_y_value if f.is_infinite else f.death
        cx, cy = sx(f.birth), sy(y)
        if f.dimension == 0:
            parts.append(
                f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" fill="#e87ea1" '
                f'class="h0"/>\n'
            )
        else:
            parts.append(
                f'<rect x="{_fmt(cx - 3.5)}" y="{_fmt(cy - 3.5)}" width="7" '
                f'height="7" fill="#22356e" class="h1"/>\n'
            )
    parts.append("</svg>\n")
    with open(path, "w") as f:
        f.write("".join(parts))


def _leaf_order(dendrogram: Dendrogram) -> list[int]:
    """Left-to-right leaf order from a depth-first walk of the merge tree."""
    n = dendrogram.n_leaves
    children = {n + i: (a, b) for i, (a, b, _, _) in enumerate(dendrogram.merges)}
    merged = {a for a, _, _, _ in dendrogram.merges} | {
        b for _, b, _, _ in dendrogram.merges
    }
    roots = [c for c in list(range(n)) + sorted(children) if c not in merged]
    order = []
    stack = list(reversed(roots))
    while stack:
        c = stack.pop()
        if c < n:
            order.append(c)
        else:
            a, b = children[c]
            stack.append(b)
            stack.append(a)
    return order


def render_dendrogram_svg(dendrogram: Dendrogram, path) -> None:
    """Write a merge tree as an SVG file: one bracket per merge."""
    n = dendrogram.n_leaves
    order = _leaf_order(dendrogram)
    slot = {leaf: i for i, leaf in enumerate(order)}
    hmax = max([h for _, _, h, _ in dendrogram.merges] + [1.0])

    width = max(_SIZE, 40 * n + 2 * _MARGIN)
    span_x = width - 2 * _MARGIN
    span_y = _SIZE - 2 * _MARGIN

    def sx(pos: float) -> float:
        return _MARGIN + span_x * (pos + 0.5) / n

    def sy(h: float) -> float:
        return _SIZE - _MARGIN - span_y * h / (hmax * 1.05)

    xpos = {i: float(slot[i]) for i in range(n)}
    top = {i: 0.0 for i in range(n)}
    parts = [_svg_header(width, _SIZE)]
    for leaf in range(n):
        parts.append(
            f'<text x="{_fmt(sx(xpos[leaf]))}" y="{_SIZE - _MARGIN + 16}" '
            f'font-size="11" font-family="sans-serif" '
            f'text-anchor="middle">{leaf}</text>\n'
        )
    for i, (a, b, h, _) in enumerate(dendrogram.merges):
        xa, xb = xpos[a], xpos[b]
        parts.append(
            f'<line x1="{_fmt(sx(xa))}" y1="{_fmt(sy(top[a]))}" '
            f'x2="{_fmt(sx(xa))}" y2="{_fmt(sy(h))}" stroke="black" class="merge"/>\n'
            f'<line x1="{_fmt(sx(xb))}" y1="{_fmt(sy(top[b]))}" '
            f'x2="{_fmt(sx(xb))}" y2="{_fmt(sy(h))}" stroke="black"/>\n'
            f'<line x1="{_fmt(sx(xa))}" y1="{_fmt(sy(h))}" '
            f'x2="{_fmt(sx(xb))}" y2="{_fmt(sy(h))}" stroke="black"/>\n'
        )
        xpos[n + i] = (xa + xb) / 2
        top[n + i] = h
    parts.append(
        f'<text x="14" y="{(2 * _MARGIN + span_y) / 2:.2f}" font-size="13" '
        f'font-family="sans-serif" text-anchor="middle" '
        f'transform="rotate(-90 14 {(2 * _MARGIN + span_y) / 2:.2f})">height</text>\n'
    )
    parts.append("</svg>\n")
    with open(path, "w") as f:
        f.write("".join(parts))
