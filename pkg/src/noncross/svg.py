"""Standalone SVG 1.1 rendering of point sets and overlaid structures.

Write-only output for inspecting results: the point set as labelled dots,
optionally one structure on top (an open polyline for a path, a closed
polygon for a cycle).  Coordinates are emitted as exact integers in a
y-flipped frame, so output bytes are deterministic.
"""

from __future__ import annotations

from typing import Sequence

from .geom import PointSet


def render_svg(s: PointSet, overlay: Sequence[int] | None = None,
               overlay_kind: str = "path") -> str:
    if s.n == 0:
        raise ValueError("cannot render an empty point set")
    if overlay is not None:
        for i in overlay:
            s.check_index(i, "overlay index")
        if overlay_kind not in ("path", "polygon"):
            raise ValueError(f"unknown overlay kind {overlay_kind!r}")
    xs = [p.x for p in s.points]
    ys = [p.y for p in s.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    margin = max(1, span // 8)
    # y is flipped so larger y draws higher, as on paper.
    def tx(x: int) -> int:
        return x - min(xs) + margin

    def ty(y: int) -> int:
        return max(ys) - y + margin

    width = max(xs) - min(xs) + 2 * margin
    height = max(ys) - min(ys) + 2 * margin
    r = max(1, span // 60)
    stroke = max(1, span // 120)
    font = max(2, span // 20)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if overlay:
        coords = " ".join(f"{tx(s.points[i].x)},{ty(s.points[i].y)}" for i in overlay)
        tag = "polygon" if overlay_kind == "polygon" else "polyline"
        parts.append(
            f'<{tag} points="{coords}" fill="none" stroke="#1f77b4" '
            f'stroke-width="{stroke}" stroke-linejoin="round"/>'
        )
    for i, p in enumerate(s.points):
        parts.append(
            f'<circle cx="{tx(p.x)}" cy="{ty(p.y)}" r="{r}" fill="#d62728"/>'
        )
        parts.append(
            f'<text x="{tx(p.x) + r}" y="{ty(p.y) - r}" '
            f'font-size="{font}" fill="#444">{i}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
