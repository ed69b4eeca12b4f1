"""SVG figure for 2D instances: the polygon, its Delaunay edges, and the
extremal neighboring circles.

The polygon is scaled into an 800x800 viewBox with a 5% margin; circles
may extend past it.  Styling lives in CSS classes (circle-empty,
circle-full, plus an "ear" emphasis class) so tests can assert structure
instead of pixels.  Rendering is the one place exact values are allowed
to degrade to floats.
"""

from __future__ import annotations

from typing import Sequence

from .delaunay import Triangulation
from .spheres import RidgeSphereCensus, SphereClass

_STYLE = """
    .polygon { fill: none; stroke: #222; stroke-width: 2; }
    .dt-edge { stroke: #888; stroke-width: 1; }
    .circle-empty { fill: none; stroke: #1f77b4; stroke-width: 1.5; }
    .circle-full { fill: none; stroke: #d62728; stroke-width: 1.5; }
    .ear { stroke-dasharray: none; stroke-width: 2.5; }
    .vertex { fill: #222; }
"""

VIEW = 800
MARGIN = 0.05


def render_svg(
    polygon: Sequence,
    dt: Triangulation,
    census: RidgeSphereCensus,
    ear_simplices: Sequence,
) -> str:
    """SVG document with one <circle> per extremal neighboring circle."""
    xs = [float(p[0]) for p in polygon]
    ys = [float(p[1]) for p in polygon]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = VIEW * (1 - 2 * MARGIN) / span
    x0 = min(xs) - MARGIN * VIEW / scale
    y0 = min(ys) - MARGIN * VIEW / scale

    def sx(x):
        return (float(x) - x0) * scale

    def sy(y):
        # SVG y axis points down
        return VIEW - (float(y) - y0) * scale

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}">',
        f"<style>{_STYLE}</style>",
    ]
    pts = " ".join(f"{sx(p[0]):.2f},{sy(p[1]):.2f}" for p in polygon)
    lines.append(f'<polygon class="polygon" points="{pts}"/>')
    drawn = set()
    for simplex in dt.simplices:
        for a, b in ((0, 1), (1, 2), (0, 2)):
            edge = tuple(sorted((simplex[a], simplex[b])))
            if edge in drawn:
                continue
            drawn.add(edge)
            p, q = dt.points[edge[0]], dt.points[edge[1]]
            lines.append(
                f'<line class="dt-edge" x1="{sx(p[0]):.2f}" y1="{sy(p[1]):.2f}"'
                f' x2="{sx(q[0]):.2f}" y2="{sy(q[1]):.2f}"/>'
            )
    ear_sets = {tuple(s) for s in ear_simplices}
    for rec in census.records:
        if rec.sphere_class is SphereClass.NEITHER:
            continue
        cls = "circle-empty" if rec.sphere_class is SphereClass.EMPTY else "circle-full"
        if rec.vertex_ids in ear_sets:
            cls += " ear"
        cx, cy = rec.sphere.center
        r = float(rec.sphere.radius_sq) ** 0.5 * scale
        lines.append(
            f'<circle class="{cls}" cx="{sx(cx):.2f}" cy="{sy(cy):.2f}" r="{r:.2f}"/>'
        )
    for p in polygon:
        lines.append(
            f'<circle class="vertex" cx="{sx(p[0]):.2f}" cy="{sy(p[1]):.2f}" r="3"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
