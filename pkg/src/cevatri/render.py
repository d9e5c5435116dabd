"""Deterministic SVG drawings of a triangle and some of its Ceva triangles."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .ceva import apply
from .extgroup import ext
from .geom_oracle import PlanarTriangle, embed
from .triangle import Triangle

__all__ = ["render_svg"]

_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return "%.12g" % (float(v) + 0.0)  # no "-0"


def _polygon(P: PlanarTriangle, stroke: str, width: str) -> str:
    pts = " ".join(f"{_fmt(p[0])},{_fmt(-p[1])}" for p in (P.A, P.B, P.C))
    return f'<polygon points="{pts}" fill="none" stroke="{stroke}" stroke-width="{width}"/>'


def _label(x: float, y: float, text: str, size: str, color: str) -> str:
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(-y)}" font-size="{size}" fill="{color}" '
        f'font-family="sans-serif">{escape(text)}</text>'
    )


def render_svg(T: Triangle, rhos=()) -> str:
    """SVG 1.1 document: T plus C_rho(T) for each rho, centred on T's centroid.

    The view box is T's bounding box with a 10% margin; y is flipped so the
    picture has the usual mathematical orientation.
    """
    base = embed(T)
    xs = [p[0] for p in (base.A, base.B, base.C)]
    ys = [p[1] for p in (base.A, base.B, base.C)]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    mx, my = 0.1 * w, 0.1 * h
    x0, y0 = min(xs) - mx, -(max(ys) + my)
    vw, vh = w + 2 * mx, h + 2 * my
    stroke = _fmt(0.004 * max(vw, vh))
    font = _fmt(0.035 * max(vw, vh))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(vw)} {_fmt(vh)}">',
        _polygon(base, "#000000", stroke),
    ]
    for name, p in zip("ABC", (base.A, base.B, base.C)):
        out.append(_label(p[0], p[1], name, font, "#000000"))

    centre = base.centroid
    for i, rho in enumerate(rhos):
        rho = ext(rho)
        color = _COLORS[i % len(_COLORS)]
        P = embed(apply(T, rho))
        P = P.translated(centre - P.centroid)
        out.append(_polygon(P, color, stroke))
        out.append(_label(P.A[0], P.A[1], f"C_{rho}", font, color))
    out.append("</svg>")
    return "\n".join(out) + "\n"
