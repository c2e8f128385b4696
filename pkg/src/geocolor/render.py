"""SVG drawings of colored geometric graphs."""

from __future__ import annotations

import colorsys
import xml.etree.ElementTree as ET

from .errors import MalformedColoring
from .graph import Coloring

# first colors are the usual categorical ones; beyond that, golden-angle hues
BASE_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def palette(color: int) -> str:
    """Stroke color for 1-based ``color``; a pure function of the index."""
    if color < 1:
        raise ValueError(color)
    if color <= len(BASE_PALETTE):
        return BASE_PALETTE[color - 1]
    k = color - len(BASE_PALETTE)
    hue = (k * 0.6180339887498949) % 1.0
    light = (0.35, 0.5, 0.65)[k % 3]
    r, g, b = colorsys.hls_to_rgb(hue, light, 0.75)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def render_svg(c: Coloring, size: int = 800, margin: int = 40) -> str:
    """One ``<line>`` per edge, one labelled ``<circle>`` per vertex."""
    if not c.graph.edges or not c.color_of:
        raise MalformedColoring("nothing to render: empty edge list")
    missing = [e for e in c.graph.edges if e not in c.color_of]
    if missing:
        raise MalformedColoring(f"edge {missing[0]} has no color")
    pts = c.graph.points.points
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (size - 2 * margin) / span

    def at(label: int) -> tuple[str, str]:
        p = pts[label - 1]
        # y grows downwards in SVG
        return f"{margin + (p.x - min(xs)) * scale:.2f}", f"{size - margin - (p.y - min(ys)) * scale:.2f}"

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(size),
        height=str(size),
        viewBox=f"0 0 {size} {size}",
    )
    edges = ET.SubElement(root, "g", id="edges", fill="none")
    edges.set("stroke-width", "2")
    for e in c.graph.edges:
        (x1, y1), (x2, y2) = at(e.i), at(e.j)
        col = c.color_of[e]
        line = ET.SubElement(edges, "line", x1=x1, y1=y1, x2=x2, y2=y2, stroke=palette(col))
        line.set("data-color", str(col))
        line.set("data-edge", f"{e.i}-{e.j}")
    verts = ET.SubElement(root, "g", id="vertices")
    for label in range(1, len(pts) + 1):
        cx, cy = at(label)
        ET.SubElement(verts, "circle", cx=cx, cy=cy, r="9", fill="white", stroke="black")
        text = ET.SubElement(verts, "text", x=cx, y=cy)
        text.set("text-anchor", "middle")
        text.set("dominant-baseline", "central")
        text.set("font-size", "10")
        text.text = str(label)
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"
