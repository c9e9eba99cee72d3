"""Standalone SVG line chart of associative values per block."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .dynamics import Trajectory

WIDTH, HEIGHT, MARGIN = 800, 600, 60
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")
SVG_NS = "http://www.w3.org/2000/svg"


def _nice_ticks(lo, hi, count=6):
    span = hi - lo
    raw = span / max(count - 1, 1)
    mag = 10 ** np.floor(np.log10(raw))
    step = min((s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw), default=raw)
    first = np.ceil(lo / step - 1e-9) * step
    return [t for t in np.arange(first, hi + step * 1e-9, step)]


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(traj: Trajectory, lam: float, asymptotes=None, title: str = "Associative values") -> str:
    """Render ``traj.values`` against block index.

    Parameters
    ----------
    traj : Trajectory
    lam : float
        Drawn as a reference line together with 0.
    asymptotes : array_like, optional
        Predicted limit per stimulus, drawn as dashed markers in the series
        colour.
    title : str
    """
    values = np.asarray(traj.values)
    m_max = max(len(values) - 1, 1)
    extra = [0.0, lam] + ([] if asymptotes is None else list(np.asarray(asymptotes, dtype=float)))
    lo = min(float(values.min()), *extra)
    hi = max(float(values.max()), *extra)
    pad = 0.05 * (hi - lo or 1.0)
    lo, hi = lo - pad, hi + pad

    x0, x1 = MARGIN, WIDTH - MARGIN
    y0, y1 = HEIGHT - MARGIN, MARGIN

    def sx(m):
        return x0 + (x1 - x0) * m / m_max

    def sy(v):
        return y0 + (y1 - y0) * (v - lo) / (hi - lo)

    svg = ET.Element("svg", {
        "xmlns": SVG_NS, "width": str(WIDTH), "height": str(HEIGHT),
        "viewBox": f"0 0 {WIDTH} {HEIGHT}", "font-family": "sans-serif", "font-size": "12",
    })
    ET.SubElement(svg, "rect", {"width": str(WIDTH), "height": str(HEIGHT), "fill": "white"})
    ET.SubElement(svg, "text", {"x": str(WIDTH // 2), "y": str(MARGIN // 2),
                                "text-anchor": "middle", "font-size": "16"}).text = title

    axes = ET.SubElement(svg, "g", {"class": "axes", "stroke": "black"})
    ET.SubElement(axes, "line", {"x1": _fmt(x0), "y1": _fmt(y0), "x2": _fmt(x1), "y2": _fmt(y0)})
    ET.SubElement(axes, "line", {"x1": _fmt(x0), "y1": _fmt(y0), "x2": _fmt(x0), "y2": _fmt(y1)})
    labels = ET.SubElement(svg, "g", {"class": "tick-labels", "fill": "black"})
    for t in _nice_ticks(0, m_max):
        ET.SubElement(axes, "line", {"x1": _fmt(sx(t)), "y1": _fmt(y0), "x2": _fmt(sx(t)), "y2": _fmt(y0 + 5)})
        ET.SubElement(labels, "text", {"x": _fmt(sx(t)), "y": _fmt(y0 + 18),
                                       "text-anchor": "middle"}).text = f"{t:g}"
    for t in _nice_ticks(lo, hi):
        ET.SubElement(axes, "line", {"x1": _fmt(x0 - 5), "y1": _fmt(sy(t)), "x2": _fmt(x0), "y2": _fmt(sy(t))})
        ET.SubElement(labels, "text", {"x": _fmt(x0 - 8), "y": _fmt(sy(t) + 4),
                                       "text-anchor": "end"}).text = f"{t:.3g}"
    ET.SubElement(labels, "text", {"x": _fmt((x0 + x1) / 2), "y": str(HEIGHT - 15),
                                   "text-anchor": "middle"}).text = "block"
    ET.SubElement(labels, "text", {"x": "15", "y": _fmt((y0 + y1) / 2), "text-anchor": "middle",
                                   "transform": f"rotate(-90 15 {_fmt((y0 + y1) / 2)})"}
                  ).text = "associative value"

    refs = ET.SubElement(svg, "g", {"class": "references", "stroke": "#999999"})
    for v in (0.0, lam):
        ET.SubElement(refs, "line", {"class": "reference", "data-value": repr(float(v)),
                                     "x1": _fmt(x0), "y1": _fmt(sy(v)), "x2": _fmt(x1), "y2": _fmt(sy(v))})

    colors = [PALETTE[i % len(PALETTE)] for i in range(len(traj.stimuli))]
    if asymptotes is not None:
        marks = ET.SubElement(svg, "g", {"class": "asymptotes", "stroke-dasharray": "6 4"})
        for name, color, v in zip(traj.stimuli, colors, np.asarray(asymptotes, dtype=float)):
            ET.SubElement(marks, "line", {"class": "asymptote", "data-name": name,
                                          "data-value": repr(float(v)), "stroke": color,
                                          "x1": _fmt(x0), "y1": _fmt(sy(v)), "x2": _fmt(x1), "y2": _fmt(sy(v))})

    series = ET.SubElement(svg, "g", {"class": "series-group", "fill": "none", "stroke-width": "2"})
    for j, (name, color) in enumerate(zip(traj.stimuli, colors)):
        points = " ".join(f"{_fmt(sx(m))},{_fmt(sy(v))}" for m, v in enumerate(values[:, j]))
        ET.SubElement(series, "polyline", {"class": "series", "data-name": name,
                                           "stroke": color, "points": points})

    legend = ET.SubElement(svg, "g", {"class": "legend"})
    for j, (name, color) in enumerate(zip(traj.stimuli, colors)):
        y = MARGIN + 10 + 18 * j
        ET.SubElement(legend, "line", {"x1": _fmt(x1 - 90), "y1": _fmt(y), "x2": _fmt(x1 - 70),
                                       "y2": _fmt(y), "stroke": color, "stroke-width": "2"})
        ET.SubElement(legend, "text", {"x": _fmt(x1 - 64), "y": _fmt(y + 4)}).text = name

    return ET.tostring(svg, encoding="unicode", xml_declaration=True) + "\n"


def write_svg(text: str, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
