"""Dependency-free SVG charts.

Output is a pure function of the input: fixed palette, fixed layout, and
coordinates printed with two decimals, so equal results give equal bytes.
Each plotted series is a ``<polyline class="series ...">``; each method has
one ``<g class="legend-entry">``.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape, quoteattr

from ..testbench import EvaluationResult, MonteCarloResult
from .table import fmt

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)
TEST_COLOR = "#000000"
FONT = 'font-family="sans-serif"'


def color(i: int) -> str:
    return PALETTE[i % len(PALETTE)]


class _Doc:
    def __init__(self, width: int, height: int, title: str):
        self.width, self.height = width, height
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f"<title>{escape(title)}</title>",
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        ]

    def add(self, text: str) -> None:
        self.parts.append(text)

    def text(self, x, y, s, size=12, anchor="start", extra="") -> None:
        self.add(f'<text x="{x:.2f}" y="{y:.2f}" font-size="{size}" {FONT} '
                 f'text-anchor="{anchor}"{extra}>{escape(str(s))}</text>')

    def polyline(self, points, stroke, cls, width=1.5, label=None, dash=None) -> None:
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        attrs = f' data-label={quoteattr(label)}' if label is not None else ""
        if dash:
            attrs += f' stroke-dasharray="{dash}"'
        self.add(f'<polyline class="{cls}" points="{pts}" fill="none" stroke="{stroke}" '
                 f'stroke-width="{width}"{attrs}/>')

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _legend(doc: _Doc, x: float, y: float, entries) -> None:
    """``entries`` are (label, color) pairs; only methods go in the legend."""
    doc.add('<g class="legend">')
    for i, (label, col) in enumerate(entries):
        yy = y + 18 * i
        doc.add(f'<g class="legend-entry" data-label={quoteattr(label)}>')
        doc.add(f'<rect x="{x:.2f}" y="{yy - 10:.2f}" width="12" height="12" fill="{col}"/>')
        doc.text(x + 18, yy, label, size=12)
        doc.add("</g>")
    doc.add("</g>")


def _scale(lo: float, hi: float, a: float, b: float):
    if hi == lo:
        mid = (a + b) / 2
        return lambda v: mid
    return lambda v: a + (v - lo) * (b - a) / (hi - lo)


def _legend_entries(result: EvaluationResult):
    entries = []
    for i, r in enumerate(result.rows):
        entries.append((r.method if r.ok else f"{r.method} (failed)", color(i)))
    return entries


def render_comparison_chart(result: EvaluationResult) -> str:
    """Bar panels of every error column per method, above a forecast line panel."""
    columns = list(result.columns)
    ok_rows = [(i, r) for i, r in enumerate(result.rows) if r.ok]
    panel_w, panel_h, gap = 150, 160, 20
    left, top = 50, 40
    bars_w = len(columns) * (panel_w + gap)
    width = max(left + bars_w + 180, 760)
    line_top = top + panel_h + 70
    line_h, line_w = 260, bars_w - gap
    height = line_top + line_h + 60
    doc = _Doc(width, height, f"Forecast comparison: {result.config.series.name}")

    doc.text(left, 22, "Forecast errors", size=14)
    for c, column in enumerate(columns):
        x0 = left + c * (panel_w + gap)
        values = [r.exec_time if column == "exec_time" else r.metrics[column] for _, r in ok_rows]
        finite = [v for v in values if not math.isnan(v)]
        vmax = max(finite) if finite and max(finite) > 0 else 1.0
        doc.add(f'<g class="bar-panel" data-column={quoteattr(column)}>')
        doc.add(f'<rect x="{x0}" y="{top}" width="{panel_w}" height="{panel_h}" '
                f'fill="none" stroke="#cccccc"/>')
        doc.text(x0 + panel_w / 2, top + panel_h + 16, column, anchor="middle")
        doc.text(x0 + 2, top - 4, fmt(vmax), size=9)
        n = max(len(ok_rows), 1)
        bw = (panel_w - 10) / n
        for j, ((i, _), v) in enumerate(zip(ok_rows, values)):
            if math.isnan(v):
                continue
            h = panel_h * v / vmax
            doc.add(f'<rect class="bar" x="{x0 + 5 + j * bw:.2f}" y="{top + panel_h - h:.2f}" '
                    f'width="{bw * 0.9:.2f}" height="{h:.2f}" fill="{color(i)}"/>')
        doc.add("</g>")

    # line panel
    series = [result.test] + [r.forecast for _, r in ok_rows]
    allv = [float(v) for s in series for v in s]
    lo, hi = min(allv), max(allv)
    pad = (hi - lo) * 0.05 or 1.0
    nval = len(result.test)
    sx = _scale(1, nval, left, left + line_w) if nval > 1 else (lambda v: left + line_w / 2)
    sy = _scale(lo - pad, hi + pad, line_top + line_h, line_top)
    doc.text(left, line_top - 12, "Forecasted values", size=14)
    doc.add(f'<rect x="{left}" y="{line_top}" width="{line_w}" height="{line_h}" '
            f'fill="none" stroke="#cccccc"/>')
    for k in range(1, nval + 1):
        doc.text(sx(k), line_top + line_h + 14, k, size=9, anchor="middle")
    for v in (lo, hi):
        doc.text(left - 4, sy(v) + 3, fmt(v), size=9, anchor="end")
    for (i, r) in ok_rows:
        doc.polyline([(sx(k + 1), sy(float(v))) for k, v in enumerate(r.forecast)],
                     color(i), "series method", label=r.method)
    doc.polyline([(sx(k + 1), sy(float(v))) for k, v in enumerate(result.test)],
                 TEST_COLOR, "series test", width=3, label="Test values")
    doc.text(left + line_w - 4, line_top + 14, "Test values (bold black)", size=10,
             anchor="end", extra=' class="test-label"')

    _legend(doc, left + bars_w + 10, top + 10, _legend_entries(result))
    return doc.render()


def render_polar_chart(result: EvaluationResult) -> str:
    """Forecast steps around the circle, value as radius (linear from min to max).

    When every value is identical the radial range is degenerate: all series
    sit on one circle and the chart says so.
    """
    ok_rows = [(i, r) for i, r in enumerate(result.rows) if r.ok]
    nval = len(result.test)
    size, radius = 560, 200
    cx, cy = 280, 290
    inner = 0.15 * radius
    doc = _Doc(size + 180, size + 40, f"Polar forecast plot: {result.config.series.name}")
    doc.text(20, 24, "Forecasted values by horizon", size=14)

    allv = [float(v) for v in result.test] + [float(v) for _, r in ok_rows for v in r.forecast]
    lo, hi = min(allv), max(allv)
    degenerate = hi == lo
    if degenerate:
        rad = lambda v: (inner + radius) / 2  # noqa: E731
        doc.add(f'<circle class="degenerate" cx="{cx}" cy="{cy}" r="{rad(lo):.2f}" '
                f'fill="none" stroke="#999999"/>')
        doc.text(cx, cy + radius + 40, f"degenerate range: all values equal {fmt(lo)}",
                 size=11, anchor="middle", extra=' class="annotation"')
    else:
        rad = _scale(lo, hi, inner, radius)
        for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
            v = lo + frac * (hi - lo)
            doc.add(f'<circle class="ring" cx="{cx}" cy="{cy}" r="{rad(v):.2f}" '
                    f'fill="none" stroke="#dddddd"/>')
            doc.text(cx + 3, cy - rad(v) - 2, fmt(v), size=8)

    def angle(step):
        return -math.pi / 2 + 2 * math.pi * (step - 1) / nval

    def point(step, value):
        a, r = angle(step), rad(value)
        return cx + r * math.cos(a), cy + r * math.sin(a)

    for k in range(1, nval + 1):
        a = angle(k)
        doc.add(f'<line class="spoke" x1="{cx}" y1="{cy}" x2="{cx + radius * math.cos(a):.2f}" '
                f'y2="{cy + radius * math.sin(a):.2f}" stroke="#eeeeee"/>')
        doc.text(cx + (radius + 16) * math.cos(a), cy + (radius + 16) * math.sin(a) + 4, k,
                 size=11, anchor="middle", extra=' class="step-label"')

    for i, r in ok_rows:
        doc.polyline([point(k + 1, float(v)) for k, v in enumerate(r.forecast)],
                     color(i), "series method", width=2, label=r.method)
    doc.polyline([point(k + 1, float(v)) for k, v in enumerate(result.test)],
                 TEST_COLOR, "series test", width=3, label="Test values")

    _legend(doc, size + 10, 60, _legend_entries(result))
    doc.text(size + 10, 40, "Test values: bold black", size=10, extra=' class="test-label"')
    return doc.render()


def render_monte_carlo_chart(mc: MonteCarloResult) -> str:
    """Per-iteration metric value for each method, with its mean dashed."""
    methods = list(mc.methods)
    n = len(mc.rows)
    left, top, w, h = 60, 40, 560, 300
    doc = _Doc(w + left + 200, h + top + 70, f"Monte-Carlo {mc.metric}")
    doc.text(left, 24, f"Monte-Carlo {mc.metric} per patch (size {mc.size})", size=14)
    vals = [v for r in mc.rows for v in r.values.values() if v is not None]
    lo, hi = (min(vals), max(vals)) if vals else (0.0, 1.0)
    pad = (hi - lo) * 0.05 or 1.0
    sx = _scale(1, n, left, left + w) if n > 1 else (lambda v: left + w / 2)
    sy = _scale(lo - pad, hi + pad, top + h, top)
    doc.add(f'<rect x="{left}" y="{top}" width="{w}" height="{h}" fill="none" stroke="#cccccc"/>')
    for k, r in enumerate(mc.rows, start=1):
        doc.text(sx(k), top + h + 14, r.start, size=9, anchor="middle")
    doc.text(left + w / 2, top + h + 32, "patch start index", size=10, anchor="middle")
    for v in (lo, hi):
        doc.text(left - 4, sy(v) + 3, fmt(v), size=9, anchor="end")
    for i, m in enumerate(methods):
        pts = [(sx(k), sy(r.values[m])) for k, r in enumerate(mc.rows, start=1)
               if r.values[m] is not None]
        if pts:
            doc.polyline(pts, color(i), "series method", width=1.5, label=m)
        if mc.mean[m] is not None:
            y = sy(mc.mean[m])
            doc.polyline([(left, y), (left + w, y)], color(i), "mean", width=1,
                         label=f"{m} mean", dash="4 3")
    _legend(doc, left + w + 20, top + 10,
            [(f"{m} (mean {fmt(mc.mean[m])})", color(i)) for i, m in enumerate(methods)])
    return doc.render()
