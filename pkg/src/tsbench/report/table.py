from __future__ import annotations

import math

from ..metrics import EXEC_TIME
from ..testbench import EvaluationResult, MonteCarloResult


def fmt(value) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "NA"
    return f"{value:.4f}"


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(widths[i + 1]) for i, c in enumerate(r[1:])]
        # an error row is a single long cell; no padding to the right of it
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_table(result: EvaluationResult) -> str:
    """Error table: one row per method, metric columns then exec_time."""
    columns = list(result.columns)
    rows = [[""] + columns]
    for r in result.rows:
        if r.ok:
            rows.append([r.method] + [fmt(r.metrics[c]) for c in columns if c != EXEC_TIME]
                        + [fmt(r.exec_time)])
        else:
            rows.append([r.method, f"ERROR: {r.error}"])
    return _align(rows)


def render_predicted(result: EvaluationResult) -> str:
    """Forecast table: the test values then each method's forecasts, by step."""
    nval = len(result.test)
    rows = [[""] + [str(i) for i in range(1, nval + 1)]]
    for name, values in result.predicted_table.items():
        rows.append([name] + [fmt(float(v)) for v in values])
    return _align(rows)


def render_report(result: EvaluationResult) -> str:
    return ("Error parameters\n" + render_table(result)
            + "\n\nPredicted values\n" + render_predicted(result) + "\n")


def render_monte_carlo_table(mc: MonteCarloResult) -> str:
    """Rows keyed by patch start index, followed by the Mean row."""
    methods = list(mc.methods)
    rows = [[""] + methods]
    for r in mc.rows:
        rows.append([str(r.start)] + [fmt(r.values[m]) for m in methods])
    rows.append(["Mean"] + [fmt(mc.mean[m]) for m in methods])
    text = f"Monte-Carlo {mc.metric} (size={mc.size}, iterations={len(mc.rows)})\n" + _align(rows)
    missing = {m: n for m, n in mc.missing.items() if n}
    if missing:
        text += "\nmissing: " + ", ".join(f"{m}={n}" for m, n in missing.items())
    return text + "\n"
