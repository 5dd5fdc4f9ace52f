"""Text, JSON and SVG renderings of evaluation results."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..testbench import EvaluationResult, MonteCarloResult
from .jsonio import SCHEMA_VERSION, to_document, to_json
from .svg import render_comparison_chart, render_monte_carlo_chart, render_polar_chart
from .table import (
    render_monte_carlo_table,
    render_predicted,
    render_report,
    render_table,
)


@dataclass(frozen=True)
class ReportBundle:
    table_text: str
    result_json: str
    charts: dict[str, str]

    def write(self, out_dir: str | Path, table_name: str = "table.txt") -> list[Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        files = {table_name: self.table_text, "result.json": self.result_json, **self.charts}
        written = []
        for name, text in files.items():
            path = out / name
            path.write_text(text, encoding="utf-8")
            written.append(path)
        return written


def build_report(result: EvaluationResult, timing: bool = True) -> ReportBundle:
    shown = result if timing else result.without_timing()
    return ReportBundle(
        render_report(shown),
        to_json(shown),
        {"comparison.svg": render_comparison_chart(shown), "polar.svg": render_polar_chart(shown)},
    )


def build_mc_report(mc: MonteCarloResult, timing: bool = True) -> ReportBundle:
    return ReportBundle(render_monte_carlo_table(mc), to_json(mc, timing),
                        {"monte_carlo.svg": render_monte_carlo_chart(mc)})


__all__ = [
    "ReportBundle", "SCHEMA_VERSION", "build_mc_report", "build_report",
    "render_comparison_chart", "render_monte_carlo_chart", "render_monte_carlo_table",
    "render_polar_chart", "render_predicted", "render_report", "render_table",
    "to_document", "to_json",
]
