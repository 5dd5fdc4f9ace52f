"""JSON documents for evaluation and Monte-Carlo results (schema version 1)."""

from __future__ import annotations

import json
import math
from dataclasses import replace

from ..testbench import EvaluationResult, MonteCarloResult

SCHEMA_VERSION = "1"


def _num(value):
    if value is None:
        return None
    value = float(value)
    return None if math.isnan(value) else value


def result_dict(result: EvaluationResult) -> dict:
    predicted = {"test": [_num(v) for v in result.test]}
    for r in result.rows:
        if r.ok:
            predicted[r.method] = [_num(v) for v in r.forecast]
    return {
        "error_table": {m: {k: _num(v) for k, v in cells.items()}
                        for m, cells in result.error_table.items()},
        "predicted": predicted,
        "errors": result.failures,
    }


def mc_dict(mc: MonteCarloResult) -> dict:
    doc = {
        "metric": mc.metric,
        "size": mc.size,
        "iterations": len(mc.rows),
        "rows": [{"start": r.start, "values": {m: _num(v) for m, v in r.values.items()}}
                 for r in mc.rows],
        "mean": {m: _num(v) for m, v in mc.mean.items()},
        "missing": mc.missing,
    }
    if mc.results is not None:
        doc["forecasts"] = [result_dict(r) for r in mc.results]
    return doc


def to_document(obj: EvaluationResult | MonteCarloResult, timing: bool = True) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "config": obj.config.echo()}
    if isinstance(obj, MonteCarloResult):
        if not timing and obj.results is not None:
            obj = replace(obj, results=tuple(r.without_timing() for r in obj.results))
        doc["monte_carlo"] = mc_dict(obj)
    else:
        doc.update(result_dict(obj if timing else obj.without_timing()))
    return doc


def to_json(obj: EvaluationResult | MonteCarloResult, timing: bool = True) -> str:
    """Serialize at full float precision; ``timing=False`` zeroes exec_time."""
    return json.dumps(to_document(obj, timing), indent=2, allow_nan=False) + "\n"
