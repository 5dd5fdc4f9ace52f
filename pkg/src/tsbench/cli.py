"""Command-line front end.

    tsbench compare --builtin nottem --methods ar-lite,psf --nval 12 --out report/
    tsbench monte-carlo --builtin nottem --size 144 --iterations 10 --seed 7
    tsbench list methods
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import forecasters, metrics
from .errors import ConfigError, TsBenchError
from .forecasters import ForecasterRegistry, builtin_forecaster
from .report import build_mc_report, build_report
from .strategies import Strategy
from .testbench import EvaluationConfig, evaluate, monte_carlo
from .timeseries import builtin_dataset, builtin_names, load_csv

EXIT_OK, EXIT_CONFIG, EXIT_ALL_FAILED = 0, 1, 2

DEFAULTS = {
    "nval": 12,
    "dval": None,
    "methods": "ar-lite,psf",
    "metrics": "RMSE,MAE,MAPE",
    "strategy": "recursive",
    "seed": 0,
    "out": "report",
    "jobs": 1,
    "cycle": 1,
    "column": None,
    "size": None,
    "iterations": 10,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_CONFIG)


def _csv_list(text) -> list[str]:
    if isinstance(text, (list, tuple)):
        return [str(t) for t in text]
    return [t.strip() for t in str(text).split(",") if t.strip()]


def _add_common(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("data source")
    src.add_argument("--builtin", metavar="NAME", help=f"embedded dataset ({', '.join(builtin_names())})")
    src.add_argument("--data", metavar="PATH", help="CSV file with a header row")
    src.add_argument("--column", metavar="NAME", help="value column in --data")
    src.add_argument("--cycle", type=int, metavar="N", help="observations per season for --data")
    p.add_argument("--nval", type=int, metavar="N", help="values to forecast (default 12)")
    p.add_argument("--dval", type=int, metavar="N", help="trailing window length (default: all)")
    p.add_argument("--methods", metavar="A,B", help="comma-separated method names")
    p.add_argument("--metrics", metavar="A,B", help="comma-separated metric names")
    p.add_argument("--strategy", choices=[s.value for s in Strategy])
    p.add_argument("--seed", type=int)
    p.add_argument("--out", metavar="DIR", help="output directory (default report)")
    p.add_argument("--jobs", type=int, metavar="N", help="parallel workers for methods")
    p.add_argument("--no-timing", action="store_true", help="write exec_time as 0")
    p.add_argument("--config", metavar="PATH", help="JSON run manifest; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tsbench", description="Compare forecasting methods on a hold-out split.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    compare = sub.add_parser("compare", help="evaluate methods on one hold-out split")
    _add_common(compare)

    mc = sub.add_parser("monte-carlo", help="evaluate methods on random patches")
    _add_common(mc)
    mc.add_argument("--size", type=int, metavar="N", help="patch length")
    mc.add_argument("--iterations", type=int, metavar="N", help="number of patches (default 10)")
    mc.add_argument("--forecasts", action="store_true", help="include per-iteration forecasts")
    mc.add_argument("--charts-each", action="store_true", help="write a chart per iteration")

    lst = sub.add_parser("list", help="list built-in methods or metrics")
    lst.add_argument("what", choices=["methods", "metrics"])
    return parser


def _settings(args) -> dict:
    """Resolve defaults < --config file < explicit flags."""
    settings = dict(DEFAULTS)
    settings["builtin"] = settings["data"] = None
    if args.config:
        path = Path(args.config)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from None
        doc = doc.get("config", doc)
        if "builtin" not in doc and "data" not in doc and doc.get("series") in builtin_names():
            doc = {**doc, "builtin": doc["series"]}
        for key in list(settings) + ["builtin", "data"]:
            if key in doc:
                settings[key] = doc[key]
    for key in list(settings):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _series(s: dict):
    if bool(s["builtin"]) == bool(s["data"]):
        raise ConfigError("specify exactly one data source: --builtin NAME or --data PATH")
    if s["builtin"]:
        return builtin_dataset(s["builtin"])
    if not s["column"]:
        raise ConfigError("--data requires --column")
    return load_csv(s["data"], s["column"], int(s["cycle"]))


def _config(s: dict) -> EvaluationConfig:
    seed = int(s["seed"])
    methods = ForecasterRegistry([builtin_forecaster(m, seed) for m in _csv_list(s["methods"])])
    registry = metrics.metrics_from_names(_csv_list(s["metrics"]))
    dval = None if s["dval"] is None else int(s["dval"])
    config = EvaluationConfig(_series(s), int(s["nval"]), dval, registry, methods,
                              Strategy.parse(s["strategy"]), seed)
    config.validate()
    return config


def cmd_compare(args) -> int:
    s = _settings(args)
    config = _config(s)
    result = evaluate(config, jobs=int(s["jobs"]))
    bundle = build_report(result, timing=not args.no_timing)
    bundle.write(s["out"])
    sys.stdout.write(bundle.table_text)
    for name, reason in result.failures.items():
        print(f"error: method {name} failed: {reason}", file=sys.stderr)
    if len(result.failures) == len(result.rows):
        return EXIT_ALL_FAILED
    return EXIT_OK


def cmd_monte_carlo(args) -> int:
    s = _settings(args)
    config = _config(s)
    size = len(config.series) if s["size"] is None else int(s["size"])
    out = Path(s["out"])
    mc = monte_carlo(config, size, int(s["iterations"]), report_forecasts=args.forecasts,
                     report_each=args.charts_each, chart_dir=out / "iterations",
                     jobs=int(s["jobs"]))
    bundle = build_mc_report(mc, timing=not args.no_timing)
    bundle.write(out, table_name="monte_carlo.txt")
    sys.stdout.write(bundle.table_text)
    if all(v is None for v in mc.mean.values()):
        return EXIT_ALL_FAILED
    return EXIT_OK


def cmd_list(args) -> int:
    if args.what == "methods":
        for name in forecasters.BUILTIN_NAMES:
            print(f"{name:<16}{builtin_forecaster(name).description}")
    else:
        for spec in metrics.BUILTIN_METRICS.values():
            print(f"{spec.name:<16}{spec.description}")
    return EXIT_OK


COMMANDS = {"compare": cmd_compare, "monte-carlo": cmd_monte_carlo, "list": cmd_list}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (TsBenchError, FileNotFoundError, ValueError, KeyError) as exc:
        message = str(exc).strip("'\"") or type(exc).__name__
        print(f"error: {message}".replace("\n", " "), file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
