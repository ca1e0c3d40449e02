"""Command-line scenario runner.

Usage::

    djcm run --config scenario.cfg --out series.csv
    djcm run --config scenario.cfg --out figdata/ --figure 2
    djcm run --config scenario.cfg --out series.csv --oracle-check

Exit codes: 0 on success, 1 on configuration errors, 2 on numerical
tolerance failures (truncation, oracle mismatch, non-convergence).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .errors import ConfigError, NumericalToleranceError
from .scenario import emit_figure_data, load_config, run_figure_sweep, run_scenario


class _Parser(argparse.ArgumentParser):
    # usage errors are configuration errors under this tool's exit contract
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="djcm",
        description="Time sweeps of entanglement and field statistics for two "
        "driven three-level atoms in a cavity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run a scenario described by a config file")
    run.add_argument("--config", required=True, type=Path, help="scenario config file")
    run.add_argument(
        "--out",
        required=True,
        type=Path,
        help="output CSV path (or directory in --figure mode)",
    )
    run.add_argument(
        "--figure",
        type=int,
        choices=(2, 3, 4, 5),
        help="emit the nine per-(configuration, gamma) data files of this figure",
    )
    run.add_argument(
        "--oracle-check",
        action="store_true",
        help="also integrate a reduced-size oracle and verify the closed forms",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
    except OSError as exc:
        print(f"djcm: config error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"djcm: config error: {exc}", file=sys.stderr)
        return 1
    if args.oracle_check:
        cfg = replace(cfg, oracle_check=True)
    try:
        if args.figure is not None:
            series = run_figure_sweep(cfg, args.figure)
            paths = emit_figure_data(series, args.figure, args.out)
            print(f"wrote {len(paths)} files to {args.out}")
        else:
            samples, summary = run_scenario(cfg, out_path=args.out)
            line = f"wrote {summary['rows']} rows to {args.out} (n_max={summary['n_max']})"
            if "oracle_deviation" in summary:
                line += f"; oracle deviation {summary['oracle_deviation']:.3e}"
            print(line)
    except NumericalToleranceError as exc:
        print(f"djcm: numerical failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
