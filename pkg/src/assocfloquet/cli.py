"""Command-line front end.

::

    assocfloquet analyze  -c run.json [--json report.json]
    assocfloquet simulate -c run.json [-m BLOCKS] -o trajectory.csv
    assocfloquet plot     -c run.json [-m BLOCKS] -o values.svg

Exit codes: 0 ok, 2 invalid input, 3 internal consistency or spectral
failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import errors
from .config import RunConfig, load_config
from .dynamics import run_blocks
from .floquet import asymptotic_report
from .output import dumps, report_document, write_report, write_trajectory
from .svgplot import render_svg, write_svg

EXIT_OK, EXIT_INVALID, EXIT_INTERNAL, EXIT_IO = 0, 2, 3, 4


def _blocks(args, config: RunConfig) -> int:
    if args.blocks is None:
        return config.blocks
    if args.blocks < 0:
        raise errors.ConfigError(f"-m/--blocks must be >= 0, got {args.blocks}")
    return args.blocks


def cmd_analyze(args) -> int:
    config = load_config(args.config)
    report = asymptotic_report(config.problem, config.thresholds)
    if args.json:
        write_report(report, args.json)
        values = ", ".join(f"{s}={v:.6g}" for s, v in zip(config.problem.stimuli, report.asymptotic_values))
        print(f"asymptotic values: {values}; solved: {str(report.solved.strict).lower()}")
    else:
        sys.stdout.write(dumps(report_document(report)))
    return EXIT_OK


def cmd_simulate(args) -> int:
    config = load_config(args.config)
    traj = run_blocks(config.problem, config.w0, _blocks(args, config))
    write_trajectory(traj, args.output)
    return EXIT_OK


def cmd_plot(args) -> int:
    config = load_config(args.config)
    report = asymptotic_report(config.problem, config.thresholds)
    traj = run_blocks(config.problem, config.w0, _blocks(args, config))
    title = f"Associative values ({config.label})"
    write_svg(render_svg(traj, config.problem.lam, report.asymptotic_values, title), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocfloquet",
        description="Asymptotic associative values under periodic discrimination training.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="closed-form asymptotic analysis")
    p.add_argument("-c", "--config", required=True)
    p.add_argument("--json", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    for name, func, what in (("simulate", cmd_simulate, "CSV trajectory"),
                             ("plot", cmd_plot, "SVG chart")):
        p = sub.add_parser(name, help=f"simulate block by block and write a {what}")
        p.add_argument("-c", "--config", required=True)
        p.add_argument("-m", "--blocks", type=int, help="number of blocks (default: config 'blocks')")
        p.add_argument("-o", "--output", required=True)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.ValidationError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except errors.AnalysisError as exc:
        print(f"internal error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
