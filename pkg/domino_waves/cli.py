"""Command line for domino wave speed computations."""
from __future__ import annotations

import argparse
import csv
from dataclasses import asdict, dataclass
import io
import json
import logging
import math
import sys
from typing import Any, Callable, Optional

import numpy as np
import voluptuous as vol

from . import (
    DEFAULT_FORMAT,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    FORMATS,
    REGIMES,
    RunConfig,
    build_run_config,
)
from .constants import ColumnNames
from .domino_wave_api import (
    CollisionAngle,
    CurveRow,
    InvalidParameterError,
    NumericalError,
    collision_factors,
    compare_asymptotic,
    limiting_solution,
    scaling_G,
    simulate_chain,
    wave_modulus,
)
from .domino_wave_api.__version__ import __version__

_LOGGER = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 15


@dataclass
class Table:
    """Rows produced by a command, ready to be rendered."""

    command: str
    rows: list[dict[str, Any]]
    with_speed: bool = False
    summary: Optional[dict[str, Any]] = None


def cmd_speed(config: RunConfig) -> Table:
    """Compute the limiting wave of one geometry."""
    solution = limiting_solution(config.geometry)
    row = asdict(solution)
    del row["complementary_modulus"]
    return Table("speed", [row])


def cmd_curve(config: RunConfig) -> Table:
    """Sample G(d/l) on an evenly spaced, inclusive grid."""
    with_speed = config.length is not None
    rows: list[dict[str, Any]] = []
    for sample in np.linspace(config.sweep_min, config.sweep_max, config.samples):
        x = float(sample)
        angle = CollisionAngle.from_ratio(x)
        k, _ = wave_modulus(angle)
        g_value = scaling_G(x)
        speed = math.sqrt(config.gravity * config.length) * g_value if with_speed else None
        row = CurveRow(x, angle.beta1, collision_factors(angle).f_plus, k, g_value, speed)
        record = asdict(row)
        if not with_speed:
            del record["v"]
        rows.append(record)
    return Table("curve", rows, with_speed=with_speed)


def cmd_simulate(config: RunConfig) -> Table:
    """Simulate the chain rod by rod."""
    result = simulate_chain(
        config.geometry,
        config.omega_1,
        config.max_rods,
        config.tol,
        stop_on_convergence=config.stop_on_convergence,
    )
    summary = {
        "converged_at": result.converged_at,
        "limiting_speed_estimate": result.limiting_speed_estimate,
        "closed_form_speed": result.closed_form_speed,
    }
    return Table("simulate", [asdict(rod) for rod in result.rods], summary=summary)


def cmd_asymptotics(config: RunConfig) -> Table:
    """Compare the exact G with one asymptotic law."""
    rows: list[dict[str, Any]] = []
    for x in config.points:
        comparison = compare_asymptotic(x, config.regime)
        record = asdict(comparison)
        del record["regime"]
        rows.append(record)
    return Table("asymptotics", rows)


COMMAND_HANDLERS: dict[str, Callable[[RunConfig], Table]] = {
    "speed": cmd_speed,
    "curve": cmd_curve,
    "simulate": cmd_simulate,
    "asymptotics": cmd_asymptotics,
}


def _format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, f".{SIGNIFICANT_DIGITS}g")
    return str(value)


def render_csv(table: Table) -> str:
    """Render a table as CSV with a header line."""
    columns = ColumnNames().get_columns(table.command, table.with_speed)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([header for _, header in columns])
    for row in table.rows:
        writer.writerow([_format_value(row[name]) for name, _ in columns])
    if table.summary is not None:
        buffer.write("# " + ",".join(table.summary) + "\n")
        buffer.write("# " + ",".join(_format_value(v) for v in table.summary.values()) + "\n")
    return buffer.getvalue()


def render_json(table: Table, config: RunConfig) -> str:
    """Render a table as one JSON object with rows and meta."""
    meta: dict[str, Any] = {
        "command": table.command,
        "parameters": config.parameters,
        "version": __version__,
    }
    if table.summary is not None:
        meta["summary"] = table.summary
    return json.dumps({"rows": table.rows, "meta": meta}, indent=2) + "\n"


def write_output(table: Table, config: RunConfig) -> None:
    """Send the rendered table to --out or standard output."""
    if config.output_format == "json":
        text = render_json(table, config)
    else:
        text = render_csv(table)
    if config.out is None:
        sys.stdout.write(text)
        return
    with open(config.out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    _LOGGER.debug("Wrote %s rows to %s", len(table.rows), config.out)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per computation."""
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT)
    output.add_argument("--out", help="output file (default: standard output)")
    output.add_argument("--debug", action="store_true", default=None)

    geometry = argparse.ArgumentParser(add_help=False)
    geometry.add_argument("--length", type=float, help="rod length l (m)")
    geometry.add_argument("--spacing", type=float, help="spacing d between rods (m)")
    geometry.add_argument("--gravity", type=float, help="gravitational acceleration g (m/s^2)")
    geometry.add_argument("--mass", type=float, help="point mass m (kg), default 1")

    parser = argparse.ArgumentParser(
        prog="domino-waves",
        description="Speed of the falling-domino wave on an idealized rod chain.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    subparsers.add_parser(
        "speed", parents=[output, geometry], help="limiting wave speed of one geometry"
    )

    curve = subparsers.add_parser("curve", parents=[output], help="sample G(d/l)")
    curve.add_argument("--min", type=float, help="smallest d/l")
    curve.add_argument("--max", type=float, help="largest d/l")
    curve.add_argument("--samples", type=int, help="number of evenly spaced samples")
    curve.add_argument("--length", type=float, help="rod length l, adds a v column")
    curve.add_argument("--gravity", type=float, help="gravity g, adds a v column")

    simulate = subparsers.add_parser(
        "simulate", parents=[output, geometry], help="rod-by-rod simulation"
    )
    simulate.add_argument("--omega1", type=float, help="push on the first rod (rad/s)")
    simulate.add_argument("--max-rods", type=int, help="stop after this many rods")
    simulate.add_argument("--tol", type=float, help="relative convergence tolerance on v_k")
    simulate.add_argument(
        "--run-through",
        action="store_true",
        default=None,
        help="keep going to --max-rods after convergence",
    )

    asymptotics = subparsers.add_parser(
        "asymptotics", parents=[output], help="exact G against an asymptotic law"
    )
    asymptotics.add_argument("--regime", choices=list(REGIMES), required=True)
    asymptotics.add_argument("--points", type=float, nargs="+", help="d/l values")
    asymptotics.add_argument(
        "--gaps", type=float, nargs="+", help="wide regime only: 1 - d/l values"
    )
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """Run the command line."""
    parser = build_parser()
    args = parser.parse_args(argv)
    raw = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key != "command"
    }

    package_logger = logging.getLogger(__package__)
    handler = logging.StreamHandler()
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if args.debug else logging.WARNING)
    try:
        config = build_run_config(args.command, raw)
        write_output(COMMAND_HANDLERS[args.command](config), config)
    except (vol.Invalid, InvalidParameterError) as err:
        _LOGGER.error("%s %s: error: %s", parser.prog, args.command, err)
        parser.exit(EXIT_USAGE)
    except NumericalError as err:
        _LOGGER.error("%s %s: numerical failure: %s", parser.prog, args.command, err)
        parser.exit(EXIT_NUMERICAL)
    finally:
        package_logger.removeHandler(handler)
    return EXIT_OK
