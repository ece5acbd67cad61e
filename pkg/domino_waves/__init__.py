"""Command-line front end for domino wave speed computations."""
from __future__ import annotations

from dataclasses import dataclass, field
import logging
from typing import Any, Optional

import voluptuous as vol

from .domino_wave_api import AsymptoticRegime, ChainGeometry
from .domino_wave_api.const import DEFAULT_CONVERGENCE_TOL

_LOGGER = logging.getLogger(__name__)

CONF_LENGTH = "length"
CONF_SPACING = "spacing"
CONF_GRAVITY = "gravity"
CONF_MASS = "mass"
CONF_MIN = "min"
CONF_MAX = "max"
CONF_SAMPLES = "samples"
CONF_OMEGA1 = "omega1"
CONF_MAX_RODS = "max_rods"
CONF_TOL = "tol"
CONF_RUN_THROUGH = "run_through"
CONF_REGIME = "regime"
CONF_POINTS = "points"
CONF_GAPS = "gaps"
CONF_FORMAT = "format"
CONF_OUT = "out"
CONF_DEBUG = "debug"

DEFAULT_MASS = 1.0
DEFAULT_FORMAT = "csv"
DEFAULT_MIN = 0.05
DEFAULT_MAX = 0.95
DEFAULT_SAMPLES = 19
DEFAULT_MAX_RODS = 1000
DEFAULT_TOL = DEFAULT_CONVERGENCE_TOL
DEFAULT_CLOSE_POINTS = (0.1, 0.01, 0.001)
DEFAULT_WIDE_GAPS = (1e-4, 1e-6, 1e-8)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

FORMATS = ("csv", "json")
REGIMES = {"close": AsymptoticRegime.CLOSE, "wide": AsymptoticRegime.WIDE}

POSITIVE = vol.All(vol.Coerce(float), vol.Range(min=0, min_included=False))
OPEN_RATIO = vol.All(
    vol.Coerce(float), vol.Range(min=0, max=1, min_included=False, max_included=False)
)

OUTPUT_SCHEMA = {
    vol.Optional(CONF_FORMAT, default=DEFAULT_FORMAT): vol.In(FORMATS),
    vol.Optional(CONF_OUT): str,
    vol.Optional(CONF_DEBUG, default=False): bool,
}

GEOMETRY_SCHEMA = {
    vol.Required(CONF_LENGTH): POSITIVE,
    vol.Required(CONF_SPACING): POSITIVE,
    vol.Required(CONF_GRAVITY): POSITIVE,
    vol.Optional(CONF_MASS, default=DEFAULT_MASS): POSITIVE,
}


def _check_sweep(config: dict[str, Any]) -> dict[str, Any]:
    """Require min < max and physical units given together."""
    if config[CONF_MIN] >= config[CONF_MAX]:
        raise vol.Invalid(
            f"sweep needs min < max, got min={config[CONF_MIN]} max={config[CONF_MAX]}"
        )
    if (CONF_LENGTH in config) != (CONF_GRAVITY in config):
        raise vol.Invalid("length and gravity must be given together to add a v column")
    return config


def _check_points(config: dict[str, Any]) -> dict[str, Any]:
    """Only the wide regime takes points as gaps 1 - x."""
    if CONF_GAPS in config and config[CONF_REGIME] != "wide":
        raise vol.Invalid("gaps apply to the wide regime only; use points instead")
    return config


SPEED_SCHEMA = vol.Schema({**OUTPUT_SCHEMA, **GEOMETRY_SCHEMA}, extra=vol.REMOVE_EXTRA)

CURVE_SCHEMA = vol.All(
    vol.Schema(
        {
            **OUTPUT_SCHEMA,
            vol.Optional(CONF_MIN, default=DEFAULT_MIN): OPEN_RATIO,
            vol.Optional(CONF_MAX, default=DEFAULT_MAX): OPEN_RATIO,
            vol.Optional(CONF_SAMPLES, default=DEFAULT_SAMPLES): vol.All(
                vol.Coerce(int), vol.Range(min=2)
            ),
            vol.Optional(CONF_LENGTH): POSITIVE,
            vol.Optional(CONF_GRAVITY): POSITIVE,
        },
        extra=vol.REMOVE_EXTRA,
    ),
    _check_sweep,
)

SIMULATE_SCHEMA = vol.Schema(
    {
        **OUTPUT_SCHEMA,
        **GEOMETRY_SCHEMA,
        # omega1 <= 0 is left to the simulator, which explains the equilibrium
        vol.Required(CONF_OMEGA1): vol.Coerce(float),
        vol.Optional(CONF_MAX_RODS, default=DEFAULT_MAX_RODS): vol.All(
            vol.Coerce(int), vol.Range(min=1)
        ),
        vol.Optional(CONF_TOL, default=DEFAULT_TOL): POSITIVE,
        vol.Optional(CONF_RUN_THROUGH, default=False): bool,
    },
    extra=vol.REMOVE_EXTRA,
)

ASYMPTOTICS_SCHEMA = vol.All(
    vol.Schema(
        {
            **OUTPUT_SCHEMA,
            vol.Required(CONF_REGIME): vol.In(list(REGIMES)),
            vol.Exclusive(CONF_POINTS, "sample_points"): [OPEN_RATIO],
            vol.Exclusive(CONF_GAPS, "sample_points"): [OPEN_RATIO],
        },
        extra=vol.REMOVE_EXTRA,
    ),
    _check_points,
)

COMMAND_SCHEMAS = {
    "speed": SPEED_SCHEMA,
    "curve": CURVE_SCHEMA,
    "simulate": SIMULATE_SCHEMA,
    "asymptotics": ASYMPTOTICS_SCHEMA,
}


@dataclass
class RunConfig:
    """Define one validated CLI invocation."""

    command: str
    output_format: str = DEFAULT_FORMAT
    out: Optional[str] = None
    geometry: Optional[ChainGeometry] = None
    sweep_min: float = DEFAULT_MIN
    sweep_max: float = DEFAULT_MAX
    samples: int = DEFAULT_SAMPLES
    length: Optional[float] = None
    gravity: Optional[float] = None
    omega_1: Optional[float] = None
    max_rods: int = DEFAULT_MAX_RODS
    tol: float = DEFAULT_TOL
    stop_on_convergence: bool = True
    regime: Optional[AsymptoticRegime] = None
    points: tuple[float, ...] = ()
    parameters: dict[str, Any] = field(default_factory=dict)


def build_run_config(command: str, raw: dict[str, Any]) -> RunConfig:
    """Validate raw flag values for a command and build its RunConfig.

    Raises ``vol.Invalid`` on bad flags and ``GeometryError`` on a degenerate chain.
    """
    data: dict[str, Any] = COMMAND_SCHEMAS[command](raw)
    _LOGGER.debug("Validated %s configuration: %s", command, data)

    config = RunConfig(
        command=command,
        output_format=data[CONF_FORMAT],
        out=data.get(CONF_OUT),
        parameters={
            key: data[key] for key in sorted(data) if key not in (CONF_OUT, CONF_DEBUG)
        },
    )
    if CONF_SPACING in data:
        config.geometry = ChainGeometry(
            data[CONF_LENGTH], data[CONF_SPACING], data[CONF_GRAVITY], data[CONF_MASS]
        )
    if command == "curve":
        config.sweep_min = data[CONF_MIN]
        config.sweep_max = data[CONF_MAX]
        config.samples = data[CONF_SAMPLES]
        config.length = data.get(CONF_LENGTH)
        config.gravity = data.get(CONF_GRAVITY)
    elif command == "simulate":
        config.omega_1 = data[CONF_OMEGA1]
        config.max_rods = data[CONF_MAX_RODS]
        config.tol = data[CONF_TOL]
        config.stop_on_convergence = not data[CONF_RUN_THROUGH]
    elif command == "asymptotics":
        config.regime = REGIMES[data[CONF_REGIME]]
        if CONF_POINTS in data:
            config.points = tuple(data[CONF_POINTS])
        elif CONF_GAPS in data:
            config.points = tuple(1.0 - gap for gap in data[CONF_GAPS])
        elif config.regime is AsymptoticRegime.WIDE:
            config.points = tuple(1.0 - gap for gap in DEFAULT_WIDE_GAPS)
        else:
            config.points = DEFAULT_CLOSE_POINTS
    return config
