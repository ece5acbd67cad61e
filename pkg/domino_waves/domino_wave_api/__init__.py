"""Interface with the domino wave model."""

import logging

from .chain import (  # noqa: F401
    collide,
    collision_angle,
    collision_factors,
    fall_exit_velocity,
    limiting_omega,
    mixed_progression,
    omega_i_at,
    omega_i_sequence,
    progression_increment,
    recurrence_step,
)
from .const import AsymptoticRegime  # noqa: F401
from .dataTypes import (  # noqa: F401
    AsymptoticComparison,
    ChainGeometry,
    CollisionAngle,
    CollisionFactors,
    CollisionOutcome,
    CurveRow,
    EllipticArgs,
    FallIntegralArgs,
    MixedProgressionParams,
    RodTrace,
    SimulationResult,
    TraceReport,
    WaveSolution,
)
from .elliptic import (  # noqa: F401
    complete_K,
    complete_K_complement,
    complete_K_log_asymptotic,
    complete_minus_incomplete,
    fall_angle_difference,
    fall_time_from_modulus,
    fall_time_integral,
    fall_time_quadrature,
    incomplete_F,
)
from .exceptions import (  # noqa: F401
    DominoWaveError,
    EquilibriumError,
    GeometryError,
    InvalidParameterError,
    NumericalError,
    RegimeError,
    TraceMismatchError,
)
from .simulator import simulate_chain, verify_trace  # noqa: F401
from .wavespeed import (  # noqa: F401
    ASYMPTOTIC_MAP,
    compare_asymptotic,
    fall_time,
    limiting_solution,
    modulus_asymptotic,
    scaling_G,
    scaling_G_close,
    scaling_G_wide,
    wave_modulus,
)

_LOGGER = logging.getLogger(__name__)
