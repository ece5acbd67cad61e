"""Define constants for the domino wave API."""

from enum import IntEnum, auto
import math
from typing import Final

# ln(1 + sqrt(2)), the finite part of F((pi - beta1)/2, k) as d/l -> 1
LN_ONE_PLUS_SQRT2: Final[float] = math.asinh(1.0)

# complete_K refuses moduli closer to 1 than this
MAX_MODULUS: Final[float] = 1.0 - 1e-12
# above this modulus complete_K logs that precision is degraded
DEGRADED_MODULUS: Final[float] = 1.0 - 1e-8

QUAD_EPSABS: Final[float] = 1e-12
QUAD_EPSREL: Final[float] = 1e-11
QUAD_LIMIT: Final[int] = 200

DEFAULT_CONVERGENCE_TOL: Final[float] = 1e-9
DEFAULT_TRACE_THRESHOLD: Final[float] = 1e-10
# verify_trace rejects a trace whose inputs differ from the given ones by more than this
TRACE_MATCH_TOL: Final[float] = 1e-12

# x must exceed this for the wide-spacing formula to be positive
WIDE_REGIME_THRESHOLD: Final[float] = 1.0 - 1.0 / (1.0 + math.sqrt(2.0))


class AsymptoticRegime(IntEnum):
    """Enumerate the two limits of the scaling function."""

    CLOSE = auto()
    WIDE = auto()
