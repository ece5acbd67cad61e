"""Collision and recurrence algebra of a uniform rod chain."""

import logging
import math
import sys

from .dataTypes import (
    ChainGeometry,
    CollisionAngle,
    CollisionFactors,
    CollisionOutcome,
    MixedProgressionParams,
)
from .exceptions import EquilibriumError, InvalidParameterError, NumericalError

_LOGGER = logging.getLogger(__name__)


def collision_angle(geom: ChainGeometry) -> CollisionAngle:
    """Return the tilt beta1 = asin(d/l) at which a rod hits the next one."""
    return CollisionAngle.from_ratio(geom.ratio)


def collision_factors(angle: CollisionAngle) -> CollisionFactors:
    """Return f+ and f- = 2 / (cos^2 b1 +- 1/cos^2 b1)."""
    if not 0.0 < angle.beta1 < math.pi / 2:
        raise InvalidParameterError(
            f"beta1 must lie strictly inside (0, pi/2), got {angle.beta1}"
        )
    x = angle.cos_sq
    # 1 - f+ = (1 - cos^2)^2 / (1 + cos^4)
    one_minus_f = angle.sin_sq**2 / (1.0 + x * x)
    if one_minus_f < sys.float_info.min:
        raise NumericalError(
            f"beta1 = {angle.beta1!r} is too small: 1 - f+ underflows double precision "
            "and the wave modulus cannot be formed"
        )
    f_plus = 2.0 * x / (x * x + 1.0)
    # x^2 - 1 = -sin^2 (1 + cos^2)
    f_minus = -2.0 * x / (angle.sin_sq * (1.0 + x))
    return CollisionFactors(f_plus, f_minus, one_minus_f * (1.0 + f_plus))


def collide(omega_f: float, angle: CollisionAngle) -> CollisionOutcome:
    """Resolve the collision of a rod arriving with omega_f against a resting neighbour.

    Kinetic energy and angular momentum about the struck rod's pivot are both
    conserved. The striker keeps rotating about its own pivot, backwards.
    """
    if omega_f < 0:
        raise InvalidParameterError(f"omega_f must be >= 0, got {omega_f}")
    factors = collision_factors(angle)
    omega_i_next = factors.f_plus * omega_f
    return CollisionOutcome(omega_i_next / factors.f_minus, omega_i_next)


def fall_exit_velocity(omega_i: float, geom: ChainGeometry) -> float:
    """Return the angular velocity of a rod reaching beta1 after starting with omega_i."""
    if omega_i < 0:
        raise InvalidParameterError(f"omega_i must be >= 0, got {omega_i}")
    angle = collision_angle(geom)
    return math.sqrt(omega_i**2 + geom.gravity_rate * angle.one_minus_cos)


def progression_increment(geom: ChainGeometry) -> float:
    """Return b = (2g/l) f+^2 (1 - cos b1)."""
    angle = collision_angle(geom)
    factors = collision_factors(angle)
    return geom.gravity_rate * factors.f_plus**2 * angle.one_minus_cos


def recurrence_step(omega_i_sq: float, geom: ChainGeometry) -> float:
    """Map omega_i^2 of rod k to omega_i^2 of rod k+1."""
    if omega_i_sq < 0:
        raise InvalidParameterError(f"omega_i_sq must be >= 0, got {omega_i_sq}")
    factors = collision_factors(collision_angle(geom))
    return factors.f_plus**2 * omega_i_sq + progression_increment(geom)


def _mixed_progression(a1: float, r: float, b: float, n: int, one_minus_r: float) -> float:
    if r > 0:
        # r**(n-1) and 1 - r**(n-1) stay accurate when r is within ulps of 1
        exponent = (n - 1) * math.log1p(-one_minus_r)
        r_pow = math.exp(exponent)
        tail = -math.expm1(exponent)
    else:
        r_pow = r ** (n - 1)
        tail = 1.0 - r_pow
    return r_pow * a1 + b * tail / one_minus_r


def mixed_progression(p: MixedProgressionParams) -> float:
    """Return a_n of a_k = r a_{k-1} + b in closed form."""
    if p.r == 1.0:
        raise InvalidParameterError(
            "r = 1 makes the closed form singular; the sequence is purely arithmetic"
        )
    return _mixed_progression(p.a1, p.r, p.b, p.n, 1.0 - p.r)


def _check_push(omega_1: float) -> None:
    if omega_1 <= 0:
        raise EquilibriumError(
            f"omega_1 must be > 0, got {omega_1}: the first rod would stay "
            "on its unstable equilibrium and never fall"
        )


def omega_i_at(k: int, omega_1: float, geom: ChainGeometry) -> float:
    """Return the starting angular velocity of rod k for a push omega_1 on rod 1."""
    if k < 1:
        raise InvalidParameterError(f"rod index must be >= 1, got {k}")
    _check_push(omega_1)
    factors = collision_factors(collision_angle(geom))
    value = _mixed_progression(
        omega_1**2,
        factors.f_plus**2,
        progression_increment(geom),
        k,
        factors.f_plus_sq_complement,
    )
    return math.sqrt(value)


def omega_i_sequence(omega_1: float, geom: ChainGeometry, count: int) -> list[float]:
    """Return omega_i of rods 1..count by iterating the recurrence."""
    _check_push(omega_1)
    if count < 1:
        raise InvalidParameterError(f"count must be >= 1, got {count}")
    result: list[float] = [omega_1]
    omega_sq = omega_1**2
    for _ in range(count - 1):
        omega_sq = recurrence_step(omega_sq, geom)
        result.append(math.sqrt(omega_sq))
    return result


def limiting_omega(geom: ChainGeometry) -> float:
    """Return Omega, the starting angular velocity of rods deep in the chain."""
    factors = collision_factors(collision_angle(geom))
    omega = math.sqrt(progression_increment(geom) / factors.f_plus_sq_complement)
    _LOGGER.debug("Limiting omega for %s is %s", geom, omega)
    return omega
