"""Fall times, limiting wave speed and the scaling function G(d/l)."""

import logging
import math

from .chain import collision_angle, collision_factors, limiting_omega
from .const import LN_ONE_PLUS_SQRT2, WIDE_REGIME_THRESHOLD, AsymptoticRegime
from .dataTypes import AsymptoticComparison, ChainGeometry, CollisionAngle, WaveSolution
from .elliptic import fall_angle_difference, fall_time_from_modulus
from .exceptions import EquilibriumError, InvalidParameterError, RegimeError

_LOGGER = logging.getLogger(__name__)


def wave_modulus(angle: CollisionAngle) -> tuple[float, float]:
    """Return (k, k') of the limiting fall, both formed without cancellation.

    k^2 = 2(1 - f+^2) / [(1 - cos b1) f+^2 + 2(1 - f+^2)].
    """
    factors = collision_factors(angle)
    drop = angle.one_minus_cos * factors.f_plus**2
    slack = 2.0 * factors.f_plus_sq_complement
    total = drop + slack
    return math.sqrt(slack / total), math.sqrt(drop / total)


def fall_time(omega_i: float, geom: ChainGeometry) -> float:
    """Return the time a rod starting with omega_i takes to reach its neighbour."""
    if omega_i <= 0:
        raise EquilibriumError(
            f"omega_i must be > 0, got {omega_i}: a rod at rest on the vertical never falls"
        )
    angle = collision_angle(geom)
    a_plus_c = omega_i**2 + 2.0 * geom.gravity_rate
    # k'^2 = (a - c) / (a + c)
    k_prime = math.sqrt(omega_i**2 / a_plus_c)
    return fall_time_from_modulus(angle.beta1, a_plus_c, k_prime)


def limiting_solution(geom: ChainGeometry) -> WaveSolution:
    """Return the translationally invariant wave far from the first rod."""
    if geom.gravity == 0:
        raise InvalidParameterError("gravity must be > 0: a weightless chain carries no wave")
    angle = collision_angle(geom)
    k, k_prime = wave_modulus(angle)
    difference = fall_angle_difference(angle.beta1, k_prime)
    omega = limiting_omega(geom)
    period = 2.0 * difference / math.sqrt(omega**2 + 2.0 * geom.gravity_rate)
    solution = WaveSolution(
        omega_limit=omega,
        modulus=k,
        complementary_modulus=k_prime,
        fall_time=period,
        speed=geom.spacing / period,
        G=geom.ratio / (k * difference),
    )
    _LOGGER.debug("Limiting wave for %s: %s", geom, solution)
    return solution


def _check_ratio(x: float) -> None:
    if not 0.0 < x < 1.0:
        raise InvalidParameterError(f"d/l must lie strictly inside (0, 1), got {x}")


def scaling_G(x: float) -> float:
    """Return G(d/l) such that v = sqrt(g l) G(d/l)."""
    _check_ratio(x)
    angle = CollisionAngle.from_ratio(x)
    k, k_prime = wave_modulus(angle)
    return x / (k * fall_angle_difference(angle.beta1, k_prime))


def scaling_G_close(x: float) -> float:
    """Return 1/x, the closely spaced limit of G."""
    if not 0.0 < x < 1.0:
        raise RegimeError(f"close-spacing law needs 0 < d/l < 1, got {x}")
    return 1.0 / x


def scaling_G_wide(x: float) -> float:
    """Return -1 / [ln(1 + sqrt 2) + ln(1 - x)], the limit of G as d/l -> 1."""
    if not 0.0 < x < 1.0:
        raise RegimeError(f"wide-spacing law needs 0 < d/l < 1, got {x}")
    denominator = LN_ONE_PLUS_SQRT2 + math.log1p(-x)
    if denominator >= 0:
        raise RegimeError(
            f"wide-spacing law does not apply at d/l = {x}: "
            f"it needs d/l > {WIDE_REGIME_THRESHOLD}"
        )
    return -1.0 / denominator


ASYMPTOTIC_MAP = {
    AsymptoticRegime.CLOSE: scaling_G_close,
    AsymptoticRegime.WIDE: scaling_G_wide,
}


def modulus_asymptotic(x: float, regime: AsymptoticRegime) -> tuple[float, float]:
    """Return the leading-order (k, k') in either regime.

    Close spacing gives k ~ 2 b1. Near d/l = 1, cos^2 b1 ~ 2(1 - x) and
    f+ ~ 4(1 - x), so k'^2 ~ 8(1 - x)^2.
    """
    if regime is AsymptoticRegime.CLOSE:
        k = 2.0 * math.asin(x)
        if not 0.0 < k < 1.0:
            raise RegimeError(f"close-spacing modulus needs 2 asin(d/l) < 1, got d/l = {x}")
        return k, math.sqrt((1.0 - k) * (1.0 + k))
    k_prime = 2.0 * math.sqrt(2.0) * (1.0 - x)
    if not 0.0 < k_prime < 1.0:
        raise RegimeError(f"wide-spacing modulus needs 1 - d/l < 1/(2 sqrt 2), got d/l = {x}")
    return math.sqrt((1.0 - k_prime) * (1.0 + k_prime)), k_prime


def compare_asymptotic(x: float, regime: AsymptoticRegime) -> AsymptoticComparison:
    """Compare the exact G with the approximation of ``regime`` at x."""
    approximate = ASYMPTOTIC_MAP[regime](x)
    exact = scaling_G(x)
    return AsymptoticComparison(
        x=x,
        G_exact=exact,
        G_asymptotic=approximate,
        relative_error=abs(approximate - exact) / exact,
        regime=regime,
    )
