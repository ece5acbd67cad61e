"""Elliptic integrals of the first kind and the fall-time integral.

F and K are evaluated through Carlson's symmetric form R_F, which takes the
complementary parameter k'^2 directly and so stays accurate as k -> 1. The
fall-time integral has two independent evaluations: the elliptic closed form
and adaptive Gauss-Kronrod quadrature of its definition. The quadrature is
the oracle that validates the closed form.
"""

import logging
import math

from scipy import integrate, special

from .const import DEGRADED_MODULUS, MAX_MODULUS, QUAD_EPSABS, QUAD_EPSREL, QUAD_LIMIT
from .dataTypes import EllipticArgs, FallIntegralArgs
from .exceptions import InvalidParameterError, NumericalError

_LOGGER = logging.getLogger(__name__)


def _carlson_F(sin_phi: float, cos_phi: float, k_prime: float) -> float:
    # 1 - k^2 sin^2 = cos^2 + k'^2 sin^2
    cos_sq = cos_phi**2
    delta_sq = cos_sq + (k_prime * sin_phi) ** 2
    return sin_phi * float(special.elliprf(cos_sq, delta_sq, 1.0))


def _complementary_amplitude(cos_phi: float, sin_phi: float, k_prime: float) -> float:
    # F(psi) with tan(phi) tan(psi) = 1/k', from sin and cos of psi so psi is never rounded
    scaled = k_prime * sin_phi
    delta = math.hypot(cos_phi, scaled)
    return _carlson_F(cos_phi / delta, scaled / delta, k_prime)


def incomplete_F(args: EllipticArgs) -> float:
    """Return F(phi, k), the integral of dt / sqrt(1 - k^2 sin^2 t) from 0 to phi."""
    return _carlson_F(math.sin(args.phi), math.cos(args.phi), args.k_prime)


def complete_K_complement(k_prime: float) -> float:
    """Return K(k) given the complementary modulus k' = sqrt(1 - k^2)."""
    if not 0.0 < k_prime <= 1.0 or k_prime**2 == 0.0:
        raise InvalidParameterError(
            f"complementary modulus must lie in (0, 1] and not underflow, got {k_prime}"
        )
    return float(special.elliprf(0.0, k_prime**2, 1.0))


def complete_K(k: float) -> float:
    """Return the complete elliptic integral of the first kind K(k).

    Moduli up to 1 - 1e-12 are accepted. Above 1 - 1e-8 the double k itself
    carries few significant digits of k' and the result degrades accordingly;
    use :func:`complete_K_complement` when k' is known.
    """
    if not 0.0 <= k < 1.0:
        raise InvalidParameterError(
            f"modulus k must lie in [0, 1), got {k}: K diverges logarithmically at k = 1"
        )
    if k > MAX_MODULUS:
        raise InvalidParameterError(
            f"modulus k = {k!r} is beyond the near-singular limit {MAX_MODULUS!r}; "
            "use complete_K_complement or complete_K_log_asymptotic"
        )
    if k > DEGRADED_MODULUS:
        _LOGGER.debug("K(%r) evaluated near the singularity, precision degraded", k)
    return complete_K_complement(math.sqrt((1.0 - k) * (1.0 + k)))


def complete_K_log_asymptotic(k_prime: float) -> float:
    """Return ln(4/k'), the leading behaviour of K(k) as k' -> 0."""
    if k_prime <= 0:
        raise InvalidParameterError(f"complementary modulus must be > 0, got {k_prime}")
    return math.log(4.0 / k_prime)


def complete_minus_incomplete(args: EllipticArgs) -> float:
    """Return K(k) - F(phi, k) without cancellation.

    K - F(phi) = F(psi) with tan(phi) tan(psi) = 1/k'.
    """
    return _complementary_amplitude(math.cos(args.phi), math.sin(args.phi), args.k_prime)


def fall_angle_difference(theta0: float, k_prime: float) -> float:
    """Return K(k) - F((pi - theta0)/2, k) for a known complementary modulus."""
    if not 0.0 <= theta0 <= math.pi / 2:
        raise InvalidParameterError(f"theta0 must lie in [0, pi/2], got {theta0}")
    if not 0.0 < k_prime <= 1.0:
        raise InvalidParameterError(f"complementary modulus must lie in (0, 1], got {k_prime}")
    # cos((pi - theta0)/2) = sin(theta0/2)
    return _complementary_amplitude(math.sin(0.5 * theta0), math.cos(0.5 * theta0), k_prime)


def fall_time_from_modulus(theta0: float, a_plus_c: float, k_prime: float) -> float:
    """Return I(theta0) = 2/sqrt(a+c) [K(k) - F((pi - theta0)/2, k)] for a known k'."""
    return 2.0 / math.sqrt(a_plus_c) * fall_angle_difference(theta0, k_prime)


def fall_time_integral(args: FallIntegralArgs) -> float:
    """Return the integral of dtheta / sqrt(a - c cos theta) from 0 to theta0 in closed form."""
    a_plus_c = args.a + args.c
    k_prime = math.sqrt((args.a - args.c) / a_plus_c)
    return fall_time_from_modulus(args.theta0, a_plus_c, k_prime)


def fall_time_quadrature(args: FallIntegralArgs) -> float:
    """Return the integral of dtheta / sqrt(a - c cos theta) by adaptive quadrature."""
    gap = args.a - args.c

    def integrand(theta: float) -> float:
        # a - c cos(theta) = (a - c) + 2c sin^2(theta/2)
        return 1.0 / math.sqrt(gap + 2.0 * args.c * math.sin(0.5 * theta) ** 2)

    result = integrate.quad(
        integrand,
        0.0,
        args.theta0,
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
        full_output=1,
    )
    if len(result) > 3:
        raise NumericalError(f"Quadrature of the fall integral failed for {args}: {result[3]}")
    value, abserr, info = result[0], result[1], result[2]
    _LOGGER.debug(
        "Quadrature of %s gave %r +- %r in %s evaluations", args, value, abserr, info["neval"]
    )
    if abserr > max(QUAD_EPSABS, QUAD_EPSREL * abs(value)):
        raise NumericalError(
            f"Quadrature error estimate {abserr!r} exceeds the requested tolerance for {args}"
        )
    return value
