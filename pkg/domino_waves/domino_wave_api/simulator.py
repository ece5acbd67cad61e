"""Event-by-event simulation of a falling rod chain."""

import logging
import math

from .chain import collide, collision_angle, fall_exit_velocity, omega_i_at
from .const import DEFAULT_CONVERGENCE_TOL, DEFAULT_TRACE_THRESHOLD, TRACE_MATCH_TOL
from .dataTypes import ChainGeometry, RodTrace, SimulationResult, TraceReport
from .exceptions import EquilibriumError, InvalidParameterError, TraceMismatchError
from .wavespeed import fall_time, limiting_solution

_LOGGER = logging.getLogger(__name__)


def simulate_chain(
    geom: ChainGeometry,
    omega_1: float,
    max_rods: int,
    tol: float = DEFAULT_CONVERGENCE_TOL,
    stop_on_convergence: bool = True,
) -> SimulationResult:
    """Push the first rod with omega_1 and follow the wave rod by rod.

    Each rod falls from the vertical, strikes its neighbour and is then
    dropped from the event loop. The run ends at the first rod whose speed
    d/T_k is within ``tol`` (relative) of the closed-form limiting speed, or
    after ``max_rods`` rods. With ``stop_on_convergence`` False it always runs
    ``max_rods`` rods and still reports the first converged index.
    """
    if omega_1 <= 0:
        raise EquilibriumError(
            f"omega_1 must be > 0, got {omega_1}: the first rod would stay on its "
            "unstable equilibrium and never fall"
        )
    if max_rods < 1:
        raise InvalidParameterError(f"max_rods must be >= 1, got {max_rods}")
    if tol <= 0:
        raise InvalidParameterError(f"tol must be > 0, got {tol}")

    angle = collision_angle(geom)
    closed_speed = limiting_solution(geom).speed
    rods: list[RodTrace] = []
    converged_at = None
    elapsed = 0.0
    omega_i = omega_1

    for index in range(1, max_rods + 1):
        omega_f = fall_exit_velocity(omega_i, geom)
        duration = fall_time(omega_i, geom)
        outcome = collide(omega_f, angle)
        elapsed += duration
        speed = geom.spacing / duration
        rods.append(
            RodTrace(index, omega_i, omega_f, outcome.omega_b, duration, elapsed, speed)
        )
        _LOGGER.debug(
            "Rod %s: omega_i=%r omega_f=%r omega_b=%r T=%r v=%r",
            index,
            omega_i,
            omega_f,
            outcome.omega_b,
            duration,
            speed,
        )
        if converged_at is None and abs(speed - closed_speed) <= tol * closed_speed:
            converged_at = index
            if stop_on_convergence:
                break
        omega_i = outcome.omega_i_next

    if converged_at is None:
        _LOGGER.debug("No convergence within %s rods at tol %s", max_rods, tol)
    return SimulationResult(tuple(rods), converged_at, rods[-1].instantaneous_speed, closed_speed)


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def verify_trace(
    result: SimulationResult,
    geom: ChainGeometry,
    omega_1: float,
    threshold: float = DEFAULT_TRACE_THRESHOLD,
) -> TraceReport:
    """Check a simulated trace against the closed forms and conservation laws."""
    if not result.rods:
        raise TraceMismatchError("cannot verify an empty trace")
    first = result.rods[0]
    if _relative(first.omega_i, omega_1) > TRACE_MATCH_TOL:
        raise TraceMismatchError(
            f"trace starts with omega_i={first.omega_i!r}, expected {omega_1!r}"
        )
    expected_speed = limiting_solution(geom).speed
    if _relative(result.closed_form_speed, expected_speed) > TRACE_MATCH_TOL:
        raise TraceMismatchError(
            f"trace was simulated on another geometry: closed-form speed "
            f"{result.closed_form_speed!r}, expected {expected_speed!r} for {geom}"
        )
    expected_fall = fall_time(omega_1, geom)
    if _relative(first.fall_time, expected_fall) > TRACE_MATCH_TOL:
        raise TraceMismatchError(
            f"trace was simulated on another geometry: first fall time "
            f"{first.fall_time!r}, expected {expected_fall!r} for {geom}"
        )

    angle = collision_angle(geom)
    cos_sq = angle.cos_sq
    inertia = geom.moment_of_inertia
    weight = geom.mass * geom.gravity * geom.rod_length
    closed_form = kinetic = momentum = fall_energy = 0.0

    for rod in result.rods:
        expected = omega_i_at(rod.index, omega_1, geom)
        closed_form = max(closed_form, _relative(rod.omega_i, expected))
        start = 0.5 * inertia * rod.omega_i**2 + weight
        end = 0.5 * inertia * rod.omega_f**2 + weight * math.cos(angle.beta1)
        fall_energy = max(fall_energy, _relative(end, start))

    for striker, struck in zip(result.rods, result.rods[1:]):
        kinetic = max(
            kinetic,
            _relative(striker.omega_b**2 + struck.omega_i**2, striker.omega_f**2),
        )
        before = striker.omega_f * cos_sq
        after = striker.omega_b * cos_sq + struck.omega_i
        momentum = max(momentum, abs(after - before) / abs(before))

    report = TraceReport(
        closed_form_residual=closed_form,
        kinetic_energy_residual=kinetic,
        angular_momentum_residual=momentum,
        fall_energy_residual=fall_energy,
        rods_checked=len(result.rods),
        threshold=threshold,
    )
    if not report.passed:
        _LOGGER.warning("Trace failed verification: %s", report)
    return report
