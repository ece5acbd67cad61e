"""Public datatypes for the domino wave API."""
from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Optional

from .const import AsymptoticRegime
from .exceptions import GeometryError, InvalidParameterError


@dataclass(frozen=True)
class ChainGeometry:
    """Define a uniform chain of identical rods.

    Rods of length ``rod_length`` carry a point mass ``mass`` on top and stand
    ``spacing`` apart. ``gravity`` may be zero (weightless chain); every other
    quantity must be strictly positive and the spacing shorter than a rod.
    """

    rod_length: float
    spacing: float
    gravity: float
    mass: float = 1.0

    def __post_init__(self) -> None:
        """Reject degenerate chains."""
        for name in ("rod_length", "spacing", "gravity", "mass"):
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite, got {getattr(self, name)}")
        if self.rod_length <= 0:
            raise GeometryError(f"rod_length must be > 0, got {self.rod_length}")
        if self.mass <= 0:
            raise GeometryError(f"mass must be > 0, got {self.mass}")
        if self.gravity < 0:
            raise GeometryError(f"gravity must be >= 0, got {self.gravity}")
        if not 0 < self.spacing < self.rod_length:
            raise GeometryError(
                "degenerate geometry: spacing must satisfy 0 < d < rod_length, "
                f"got d={self.spacing}, rod_length={self.rod_length}"
            )

    @property
    def ratio(self) -> float:
        """Return d/l."""
        return self.spacing / self.rod_length

    @property
    def moment_of_inertia(self) -> float:
        """Return I = m l^2 about the pivot."""
        return self.mass * self.rod_length**2

    @property
    def gravity_rate(self) -> float:
        """Return 2g/l."""
        return 2.0 * self.gravity / self.rod_length


@dataclass(frozen=True)
class CollisionAngle:
    """Define the tilt from the vertical at which a rod strikes its neighbour.

    ``ratio`` is sin(beta1) = d/l when the angle comes from a geometry. Carrying
    it keeps cos^2(beta1) = (1 - d/l)(1 + d/l) exact as d/l -> 1.
    """

    beta1: float
    ratio: Optional[float] = None

    @classmethod
    def from_ratio(cls, ratio: float) -> CollisionAngle:
        """Create the angle with sin(beta1) = ratio."""
        return cls(math.asin(ratio), ratio)

    @property
    def sin_sq(self) -> float:
        """Return sin^2(beta1)."""
        if self.ratio is not None:
            return self.ratio**2
        return math.sin(self.beta1) ** 2

    @property
    def cos_sq(self) -> float:
        """Return cos^2(beta1)."""
        if self.ratio is not None:
            return (1.0 - self.ratio) * (1.0 + self.ratio)
        return math.cos(self.beta1) ** 2

    @property
    def one_minus_cos(self) -> float:
        """Return 1 - cos(beta1), the height lost over l during a fall."""
        return 2.0 * math.sin(0.5 * self.beta1) ** 2


@dataclass(frozen=True)
class CollisionFactors:
    """Define the transfer factors of a two-rod collision."""

    f_plus: float
    f_minus: float
    # 1 - f_plus**2 without cancellation
    f_plus_sq_complement: float


@dataclass(frozen=True)
class CollisionOutcome:
    """Define angular velocities right after a collision."""

    omega_b: float
    omega_i_next: float


@dataclass(frozen=True)
class MixedProgressionParams:
    """Define a sequence a_k = r * a_{k-1} + b evaluated at index n."""

    a1: float
    r: float
    b: float
    n: int

    def __post_init__(self) -> None:
        """Check the index."""
        if self.n < 1:
            raise InvalidParameterError(f"n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class EllipticArgs:
    """Define the amplitude and modulus of an elliptic integral of the first kind.

    The complementary modulus k' = sqrt(1 - k^2) is carried next to k. Build
    the arguments with :meth:`from_complement` when k' is known directly,
    which keeps full precision as k approaches 1.
    """

    phi: float
    k: float
    k_prime: Optional[float] = field(default=None)

    def __post_init__(self) -> None:
        """Validate ranges and fill in k'."""
        if not 0.0 <= self.phi <= math.pi / 2:
            raise InvalidParameterError(f"phi must lie in [0, pi/2], got {self.phi}")
        if self.k_prime is None:
            if not 0.0 <= self.k < 1.0:
                raise InvalidParameterError(f"modulus k must lie in [0, 1), got {self.k}")
            object.__setattr__(self, "k_prime", math.sqrt((1.0 - self.k) * (1.0 + self.k)))
        elif not 0.0 < self.k_prime <= 1.0 or self.k_prime**2 == 0.0:
            raise InvalidParameterError(
                f"complementary modulus must lie in (0, 1] and not underflow, got {self.k_prime}"
            )

    @classmethod
    def from_complement(cls, phi: float, k_prime: float) -> EllipticArgs:
        """Create arguments from the complementary modulus."""
        k = math.sqrt(max(0.0, (1.0 - k_prime) * (1.0 + k_prime)))
        return cls(phi, k, k_prime)


@dataclass(frozen=True)
class FallIntegralArgs:
    """Define I(theta0) = integral of dtheta / sqrt(a - c cos(theta)) from 0 to theta0."""

    theta0: float
    a: float
    c: float

    def __post_init__(self) -> None:
        """Validate the integral's parameters."""
        if not 0.0 <= self.theta0 <= math.pi / 2:
            raise InvalidParameterError(f"theta0 must lie in [0, pi/2], got {self.theta0}")
        if self.c < 0:
            raise InvalidParameterError(f"c must be >= 0, got {self.c}")
        if self.c >= self.a:
            raise InvalidParameterError(
                f"c must be smaller than a (c={self.c}, a={self.a}): "
                "a rod starting at rest never leaves the vertical"
            )


@dataclass(frozen=True)
class WaveSolution:
    """Define the translationally invariant wave deep in the chain."""

    omega_limit: float
    modulus: float
    complementary_modulus: float
    fall_time: float
    speed: float
    G: float


@dataclass(frozen=True)
class AsymptoticComparison:
    """Define one comparison between the exact and an asymptotic G."""

    x: float
    G_exact: float
    G_asymptotic: float
    relative_error: float
    regime: AsymptoticRegime


@dataclass(frozen=True)
class RodTrace:
    """Define the history of one rod, from start of fall to collision."""

    index: int
    omega_i: float
    omega_f: float
    omega_b: float
    fall_time: float
    cumulative_time: float
    instantaneous_speed: float


@dataclass(frozen=True)
class SimulationResult:
    """Define the outcome of an event-by-event chain simulation."""

    rods: tuple[RodTrace, ...]
    converged_at: Optional[int]
    limiting_speed_estimate: float
    closed_form_speed: float


@dataclass(frozen=True)
class TraceReport:
    """Maximum relative residuals found in a simulated trace."""

    closed_form_residual: float
    kinetic_energy_residual: float
    angular_momentum_residual: float
    fall_energy_residual: float
    rods_checked: int
    threshold: float

    @property
    def passed(self) -> bool:
        """Return True if every residual is within the threshold."""
        return (
            max(
                self.closed_form_residual,
                self.kinetic_energy_residual,
                self.angular_momentum_residual,
                self.fall_energy_residual,
            )
            <= self.threshold
        )


@dataclass(frozen=True)
class CurveRow:
    """Define one sample of the scaling function G(d/l)."""

    d_over_l: float
    beta1: float
    f_plus: float
    k_modulus: float
    G: float
    v: Optional[float] = None
