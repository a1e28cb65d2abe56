"""Differential-drive vehicle models"""

import math
from dataclasses import dataclass
from .exceptions import CommandError

MAX_LINEAR = 1.0
MAX_ANGULAR = 2.0
STRAIGHT_TOLERANCE = 1e-9


def normalize_angle(theta: float) -> float:
    """Wrap an angle into (-pi, pi]"""
    wrapped = math.remainder(theta, math.tau)
    if wrapped <= -math.pi:
        return math.pi
    return wrapped


@dataclass(frozen=True, slots=True)
class RobotPose:
    """Planar position (meters) and heading (radians) of the vehicle"""

    x: float
    y: float
    theta: float

    @property
    def position(self) -> tuple[float, float]:
        """(x, y) in meters"""
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x:.3f}, {self.y:.3f}, {self.theta:.3f} rad)"


@dataclass(frozen=True, slots=True)
class VelocityCommand:
    """Linear (m/s, along heading) and angular (rad/s, CCW positive) velocity"""

    v: float
    w: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.v) and math.isfinite(self.w)):
            raise CommandError(f"Velocity command must be finite, got v={self.v} w={self.w}")
        if abs(self.v) > MAX_LINEAR:
            raise CommandError(f"|v| must be <= {MAX_LINEAR} m/s, got {self.v}")
        if abs(self.w) > MAX_ANGULAR:
            raise CommandError(f"|w| must be <= {MAX_ANGULAR} rad/s, got {self.w}")

    @property
    def is_straight(self) -> bool:
        """True when the angular rate is too small to integrate as an arc"""
        return abs(self.w) < STRAIGHT_TOLERANCE

