"""Differential-drive kinematics"""

from .models import RobotPose, VelocityCommand, normalize_angle
from .kinematics import integrate, arc_positions
from .exceptions import VehicleError, CommandError

__all__ = [
    "RobotPose",
    "VelocityCommand",
    "normalize_angle",
    "integrate",
    "arc_positions",
    "VehicleError",
    "CommandError",
]
