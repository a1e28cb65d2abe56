"""Closed-form unicycle integration"""

import math
import numpy as np
from .exceptions import CommandError
from .models import RobotPose, VelocityCommand, normalize_angle


def integrate(pose: RobotPose, cmd: VelocityCommand, dt: float) -> RobotPose:
    """Move a pose along the exact arc traced by a constant command.

    Args:
        pose (RobotPose): Starting pose
        cmd (VelocityCommand): Command held for the whole interval
        dt (float): Duration in seconds, must be positive

    Raises:
        CommandError: dt is not positive

    Returns:
        RobotPose: Pose after dt seconds, heading wrapped to (-pi, pi]
    """
    if not dt > 0:
        raise CommandError(f"Integration step must be positive, got {dt}")

    theta = pose.theta
    if cmd.is_straight:
        x = pose.x + cmd.v * dt * math.cos(theta)
        y = pose.y + cmd.v * dt * math.sin(theta)
    else:
        radius = cmd.v / cmd.w
        x = pose.x + radius * (math.sin(theta + cmd.w * dt) - math.sin(theta))
        y = pose.y - radius * (math.cos(theta + cmd.w * dt) - math.cos(theta))

    return RobotPose(x=x, y=y, theta=normalize_angle(theta + cmd.w * dt))


def arc_positions(pose: RobotPose, cmd: VelocityCommand, times: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Positions reached after each elapsed time in `times`, all measured from `pose`.

    Same closed form as `integrate`, evaluated for many durations at once.
    """
    theta = pose.theta
    if cmd.is_straight:
        travel = cmd.v * times
        return pose.x + travel * math.cos(theta), pose.y + travel * math.sin(theta)

    radius = cmd.v / cmd.w
    swept = theta + cmd.w * times
    xs = pose.x + radius * (np.sin(swept) - math.sin(theta))
    ys = pose.y - radius * (np.cos(swept) - math.cos(theta))
    return xs, ys
