"""Turtlebot with LIDAR in a segment world, Gym-style episodic interface"""

import logging
import math
import numpy as np
from src.geometry import (
    LidarScan,
    WorldMap,
    beam_offsets,
    cast_directions,
    min_wall_distance,
    unit_directions,
    wall_distances_sq,
)
from src.vehicle import RobotPose, arc_positions, integrate, normalize_angle
from .exceptions import EpisodeTerminated
from .models import ACTIONS, Action, DiscreteState, EnvConfig, RANGE_EPSILON, StepResult

# Slack on the clearance bound so rounding never skips a check that could collide
CLEARANCE_MARGIN = 1e-9


def _bins(ranges: list[float], cfg: EnvConfig) -> DiscreteState:
    ceiling = cfg.max_range - RANGE_EPSILON
    return DiscreteState(bins=tuple(math.floor(min(max(r, 0.0), ceiling) / cfg.bin_width) for r in ranges))


def discretize(scan: LidarScan, cfg: EnvConfig) -> DiscreteState:
    """Map a 5-beam scan onto integer bins of `cfg.bin_width` meters.

    Args:
        scan (LidarScan): Scan cast with cfg's fov, beam count and range
        cfg (EnvConfig): Binning parameters

    Returns:
        DiscreteState: One bin per beam in [0, cfg.max_bin]
    """
    return _bins(scan.ranges, cfg)


class TurtlebotLidarEnv:
    """Sequential episodic environment. One caller drives reset/step at a time."""

    def __init__(self, cfg: EnvConfig, env_id: str = "custom") -> None:
        self.cfg = cfg
        self.env_id = env_id
        self.log = logging.getLogger(f"Env.{env_id}")
        self._offsets = beam_offsets(cfg.fov, cfg.n_beams)
        self._beam_table = unit_directions(self._offsets)
        self._times = np.arange(1, cfg.substeps + 1) * (cfg.action_duration / cfg.substeps)
        self._threshold_sq = cfg.collision_threshold**2
        # Farthest the robot can get from its start point during one step
        self._travel = {action: abs(action.command.v) * cfg.action_duration for action in ACTIONS}
        self._pose = cfg.world.start
        self._clearance = min_wall_distance(cfg.world, self._pose.position)
        self._steps = 0
        self._done = False

    def __str__(self) -> str:
        return f"{self.env_id} [{self.cfg.world.name}]"

    @property
    def world(self) -> WorldMap:
        """World geometry"""
        return self.cfg.world

    @property
    def pose(self) -> RobotPose:
        """Current robot pose"""
        return self._pose

    @property
    def steps(self) -> int:
        """Steps taken since the last reset"""
        return self._steps

    @property
    def done(self) -> bool:
        """True once the episode crashed"""
        return self._done

    @property
    def n_actions(self) -> int:
        """Size of the action space"""
        return len(ACTIONS)

    @property
    def n_states(self) -> int:
        """Size of the observation space"""
        return self.cfg.n_states

    def _ranges(self) -> np.ndarray:
        theta = self._pose.theta
        c, s = math.cos(theta), math.sin(theta)
        directions = self._beam_table @ np.array(((c, s), (-s, c)))
        return cast_directions(self.cfg.world, self._pose.position, directions, self.cfg.max_range)

    def scan(self) -> LidarScan:
        """LIDAR reading at the current pose"""
        angles = self._pose.theta + self._offsets
        return LidarScan(
            ranges=tuple(self._ranges().tolist()),
            fov=self.cfg.fov,
            max_range=self.cfg.max_range,
            angles=tuple(angles.tolist()),
        )

    def _observe(self) -> DiscreteState:
        return _bins(self._ranges().tolist(), self.cfg)

    def reset(self) -> DiscreteState:
        """Place the robot at the world's start pose and begin a new episode"""
        self._pose = self.cfg.world.start
        self._clearance = min_wall_distance(self.cfg.world, self._pose.position)
        self._steps = 0
        self._done = False
        return self._observe()

    def step(self, action: Action) -> StepResult:
        """Hold the action's velocities for one action duration.

        The motion is checked for collisions after each of `substeps` equal
        sub-intervals; the first colliding sub-interval ends the episode and
        freezes the robot there. The check is skipped when the robot is
        farther from every wall than it can travel in one step.

        Args:
            action (Action): Action to execute

        Raises:
            EpisodeTerminated: The episode already crashed, reset first

        Returns:
            StepResult: Observation at the resulting pose, reward and done flag
        """
        if self._done:
            raise EpisodeTerminated(f"{self.env_id}: step() called after the episode ended. Call reset().")

        cmd = action.command
        pose = self._pose
        travel = self._travel[action]
        self._steps += 1

        # _clearance is a lower bound on the distance to the nearest wall
        if self._clearance - travel >= self.cfg.collision_threshold + CLEARANCE_MARGIN:
            self._pose = integrate(pose, cmd, self.cfg.action_duration)
            self._clearance -= travel
            return StepResult(observation=self._observe(), reward=self.cfg.rewards.for_action(action), done=False)

        xs, ys = arc_positions(pose, cmd, self._times)
        gaps_sq = wall_distances_sq(self.cfg.world, xs, ys)
        k = int(np.argmax(gaps_sq < self._threshold_sq))
        if gaps_sq[k] < self._threshold_sq:
            self._pose = RobotPose(
                x=float(xs[k]),
                y=float(ys[k]),
                theta=normalize_angle(pose.theta + cmd.w * float(self._times[k])),
            )
            self._done = True
            return StepResult(observation=self._observe(), reward=self.cfg.rewards.crash, done=True)

        self._pose = integrate(pose, cmd, self.cfg.action_duration)
        self._clearance = math.sqrt(float(gaps_sq[-1]))
        return StepResult(observation=self._observe(), reward=self.cfg.rewards.for_action(action), done=False)

    def close(self) -> None:
        """Release resources. Nothing is held, kept for the Gym interface."""
        self.log.debug("Closing %s after %s steps", self, self._steps)
