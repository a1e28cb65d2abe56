"""Gym environment models"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any
from src.geometry import WorldMap, min_wall_distance
from src.vehicle import VelocityCommand
from .exceptions import EnvConfigError

STATE_BINS = 5
# Ranges are clamped just below max_range so the top reading stays in the last bin
RANGE_EPSILON = 1e-9


class Action(Enum):
    """Discrete action set of the Turtlebot environments"""

    FORWARD = "Forward"
    LEFT = "Left"
    RIGHT = "Right"

    @classmethod
    def _missing_(cls, value: object) -> Any:
        if not isinstance(value, str):
            return None
        value = value.strip().upper()
        for member in cls:
            if member.value.upper() == value:
                return member
        return None

    @property
    def command(self) -> VelocityCommand:
        """Velocities applied while this action executes"""
        return ACTION_COMMANDS[self]


ACTIONS: tuple[Action, ...] = tuple(Action)

ACTION_COMMANDS = {
    Action.FORWARD: VelocityCommand(v=0.3, w=0.0),
    Action.LEFT: VelocityCommand(v=0.05, w=0.3),
    Action.RIGHT: VelocityCommand(v=0.05, w=-0.3),
}


@dataclass(frozen=True, slots=True)
class DiscreteState:
    """Binned LIDAR readings, the tabular state"""

    bins: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bins) != STATE_BINS:
            raise ValueError(f"A state has exactly {STATE_BINS} bins, got {len(self.bins)}")
        for b in self.bins:
            if not 0 <= b <= 9:
                raise ValueError(f"Bins must be single decimal digits, got {self.bins}")

    @property
    def key(self) -> str:
        """Canonical string key, one digit per beam"""
        return "".join(map(str, self.bins))

    @classmethod
    def from_key(cls, key: str) -> "DiscreteState":
        """Inverse of `key`"""
        if len(key) != STATE_BINS or not key.isdigit():
            raise ValueError(f"State keys are {STATE_BINS} decimal digits, got '{key}'")
        return cls(bins=tuple(int(c) for c in key))

    def __str__(self) -> str:
        return self.key


@dataclass(frozen=True, slots=True)
class StepResult:
    """Outcome of one environment step"""

    observation: DiscreteState
    reward: float
    done: bool

    def __iter__(self):
        return iter((self.observation, self.reward, self.done))


@dataclass(frozen=True)
class Rewards:
    """Per-step reward scheme"""

    forward: float = 5.0
    turn: float = 1.0
    crash: float = -200.0

    def for_action(self, action: Action) -> float:
        """Reward of a step that did not crash"""
        return self.forward if action is Action.FORWARD else self.turn


@dataclass
class EnvConfig:
    """Full configuration of one environment instance"""

    world: WorldMap
    fov: float = 3 * math.pi / 2
    n_beams: int = STATE_BINS
    max_range: float = 6.0
    bin_width: float = 1.0
    max_bin: int | None = None
    action_duration: float = 0.4
    substeps: int = 8
    collision_threshold: float = 0.21
    rewards: Rewards = field(default_factory=Rewards)

    def __post_init__(self) -> None:
        if isinstance(self.rewards, dict):
            self.rewards = Rewards(**self.rewards)

        if self.n_beams != STATE_BINS:
            raise EnvConfigError(f"The tabular state uses {STATE_BINS} beams, got n_beams={self.n_beams}")
        if not 0.0 < self.fov <= math.tau:
            raise EnvConfigError(f"fov must be in (0, 2pi], got {self.fov}")
        if not (self.max_range > 0.0 and self.bin_width > 0.0):
            raise EnvConfigError("max_range and bin_width must be positive")
        if not self.action_duration > 0.0:
            raise EnvConfigError(f"action_duration must be positive, got {self.action_duration}")
        if self.substeps < 1:
            raise EnvConfigError(f"substeps must be >= 1, got {self.substeps}")
        if not self.collision_threshold > 0.0:
            raise EnvConfigError(f"collision_threshold must be positive, got {self.collision_threshold}")

        top_bin = math.floor((self.max_range - RANGE_EPSILON) / self.bin_width)
        if self.max_bin is None:
            self.max_bin = top_bin
        elif self.max_bin != top_bin:
            raise EnvConfigError(f"max_bin must equal floor((max_range - eps) / bin_width) = {top_bin}")
        if self.max_bin > 9:
            raise EnvConfigError(f"At most 10 bins fit the state key encoding, got max_bin={self.max_bin}")

        clearance = min_wall_distance(self.world, self.world.start.position)
        if clearance <= self.collision_threshold:
            raise EnvConfigError(
                f"World '{self.world.name}' starts {clearance:.3f} m from a wall, "
                f"inside the collision threshold {self.collision_threshold}"
            )

    @property
    def n_states(self) -> int:
        """Number of distinct observable states"""
        return (self.max_bin + 1) ** self.n_beams
