"""Gym-style Turtlebot LIDAR environments"""

from .models import Action, ACTIONS, ACTION_COMMANDS, DiscreteState, StepResult, Rewards, EnvConfig, STATE_BINS
from .turtlebot_lidar import TurtlebotLidarEnv, discretize
from .registry import Registry, EnvSpec, REGISTRY, default_registry, make, env_id_for
from .exceptions import GymEnvError, EnvConfigError, EpisodeTerminated, UnknownEnvironment

__all__ = [
    "Action",
    "ACTIONS",
    "ACTION_COMMANDS",
    "DiscreteState",
    "StepResult",
    "Rewards",
    "EnvConfig",
    "STATE_BINS",
    "TurtlebotLidarEnv",
    "discretize",
    "Registry",
    "EnvSpec",
    "REGISTRY",
    "default_registry",
    "make",
    "env_id_for",
    "GymEnvError",
    "EnvConfigError",
    "EpisodeTerminated",
    "UnknownEnvironment",
]
