"""Gymnav Configuration"""

from .models import Config, LogCfg, LogLevels, EnvironmentCfg, RewardCfg, AgentCfg, TrainingCfg
from .config_parser import ConfigParser, check_range
from .env_vars import GymNavEnvironment
from .exceptions import ConfigError

__all__ = [
    "Config",
    "LogCfg",
    "LogLevels",
    "EnvironmentCfg",
    "RewardCfg",
    "AgentCfg",
    "TrainingCfg",
    "ConfigParser",
    "check_range",
    "GymNavEnvironment",
    "ConfigError",
]
