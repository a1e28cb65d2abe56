"""Gymnav Config Models"""

from dataclasses import asdict, dataclass, field
from typing import TYPE_CHECKING, Any, Type
from enum import Enum

if TYPE_CHECKING:
    from typing import Self


class LogLevels(Enum):
    """Supported Logging Levels"""

    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    CRITICAL = "CRITICAL"

    @classmethod
    def values(cls) -> list[str]:
        """List of values within LogLevels"""
        return [member.value for member in cls]

    @classmethod
    def _missing_(cls, value: object) -> Any:
        value = str(value).upper()
        for member in cls:
            if member.value == value:
                return member
        return None


@dataclass
class LogCfg:
    """Log Config"""

    level: str = field(default=LogLevels.INFO.value)
    write_file: bool = field(default=False)

    @classmethod
    def from_dict(cls: Type["LogCfg"], data: dict) -> "Self":
        """Get Instance from dict values"""
        return cls(level=LogLevels(data["level"]).value, write_file=data["write_file"])


@dataclass
class RewardCfg:
    """Reward per step outcome"""

    forward: float = 5.0
    turn: float = 1.0
    crash: float = -200.0


@dataclass
class EnvironmentCfg:
    """Simulation and sensor settings shared by every environment"""

    fov: float
    n_beams: int
    max_range: float
    bin_width: float
    action_duration: float
    substeps: int
    collision_threshold: float
    rewards: RewardCfg = field(default_factory=RewardCfg)

    @classmethod
    def from_dict(cls: Type["EnvironmentCfg"], data: dict) -> "Self":
        """Get Instance from dict values"""
        return cls(
            fov=float(data["fov"]),
            n_beams=data["n_beams"],
            max_range=float(data["max_range"]),
            bin_width=float(data["bin_width"]),
            action_duration=float(data["action_duration"]),
            substeps=data["substeps"],
            collision_threshold=float(data["collision_threshold"]),
            rewards=RewardCfg(**{k: float(v) for k, v in data["rewards"].items()}),
        )

    def as_kwargs(self) -> dict:
        """Keyword arguments for an environment config"""
        return asdict(self)


@dataclass
class AgentCfg:
    """Temporal-difference learner hyperparameters"""

    alpha: float
    gamma: float
    epsilon0: float
    decay: float
    eps_min: float

    @classmethod
    def from_dict(cls: Type["AgentCfg"], data: dict) -> "Self":
        """Get Instance from dict values"""
        return cls(**{k: float(v) for k, v in data.items()})


@dataclass
class TrainingCfg:
    """Experiment protocol"""

    episodes: int
    max_steps: int
    interval: int
    window: int
    seed: int
    jobs: int


@dataclass
class Config:
    """Configuration Model"""

    logs: LogCfg = field(default_factory=LogCfg)
    environment: EnvironmentCfg = None
    agent: AgentCfg = None
    training: TrainingCfg = None

    @classmethod
    def from_dict(cls: Type["Config"], data: dict) -> "Self":
        """Get Instance from dict values"""

        # Parse into dataclass
        return cls(
            logs=LogCfg.from_dict(data["logs"]),
            environment=EnvironmentCfg.from_dict(data["environment"]),
            agent=AgentCfg.from_dict(data["agent"]),
            training=TrainingCfg(**data["training"]),
        )
