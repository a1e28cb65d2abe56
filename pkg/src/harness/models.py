"""Training record models"""

from dataclasses import dataclass, field
from src.agents import AgentConfig, Algorithm, QTable


@dataclass(frozen=True, slots=True)
class EpisodeRecord:
    """Monitor entry for one episode"""

    index: int
    steps: int
    cumulative_reward: float
    epsilon: float
    crashed: bool

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError(f"Episode {self.index} has {self.steps} steps, at least 1 expected")


@dataclass
class RunLog:
    """Every episode of one training run"""

    env_id: str
    algorithm: Algorithm
    config: AgentConfig
    seed: int
    episodes: list[EpisodeRecord] = field(default_factory=list)
    max_steps: int | None = None
    qtable: QTable = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        for expected, record in enumerate(self.episodes):
            if record.index != expected:
                raise ValueError(f"Episode indices must be contiguous from 0, found {record.index} at {expected}")
            if self.max_steps is not None:
                if record.steps > self.max_steps:
                    raise ValueError(f"Episode {record.index} exceeds max_steps={self.max_steps}")
                if not record.crashed and record.steps != self.max_steps:
                    raise ValueError(f"Episode {record.index} ended without crashing before max_steps")

    def __len__(self) -> int:
        return len(self.episodes)

    def __str__(self) -> str:
        return f"{self.algorithm.value} on {self.env_id} seed={self.seed} ({len(self.episodes)} episodes)"

    @property
    def label(self) -> str:
        """Short name used in tables and legends"""
        return self.algorithm.value

    @property
    def rewards(self) -> list[float]:
        """Cumulative reward per episode"""
        return [record.cumulative_reward for record in self.episodes]


@dataclass(frozen=True, slots=True)
class IntervalRow:
    """Mean cumulative reward over episodes [start, end)"""

    start: int
    end: int
    mean: float

    @property
    def length(self) -> int:
        """Episodes in the interval"""
        return self.end - self.start

    def __str__(self) -> str:
        return f"{self.start}-{self.end}"


@dataclass(frozen=True, slots=True)
class ComparisonRow:
    """One interval of two runs side by side"""

    start: int
    end: int
    mean_a: float
    mean_b: float

    @property
    def difference(self) -> float:
        """mean_a - mean_b"""
        return self.mean_a - self.mean_b


@dataclass(frozen=True)
class Comparison:
    """Interval table of two runs plus the first interval each one turns positive"""

    label_a: str
    label_b: str
    rows: list[ComparisonRow]
    onset_a: int | None
    onset_b: int | None


@dataclass(frozen=True)
class ThroughputReport:
    """Headless stepping speed"""

    steps: int
    seconds: float
    episodes: int
    action_duration: float

    @property
    def steps_per_second(self) -> float:
        """Environment steps per wall-clock second"""
        return self.steps / self.seconds if self.seconds > 0 else float("inf")

    @property
    def real_time_factor(self) -> float:
        """Simulated seconds per wall-clock second"""
        return self.steps_per_second * self.action_duration

    def __str__(self) -> str:
        return (
            f"{self.steps} steps in {self.seconds:.2f} s ({self.episodes} episodes): "
            f"{self.steps_per_second:,.0f} steps/s, RTF {self.real_time_factor:,.0f}"
        )
