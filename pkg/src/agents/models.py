"""Tabular agent models"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator
from src.environment import ACTIONS, Action


class Algorithm(Enum):
    """Supported temporal-difference control algorithms"""

    QLEARNING = "qlearning"
    SARSA = "sarsa"

    @classmethod
    def values(cls) -> list[str]:
        """List of values within Algorithm"""
        return [member.value for member in cls]

    @classmethod
    def _missing_(cls, value: object) -> Any:
        if not isinstance(value, str):
            return None
        value = value.strip().lower().replace("-", "").replace("_", "")
        for member in cls:
            if member.value == value:
                return member
        return None


@dataclass(frozen=True)
class AgentConfig:
    """Learning rate, discount and exploration schedule"""

    alpha: float = 0.2
    gamma: float = 0.9
    epsilon0: float = 0.9
    decay: float = 0.9986
    eps_min: float = 0.05

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f"gamma must be in [0, 1), got {self.gamma}")
        if not 0.0 <= self.epsilon0 <= 1.0:
            raise ValueError(f"epsilon0 must be in [0, 1], got {self.epsilon0}")
        if not 0.0 < self.decay <= 1.0:
            raise ValueError(f"decay must be in (0, 1], got {self.decay}")
        if not 0.0 <= self.eps_min <= 1.0:
            raise ValueError(f"eps_min must be in [0, 1], got {self.eps_min}")


class QTable:
    """Action values keyed by (state key, action). Absent entries read as 0."""

    def __init__(self, entries: dict[tuple[str, Action], float] = None) -> None:
        self._entries: dict[tuple[str, Action], float] = dict(entries or {})

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, item: tuple[str, Action]) -> bool:
        return item in self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"QTable({len(self._entries)} entries, {len(self.states())} states)"

    def get(self, state: str, action: Action) -> float:
        """Value of one entry, 0.0 when absent. Never creates the entry."""
        return self._entries.get((state, action), 0.0)

    def set(self, state: str, action: Action, value: float) -> None:
        """Store one entry"""
        if not math.isfinite(value):
            raise ValueError(f"Q-values must be finite, got {value} for ({state}, {action.value})")
        self._entries[(state, action)] = value

    def values(self, state: str) -> list[float]:
        """Values of every action in `state`, in action order"""
        entries = self._entries
        return [entries.get((state, action), 0.0) for action in ACTIONS]

    def max_value(self, state: str) -> float:
        """Largest action value in `state`"""
        return max(self.values(state))

    def items(self) -> Iterator[tuple[tuple[str, Action], float]]:
        """All stored entries"""
        return iter(self._entries.items())

    def states(self) -> frozenset[str]:
        """Distinct state keys with at least one stored entry"""
        return frozenset(state for state, _ in self._entries)

    def copy(self) -> "QTable":
        """Independent copy"""
        return QTable(self._entries)
