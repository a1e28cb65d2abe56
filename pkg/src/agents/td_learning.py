"""Tabular temporal-difference control: epsilon-greedy Q-Learning and Sarsa"""

import logging
import numpy as np
from src.environment import ACTIONS, Action, DiscreteState
from .exceptions import UnknownAlgorithm
from .models import AgentConfig, Algorithm, QTable

RngState = np.random.Generator


def make_rng(seed: int) -> RngState:
    """Seeded PCG64 generator. Same seed, same draws on every platform."""
    return np.random.Generator(np.random.PCG64(seed))


def _key(state: DiscreteState | str) -> str:
    return state if isinstance(state, str) else state.key


def choose_action(q: QTable, state: DiscreteState | str, epsilon: float, rng: RngState) -> Action:
    """Epsilon-greedy action selection.

    Draws one uniform number for the explore/exploit decision and one more
    integer whenever two or more actions are candidates.

    Args:
        q (QTable): Action values
        state (DiscreteState | str): Current state or its key
        epsilon (float): Exploration probability in [0, 1]
        rng (RngState): Generator, advanced in place

    Returns:
        Action: Uniformly random with probability epsilon, else a greedy action with ties broken uniformly
    """
    if rng.random() < epsilon:
        return ACTIONS[int(rng.integers(len(ACTIONS)))]

    values = q.values(_key(state))
    best = max(values)
    candidates = [action for action, value in zip(ACTIONS, values) if value == best]
    if len(candidates) == 1:
        return candidates[0]
    return candidates[int(rng.integers(len(candidates)))]


def _move_toward(q: QTable, s: str, a: Action, target: float, cfg: AgentConfig) -> None:
    current = q.get(s, a)
    q.set(s, a, current + cfg.alpha * (target - current))


def q_learning_update(
    q: QTable, s: str, a: Action, r: float, s_next: str, terminal: bool, cfg: AgentConfig
) -> None:
    """Off-policy update toward r + gamma * max_a' Q(s', a'). Terminal targets are r alone."""
    target = r if terminal else r + cfg.gamma * q.max_value(s_next)
    _move_toward(q, s, a, target, cfg)


def sarsa_update(
    q: QTable, s: str, a: Action, r: float, s_next: str, a_next: Action | None, terminal: bool, cfg: AgentConfig
) -> None:
    """On-policy update toward r + gamma * Q(s', a'). Terminal targets are r alone."""
    target = r if terminal else r + cfg.gamma * q.get(s_next, a_next)
    _move_toward(q, s, a, target, cfg)


def decay_epsilon(epsilon: float, cfg: AgentConfig) -> float:
    """One multiplicative decay step, floored at eps_min"""
    return max(cfg.eps_min, epsilon * cfg.decay)


class TDAgent:
    """Q-table, hyperparameters, exploration rate and generator owned by one training loop"""

    algorithm: Algorithm

    def __init__(self, cfg: AgentConfig, seed: int, q: QTable = None) -> None:
        self.cfg = cfg
        self.seed = seed
        self.q = q if q is not None else QTable()
        self.rng = make_rng(seed)
        self.epsilon = cfg.epsilon0
        self.log = logging.getLogger(f"Agent.{self.algorithm.value}")

    def __str__(self) -> str:
        return f"{self.algorithm.value}(alpha={self.cfg.alpha}, gamma={self.cfg.gamma}, epsilon={self.epsilon:.4f})"

    def choose_action(self, state: DiscreteState | str) -> Action:
        """Epsilon-greedy choice at the current exploration rate"""
        return choose_action(self.q, state, self.epsilon, self.rng)

    def greedy_action(self, state: DiscreteState | str) -> Action:
        """Greedy choice, ties broken with the agent's generator"""
        return choose_action(self.q, state, 0.0, self.rng)

    def end_episode(self) -> float:
        """Decay epsilon once. Returns the new value."""
        self.epsilon = decay_epsilon(self.epsilon, self.cfg)
        return self.epsilon


class QLearningAgent(TDAgent):
    """Off-policy learner"""

    algorithm = Algorithm.QLEARNING

    def learn(self, s: DiscreteState | str, a: Action, r: float, s_next: DiscreteState | str, terminal: bool) -> None:
        """Apply one Q-Learning update"""
        q_learning_update(self.q, _key(s), a, r, _key(s_next), terminal, self.cfg)


class SarsaAgent(TDAgent):
    """On-policy learner"""

    algorithm = Algorithm.SARSA

    def learn(
        self,
        s: DiscreteState | str,
        a: Action,
        r: float,
        s_next: DiscreteState | str,
        a_next: Action | None,
        terminal: bool,
    ) -> None:
        """Apply one Sarsa update"""
        sarsa_update(self.q, _key(s), a, r, _key(s_next), a_next, terminal, self.cfg)


AGENTS: dict[Algorithm, type[TDAgent]] = {
    Algorithm.QLEARNING: QLearningAgent,
    Algorithm.SARSA: SarsaAgent,
}


def make_agent(algorithm: Algorithm | str, cfg: AgentConfig, seed: int, q: QTable = None) -> TDAgent:
    """Build the learner for an algorithm id.

    Raises:
        UnknownAlgorithm: `algorithm` is not one of Algorithm's values
    """
    try:
        algorithm = Algorithm(algorithm)
    except ValueError as e:
        opts = ", ".join(Algorithm.values())
        raise UnknownAlgorithm(f"Unknown algorithm '{algorithm}', options: {opts}") from e
    return AGENTS[algorithm](cfg, seed, q)
