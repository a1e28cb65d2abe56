"""Tabular temporal-difference agents"""

from .models import Algorithm, AgentConfig, QTable
from .td_learning import (
    RngState,
    make_rng,
    choose_action,
    q_learning_update,
    sarsa_update,
    decay_epsilon,
    TDAgent,
    QLearningAgent,
    SarsaAgent,
    make_agent,
)
from .qtable_io import format_qtable, parse_qtable, save_qtable, load_qtable
from .exceptions import AgentError, UnknownAlgorithm, QTableFormatError

__all__ = [
    "Algorithm",
    "AgentConfig",
    "QTable",
    "RngState",
    "make_rng",
    "choose_action",
    "q_learning_update",
    "sarsa_update",
    "decay_epsilon",
    "TDAgent",
    "QLearningAgent",
    "SarsaAgent",
    "make_agent",
    "format_qtable",
    "parse_qtable",
    "save_qtable",
    "load_qtable",
    "AgentError",
    "UnknownAlgorithm",
    "QTableFormatError",
]
