"""Command line parsing"""

import argparse
from pathlib import Path
from src.agents import Algorithm
from src.config import Config, ConfigError, check_range

PROG = "gymnav"


def _ranged(name: str, kind: type):
    """argparse type converting to `kind` and checking the config range of `name`"""

    def convert(text: str):
        try:
            value = kind(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"invalid {kind.__name__} value: '{text}'") from e
        try:
            check_range(name, value)
        except ConfigError as e:
            raise argparse.ArgumentTypeError(str(e)) from e
        return value

    convert.__name__ = name
    return convert


def pre_parse_config(argv: list[str]) -> Path | None:
    """Settings file named on the command line, looked up before the full parser exists"""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", type=Path, default=None)
    known, _ = pre.parse_known_args(argv)
    return known.config


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="Settings file (default: GYMNAV_CONFIG or built-in)")


def _add_agent(parser: argparse.ArgumentParser, cfg: Config) -> None:
    agent = cfg.agent
    group = parser.add_argument_group("agent")
    group.add_argument("--alpha", type=_ranged("alpha", float), default=agent.alpha, help="Learning rate")
    group.add_argument("--gamma", type=_ranged("gamma", float), default=agent.gamma, help="Discount factor")
    group.add_argument(
        "--epsilon", type=_ranged("epsilon0", float), default=agent.epsilon0, help="Initial exploration rate"
    )
    group.add_argument("--decay", type=_ranged("decay", float), default=agent.decay, help="Epsilon decay per episode")
    group.add_argument("--eps-min", type=_ranged("eps_min", float), default=agent.eps_min, help="Exploration floor")


def _add_training(parser: argparse.ArgumentParser, cfg: Config) -> None:
    training = cfg.training
    parser.add_argument("--env", required=True, help="Registered environment id")
    parser.add_argument(
        "--episodes", type=_ranged("episodes", int), default=training.episodes, help="Episodes per run"
    )
    parser.add_argument(
        "--max-steps", type=_ranged("max_steps", int), default=training.max_steps, help="Step cap per episode"
    )
    parser.add_argument("--seed", type=_ranged("seed", int), default=training.seed, help="Random seed")
    parser.add_argument("--out", type=Path, required=True, help="Output directory")


def build_parser(cfg: Config) -> argparse.ArgumentParser:
    """Full parser, defaults taken from the loaded settings"""
    parser = argparse.ArgumentParser(
        prog=PROG, description="Tabular Q-Learning and Sarsa on 2D Turtlebot LIDAR environments"
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    list_envs = subparsers.add_parser("list-envs", help="List registered environments")
    _add_common(list_envs)

    train = subparsers.add_parser("train", help="Train one agent and write its artifacts")
    _add_common(train)
    _add_training(train, cfg)
    train.add_argument("--algo", required=True, choices=Algorithm.values(), help="Learning algorithm")
    _add_agent(train, cfg)

    benchmark = subparsers.add_parser("benchmark", help="Train both algorithms over several seeds and compare")
    _add_common(benchmark)
    _add_training(benchmark, cfg)
    benchmark.add_argument("--seeds", type=_ranged("seeds", int), default=5, help="Seeds per algorithm")
    benchmark.add_argument(
        "--jobs", type=_ranged("jobs", int), default=cfg.training.jobs, help="Parallel worker processes"
    )
    _add_agent(benchmark, cfg)

    render = subparsers.add_parser("render", help="Draw a world, optionally with a greedy rollout")
    _add_common(render)
    render.add_argument("--env", required=True, help="Registered environment id")
    render.add_argument("--qtable", type=Path, default=None, help="Q-table file to roll out greedily")
    render.add_argument("--seed", type=_ranged("seed", int), default=cfg.training.seed, help="Tie-break seed")
    render.add_argument(
        "--max-steps", type=_ranged("max_steps", int), default=cfg.training.max_steps, help="Rollout step cap"
    )
    render.add_argument("--out", type=Path, required=True, help="Output SVG file")

    throughput = subparsers.add_parser("throughput", help="Measure headless stepping speed")
    _add_common(throughput)
    throughput.add_argument("--env", required=True, help="Registered environment id")
    throughput.add_argument("--steps", type=_ranged("max_steps", int), default=1_000_000, help="Steps to time")
    throughput.add_argument("--seed", type=_ranged("seed", int), default=cfg.training.seed, help="Random seed")

    return parser
