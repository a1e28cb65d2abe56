"""Subcommand implementations. Each returns an exit status; library errors propagate to the caller."""

import argparse
import logging
from pathlib import Path
from src.agents import AgentConfig, Algorithm, load_qtable, make_agent, save_qtable
from src.config import Config
from src.environment import Registry
from src.harness import (
    benchmark,
    compare_tables,
    format_comparison,
    interval_averages,
    mean_curve,
    mean_intervals,
    measure_throughput,
    plot_benchmark,
    plot_learning_curve,
    plot_world,
    rollout,
    train,
    write_benchmark_csv,
    write_interval_csv,
    write_run_csv,
)

RUN_CSV = "run.csv"
INTERVALS_CSV = "intervals.csv"
CURVE_SVG = "curve.svg"
QTABLE_FILE = "qtable.txt"
BENCHMARK_CSV = "benchmark.csv"
BENCHMARK_SVG = "benchmark.svg"

log = logging.getLogger("Gymnav-CLI")


def run_csv_name(algorithm: Algorithm, seed: int) -> str:
    """File name of one benchmark run"""
    return f"{algorithm.value}_seed{seed}.csv"


def agent_config(args: argparse.Namespace) -> AgentConfig:
    """Hyperparameters from parsed flags"""
    return AgentConfig(
        alpha=args.alpha,
        gamma=args.gamma,
        epsilon0=args.epsilon,
        decay=args.decay,
        eps_min=args.eps_min,
    )


def list_envs(registry: Registry) -> str:
    """One line per registered environment, sorted by id. Empty registry, empty text."""
    return "".join(f"{spec}\n" for spec in registry.specs())


def train_cmd(args: argparse.Namespace, cfg: Config, registry: Registry) -> int:
    """Train one agent and write run.csv, intervals.csv, curve.svg and qtable.txt"""
    registry.spec(args.env)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)

    run = train(
        args.env,
        args.algo,
        agent_config(args),
        args.episodes,
        args.max_steps,
        args.seed,
        registry=registry,
        env_overrides=cfg.environment.as_kwargs(),
    )
    intervals = interval_averages(run, cfg.training.interval)

    write_run_csv(run, out / RUN_CSV)
    write_interval_csv(intervals, out / INTERVALS_CSV)
    plot_learning_curve(run, out / CURVE_SVG, cfg.training.window)
    save_qtable(run.qtable, out / QTABLE_FILE)

    crashes = sum(record.crashed for record in run.episodes)
    print(f"{run}: {crashes} crashes, last interval mean {intervals[-1].mean:.1f}, {len(run.qtable)} q-values")
    print(f"Artifacts written to {out}")
    return 0


def benchmark_cmd(args: argparse.Namespace, cfg: Config, registry: Registry) -> int:
    """Train both algorithms on seeds seed..seed+k-1, write every run plus the averaged table and curves"""
    registry.spec(args.env)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)

    seeds = list(range(args.seed, args.seed + args.seeds))
    runs = benchmark(
        args.env,
        agent_config(args),
        args.episodes,
        args.max_steps,
        seeds,
        jobs=args.jobs,
        registry=registry,
        env_overrides=cfg.environment.as_kwargs(),
    )

    for (algorithm, seed), run in sorted(runs.items(), key=lambda item: (item[0][0].value, item[0][1])):
        write_run_csv(run, out / run_csv_name(algorithm, seed))

    tables = {}
    curves = {}
    for algorithm in Algorithm:
        logs = [runs[(algorithm, seed)] for seed in seeds]
        tables[algorithm.value] = mean_intervals(logs, cfg.training.interval)
        curves[algorithm.value] = mean_curve(logs, cfg.training.window)

    write_benchmark_csv(tables, out / BENCHMARK_CSV)
    plot_benchmark(curves, out / BENCHMARK_SVG, title=f"{args.env} ({len(seeds)} seeds)")

    qlearning, sarsa = Algorithm.QLEARNING.value, Algorithm.SARSA.value
    comparison = compare_tables(qlearning, tables[qlearning], sarsa, tables[sarsa])
    print(format_comparison(comparison), end="")
    return 0


def render_cmd(args: argparse.Namespace, cfg: Config, registry: Registry) -> int:
    """Draw the world and, given a Q-table, one greedy rollout"""
    env = registry.make(args.env, **cfg.environment.as_kwargs())

    trajectory = None
    if args.qtable is not None:
        q = load_qtable(args.qtable)
        agent = make_agent(Algorithm.QLEARNING, AgentConfig(), args.seed, q=q)
        trajectory = rollout(env, agent, args.max_steps)
        log.info("Greedy rollout on %s lasted %s steps", args.env, len(trajectory) - 1)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    plot_world(env.world, args.out, trajectory)
    env.close()
    print(f"Rendered {args.env} to {args.out}")
    return 0


def throughput_cmd(args: argparse.Namespace, cfg: Config, registry: Registry) -> int:
    """Time random-action stepping"""
    env = registry.make(args.env, **cfg.environment.as_kwargs())
    report = measure_throughput(env, args.steps, args.seed)
    env.close()
    print(f"{args.env}: {report}")
    return 0
