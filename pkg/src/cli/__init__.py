"""Command line interface"""

from .parser import PROG, build_parser, pre_parse_config
from .commands import (
    RUN_CSV,
    INTERVALS_CSV,
    CURVE_SVG,
    QTABLE_FILE,
    BENCHMARK_CSV,
    BENCHMARK_SVG,
    run_csv_name,
    agent_config,
    list_envs,
    train_cmd,
    benchmark_cmd,
    render_cmd,
    throughput_cmd,
)

__all__ = [
    "PROG",
    "build_parser",
    "pre_parse_config",
    "RUN_CSV",
    "INTERVALS_CSV",
    "CURVE_SVG",
    "QTABLE_FILE",
    "BENCHMARK_CSV",
    "BENCHMARK_SVG",
    "run_csv_name",
    "agent_config",
    "list_envs",
    "train_cmd",
    "benchmark_cmd",
    "render_cmd",
    "throughput_cmd",
]
