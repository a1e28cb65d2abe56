"""Training harness: episode engine, statistics and exporters"""

from .models import EpisodeRecord, RunLog, IntervalRow, ComparisonRow, Comparison, ThroughputReport
from .runner import EpisodicEnv, SimulatedEnv, run_episode, train, benchmark, rollout, measure_throughput
from .analysis import (
    interval_averages,
    moving_average,
    learning_onset,
    compare,
    compare_tables,
    mean_intervals,
    mean_curve,
)
from .exporters import write_run_csv, read_run_csv, write_interval_csv, write_benchmark_csv, format_comparison
from .plots import plot_learning_curve, plot_benchmark, plot_world
from .exceptions import HarnessError, EmptyRunLog, RunLogMismatch, RunLogFormatError

__all__ = [
    "EpisodeRecord",
    "RunLog",
    "IntervalRow",
    "ComparisonRow",
    "Comparison",
    "ThroughputReport",
    "EpisodicEnv",
    "SimulatedEnv",
    "run_episode",
    "train",
    "benchmark",
    "rollout",
    "measure_throughput",
    "interval_averages",
    "moving_average",
    "learning_onset",
    "compare",
    "compare_tables",
    "mean_intervals",
    "mean_curve",
    "write_run_csv",
    "read_run_csv",
    "write_interval_csv",
    "write_benchmark_csv",
    "format_comparison",
    "plot_learning_curve",
    "plot_benchmark",
    "plot_world",
    "HarnessError",
    "EmptyRunLog",
    "RunLogMismatch",
    "RunLogFormatError",
]
