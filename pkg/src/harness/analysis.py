"""Learning curve statistics"""

import numpy as np
from .exceptions import EmptyRunLog, RunLogMismatch
from .models import Comparison, ComparisonRow, IntervalRow, RunLog


def _series(log: RunLog) -> np.ndarray:
    if not log.episodes:
        raise EmptyRunLog(f"{log} has no episodes")
    return np.array(log.rewards, dtype=float)


def interval_averages(log: RunLog, interval: int) -> list[IntervalRow]:
    """Mean cumulative reward over consecutive blocks of `interval` episodes.

    A trailing block shorter than `interval` is reported with its own length.

    Raises:
        EmptyRunLog: The log has no episodes
    """
    if interval < 1:
        raise ValueError(f"interval must be >= 1, got {interval}")
    rewards = _series(log)
    rows = []
    for start in range(0, rewards.size, interval):
        block = rewards[start : start + interval]
        rows.append(IntervalRow(start=start, end=start + block.size, mean=float(block.mean())))
    return rows


def _trailing_mean(values: np.ndarray, window: int) -> list[float]:
    csum = np.concatenate(([0.0], np.cumsum(values)))
    upper = np.arange(1, values.size + 1)
    lower = np.maximum(upper - window, 0)
    return ((csum[upper] - csum[lower]) / (upper - lower)).tolist()


def moving_average(log: RunLog, window: int) -> list[float]:
    """Trailing mean over the last `window` episodes; early indices average what is available"""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    return _trailing_mean(np.array(log.rewards, dtype=float), window)


def learning_onset(means: list[float]) -> int | None:
    """Index of the first interval with a positive mean, None if it never happens"""
    for i, mean in enumerate(means):
        if mean > 0:
            return i
    return None


def compare(log_a: RunLog, log_b: RunLog, interval: int) -> Comparison:
    """Side-by-side interval means of two runs with their learning onsets.

    Raises:
        RunLogMismatch: Episode counts differ
    """
    if len(log_a) != len(log_b):
        raise RunLogMismatch(f"Cannot compare {log_a} with {log_b}: episode counts differ")

    return compare_tables(
        log_a.label, interval_averages(log_a, interval), log_b.label, interval_averages(log_b, interval)
    )


def compare_tables(label_a: str, rows_a: list[IntervalRow], label_b: str, rows_b: list[IntervalRow]) -> Comparison:
    """Join two interval tables on their intervals"""
    if [(a.start, a.end) for a in rows_a] != [(b.start, b.end) for b in rows_b]:
        raise RunLogMismatch(f"Interval tables of {label_a} and {label_b} do not line up")

    rows = [ComparisonRow(start=a.start, end=a.end, mean_a=a.mean, mean_b=b.mean) for a, b in zip(rows_a, rows_b)]
    return Comparison(
        label_a=label_a,
        label_b=label_b,
        rows=rows,
        onset_a=learning_onset([row.mean for row in rows_a]),
        onset_b=learning_onset([row.mean for row in rows_b]),
    )


def mean_intervals(logs: list[RunLog], interval: int) -> list[IntervalRow]:
    """Interval means averaged across runs of equal length (one row per interval)"""
    if not logs:
        raise EmptyRunLog("No runs to average")
    if len({len(log) for log in logs}) != 1:
        raise RunLogMismatch("Runs to average have different episode counts")

    tables = [interval_averages(log, interval) for log in logs]
    means = np.mean([[row.mean for row in table] for table in tables], axis=0)
    return [IntervalRow(start=row.start, end=row.end, mean=float(m)) for row, m in zip(tables[0], means)]


def mean_curve(logs: list[RunLog], window: int) -> list[float]:
    """Moving average of the per-episode mean across runs"""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if not logs:
        raise EmptyRunLog("No runs to average")
    if len({len(log) for log in logs}) != 1:
        raise RunLogMismatch("Runs to average have different episode counts")
    return _trailing_mean(np.mean([log.rewards for log in logs], axis=0), window)
