"""CSV artifacts of training runs"""

import csv
import logging
from pathlib import Path
from src.agents import AgentConfig, Algorithm
from .exceptions import RunLogFormatError
from .models import Comparison, EpisodeRecord, IntervalRow, RunLog

RUN_HEADER = ["episode", "steps", "cum_reward", "epsilon", "crashed"]
INTERVAL_HEADER = ["interval_start", "interval_end", "mean_reward"]

log = logging.getLogger("Exporters")


def _num(value: float) -> str:
    """17 significant digits, enough to read back the exact double"""
    return f"{value:.17g}"


def write_run_csv(run: RunLog, path: Path) -> None:
    """One row per episode"""
    with open(path, mode="w", encoding="utf8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(RUN_HEADER)
        for record in run.episodes:
            writer.writerow(
                [
                    record.index,
                    record.steps,
                    _num(record.cumulative_reward),
                    _num(record.epsilon),
                    "true" if record.crashed else "false",
                ]
            )
    log.info("Wrote %s episodes to %s", len(run.episodes), path)


def read_run_csv(
    path: Path,
    env_id: str = "",
    algorithm: Algorithm = Algorithm.QLEARNING,
    config: AgentConfig = None,
    seed: int = 0,
) -> RunLog:
    """Rebuild a RunLog from `write_run_csv` output. Run metadata is not stored in the file.

    Raises:
        RunLogFormatError: Missing header, bad row or unreadable file
    """
    records = []
    try:
        with open(path, mode="r", encoding="utf8", newline="") as file:
            reader = csv.reader(file)
            header = next(reader, None)
            if header != RUN_HEADER:
                raise RunLogFormatError(f"{path}: expected header {','.join(RUN_HEADER)}, got {header}")
            for line_no, row in enumerate(reader, start=2):
                if len(row) != len(RUN_HEADER) or row[4] not in ("true", "false"):
                    raise RunLogFormatError(f"{path}:{line_no}: malformed row {row}")
                try:
                    records.append(
                        EpisodeRecord(
                            index=int(row[0]),
                            steps=int(row[1]),
                            cumulative_reward=float(row[2]),
                            epsilon=float(row[3]),
                            crashed=row[4] == "true",
                        )
                    )
                except ValueError as e:
                    raise RunLogFormatError(f"{path}:{line_no}: {e}") from e
    except OSError as e:
        raise RunLogFormatError(f"Failed to read run log {path}. Error: {e}") from e

    try:
        return RunLog(env_id=env_id, algorithm=algorithm, config=config or AgentConfig(), seed=seed, episodes=records)
    except ValueError as e:
        raise RunLogFormatError(f"{path}: {e}") from e


def write_interval_csv(rows: list[IntervalRow], path: Path) -> None:
    """Interval table of one run"""
    with open(path, mode="w", encoding="utf8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(INTERVAL_HEADER)
        for row in rows:
            writer.writerow([row.start, row.end, _num(row.mean)])
    log.info("Wrote %s intervals to %s", len(rows), path)


def write_benchmark_csv(tables: dict[str, list[IntervalRow]], path: Path) -> None:
    """Interval tables of several algorithms joined on their intervals, one column per algorithm"""
    labels = list(tables)
    first = tables[labels[0]]
    with open(path, mode="w", encoding="utf8", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(["interval_start", "interval_end"] + labels)
        for i, row in enumerate(first):
            writer.writerow([row.start, row.end] + [_num(tables[label][i].mean) for label in labels])
    log.info("Wrote benchmark table to %s", path)


def format_comparison(comparison: Comparison) -> str:
    """Plain-text interval table with a learning onset row per algorithm"""
    a, b = comparison.label_a, comparison.label_b
    width = max(len(a), len(b), 10)
    lines = [f"{'Episode interval':<18}{a:>{width}}  {b:>{width}}"]
    for row in comparison.rows:
        lines.append(f"{f'{row.start}-{row.end}':<18}{row.mean_a:>{width}.1f}  {row.mean_b:>{width}.1f}")

    def onset(index: int | None) -> str:
        if index is None:
            return "never"
        row = comparison.rows[index]
        return f"{row.start}-{row.end}"

    lines.append(f"{'Learning onset':<18}{onset(comparison.onset_a):>{width}}  {onset(comparison.onset_b):>{width}}")
    return "\n".join(lines) + "\n"
