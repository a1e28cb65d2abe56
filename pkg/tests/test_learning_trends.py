"""Full-length training runs on Circuit2. Run with `pytest -m slow`."""

import os
import re
import statistics
import pytest
from src.agents import AgentConfig, Algorithm
from src.environment import make
from src.harness import benchmark, interval_averages, learning_onset, measure_throughput

CIRCUIT2 = "Circuit2TurtlebotLidar-v0"
SEEDS = [0, 1, 2, 3, 4]
STATE_KEY = re.compile(r"^[0-5]{5}$")

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def runs():
    jobs = min(len(SEEDS) * 2, os.cpu_count() or 1)
    return benchmark(CIRCUIT2, AgentConfig(), 3000, 1500, SEEDS, jobs=jobs)


def test_q_learning_improves(runs):
    improved = 0
    for seed in SEEDS:
        rows = interval_averages(runs[(Algorithm.QLEARNING, seed)], 200)
        if rows[-1].mean - rows[0].mean >= 300:
            improved += 1
    assert improved >= 4


def test_both_algorithms_reach_a_positive_interval(runs):
    # First positive 200 episode interval, well before epsilon bottoms out at episode 2064
    for algorithm in Algorithm:
        tables = [interval_averages(runs[(algorithm, seed)], 200) for seed in SEEDS]
        onsets = [learning_onset([row.mean for row in rows]) for rows in tables]
        assert None not in onsets
        assert statistics.median(onsets) < 10


def test_state_space_bound(runs):
    for run in runs.values():
        assert len(run.qtable) <= 7776 * 3
        assert all(STATE_KEY.match(state) for state in run.qtable.states())


def test_throughput():
    report = measure_throughput(make(CIRCUIT2), 1_000_000, seed=0)
    assert report.steps_per_second >= 20_000
    assert report.real_time_factor >= 8000
