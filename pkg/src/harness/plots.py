"""SVG figures: learning curves, benchmark curves and world renders"""

import logging
import math
from pathlib import Path
import matplotlib

matplotlib.use("Agg")
# Fixed element ids so repeated renders are byte-identical
matplotlib.rcParams["svg.hashsalt"] = "gymnav"

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402
from src.geometry import WorldMap  # noqa: E402
from src.vehicle import RobotPose  # noqa: E402
from .analysis import moving_average  # noqa: E402
from .models import RunLog  # noqa: E402

SVG_METADATA = {"Date": None}

log = logging.getLogger("Plots")


def _save(fig: plt.Figure, path: Path) -> None:
    fig.savefig(path, format="svg", metadata=SVG_METADATA)
    plt.close(fig)
    log.info("Wrote %s", path)


def plot_learning_curve(run: RunLog, path: Path, window: int = 100) -> None:
    """Cumulated reward per episode (blue) with its moving average (red)"""
    episodes = range(len(run.episodes))
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(episodes, run.rewards, color="tab:blue", linewidth=0.6, gid="raw")
    ax.plot(episodes, moving_average(run, window), color="tab:red", linewidth=1.5, gid="average")
    ax.set_title(f"{run.env_id} - {run.algorithm.value} (seed {run.seed})")
    ax.set_xlabel("episode")
    ax.set_ylabel("cumulated reward")
    ax.grid(True, "major", "y", alpha=0.3)
    _save(fig, path)


def plot_benchmark(curves: dict[str, list[float]], path: Path, title: str = "") -> None:
    """One averaged learning curve per algorithm"""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for label, curve in curves.items():
        ax.plot(range(len(curve)), curve, linewidth=1.5, label=label, gid=f"curve-{label}")
    ax.set_title(title)
    ax.set_xlabel("episode")
    ax.set_ylabel("cumulated reward")
    ax.grid(True, "major", "y", alpha=0.3)
    ax.legend(loc="upper left")
    _save(fig, path)


def plot_world(world: WorldMap, path: Path, trajectory: list[RobotPose] = None) -> None:
    """Walls, start pose and optionally the path of one rollout"""
    fig, ax = plt.subplots(figsize=(7, 7))
    walls = LineCollection([(seg.a, seg.b) for seg in world.segments], colors="black", linewidths=2)
    walls.set_gid("walls")
    ax.add_collection(walls)

    start = world.start
    ax.plot([start.x], [start.y], marker="o", color="tab:green", gid="start")
    ax.annotate(
        "",
        xy=(start.x + 0.6 * math.cos(start.theta), start.y + 0.6 * math.sin(start.theta)),
        xytext=(start.x, start.y),
        arrowprops={"arrowstyle": "->", "color": "tab:green"},
    )

    if trajectory:
        ax.plot(
            [pose.x for pose in trajectory],
            [pose.y for pose in trajectory],
            color="tab:red",
            linewidth=1,
            gid="trajectory",
        )

    min_x, min_y, max_x, max_y = world.bounds
    ax.set_xlim(min_x - 0.5, max_x + 0.5)
    ax.set_ylim(min_y - 0.5, max_y + 0.5)
    ax.set_aspect("equal")
    ax.set_title(world.name)
    ax.set_xlabel("x (m)")
    ax.set_ylabel("y (m)")
    _save(fig, path)
