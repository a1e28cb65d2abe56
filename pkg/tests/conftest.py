"""Shared fixtures"""

import pytest
from src.agents import make_rng
from src.environment import EnvConfig, Registry, TurtlebotLidarEnv
from src.geometry import Segment, WorldMap
from src.vehicle import RobotPose


def box_world(name: str, width: float, height: float, start: RobotPose) -> WorldMap:
    """Closed rectangle with its lower left corner at the origin"""
    corners = [(0.0, 0.0), (width, 0.0), (width, height), (0.0, height)]
    segments = tuple(Segment(a=corners[i], b=corners[(i + 1) % 4]) for i in range(4))
    return WorldMap(name=name, segments=segments, start=start)


@pytest.fixture
def square_world() -> WorldMap:
    """Empty 10 x 10 room, robot in the middle facing +x"""
    return box_world("square", 10.0, 10.0, RobotPose(5.0, 5.0, 0.0))


@pytest.fixture
def open_world() -> WorldMap:
    """Room large enough that short runs never reach a wall"""
    return box_world("open", 200.0, 200.0, RobotPose(100.0, 100.0, 0.0))


@pytest.fixture
def wall_world() -> WorldMap:
    """Robot 0.25 m from the east wall, facing it"""
    return box_world("wall", 10.0, 10.0, RobotPose(9.75, 5.0, 0.0))


@pytest.fixture
def square_env(square_world: WorldMap) -> TurtlebotLidarEnv:
    return TurtlebotLidarEnv(EnvConfig(world=square_world), env_id="SquareTest-v0")


@pytest.fixture
def empty_registry() -> Registry:
    return Registry()


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture
def make_box():
    """Factory for rectangular rooms"""
    return box_world
