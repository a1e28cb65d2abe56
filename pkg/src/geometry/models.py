"""Segment world models"""

import math
from dataclasses import dataclass, field
from functools import cached_property
import numpy as np
from src.vehicle import RobotPose

Point = tuple[float, float]

UNIT_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class Segment:
    """A wall between two points, meters"""

    a: Point
    b: Point

    @property
    def length(self) -> float:
        """Euclidean length"""
        return math.hypot(self.b[0] - self.a[0], self.b[1] - self.a[1])

    def shares_endpoint(self, other: "Segment") -> bool:
        """True if both walls meet at a common vertex"""
        return bool({self.a, self.b} & {other.a, other.b})


@dataclass(frozen=True, slots=True)
class Ray:
    """Half-line from `origin` along unit `direction`"""

    origin: Point
    direction: Point

    def __post_init__(self) -> None:
        norm = math.hypot(*self.direction)
        if abs(norm - 1.0) > UNIT_TOLERANCE:
            raise ValueError(f"Ray direction must be a unit vector, got norm {norm}")

    @classmethod
    def from_angle(cls, origin: Point, angle: float) -> "Ray":
        """Ray leaving `origin` at a world-frame angle"""
        return cls(origin=origin, direction=(math.cos(angle), math.sin(angle)))


@dataclass(frozen=True)
class WorldMap:
    """Named set of walls plus the start pose of the vehicle"""

    name: str
    segments: tuple[Segment, ...]
    start: RobotPose

    # Column arrays shared by the vectorized queries. Built once per world.
    @cached_property
    def origins(self) -> tuple[np.ndarray, np.ndarray]:
        """Wall start points as (ax, ay)"""
        coords = np.array([seg.a for seg in self.segments], dtype=float)
        return coords[:, 0].copy(), coords[:, 1].copy()

    @cached_property
    def deltas(self) -> tuple[np.ndarray, np.ndarray]:
        """Wall direction vectors b - a as (sx, sy)"""
        coords = np.array([(seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]) for seg in self.segments], dtype=float)
        return coords[:, 0].copy(), coords[:, 1].copy()

    @cached_property
    def lengths_sq(self) -> np.ndarray:
        """Squared wall lengths"""
        sx, sy = self.deltas
        return sx * sx + sy * sy

    @cached_property
    def lengths(self) -> np.ndarray:
        """Wall lengths"""
        return np.sqrt(self.lengths_sq)

    @cached_property
    def normals(self) -> np.ndarray:
        """Rows (sy, -sx): `directions @ normals` is the cross product d x s per beam and wall"""
        sx, sy = self.deltas
        return np.array([sy, -sx])

    @cached_property
    def anchors(self) -> np.ndarray:
        """Rows (-ay, ax): `directions @ anchors` is the cross product a x d per beam and wall"""
        ax, ay = self.origins
        return np.array([-ay, ax])

    @cached_property
    def anchor_cross(self) -> np.ndarray:
        """a x s per wall"""
        ax, ay = self.origins
        sx, sy = self.deltas
        return ax * sy - ay * sx

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        """(min_x, min_y, max_x, max_y) of all wall endpoints"""
        xs = [p[0] for seg in self.segments for p in (seg.a, seg.b)]
        ys = [p[1] for seg in self.segments for p in (seg.a, seg.b)]
        return min(xs), min(ys), max(xs), max(ys)

    def __str__(self) -> str:
        return f"{self.name} ({len(self.segments)} walls, start {self.start})"


@dataclass(frozen=True)
class LidarScan:
    """Beam ranges ordered from the rightmost to the leftmost beam"""

    ranges: tuple[float, ...]
    fov: float
    max_range: float
    angles: tuple[float, ...] = field(default=(), compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.ranges)
