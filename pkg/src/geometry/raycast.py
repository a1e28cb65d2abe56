"""Ray casting and wall distance queries over segment worlds"""

import math
import numpy as np
from src.vehicle import RobotPose
from .models import LidarScan, Point, Ray, Segment, WorldMap

# |r x s| below this (relative to |s|) is treated as parallel
PARALLEL_TOLERANCE = 1e-12
# Offset of a parallel ray from the wall line below which they are collinear
COLLINEAR_TOLERANCE = 1e-12


def ray_segment_intersect(ray: Ray, seg: Segment) -> float | None:
    """Distance along `ray` to the first point of `seg`.

    Endpoint grazes count as hits. A ray running along the wall reports the
    nearest overlapping point.

    Args:
        ray (Ray): Ray with unit direction
        seg (Segment): Wall to test

    Returns:
        float | None: Ray length in meters, or None on a miss
    """
    ox, oy = ray.origin
    dx, dy = ray.direction
    qx = seg.a[0] - ox
    qy = seg.a[1] - oy
    sx = seg.b[0] - seg.a[0]
    sy = seg.b[1] - seg.a[1]

    denom = dx * sy - dy * sx
    offset = qx * dy - qy * dx
    if abs(denom) <= PARALLEL_TOLERANCE * math.hypot(sx, sy):
        if abs(offset) > COLLINEAR_TOLERANCE:
            return None
        t0 = qx * dx + qy * dy
        t1 = (qx + sx) * dx + (qy + sy) * dy
        if max(t0, t1) < 0.0:
            return None
        return max(min(t0, t1), 0.0)

    t = (qx * sy - qy * sx) / denom
    u = offset / denom
    if t < 0.0 or u < 0.0 or u > 1.0:
        return None
    return t


def unit_directions(angles: np.ndarray) -> np.ndarray:
    """Rows (cos, sin) of each angle, the layout `cast_directions` takes"""
    return np.column_stack((np.cos(angles), np.sin(angles)))


def cast_directions(world: WorldMap, origin: Point, directions: np.ndarray, max_range: float) -> np.ndarray:
    """Vectorized ray cast of unit `directions` (shape (N, 2)) from one origin against every wall.

    Applies the same rules as `ray_segment_intersect` and clamps to `max_range`.
    """
    ox, oy = origin
    denom = directions @ world.normals
    parallel = np.abs(denom) <= PARALLEL_TOLERANCE * world.lengths
    # NaN fails every comparison below, so parallel pairs never hit here
    safe = np.where(parallel, np.nan, denom)

    offset = directions @ world.anchors - (directions @ (-oy, ox))[:, np.newaxis]
    t = (world.anchor_cross - np.dot((ox, oy), world.normals)) / safe
    u = offset / safe
    dist = np.where((t >= 0.0) & (u >= 0.0) & (u <= 1.0), t, np.inf)

    if parallel.any():
        collinear = parallel & (np.abs(offset) <= COLLINEAR_TOLERANCE)
        if collinear.any():
            ax, ay = world.origins
            sx, sy = world.deltas
            dx, dy = directions[:, 0:1], directions[:, 1:2]
            qx, qy = ax - ox, ay - oy
            t0 = qx * dx + qy * dy
            t1 = (qx + sx) * dx + (qy + sy) * dy
            overlap = collinear & (np.maximum(t0, t1) >= 0.0)
            dist = np.where(overlap, np.maximum(np.minimum(t0, t1), 0.0), dist)

    return np.minimum(dist.min(axis=1), max_range)


def cast_rays(world: WorldMap, origin: Point, angles: np.ndarray, max_range: float) -> np.ndarray:
    """Vectorized ray cast of many world-frame angles from one origin"""
    return cast_directions(world, origin, unit_directions(angles), max_range)


def beam_offsets(fov: float, n_beams: int) -> np.ndarray:
    """Beam angles relative to the heading, endpoint inclusive"""
    if n_beams == 1:
        return np.zeros(1)
    return -fov / 2 + np.arange(n_beams) * (fov / (n_beams - 1))


def cast_scan(world: WorldMap, pose: RobotPose, fov: float, n_beams: int, max_range: float) -> LidarScan:
    """Simulate a planar LIDAR at `pose`.

    Args:
        world (WorldMap): Walls to scan
        pose (RobotPose): Sensor pose
        fov (float): Field of view in (0, 2*pi]
        n_beams (int): Number of beams, at least 1
        max_range (float): Beam range clamp in meters, positive

    Raises:
        ValueError: Parameters out of range

    Returns:
        LidarScan: Ranges in [0, max_range], rightmost beam first
    """
    if n_beams < 1:
        raise ValueError(f"n_beams must be >= 1, got {n_beams}")
    if not 0.0 < fov <= math.tau:
        raise ValueError(f"fov must be in (0, 2pi], got {fov}")
    if not max_range > 0.0:
        raise ValueError(f"max_range must be positive, got {max_range}")

    angles = pose.theta + beam_offsets(fov, n_beams)
    ranges = cast_rays(world, pose.position, angles, max_range)
    return LidarScan(ranges=tuple(ranges.tolist()), fov=fov, max_range=max_range, angles=tuple(angles.tolist()))


def wall_distances_sq(world: WorldMap, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Squared distance from each point (xs[i], ys[i]) to its nearest wall"""
    ax, ay = world.origins
    sx, sy = world.deltas
    px = xs[:, np.newaxis] - ax
    py = ys[:, np.newaxis] - ay
    t = np.minimum(np.maximum((px * sx + py * sy) / world.lengths_sq, 0.0), 1.0)
    cx = px - t * sx
    cy = py - t * sy
    return (cx * cx + cy * cy).min(axis=1)


def wall_distances(world: WorldMap, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Distance from each point (xs[i], ys[i]) to its nearest wall"""
    return np.sqrt(wall_distances_sq(world, np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)))


def min_wall_distance(world: WorldMap, p: Point) -> float:
    """Euclidean distance from `p` to the closest wall"""
    return float(wall_distances(world, (p[0],), (p[1],))[0])


def _point_segment_distance(p: Point, seg: Segment) -> float:
    sx = seg.b[0] - seg.a[0]
    sy = seg.b[1] - seg.a[1]
    px = p[0] - seg.a[0]
    py = p[1] - seg.a[1]
    t = min(max((px * sx + py * sy) / (sx * sx + sy * sy), 0.0), 1.0)
    return math.hypot(px - t * sx, py - t * sy)


def _orientation(p: Point, q: Point, r: Point) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _segments_cross(s1: Segment, s2: Segment) -> bool:
    d1 = _orientation(s2.a, s2.b, s1.a)
    d2 = _orientation(s2.a, s2.b, s1.b)
    d3 = _orientation(s1.a, s1.b, s2.a)
    d4 = _orientation(s1.a, s1.b, s2.b)
    return d1 * d2 < 0 and d3 * d4 < 0


def segment_distance(s1: Segment, s2: Segment) -> float:
    """Minimum distance between two walls"""
    if _segments_cross(s1, s2):
        return 0.0
    return min(
        _point_segment_distance(s1.a, s2),
        _point_segment_distance(s1.b, s2),
        _point_segment_distance(s2.a, s1),
        _point_segment_distance(s2.b, s1),
    )


def wall_clearance(world: WorldMap) -> float:
    """Narrowest gap between two walls that do not meet at a vertex.

    For tracks built from closed polygons this is the narrowest corridor.
    """
    best = math.inf
    segments = world.segments
    for i, first in enumerate(segments):
        for second in segments[i + 1 :]:
            if first.shares_endpoint(second):
                continue
            best = min(best, segment_distance(first, second))
    return best
