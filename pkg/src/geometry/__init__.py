"""2D segment-world geometry kernel"""

from .models import Segment, Ray, WorldMap, LidarScan, Point
from .raycast import (
    ray_segment_intersect,
    cast_rays,
    cast_directions,
    unit_directions,
    cast_scan,
    beam_offsets,
    wall_distances,
    wall_distances_sq,
    min_wall_distance,
    segment_distance,
    wall_clearance,
)
from .world_loader import parse_world, load_world, validate_world, START_CLEARANCE
from .exceptions import GeometryError, WorldFormatError

__all__ = [
    "Segment",
    "Ray",
    "WorldMap",
    "LidarScan",
    "Point",
    "ray_segment_intersect",
    "cast_rays",
    "cast_directions",
    "unit_directions",
    "cast_scan",
    "beam_offsets",
    "wall_distances",
    "wall_distances_sq",
    "min_wall_distance",
    "segment_distance",
    "wall_clearance",
    "parse_world",
    "load_world",
    "validate_world",
    "START_CLEARANCE",
    "GeometryError",
    "WorldFormatError",
]
