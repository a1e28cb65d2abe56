"""World file parsing

Plain text, one directive per line, '#' starts a comment:

    name <identifier>
    start <x> <y> <theta>
    segment <x1> <y1> <x2> <y2>
"""

import logging
import re
from pathlib import Path
from src.vehicle import RobotPose
from .exceptions import WorldFormatError
from .models import Segment, WorldMap
from .raycast import min_wall_distance

MIN_SEGMENTS = 3
START_CLEARANCE = 0.21
IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")

log = logging.getLogger("World-Loader")


def _parse_floats(source: str, line_no: int, args: list[str], count: int, directive: str) -> list[float]:
    if len(args) != count:
        raise WorldFormatError(source, f"'{directive}' expects {count} numbers, got {len(args)}", line_no)
    try:
        return [float(x) for x in args]
    except ValueError as e:
        raise WorldFormatError(source, f"'{directive}' has a non-numeric argument: {' '.join(args)}", line_no) from e


def validate_world(world: WorldMap, source: str, clearance: float = START_CLEARANCE) -> None:
    """Check the structural invariants of a world.

    Raises:
        WorldFormatError: Too few walls, a zero-length wall, or a start pose closer than `clearance` to a wall
    """
    if len(world.segments) < MIN_SEGMENTS:
        raise WorldFormatError(source, f"A world needs at least {MIN_SEGMENTS} segments, got {len(world.segments)}")

    for seg in world.segments:
        if seg.a == seg.b:
            raise WorldFormatError(source, f"Zero-length segment at {seg.a}")

    gap = min_wall_distance(world, world.start.position)
    if gap <= clearance:
        raise WorldFormatError(source, f"Start pose {world.start} is only {gap:.3f} m from a wall")


def parse_world(text: str, source: str = "<string>", clearance: float = START_CLEARANCE) -> WorldMap:
    """Build a WorldMap from world file text.

    Args:
        text (str): File contents
        source (str, optional): Name used in error messages. Defaults to "<string>".
        clearance (float, optional): Minimum start-to-wall distance. Defaults to START_CLEARANCE.

    Raises:
        WorldFormatError: Indicating the issue and line

    Returns:
        WorldMap: Validated world
    """
    name: str | None = None
    start: RobotPose | None = None
    segments: list[Segment] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        directive, *args = line.split()
        match directive:
            case "name":
                if name is not None:
                    raise WorldFormatError(source, "'name' declared more than once", line_no)
                if len(args) != 1 or not IDENTIFIER.match(args[0]):
                    raise WorldFormatError(source, f"Invalid world name: {' '.join(args)}", line_no)
                name = args[0]
            case "start":
                if start is not None:
                    raise WorldFormatError(source, "'start' declared more than once", line_no)
                x, y, theta = _parse_floats(source, line_no, args, 3, directive)
                start = RobotPose(x=x, y=y, theta=theta)
            case "segment":
                x1, y1, x2, y2 = _parse_floats(source, line_no, args, 4, directive)
                if (x1, y1) == (x2, y2):
                    raise WorldFormatError(source, f"Zero-length segment at ({x1}, {y1})", line_no)
                segments.append(Segment(a=(x1, y1), b=(x2, y2)))
            case _:
                raise WorldFormatError(source, f"Unknown directive '{directive}'", line_no)

    if name is None:
        raise WorldFormatError(source, "Missing 'name' directive")
    if start is None:
        raise WorldFormatError(source, "Missing 'start' directive")

    world = WorldMap(name=name, segments=tuple(segments), start=start)
    validate_world(world, source, clearance)
    return world


def load_world(path: Path, clearance: float = START_CLEARANCE) -> WorldMap:
    """Read and parse a world file.

    Raises:
        WorldFormatError: File unreadable or invalid
    """
    try:
        text = Path(path).read_text(encoding="utf8")
    except OSError as e:
        raise WorldFormatError(str(path), f"Failed to read world file. Error: {e}") from e

    world = parse_world(text, source=Path(path).name, clearance=clearance)
    log.debug("Loaded world %s from %s", world, path)
    return world
