import math
import numpy as np
import pytest
from src.environment.registry import BUILTIN_ENVS, WORLDS_DIR
from src.geometry import (
    Ray,
    Segment,
    WorldFormatError,
    WorldMap,
    beam_offsets,
    cast_rays,
    cast_scan,
    load_world,
    min_wall_distance,
    parse_world,
    ray_segment_intersect,
    segment_distance,
    wall_clearance,
    wall_distances,
)
from src.vehicle import RobotPose

MARCH_STEP = 1e-4
MARCH_HIT = 5e-5


def _seg_dist(px: np.ndarray, py: np.ndarray, seg: Segment) -> np.ndarray:
    ax, ay = seg.a
    sx, sy = seg.b[0] - ax, seg.b[1] - ay
    u = np.clip(((px - ax) * sx + (py - ay) * sy) / (sx * sx + sy * sy), 0.0, 1.0)
    return np.hypot(px - ax - u * sx, py - ay - u * sy)


def _side(ray: Ray, seg: Segment, t: float) -> float:
    px = ray.origin[0] + t * ray.direction[0]
    py = ray.origin[1] + t * ray.direction[1]
    sx, sy = seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]
    return sx * (py - seg.a[1]) - sy * (px - seg.a[0])


def march_oracle(ray: Ray, seg: Segment, length: float = 15.0) -> float | None:
    """Walk the ray in small steps; refine the first close run by bisection on the wall line"""
    t = np.arange(0.0, length, MARCH_STEP)
    d = _seg_dist(ray.origin[0] + t * ray.direction[0], ray.origin[1] + t * ray.direction[1], seg)
    close = np.flatnonzero(d < MARCH_HIT)
    if close.size == 0:
        return None

    gaps = np.flatnonzero(np.diff(close) > 1)
    last = close[gaps[0]] if gaps.size else close[-1]
    lo, hi = max(t[close[0]] - MARCH_STEP, 0.0), t[last] + MARCH_STEP
    side_lo = _side(ray, seg, lo)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if (_side(ray, seg, mid) > 0) == (side_lo > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _point_ray_distance(p, ray: Ray) -> float:
    qx, qy = p[0] - ray.origin[0], p[1] - ray.origin[1]
    along = max(qx * ray.direction[0] + qy * ray.direction[1], 0.0)
    return math.hypot(qx - along * ray.direction[0], qy - along * ray.direction[1])


def _is_borderline(ray: Ray, seg: Segment) -> bool:
    """Grazes, near-parallel walls and origins sitting on a wall"""
    sx, sy = seg.b[0] - seg.a[0], seg.b[1] - seg.a[1]
    sine = abs(ray.direction[0] * sy - ray.direction[1] * sx) / math.hypot(sx, sy)
    return (
        sine < 1e-2
        or _point_ray_distance(seg.a, ray) < 1e-3
        or _point_ray_distance(seg.b, ray) < 1e-3
        or float(_seg_dist(np.array([ray.origin[0]]), np.array([ray.origin[1]]), seg)[0]) < 1e-3
    )


def _world(*segments: Segment, start: RobotPose = RobotPose(50.0, 50.0, 0.0)) -> WorldMap:
    return WorldMap(name="w", segments=tuple(segments), start=start)


class TestRaySegmentIntersect:
    def test_perpendicular_hit(self):
        ray = Ray(origin=(0.0, 0.0), direction=(1.0, 0.0))
        assert ray_segment_intersect(ray, Segment((2.0, -1.0), (2.0, 1.0))) == pytest.approx(2.0, abs=1e-12)

    def test_parallel_offset_miss(self):
        ray = Ray(origin=(0.0, 0.0), direction=(1.0, 0.0))
        assert ray_segment_intersect(ray, Segment((1.0, 1.0), (2.0, 1.0))) is None

    def test_behind_origin_miss(self):
        ray = Ray(origin=(0.0, 0.0), direction=(1.0, 0.0))
        assert ray_segment_intersect(ray, Segment((-2.0, -1.0), (-2.0, 1.0))) is None

    def test_endpoint_graze_is_a_hit(self):
        ray = Ray(origin=(0.0, 0.0), direction=(1.0, 0.0))
        assert ray_segment_intersect(ray, Segment((3.0, 0.0), (3.0, 1.0))) == pytest.approx(3.0)

    def test_collinear_overlap_reports_nearest_point(self):
        ray = Ray(origin=(0.0, 0.0), direction=(1.0, 0.0))
        assert ray_segment_intersect(ray, Segment((5.0, 0.0), (2.0, 0.0))) == pytest.approx(2.0)
        assert ray_segment_intersect(ray, Segment((-1.0, 0.0), (1.0, 0.0))) == 0.0
        assert ray_segment_intersect(ray, Segment((-3.0, 0.0), (-1.0, 0.0))) is None

    def test_non_unit_direction_rejected(self):
        with pytest.raises(ValueError):
            Ray(origin=(0.0, 0.0), direction=(2.0, 0.0))

    def test_matches_marching_oracle(self):
        rng = np.random.default_rng(2024)
        checked = hits = 0
        while checked < 1000:
            origin = tuple(rng.uniform(-5, 5, 2))
            ray = Ray.from_angle(origin, rng.uniform(-math.pi, math.pi))
            seg = Segment(tuple(rng.uniform(-5, 5, 2)), tuple(rng.uniform(-5, 5, 2)))
            if _is_borderline(ray, seg):
                continue
            checked += 1

            expected = march_oracle(ray, seg)
            actual = ray_segment_intersect(ray, seg)
            assert (actual is None) == (expected is None), (ray, seg)
            if expected is not None:
                hits += 1
                assert actual == pytest.approx(expected, abs=1e-6)
        assert hits > 100

    def test_rigid_motion_preserves_distance(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            angle = rng.uniform(-math.pi, math.pi)
            origin = tuple(rng.uniform(-3, 3, 2))
            a, b = tuple(rng.uniform(-3, 3, 2)), tuple(rng.uniform(-3, 3, 2))
            before = ray_segment_intersect(Ray.from_angle(origin, angle), Segment(a, b))

            phi = rng.uniform(-math.pi, math.pi)
            shift = rng.uniform(-10, 10, 2)
            c, s = math.cos(phi), math.sin(phi)

            def move(p, c=c, s=s, shift=shift):
                return (c * p[0] - s * p[1] + shift[0], s * p[0] + c * p[1] + shift[1])

            after = ray_segment_intersect(Ray.from_angle(move(origin), angle + phi), Segment(move(a), move(b)))
            if before is None:
                continue
            assert after == pytest.approx(before, abs=1e-9)

    def test_vectorized_cast_agrees(self):
        rng = np.random.default_rng(11)
        segments = tuple(Segment(tuple(rng.uniform(0, 20, 2)), tuple(rng.uniform(0, 20, 2))) for _ in range(12))
        world = _world(*segments)
        origin = (10.0, 10.0)
        angles = rng.uniform(-math.pi, math.pi, 64)

        ranges = cast_rays(world, origin, angles, 100.0)
        for angle, got in zip(angles, ranges):
            ray = Ray.from_angle(origin, float(angle))
            found = [d for d in (ray_segment_intersect(ray, seg) for seg in segments) if d is not None]
            assert got == pytest.approx(min(found, default=100.0), abs=1e-12)


class TestCastScan:
    def test_square_room(self, square_world):
        scan = cast_scan(square_world, square_world.start, 3 * math.pi / 2, 5, 6.0)
        assert len(scan) == 5
        assert scan.ranges[2] == pytest.approx(5.0)
        assert scan.ranges[0] == 6.0
        assert scan.ranges[4] == 6.0
        # beams at +-67.5 degrees reach the side walls 22.5 degrees off the wall normal
        assert scan.ranges[1] == pytest.approx(5 / math.cos(math.pi / 8))
        assert scan.ranges[3] == pytest.approx(5 / math.cos(math.pi / 8))

    def test_tiny_range_clamps_every_beam(self, square_world):
        scan = cast_scan(square_world, square_world.start, 3 * math.pi / 2, 5, 0.001)
        assert scan.ranges == (0.001,) * 5

    def test_single_beam_is_the_forward_ray(self, square_world):
        pose = RobotPose(2.0, 3.0, 0.4)
        scan = cast_scan(square_world, pose, 3 * math.pi / 2, 1, 20.0)
        ray = Ray.from_angle(pose.position, pose.theta)
        expected = min(d for d in (ray_segment_intersect(ray, s) for s in square_world.segments) if d is not None)
        assert scan.ranges == (pytest.approx(expected),)
        assert scan.angles == (pytest.approx(0.4),)

    def test_beams_ordered_right_to_left(self):
        offsets = beam_offsets(3 * math.pi / 2, 5)
        assert offsets.tolist() == pytest.approx([-3 * math.pi / 4, -3 * math.pi / 8, 0.0, 3 * math.pi / 8, 3 * math.pi / 4])

    @pytest.mark.parametrize(
        "fov, n_beams, max_range",
        [(0.0, 5, 6.0), (7.0, 5, 6.0), (math.pi, 0, 6.0), (math.pi, 5, 0.0)],
    )
    def test_invalid_parameters(self, square_world, fov, n_beams, max_range):
        with pytest.raises(ValueError):
            cast_scan(square_world, square_world.start, fov, n_beams, max_range)

    def test_ranges_bounded_and_never_below_wall_distance(self, square_world):
        rng = np.random.default_rng(3)
        for _ in range(300):
            pose = RobotPose(*rng.uniform(0.05, 9.95, 2), rng.uniform(-math.pi, math.pi))
            scan = cast_scan(square_world, pose, 3 * math.pi / 2, 5, 6.0)
            assert all(0.0 <= r <= 6.0 for r in scan.ranges)
            assert min_wall_distance(square_world, pose.position) <= min(scan.ranges) + 1e-12

    def test_pure(self, square_world):
        pose = RobotPose(3.3, 7.1, 2.0)
        first = cast_scan(square_world, pose, 3 * math.pi / 2, 5, 6.0)
        assert cast_scan(square_world, pose, 3 * math.pi / 2, 5, 6.0) == first


class TestWallDistance:
    def test_perpendicular_foot(self):
        world = _world(Segment((0.0, 0.0), (10.0, 0.0)), Segment((0.0, 50.0), (1.0, 50.0)), Segment((90, 0), (90, 1)))
        assert min_wall_distance(world, (5.0, 1.0)) == pytest.approx(1.0)

    def test_on_segment(self, square_world):
        assert min_wall_distance(square_world, (4.0, 0.0)) == 0.0

    def test_past_the_endpoint(self):
        world = _world(Segment((0.0, 0.0), (10.0, 0.0)), Segment((0.0, 50.0), (1.0, 50.0)), Segment((90, 0), (90, 1)))
        assert min_wall_distance(world, (13.0, 4.0)) == pytest.approx(5.0)

    def test_matches_sampling_oracle(self):
        rng = np.random.default_rng(5)
        checked = 0
        while checked < 1000:
            seg = Segment(tuple(rng.uniform(-5, 5, 2)), tuple(rng.uniform(-5, 5, 2)))
            p = tuple(rng.uniform(-6, 6, 2))
            samples = np.linspace(0.0, 1.0, 20001)
            xs = seg.a[0] + samples * (seg.b[0] - seg.a[0])
            ys = seg.a[1] + samples * (seg.b[1] - seg.a[1])
            dist = np.hypot(xs - p[0], ys - p[1])
            if dist.min() < 0.01:
                continue
            checked += 1

            # distance along the wall is convex; refine between the neighbors of the best sample
            k = int(dist.argmin())
            lo, hi = samples[max(k - 1, 0)], samples[min(k + 1, samples.size - 1)]

            def at(u, seg=seg, p=p):
                return math.hypot(seg.a[0] + u * (seg.b[0] - seg.a[0]) - p[0], seg.a[1] + u * (seg.b[1] - seg.a[1]) - p[1])

            for _ in range(100):
                m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
                if at(m1) < at(m2):
                    hi = m2
                else:
                    lo = m1
            expected = at(0.5 * (lo + hi))
            actual = float(wall_distances(_world(seg, seg, seg), [p[0]], [p[1]])[0])
            assert actual == pytest.approx(expected, abs=1e-6)

    def test_many_points_at_once(self, square_world):
        xs, ys = np.array([5.0, 1.0, 9.5, 5.0]), np.array([5.0, 5.0, 9.0, 0.0])
        assert wall_distances(square_world, xs, ys).tolist() == pytest.approx([5.0, 1.0, 0.5, 0.0])


class TestWallClearance:
    def test_box_clearance_is_its_narrow_side(self, make_box):
        assert wall_clearance(make_box("narrow", 10.0, 3.0, RobotPose(5.0, 1.5, 0.0))) == pytest.approx(3.0)

    def test_crossing_segments(self):
        assert segment_distance(Segment((0, 0), (2, 2)), Segment((0, 2), (2, 0))) == 0.0

    def test_parallel_segments(self):
        assert segment_distance(Segment((0, 0), (4, 0)), Segment((1, 2), (3, 2))) == pytest.approx(2.0)

    @pytest.mark.parametrize("file_name", [file_name for _, file_name, _ in BUILTIN_ENVS])
    def test_builtin_worlds_fit_the_robot(self, file_name):
        world = load_world(WORLDS_DIR / file_name)
        assert wall_clearance(world) > 2 * 0.21
        assert min_wall_distance(world, world.start.position) > 0.21


VALID_WORLD = """\
# a triangle
name tri
start 1 1 0
segment 0 0 4 0
segment 4 0 0 4   # hypotenuse
segment 0 4 0 0
"""


class TestWorldFile:
    def test_parse(self):
        world = parse_world(VALID_WORLD)
        assert world.name == "tri"
        assert world.start == RobotPose(1.0, 1.0, 0.0)
        assert len(world.segments) == 3
        assert world.segments[1] == Segment((4.0, 0.0), (0.0, 4.0))
        assert world.bounds == (0.0, 0.0, 4.0, 4.0)

    def test_load_from_disk(self, tmp_path):
        path = tmp_path / "tri.world"
        path.write_text(VALID_WORLD, encoding="utf8")
        assert load_world(path) == parse_world(VALID_WORLD)

    def test_missing_file(self, tmp_path):
        with pytest.raises(WorldFormatError, match="Failed to read"):
            load_world(tmp_path / "nope.world")

    @pytest.mark.parametrize(
        "text, line_no, message",
        [
            (VALID_WORLD + "wall 0 0 1 1\n", 7, "Unknown directive"),
            (VALID_WORLD + "name again\n", 7, "more than once"),
            (VALID_WORLD + "start 2 1 0\n", 7, "more than once"),
            (VALID_WORLD + "segment 1 1 1\n", 7, "expects 4 numbers"),
            (VALID_WORLD + "segment 1 1 1 x\n", 7, "non-numeric"),
            (VALID_WORLD + "segment 3 3 3 3\n", 7, "Zero-length"),
            (VALID_WORLD.replace("name tri", "name 9lives"), 2, "Invalid world name"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line_no, message):
        with pytest.raises(WorldFormatError, match=message) as err:
            parse_world(text, source="bad.world")
        assert err.value.line_no == line_no
        assert str(err.value).startswith(f"bad.world:{line_no}:")

    def test_missing_start(self):
        with pytest.raises(WorldFormatError, match="Missing 'start'"):
            parse_world(VALID_WORLD.replace("start 1 1 0\n", ""))

    def test_too_few_segments(self):
        with pytest.raises(WorldFormatError, match="at least 3"):
            parse_world("name two\nstart 1 1 0\nsegment 0 0 4 0\nsegment 4 0 0 4\n")

    def test_start_inside_collision_threshold(self):
        with pytest.raises(WorldFormatError, match="from a wall"):
            parse_world(VALID_WORLD.replace("start 1 1 0", "start 0.1 1 0"))
