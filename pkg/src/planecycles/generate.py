"""Seeded instance families.

Every family is a pure function of its :class:`GenSpec`; the same spec gives
a byte-identical instance file.  Generators check their own postconditions
and raise :class:`GenerationError` when a :class:`GenSpec` cannot be met.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from typing import Callable

from .geometry import (
    Point,
    convex_hull,
    point_in_convex_polygon,
    point_in_triangle,
    segments_cross_unchecked,
    validate_general_position,
)
from .model import BLUE, RED, ColoredPointSet

KINDS = (
    "random",
    "convex_alternating",
    "nested",
    "zone_ring",
    "zone_pairs",
    "near_convex",
    "fig1_left_like",
    "fig1_middle_like",
    "fig1_right_like",
)

RING_RADIUS = 100_000


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one instance.

    ``n`` is the total point count for ``random`` and the per-color count
    for the bicolored families.  ``extra`` adds blues outside the ring for
    ``nested``; ``k`` is the number of interior points for ``near_convex``.
    """

    kind: str
    n: int = 4
    seed: int = 0
    color_count: int = 2
    coord_range: int = 1000
    balanced: bool = False
    extra: int = 0
    k: int = 0
    budget: int = 10_000


def _gp_ok(pts: list[Point], p: Point) -> bool:
    """Can ``p`` join ``pts`` without a duplicate or a collinear triple?"""
    if p in pts:
        return False
    for i in range(len(pts)):
        a = pts[i]
        for j in range(i + 1, len(pts)):
            b = pts[j]
            if (b[0] - a[0]) * (p[1] - a[1]) == (b[1] - a[1]) * (p[0] - a[0]):
                return False
    return True


def _sample_points(rng: random.Random, count: int, accept: Callable[[Point], bool], box: tuple[int, int, int, int],
                   existing: list[Point], budget: int) -> list[Point]:
    x0, y0, x1, y1 = box
    out: list[Point] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > budget:
            raise GenerationError(f"rejection sampling gave up after {budget} tries")
        p = (rng.randint(x0, x1), rng.randint(y0, y1))
        if accept(p) and _gp_ok(existing + out, p):
            out.append(p)
    return out


def _ring(m: int, radius: int = RING_RADIUS, phase: float = 0.0) -> list[Point]:
    """``m`` integer points in strictly convex position, counterclockwise."""
    pts = [
        (round(radius * math.cos(phase + 2 * math.pi * j / m)), round(radius * math.sin(phase + 2 * math.pi * j / m)))
        for j in range(m)
    ]
    if len(set(pts)) != m or len(convex_hull(pts)) != m or not _all_gp(pts):
        raise GenerationError(f"ring of {m} points is not in convex general position")
    return pts


def _all_gp(pts: list[Point]) -> bool:
    return validate_general_position(pts) is None


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def _random(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    n, c = spec.n, spec.color_count
    if c < 2 or n < c:
        raise GenerationError(f"need n >= color_count >= 2, got n={n}, colors={c}")
    if spec.balanced and (c != 2 or n % 2):
        raise GenerationError("balanced instances need 2 colors and even n")
    r = spec.coord_range
    pts = _sample_points(rng, n, lambda p: True, (0, 0, r, r), [], spec.budget)
    if spec.balanced:
        colors = [RED] * (n // 2) + [BLUE] * (n // 2)
    else:
        colors = list(range(c)) + [rng.randrange(c) for _ in range(n - c)]
    rng.shuffle(colors)
    return ColoredPointSet(pts, colors)


def _convex_alternating(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    if spec.n < 2:
        raise GenerationError("convex_alternating needs n >= 2 per color")
    pts = _ring(2 * spec.n)
    return ColoredPointSet(pts, [j % 2 for j in range(2 * spec.n)])


def _inside_ring(ring: list[Point]) -> Callable[[Point], bool]:
    return lambda p: point_in_convex_polygon(p, ring)


def _nested(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    n, extra = spec.n, spec.extra
    k = n - extra
    if n < 3 or k < 3:
        raise GenerationError(f"nested needs n >= 3 and at least 3 ring blues, got n={n}, extra={extra}")
    ring = _ring(k, phase=rng.random() * 2 * math.pi / k)
    R = RING_RADIUS
    reds = _sample_points(rng, n, _inside_ring(ring), (-R, -R, R, R), ring, spec.budget)
    outer = 2 * R
    far = _sample_points(
        rng, extra, lambda p: not point_in_convex_polygon(p, ring) and abs(p[0]) + abs(p[1]) > R,
        (-outer, -outer, outer, outer), ring + reds, spec.budget,
    )
    pts = ring + far + reds
    ps = ColoredPointSet(pts, [BLUE] * n + [RED] * n)
    _check_nested(ps, list(range(k)))
    return ps


def _check_nested(ps: ColoredPointSet, B: list[int]) -> None:
    from .nested import validate_nested

    validate_nested(ps, B)


def _zone_point(rng: random.Random, ring: list[Point], i: int, along: float, existing: list[Point],
                budget: int) -> Point:
    """A point in the edge-zone on the ring edge ``b_{i-1} b_i``."""
    k = len(ring)
    a, b = ring[(i - 1) % k], ring[i % k]
    t1 = (ring[(i - 1) % k], ring[i % k], ring[(i + 1) % k])
    t0 = (ring[(i - 2) % k], ring[(i - 1) % k], ring[i % k])
    # the zone is a thin sliver whose opening angle shrinks like pi/k
    slope = math.tan(math.pi / k)
    for _ in range(budget):
        s = along + (rng.random() - 0.5) * 0.05
        depth = (0.1 + 0.7 * rng.random()) * slope
        mx, my = a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])
        # inward normal of a ccw ring edge
        nx, ny = -(b[1] - a[1]), b[0] - a[0]
        p = (round(mx + depth * nx * min(s, 1 - s)), round(my + depth * ny * min(s, 1 - s)))
        if point_in_triangle(p, *t1) and point_in_triangle(p, *t0) and _gp_ok(existing, p):
            return p
    raise GenerationError("could not place a point in an edge-zone")


def _zone_ring(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    k = spec.n
    if k < 4:
        raise GenerationError("zone_ring needs n >= 4 (edge-zones degenerate for a triangle)")
    ring = _ring(k, phase=rng.random() * 2 * math.pi / k)
    reds: list[Point] = []
    for i in range(k):
        reds.append(_zone_point(rng, ring, i, 0.5, ring + reds, spec.budget))
    ps = ColoredPointSet(ring + reds, [BLUE] * k + [RED] * k)
    _check_nested(ps, list(range(k)))
    return ps


def _zone_pairs(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    k = spec.n
    if k < 4 or k % 2:
        raise GenerationError("zone_pairs needs an even n >= 4")
    ring = _ring(k, phase=rng.random() * 2 * math.pi / k)
    reds: list[Point] = []
    for i in range(1, k, 2):
        for along in (0.35, 0.65):
            reds.append(_zone_point(rng, ring, i, along, ring + reds, spec.budget))
    ps = ColoredPointSet(ring + reds, [BLUE] * k + [RED] * k)
    _check_nested(ps, list(range(k)))
    return ps


def _near_convex(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    """Convex boundary plus ``k`` interior points near the center.

    Interior colors alternate starting with red; the boundary takes the
    remaining colors, alternating as long as both are left.
    """
    n, k = spec.n, spec.k
    m = 2 * n - k
    if k < 0 or m < 3:
        raise GenerationError(f"near_convex needs 2n - k >= 3, got n={n}, k={k}")
    inner_colors = [j % 2 for j in range(k)]
    left = [n - inner_colors.count(RED), n - inner_colors.count(BLUE)]
    if min(left) < 0:
        raise GenerationError("too many interior points of one color")
    boundary_colors = []
    c = RED if left[RED] >= left[BLUE] else BLUE
    for _ in range(m):
        if left[c] == 0:
            c = 1 - c
        boundary_colors.append(c)
        left[c] -= 1
        if left[1 - c]:
            c = 1 - c
    ring = _ring(m, phase=rng.random() * 2 * math.pi / m)
    inner_r = RING_RADIUS // 4
    inner = _sample_points(
        rng, k, lambda p: p[0] ** 2 + p[1] ** 2 < inner_r ** 2, (-inner_r, -inner_r, inner_r, inner_r), ring,
        spec.budget,
    )
    return ColoredPointSet(ring + inner, boundary_colors + inner_colors)


def _oracle_counts(ps: ColoredPointSet):
    from .oracle import enumerate_plane_cycles

    return enumerate_plane_cycles(ps)


def _jitter(rng: random.Random, pts: list[Point], amount: int) -> list[Point]:
    dx, dy = rng.randint(-amount, amount), rng.randint(-amount, amount)
    return [(x + dx, y + dy) for x, y in pts]


def _fig1_left(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    # two concave caps, one per color, far apart vertically
    m = 5
    reds = [(10 * i, -((i - 2) ** 2) * 10) for i in range(m)]
    blues = [(10 * i, 1000 - ((i - 2) ** 2) * 10) for i in range(m)]
    pts = _jitter(rng, reds + blues, spec.coord_range)
    ps = ColoredPointSet(pts, [RED] * m + [BLUE] * m)
    if _oracle_counts(ps).total:
        raise GenerationError("fig1_left_like instance has a plane cycle")
    return ps


def _convex10(rng: random.Random, colors: list[int], spec: GenSpec) -> ColoredPointSet:
    ring = _jitter(rng, _ring(len(colors), radius=1000, phase=rng.random() * 0.5), spec.coord_range)
    return ColoredPointSet(ring, colors)


def _fig1_middle(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    ps = _convex10(rng, [0, 1, 0, 1, 0, 1, 0, 1, 1, 0], spec)
    if _oracle_counts(ps).lengths() != {4, 6, 8}:
        raise GenerationError("fig1_middle_like spectrum is not {4, 6, 8}")
    return ps


def _fig1_right(spec: GenSpec, rng: random.Random) -> ColoredPointSet:
    ps = _convex10(rng, [0, 0, 1, 1, 2, 2, 3, 3, 4, 4], spec)
    inv = _oracle_counts(ps)
    if inv.nonrainbow_count or not inv.rainbow_count:
        raise GenerationError("fig1_right_like must have rainbow cycles only")
    return ps


_FAMILIES: dict[str, Callable[[GenSpec, random.Random], ColoredPointSet]] = {
    "random": _random,
    "convex_alternating": _convex_alternating,
    "nested": _nested,
    "zone_ring": _zone_ring,
    "zone_pairs": _zone_pairs,
    "near_convex": _near_convex,
    "fig1_left_like": _fig1_left,
    "fig1_middle_like": _fig1_middle,
    "fig1_right_like": _fig1_right,
}


def generate(spec: GenSpec) -> ColoredPointSet:
    try:
        family = _FAMILIES[spec.kind]
    except KeyError:
        raise GenerationError(f"unknown kind {spec.kind!r}; choose from {', '.join(KINDS)}") from None
    return family(spec, random.Random(spec.seed))


def with_seed(spec: GenSpec, seed: int) -> GenSpec:
    return replace(spec, seed=seed)


# ---------------------------------------------------------------------------
# random simple polygons
# ---------------------------------------------------------------------------


def untangle(points: list[Point], order: list[int]) -> list[int]:
    """2-opt: reverse the stretch between two crossing edges until none cross.

    Each reversal strictly shortens the closed tour, so this terminates.
    """
    order = list(order)
    t = len(order)
    changed = True
    while changed:
        changed = False
        for i in range(t):
            a, b = points[order[i]], points[order[(i + 1) % t]]
            for j in range(i + 2, t):
                if i == 0 and j == t - 1:
                    continue
                c, d = points[order[j]], points[order[(j + 1) % t]]
                if segments_cross_unchecked(a, b, c, d):
                    order[i + 1:j + 1] = order[i + 1:j + 1][::-1]
                    changed = True
                    break
            if changed:
                break
    return order


def random_polygon(rng: random.Random, t: int, coord_range: int = 1000) -> list[Point]:
    """Vertices of a random simple polygon, in boundary order."""
    pts = _sample_points(rng, t, lambda p: True, (0, 0, coord_range, coord_range), [], 100 * t + 1000)
    order = list(range(t))
    rng.shuffle(order)
    return [pts[i] for i in untangle(pts, order)]


def random_cycle_instance(rng: random.Random, t: int, color_count: int, coord_range: int = 1000,
                          nonrainbow: bool = True) -> tuple[ColoredPointSet, tuple[int, ...]]:
    """A random simple polygon colored along its boundary so that it is a plane cycle.

    Consecutive vertices get different colors; with ``nonrainbow`` at least
    one color repeats.  Color ids are compacted to ``0..c-1``.
    """
    if color_count < 2:
        raise GenerationError("need at least 2 colors")
    if color_count == 2 and t % 2:
        raise GenerationError("a 2-colored cycle has even length")
    while True:
        poly = random_polygon(rng, t, coord_range)
        cols = [rng.randrange(color_count)]
        for i in range(1, t):
            cols.append(rng.choice([c for c in range(color_count) if c != cols[-1]]))
        if cols[-1] == cols[0]:
            continue
        if nonrainbow and len(set(cols)) == t:
            continue
        remap = {c: j for j, c in enumerate(sorted(set(cols)))}
        ps = ColoredPointSet(poly, [remap[c] for c in cols])
        return ps, tuple(range(t))
