"""Exact planar predicates on integer coordinates.

Every predicate works on plain ``(x, y)`` integer tuples and never rounds.
Coordinates are restricted to ``|c| <= COORD_BOUND`` so that the degree-2
orientation products and degree-3 intermediates stay inside 64-bit range;
Python integers would not overflow anyway, but the bound keeps instance
files portable to fixed-width implementations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Sequence

Point = tuple[int, int]

#: Largest admissible absolute coordinate.  Differences then fit in 31 bits
#: and orientation determinants in 63 bits.
COORD_BOUND = 2**30


class CoordinateRangeError(ValueError):
    """A coordinate is not an integer within ``[-COORD_BOUND, COORD_BOUND]``."""


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def check_point(p: Point) -> Point:
    x, y = p
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise CoordinateRangeError(f"coordinates must be integers, got {p!r}")
    if not (-COORD_BOUND <= x <= COORD_BOUND and -COORD_BOUND <= y <= COORD_BOUND):
        raise CoordinateRangeError(f"point {p!r} outside +/-{COORD_BOUND}")
    return p


def cross(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle ``abc`` (positive when ccw)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient_sign(a: Point, b: Point, c: Point) -> int:
    """Unchecked sign of :func:`cross`; hot-path variant of :func:`orient`."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    for p in (a, b, c):
        check_point(p)
    return Orientation(orient_sign(a, b, c))


def _on_open_collinear_overlap(p: Point, q: Point, r: Point, s: Point) -> bool:
    # all four points collinear; compare along the dominant axis
    axis = 0 if p[0] != q[0] else 1
    lo1, hi1 = sorted((p[axis], q[axis]))
    lo2, hi2 = sorted((r[axis], s[axis]))
    return max(lo1, lo2) < min(hi1, hi2)


def segments_cross_unchecked(p: Point, q: Point, r: Point, s: Point) -> bool:
    d1 = orient_sign(p, q, r)
    d2 = orient_sign(p, q, s)
    d3 = orient_sign(r, s, p)
    d4 = orient_sign(r, s, q)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and d2 == 0:
        return p != q and r != s and _on_open_collinear_overlap(p, q, r, s)
    # Touching configurations: an endpoint lying in the other open segment.
    # The open segments themselves then meet only if that endpoint belongs
    # to both, which it cannot since it is an endpoint of one of them.
    return False


def segments_cross(p: Point, q: Point, r: Point, s: Point) -> bool:
    """True iff the open segments ``pq`` and ``rs`` share a point.

    Segments meeting only at a common endpoint do not cross.
    """
    for pt in (p, q, r, s):
        check_point(pt)
    if {p, q} == {r, s}:
        raise ValueError("segments_cross needs two different segments")
    return segments_cross_unchecked(p, q, r, s)


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the strict convex hull vertices in counterclockwise order.

    Monotone chain; the first returned index is the lexicographically
    smallest point.
    """
    if not points:
        raise ValueError("convex hull of an empty point sequence")
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(order) == 1:
        return order

    def chain(idx: list[int]) -> list[int]:
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and orient_sign(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    hull = lower[:-1] + upper[:-1]
    # all points identical along a line collapse to two endpoints
    return hull if hull else order[:1]


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict containment in the open triangle ``abc`` (either orientation)."""
    d1 = orient_sign(a, b, p)
    d2 = orient_sign(b, c, p)
    d3 = orient_sign(c, a, p)
    return d1 == d2 == d3 != 0


def point_in_convex_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test for a ccw convex polygon."""
    n = len(poly)
    if n < 3:
        return False
    return all(orient_sign(poly[i], poly[(i + 1) % n], p) > 0 for i in range(n))


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Crossing-number test for a simple polygon.

    Points on the boundary are reported as outside.  Exact: the ray is the
    horizontal half-line to the right of ``p`` with the usual half-open
    vertex rule.
    """
    n = len(poly)
    inside = False
    px, py = p
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        if orient_sign(a, b, p) == 0 and min(a[0], b[0]) <= px <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= py <= max(a[1], b[1]):
            return False
        if (a[1] > py) != (b[1] > py):
            # x-coordinate of the edge at height py compared with px, exactly
            s = orient_sign(a, b, p)
            if (b[1] > a[1] and s > 0) or (b[1] < a[1] and s < 0):
                inside = not inside
    return inside


def signed_area2(poly: Sequence[Point]) -> int:
    """Twice the signed shoelace area."""
    n = len(poly)
    return sum(poly[i][0] * poly[(i + 1) % n][1] - poly[(i + 1) % n][0] * poly[i][1] for i in range(n))


def incircle(a: Point, b: Point, c: Point, d: Point) -> int:
    """Sign of the in-circle determinant: >0 iff ``d`` is inside the circle
    through ``a, b, c`` given in counterclockwise order."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return (det > 0) - (det < 0)


@dataclass(frozen=True)
class GeneralPositionViolation:
    kind: str  # "duplicate" or "collinear"
    indices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "duplicate":
            return f"duplicate point at indices {self.indices[0]} and {self.indices[1]}"
        return "collinear triple {} {} {}".format(*self.indices)


def _direction_key(dx: int, dy: int) -> tuple[int, int]:
    g = gcd(dx, dy)
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def validate_general_position(points: Sequence[Point]) -> GeneralPositionViolation | None:
    """``None`` if the points are distinct with no three collinear.

    Otherwise one offending pair or triple is reported.  For each anchor
    ``i`` the directions to later points are hashed, giving O(n^2) work.
    """
    for p in points:
        check_point(p)
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            return GeneralPositionViolation("duplicate", (seen[p], i))
        seen[p] = i
    n = len(points)
    for i in range(n):
        xi, yi = points[i]
        dirs: dict[tuple[int, int], int] = {}
        for j in range(i + 1, n):
            key = _direction_key(points[j][0] - xi, points[j][1] - yi)
            if key in dirs:
                return GeneralPositionViolation("collinear", (i, dirs[key], j))
            dirs[key] = j
    return None
