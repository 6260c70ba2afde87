"""Point-set triangulations, edge flips and flip paths.

A triangulation here is a maximal set of pairwise noncrossing segments on a
vertex subset of a :class:`ColoredPointSet`; it always contains the hull
edges and covers the convex hull with triangles.  Flip paths route both
endpoints to one canonical triangulation: the Delaunay triangulation with
a symbolic lifting perturbation that breaks cocircular ties by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import Point, incircle, orient_sign, point_in_triangle, segments_cross_unchecked

Edge = tuple[int, int]


def _e(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class Triangulation:
    points: tuple[Point, ...]
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    def __contains__(self, edge: Edge) -> bool:
        return _e(*edge) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def _empty_triangle(self, a: int, b: int, c: int) -> bool:
        pa, pb, pc = self.points[a], self.points[b], self.points[c]
        return not any(
            point_in_triangle(self.points[x], pa, pb, pc) for x in self.vertices if x not in (a, b, c)
        )

    def incident_triangles(self, edge: Edge) -> list[int]:
        """Apexes of the (one or two) triangles on ``edge``, left side first."""
        a, b = edge
        pa, pb = self.points[a], self.points[b]
        common = self.neighbors(a) & self.neighbors(b)
        out = []
        for side in (1, -1):
            cands = [c for c in sorted(common) if orient_sign(pa, pb, self.points[c]) == side]
            for c in cands:
                if self._empty_triangle(a, b, c):
                    out.append(c)
                    break
        return out

    def triangles(self) -> set[tuple[int, int, int]]:
        tris = set()
        for a, b in self.edges:
            for c in self.incident_triangles((a, b)):
                tris.add(tuple(sorted((a, b, c))))
        return tris

    def flippable(self, edge: Edge) -> tuple[int, int] | None:
        """Apexes ``(c, d)`` if ``edge`` is interior with a convex quadrilateral."""
        apex = self.incident_triangles(edge)
        if len(apex) != 2:
            return None
        c, d = apex
        a, b = edge
        p = self.points
        if orient_sign(p[c], p[d], p[a]) * orient_sign(p[c], p[d], p[b]) < 0:
            return c, d
        return None

    def apply(self, flip: Flip) -> Triangulation:
        a, b = flip.removed
        if _e(a, b) not in self.edges:
            raise TriangulationError(f"edge {flip.removed} not present")
        apex = self.flippable(flip.removed)
        if apex is None or set(apex) != set(flip.inserted):
            raise TriangulationError(f"{flip} is not a valid flip here")
        return Triangulation(self.points, self.vertices, (self.edges - {_e(a, b)}) | {_e(*flip.inserted)})


@dataclass(frozen=True)
class Flip:
    removed: Edge
    inserted: Edge

    @property
    def triangles(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        a, b = self.removed
        c, d = self.inserted
        return (a, b, c), (a, b, d)

    def reversed(self) -> Flip:
        return Flip(self.inserted, self.removed)


def _crosses_any(points: Sequence[Point], edge: Edge, edges: Iterable[Edge]) -> bool:
    a, b = edge
    pa, pb = points[a], points[b]
    for c, d in edges:
        if len({a, b, c, d}) == 4 and segments_cross_unchecked(pa, pb, points[c], points[d]):
            return True
    return False


def triangulate_containing(
    points: Sequence[Point], vertices: Iterable[int], required_edges: Iterable[Edge] = ()
) -> Triangulation:
    """Greedy constrained triangulation of ``vertices`` keeping ``required_edges``.

    Remaining segments are inserted shortest first (ties by index pair)
    whenever they cross nothing already present; a maximal noncrossing set
    is a triangulation.
    """
    pts = tuple(points)
    verts = tuple(sorted(set(vertices)))
    req = sorted({_e(a, b) for a, b in required_edges})
    for a, b in req:
        if a == b or a not in verts or b not in verts:
            raise TriangulationError(f"required edge {(a, b)} not on the vertex set")
    for i, e in enumerate(req):
        if _crosses_any(pts, e, req[i + 1:]):
            raise TriangulationError(f"required edges cross at {e}")
    edges = list(req)
    have = set(req)

    def length2(e: Edge) -> int:
        (x1, y1), (x2, y2) = pts[e[0]], pts[e[1]]
        return (x1 - x2) ** 2 + (y1 - y2) ** 2

    cands = sorted(
        ((verts[i], verts[j]) for i in range(len(verts)) for j in range(i + 1, len(verts))),
        key=lambda e: (length2(e), e),
    )
    for e in cands:
        if e not in have and not _crosses_any(pts, e, edges):
            edges.append(e)
            have.add(e)
    return Triangulation(pts, verts, frozenset(have))


def _illegal(tri: Triangulation, a: int, b: int, c: int, d: int) -> bool:
    """Lawson test for edge ``ab`` with apexes ``c`` (left) and ``d`` (right).

    Lifted heights are perturbed by a term that dominates for the smallest
    index; on an exact cocircular tie this makes ``d`` count as inside the
    circle of ``abc`` exactly when the smallest of the four indices is ``a``
    or ``b``.
    """
    p = tri.points
    s = incircle(p[a], p[b], p[c], p[d])
    if s:
        return s > 0
    return min(a, b, c, d) in (a, b)


def _lawson_flips(tri: Triangulation) -> list[Flip]:
    flips: list[Flip] = []
    cur = tri
    changed = True
    while changed:
        changed = False
        for a, b in sorted(cur.edges):
            apex = cur.incident_triangles((a, b))
            if len(apex) != 2:
                continue
            c, d = apex  # c left of a->b, d right
            if _illegal(cur, a, b, c, d):
                f = Flip((a, b), _e(c, d))
                cur = cur.apply(f)
                flips.append(f)
                changed = True
                break
    return flips


def canonical_triangulation(tri: Triangulation) -> Triangulation:
    cur = tri
    for f in _lawson_flips(tri):
        cur = cur.apply(f)
    return cur


def flip_path(source: Triangulation, target: Triangulation) -> list[Flip]:
    """Flips turning ``source`` into ``target`` via the canonical triangulation."""
    if source.vertices != target.vertices or source.points != target.points:
        raise TriangulationError("triangulations are on different point sets")
    if source.edges == target.edges:
        return []
    forward = _lawson_flips(source)
    backward = _lawson_flips(target)
    return forward + [f.reversed() for f in reversed(backward)]


def replay(tri: Triangulation, flips: Iterable[Flip]) -> Triangulation:
    cur = tri
    for f in flips:
        cur = cur.apply(f)
    return cur


def is_triangulation(tri: Triangulation) -> bool:
    """Noncrossing and maximal on its vertex set."""
    edges = sorted(tri.edges)
    for i, e in enumerate(edges):
        if _crosses_any(tri.points, e, edges[i + 1:]):
            return False
    v = tri.vertices
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            e = (v[i], v[j])
            if e not in tri.edges and not _crosses_any(tri.points, e, edges):
                return False
    return True
