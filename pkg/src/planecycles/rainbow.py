"""Detection of non-rainbow plane cycles through four small configurations.

A non-rainbow cycle repeats at least one color.  Such a plane cycle exists
exactly when one of four point patterns occurs:

* ``C1`` two same-colored pairs ``u, u'`` and ``v, v'`` (two colors) with
  ``v, v'`` strictly on opposite sides of the line ``uu'``;
* ``C2`` a same-colored pair ``u, u'`` whose line separates two points
  ``v, v'`` of two further, distinct colors;
* ``C3`` a bichromatic pair ``u, u'`` whose line separates a same-colored
  pair ``v, v'`` of a third color;
* ``C4`` a same-colored pair ``u, u'`` plus ``v, v'`` forming a convex
  quadrilateral with a fifth point ``w`` inside, all of four distinct colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .geometry import convex_hull, orient_sign, point_in_convex_polygon
from .model import ColoredPointSet, PlaneCycle, validate_cycle, CycleViolation, is_rainbow

KINDS = ("C1", "C2", "C3", "C4")


@dataclass(frozen=True)
class ConfigurationWitness:
    kind: str
    u: int
    u2: int
    v: int
    v2: int
    w: int | None = None

    @property
    def vertices(self) -> tuple[int, ...]:
        base = (self.u, self.u2, self.v, self.v2)
        return base if self.w is None else base + (self.w,)

    def roles(self) -> dict[str, int]:
        out = {"u": self.u, "u'": self.u2, "v": self.v, "v'": self.v2}
        if self.w is not None:
            out["w"] = self.w
        return out


class InvalidWitness(ValueError):
    pass


def _separated(ps: ColoredPointSet, u: int, u2: int, v: int, v2: int) -> bool:
    p = ps.points
    return orient_sign(p[u], p[u2], p[v]) * orient_sign(p[u], p[u2], p[v2]) < 0


def _convex_quad_with_inside(ps: ColoredPointSet, quad: tuple[int, ...], w: int) -> bool:
    pts = [ps.points[i] for i in quad]
    hull = convex_hull(pts)
    if len(hull) != 4:
        return False
    return point_in_convex_polygon(ps.points[w], [pts[i] for i in hull])


def check_witness(ps: ColoredPointSet, wit: ConfigurationWitness) -> bool:
    """Does ``wit`` satisfy the definition of its configuration in ``ps``?"""
    c = ps.colors
    verts = wit.vertices
    if len(set(verts)) != len(verts) or any(not 0 <= i < len(ps) for i in verts):
        return False
    u, u2, v, v2 = wit.u, wit.u2, wit.v, wit.v2
    if wit.kind == "C1":
        ok = c[u] == c[u2] and c[v] == c[v2] and c[u] != c[v]
        return wit.w is None and ok and _separated(ps, u, u2, v, v2)
    if wit.kind == "C2":
        ok = c[u] == c[u2] and len({c[u], c[v], c[v2]}) == 3
        return wit.w is None and ok and _separated(ps, u, u2, v, v2)
    if wit.kind == "C3":
        ok = c[v] == c[v2] and len({c[u], c[u2], c[v]}) == 3
        return wit.w is None and ok and _separated(ps, u, u2, v, v2)
    if wit.kind == "C4":
        if wit.w is None:
            return False
        ok = c[u] == c[u2] and len({c[u], c[v], c[v2], c[wit.w]}) == 4
        return ok and _convex_quad_with_inside(ps, (u, u2, v, v2), wit.w)
    return False


def _scan_pair_lines(ps: ColoredPointSet, same_color_line: bool, same_color_pair: bool):
    """Shared scan for C1-C3 over tuples (u, u', v, v') in lexicographic order."""
    n = len(ps)
    c = ps.colors
    pts = ps.points
    for u in range(n):
        for u2 in range(u + 1, n):
            if (c[u] == c[u2]) != same_color_line:
                continue
            side = [orient_sign(pts[u], pts[u2], pts[x]) for x in range(n)]
            for v in range(n):
                if v in (u, u2) or c[v] in (c[u], c[u2]) or side[v] == 0:
                    continue
                for v2 in range(v + 1, n):
                    if v2 in (u, u2) or side[v2] != -side[v]:
                        continue
                    if c[v2] in (c[u], c[u2]):
                        continue
                    if (c[v] == c[v2]) == same_color_pair:
                        yield u, u2, v, v2


def find_configuration(ps: ColoredPointSet) -> ConfigurationWitness | None:
    """First witness in search order C1, C2, C3, C4; lexicographic within a kind."""
    for kind, line_same, pair_same in (("C1", True, True), ("C2", True, False), ("C3", False, True)):
        for u, u2, v, v2 in _scan_pair_lines(ps, line_same, pair_same):
            return ConfigurationWitness(kind, u, u2, v, v2)
    if ps.color_count < 4:
        return None
    return _find_c4(ps)


def _find_c4(ps: ColoredPointSet) -> ConfigurationWitness | None:
    n = len(ps)
    c = ps.colors
    for u, u2 in combinations(range(n), 2):
        if c[u] != c[u2]:
            continue
        others = [x for x in range(n) if c[x] != c[u]]
        for v, v2 in combinations(others, 2):
            if c[v] == c[v2]:
                continue
            for w in others:
                if c[w] in (c[v], c[v2]):
                    continue
                if _convex_quad_with_inside(ps, (u, u2, v, v2), w):
                    return ConfigurationWitness("C4", u, u2, v, v2, w)
    return None


def has_nonrainbow_plane_cycle(ps: ColoredPointSet) -> bool:
    return find_configuration(ps) is not None


def witness_cycle(ps: ColoredPointSet, wit: ConfigurationWitness) -> PlaneCycle:
    """A short non-rainbow plane cycle on the witness points.

    For C1-C3 the quadrilateral ``u v u' v'`` is always plane: the two
    triangles ``u v u'`` and ``u v' u'`` lie on opposite sides of ``uu'``.
    For C4 the 4-cycle around the quadrilateral works when ``u, u'`` are
    opposite corners; when they are adjacent corners the inner point ``w``
    is spliced between them, giving a 5-cycle.
    """
    if not check_witness(ps, wit):
        raise InvalidWitness(f"{wit} is not a valid witness")
    u, u2, v, v2 = wit.u, wit.u2, wit.v, wit.v2
    if wit.kind in ("C1", "C2", "C3"):
        candidates = [(u, v, u2, v2), (u, u2, v, v2), (u, v, v2, u2)]
    else:
        quad = (u, u2, v, v2)
        hull = [quad[i] for i in convex_hull([ps.points[i] for i in quad])]
        k = hull.index(u)
        ring = hull[k:] + hull[:k]  # starts at u
        if ring[2] == u2:
            candidates = [tuple(ring)]
        else:
            # u, u' adjacent on the quadrilateral: walk the long way round
            # from u' to u and come back through w
            if ring[1] == u2:
                ring = [ring[0]] + ring[1:][::-1]
            candidates = [tuple(ring) + (wit.w,)]
    for cand in candidates:
        res = validate_cycle(ps, cand)
        if not isinstance(res, CycleViolation) and not is_rainbow(ps, cand):
            return res
    raise AssertionError(f"no plane non-rainbow cycle found on witness {wit}")
