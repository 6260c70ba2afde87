"""Shortening non-rainbow plane cycles.

Given a non-rainbow plane cycle of length ``t >= 6`` on its own vertex set,
:func:`shorten_cycle` returns a strictly shorter one of length at least
``ceil(t/2) + 1``.  Three moves are tried in order:

1. drop a *good* principal point (length ``t - 1``);
2. close the longer side of a noncrossing chord that is a host edge;
3. walk a flip sequence away from a triangulation containing the cycle and
   use the first flip that destroys a cycle edge (length ``t - 2``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import Point, orient_sign, point_in_polygon, segments_cross_unchecked, signed_area2
from .model import ColoredPointSet, CycleViolation, PlaneCycle, is_rainbow, validate_cycle
from .triangulation import Flip, flip_path, triangulate_containing

EAR = "ear"
MOUTH = "mouth"


class ShorteningError(ValueError):
    pass


@dataclass(frozen=True)
class PrincipalPoint:
    vertex: int
    neighbors: tuple[int, int]
    kind: str  # EAR or MOUTH
    good: bool
    reason: str = ""


def _cycle_points(ps: ColoredPointSet, cyc: Sequence[int]) -> list[Point]:
    return [ps.points[v] for v in cyc]


def _segment_clear(ps: ColoredPointSet, cyc: Sequence[int], a: int, b: int) -> bool:
    """Does segment ``ab`` avoid crossing every edge of ``cyc``?"""
    pts = ps.points
    pa, pb = pts[a], pts[b]
    t = len(cyc)
    for i in range(t):
        c, d = cyc[i], cyc[(i + 1) % t]
        if a in (c, d) or b in (c, d):
            continue
        if segments_cross_unchecked(pa, pb, pts[c], pts[d]):
            return False
    return True


def _inside(ps: ColoredPointSet, cyc: Sequence[int], a: int, b: int) -> bool:
    """Is the open segment ``ab`` (known not to cross ``cyc``) inside the cycle?

    Its midpoint decides; doubling all coordinates keeps it integral.
    """
    (ax, ay), (bx, by) = ps.points[a], ps.points[b]
    poly = [(2 * x, 2 * y) for x, y in _cycle_points(ps, cyc)]
    return point_in_polygon((ax + bx, ay + by), poly)


def principal_points(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> list[PrincipalPoint]:
    cyc = tuple(cycle)
    t = len(cyc)
    out = []
    for i, p in enumerate(cyc):
        a, b = cyc[i - 1], cyc[(i + 1) % t]
        if t > 3 and not _segment_clear(ps, cyc, a, b):
            continue
        kind = EAR if t == 3 or _inside(ps, cyc, a, b) else MOUTH
        if t - 1 < 3:
            good, reason = False, "t-1<3"
        elif ps.colors[a] == ps.colors[b]:
            good, reason = False, "neighbors share a color"
        elif is_rainbow(ps, cyc[:i] + cyc[i + 1:]):
            good, reason = False, "shortened cycle is rainbow"
        else:
            good, reason = True, ""
        out.append(PrincipalPoint(p, (a, b), kind, good, reason))
    return out


def ear_mouth_counts(ps: ColoredPointSet, cycle: Sequence[int]) -> tuple[int, int]:
    pp = principal_points(ps, cycle)
    ears = sum(p.kind == EAR for p in pp)
    return ears, len(pp) - ears


def is_convex_cycle(ps: ColoredPointSet, cycle: Sequence[int]) -> bool:
    pts = _cycle_points(ps, cycle)
    t = len(pts)
    signs = {orient_sign(pts[i - 1], pts[i], pts[(i + 1) % t]) for i in range(t)}
    return len(signs) == 1


def check_three_principal_path(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> bool:
    """Exactly three principal points, consecutive along the cycle."""
    cyc = tuple(cycle)
    pp = principal_points(ps, cyc)
    if len(pp) != 3:
        return False
    t = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    idx = sorted(pos[p.vertex] for p in pp)
    # some rotation of the three positions is i, i+1, i+2 (mod t)
    return any(
        {(idx[j] + d) % t for d in range(3)} == set(idx) for j in range(3)
    )


# ---------------------------------------------------------------------------
# shortening
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShorteningStep:
    """How a shorter cycle was obtained; ``detail`` names the vertex, chord or flip."""

    move: str  # "principal", "chord", "flip"
    cycle: PlaneCycle
    detail: object = None


def _require_input(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    res = validate_cycle(ps, cyc)
    if isinstance(res, CycleViolation):
        raise ShorteningError(f"input is not a plane cycle: {res}")
    if len(cyc) < 6:
        raise ShorteningError(f"need t >= 6, got {len(cyc)}")
    if is_rainbow(ps, cyc):
        raise ShorteningError("input cycle is rainbow")
    return cyc


def _finish(ps: ColoredPointSet, seq: Sequence[int], t: int, move: str, detail) -> ShorteningStep:
    res = validate_cycle(ps, seq)
    assert not isinstance(res, CycleViolation), f"{move} produced an invalid cycle: {res}"
    assert not is_rainbow(ps, seq), f"{move} produced a rainbow cycle {seq}"
    assert -(-t // 2) + 1 <= len(seq) <= t - 1, f"{move} produced length {len(seq)} from {t}"
    return ShorteningStep(move, res, detail)


def _noncrossing_chords(ps: ColoredPointSet, cyc: tuple[int, ...]) -> list[tuple[bool, int, int]]:
    """Host-edge chords crossing no cycle edge, as ``(is_interior, u, v)``."""
    t = len(cyc)
    edges = {frozenset((cyc[i], cyc[(i + 1) % t])) for i in range(t)}
    verts = sorted(cyc)
    out = []
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if frozenset((u, v)) in edges or not ps.is_edge(u, v):
                continue
            if _segment_clear(ps, cyc, u, v):
                out.append((_inside(ps, cyc, u, v), u, v))
    return out


def _close_chord(cyc: tuple[int, ...], u: int, v: int) -> list[int]:
    """The longer of the two u-v paths along ``cyc``; the chord closes it."""
    t = len(cyc)
    i, j = cyc.index(u), cyc.index(v)
    fwd = [cyc[(i + s) % t] for s in range((j - i) % t + 1)]
    bwd = [cyc[(j + s) % t] for s in range((i - j) % t + 1)]
    return fwd if len(fwd) >= len(bwd) else bwd


def _flip_shortcut(ps: ColoredPointSet, cyc: tuple[int, ...]) -> tuple[list[int], Flip]:
    t = len(cyc)
    cyc_edges = [(cyc[i], cyc[(i + 1) % t]) for i in range(t)]
    edge_set = {frozenset(e) for e in cyc_edges}
    verts = sorted(cyc)
    e = next(
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1:]
        if ps.is_edge(u, v) and frozenset((u, v)) not in edge_set
    )
    tri = triangulate_containing(ps.points, cyc, cyc_edges)
    target = triangulate_containing(ps.points, cyc, [e])
    cur = tri
    for f in flip_path(tri, target):
        if frozenset(f.removed) in edge_set:
            break
        cur = cur.apply(f)
    else:
        raise AssertionError("flip path never removed a cycle edge")
    a, b = f.removed
    c, d = f.inserted
    # before the stopping flip every host edge of the triangulation is a cycle edge
    for x, y in cur.edges:
        assert frozenset((x, y)) in edge_set or not ps.is_edge(x, y), "host chord survived in triangulation"
    ca, cb = frozenset((a, c)) in edge_set, frozenset((b, c)) in edge_set
    da, db = frozenset((a, d)) in edge_set, frozenset((b, d)) in edge_set
    assert ca != cb and da != db, f"flip {f} does not sit on a 3-edge cycle path"
    assert ps.colors[c] != ps.colors[d], f"flip {f} inserts a monochromatic edge"
    # orient so that the path is x - a' - b' - y with x, y in {c, d}
    if ca:
        assert db
        x, y = c, d
    else:
        assert cb and da
        x, y = d, c
    i = cyc.index(x)
    rot = cyc[i:] + cyc[:i]
    if rot[1] != a:
        rot = (rot[0],) + rot[1:][::-1]
    assert rot[1] == a and rot[2] == b and rot[3] == y
    return [x] + list(rot[3:]), f


def shorten_step(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> ShorteningStep:
    cyc = _require_input(ps, cycle)
    t = len(cyc)
    for p in sorted(principal_points(ps, cyc), key=lambda q: q.vertex):
        if p.good:
            return _finish(ps, [v for v in cyc if v != p.vertex], t, "principal", p.vertex)
    chords = _noncrossing_chords(ps, cyc)
    if chords:
        # interior chords first, then lexicographic
        _, u, v = min(chords, key=lambda c: (not c[0], c[1], c[2]))
        return _finish(ps, _close_chord(cyc, u, v), t, "chord", (u, v))
    seq, f = _flip_shortcut(ps, cyc)
    return _finish(ps, seq, t, "flip", f)


def shorten_cycle(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> PlaneCycle:
    """A shorter non-rainbow plane cycle on a subset of the cycle's vertices.

    Points of ``ps`` off the cycle are ignored.
    """
    return shorten_step(ps, cycle).cycle


def shorten_to_small(ps: ColoredPointSet, cycle: PlaneCycle | Sequence[int]) -> list[ShorteningStep]:
    """Iterate :func:`shorten_step` until the cycle has length 4 or 5."""
    steps = []
    cur = tuple(cycle)
    while len(cur) >= 6:
        step = shorten_step(ps, cur)
        steps.append(step)
        cur = step.cycle.vertices
    return steps


def polygon_area2(ps: ColoredPointSet, cycle: Sequence[int]) -> int:
    return abs(signed_area2(_cycle_points(ps, cycle)))
