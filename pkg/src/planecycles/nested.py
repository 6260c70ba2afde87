"""Even cycles of every length in nested bicolored point sets.

Setting: ``n`` red and ``n`` blue points, and a blue subset ``B`` whose
convex hull contains every red point strictly inside and no blue point.
For every ``t`` in ``2..n`` :func:`cycle_of_length` builds a plane cycle
with ``t`` points of each color.

Terminology, for ``B = b_0 .. b_{k-1}`` in counterclockwise order: the
*boundary triangle* ``t_i`` is the open triangle ``b_{i-1} b_i b_{i+1}`` and
the *edge-zone* ``z_i`` is ``t_i`` intersected with ``t_{i-1}``, a sliver
along the ring edge ``b_{i-1} b_i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .geometry import convex_hull, orient_sign, point_in_convex_polygon, point_in_triangle
from .model import BLUE, RED, ColoredPointSet, CycleViolation, PlaneCycle, validate_cycle
from .rainbow import ConfigurationWitness, witness_cycle
from .search import hull_ordered_hamiltonian


class NestedError(ValueError):
    """The nested precondition fails; ``clause`` names the broken part."""

    def __init__(self, clause: str, message: str):
        super().__init__(message)
        self.clause = clause


class DichotomyError(AssertionError):
    """Every boundary triangle holds two reds but neither drawing type matches."""


@dataclass(frozen=True)
class NestedDecomposition:
    B: tuple[int, ...]
    I: tuple[int, ...]
    triangle_members: tuple[tuple[int, ...], ...]
    zone_members: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.B)

    def triangle_counts(self) -> list[int]:
        return [len(m) for m in self.triangle_members]

    def zone_counts(self) -> list[int]:
        return [len(m) for m in self.zone_members]


def _members(ps: ColoredPointSet, B: Sequence[int], reds: Sequence[int]):
    k = len(B)
    pts = ps.points
    tri = []
    for i in range(k):
        a, b, c = pts[B[i - 1]], pts[B[i]], pts[B[(i + 1) % k]]
        tri.append(tuple(r for r in reds if point_in_triangle(pts[r], a, b, c)))
    zones = tuple(tuple(r for r in tri[i] if r in set(tri[i - 1])) for i in range(k))
    return tuple(tri), zones


def _decompose(ps: ColoredPointSet, B: Sequence[int], reds: Sequence[int]) -> NestedDecomposition:
    tri, zones = _members(ps, B, reds)
    return NestedDecomposition(tuple(B), tuple(reds), tri, zones)


def validate_nested(ps: ColoredPointSet, B: Sequence[int]) -> NestedDecomposition:
    counts = Counter(ps.colors)
    if set(counts) != {RED, BLUE} or counts[RED] != counts[BLUE]:
        raise NestedError("balance", f"need n red and n blue points, got {dict(counts)}")
    Bset = set(B)
    if len(Bset) < 3:
        raise NestedError("size", f"|B| must be at least 3, got {len(Bset)}")
    for b in sorted(Bset):
        if not 0 <= b < len(ps) or ps.colors[b] != BLUE:
            raise NestedError("blue", f"B member {b} is not a blue point")
    members = sorted(Bset)
    ring = [members[j] for j in convex_hull([ps.points[b] for b in members])]
    poly = [ps.points[b] for b in ring]
    if len(ring) < 3:
        raise NestedError("size", "hull of B has fewer than 3 vertices")
    reds = [i for i in range(len(ps)) if ps.colors[i] == RED]
    outside = [r for r in reds if not point_in_convex_polygon(ps.points[r], poly)]
    if outside:
        raise NestedError("red_outside", f"red point {outside[0]} is not strictly inside conv(B)")
    on_ring = set(ring)
    inside = [b for b in range(len(ps)) if ps.colors[b] == BLUE and b not in on_ring
              and point_in_convex_polygon(ps.points[b], poly)]
    if inside:
        raise NestedError("blue_inside", f"blue point {inside[0]} is strictly inside conv(B)")
    return _decompose(ps, ring, reds)


def suggest_B(ps: ColoredPointSet) -> NestedDecomposition:
    """Try ``B`` = all blue points; raises :class:`NestedError` naming the broken clause."""
    return validate_nested(ps, [i for i in range(len(ps)) if ps.colors[i] == BLUE])


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _check(ps: ColoredPointSet, seq: Sequence[int]) -> PlaneCycle | None:
    res = validate_cycle(ps, seq)
    return None if isinstance(res, CycleViolation) else res


def _two_zone_order(ps: ColoredPointSet, apex: int, pair: Sequence[int]) -> tuple[int, int]:
    """Order the two reds of a zone as seen counterclockwise from ``apex``."""
    p1, p2 = pair
    pts = ps.points
    if orient_sign(pts[apex], pts[p1], pts[p2]) < 0:
        p1, p2 = p2, p1
    return p1, p2


def _drawing_type(dec: NestedDecomposition) -> str:
    """Classify a configuration in which every boundary triangle holds two or more reds."""
    k = dec.k
    tc = dec.triangle_counts()
    zc = dec.zone_counts()
    in_zone = {r for m in dec.zone_members for r in m}
    if any(c != 2 for c in tc) or len(in_zone) != len(dec.I):
        raise DichotomyError(f"triangle counts {tc}, zone counts {zc}: not two reds per triangle in zones")
    if all(c == 1 for c in zc):
        return "C2"
    if k % 2 == 0 and all(zc[i] + zc[i - 1] == 2 and zc[i] in (0, 2) for i in range(k)):
        return "C1"
    raise DichotomyError(f"zone counts {zc} match neither drawing type")


def _c2_cycle(ps: ColoredPointSet, dec: NestedDecomposition, t: int) -> PlaneCycle:
    B, k = dec.B, dec.k
    zone_red = [m[0] for m in dec.zone_members]
    full = []
    for i in range(k):
        full += [B[i], zone_red[(i + 1) % k]]
    for start in range(k):
        seq = [full[(2 * start + j) % (2 * k)] for j in range(2 * t)]
        cyc = _check(ps, seq)
        if cyc is not None:
            return cyc
    raise AssertionError("no window of the zone cycle is plane")


def _c1_units(ps: ColoredPointSet, dec: NestedDecomposition) -> list[list[int]]:
    """Paths ``b_i p1 b_{i-1} p2`` for the nonempty zones, in clockwise ring order."""
    B, k = dec.B, dec.k
    units = []
    start = next(i for i in range(k) if dec.zone_members[i])
    for step in range(0, k, 2):
        i = (start - step) % k
        p1, p2 = _two_zone_order(ps, B[i - 1], dec.zone_members[i])
        units.append([B[i], p1, B[i - 1], p2])
    return units


def _c1_cycle(ps: ColoredPointSet, dec: NestedDecomposition, t: int) -> PlaneCycle:
    k = dec.k
    units = _c1_units(ps, dec)
    full = [v for u in units for v in u]
    if t == k:
        cyc = _check(ps, full)
        if cyc is None:
            raise AssertionError("zone-pair cycle on all points is not plane")
        return cyc
    assert t == k - 1
    # skip one apex b_{i-1} and one of its zone reds
    for j, (bi, p1, bprev, p2) in enumerate(units):
        for keep in (p1, p2):
            rest = [v for u in units[j + 1:] + units[:j] for v in u]
            cyc = _check(ps, [bi, keep] + rest)
            if cyc is not None:
                return cyc
    raise AssertionError("no shortcut of the zone-pair cycle is plane")


def _split_pair(ps: ColoredPointSet, B: Sequence[int], reds: Sequence[int]) -> PlaneCycle:
    """A plane 4-cycle on two reds and two ring vertices.

    The line through two points strictly inside the ring has ring vertices
    on both sides; one from each side completes the quadrilateral.
    """
    pts = ps.points
    r1, r2 = sorted(reds)[:2]
    left = min(b for b in B if orient_sign(pts[r1], pts[r2], pts[b]) > 0)
    right = min(b for b in B if orient_sign(pts[r1], pts[r2], pts[b]) < 0)
    return witness_cycle(ps, ConfigurationWitness("C1", r1, r2, left, right))


def _solve(ps: ColoredPointSet, B: list[int], reds: list[int], t: int, trace: list[str]) -> PlaneCycle:
    k = len(B)
    assert len(reds) == k >= t
    if k == 3 and t == 2:
        trace.append("split k=3")
        return _split_pair(ps, B, reds)
    dec = _decompose(ps, B, reds)
    tc = dec.triangle_counts()
    light = next((i for i in range(k) if tc[i] <= 1), None)
    if light is None and k > 3:
        kind = _drawing_type(dec)
        if kind == "C2":
            trace.append(f"C2 k={k}")
            return _c2_cycle(ps, dec, t)
        if t >= k - 1:
            trace.append(f"C1 k={k}")
            return _c1_cycle(ps, dec, t)
        if k == 4:
            # pruning would leave a two-point ring; here t == 2
            trace.append("split k=4")
            return _split_pair(ps, B, reds)
        # drop a nonempty zone together with both ends of its ring edge
        i = next(i for i in range(k) if dec.zone_members[i])
        trace.append(f"C1 prune k={k}")
        drop = set(dec.zone_members[i]) | {B[i], B[i - 1]}
        return _solve(ps, [b for b in B if b not in drop], [r for r in reds if r not in drop], t, trace)
    if k == t:
        trace.append(f"base k={k}")
        cyc = hull_ordered_hamiltonian(ps, B + reds)
        if cyc is None:
            raise AssertionError("nested base case has no plane Hamiltonian cycle")
        return cyc
    assert light is not None
    inside = dec.triangle_members[light]
    p = inside[0] if inside else min(reds)
    trace.append(f"case1 k={k} drop b={B[light]} r={p}")
    return _solve(ps, B[:light] + B[light + 1:], [r for r in reds if r != p], t, trace)


def cycle_of_length(ps: ColoredPointSet, B: Sequence[int], t: int, trace: list[str] | None = None) -> PlaneCycle:
    """A plane cycle with ``t`` red and ``t`` blue points.

    ``trace``, if given, collects one line per recursion step.
    """
    dec = validate_nested(ps, B)
    n = len(ps) // 2
    if not 2 <= t <= n:
        raise ValueError(f"t must lie in 2..{n}, got {t}")
    trace = [] if trace is None else trace
    ring = list(dec.B)
    reds = sorted(dec.I)
    extras = sorted(i for i in range(len(ps)) if ps.colors[i] == BLUE and i not in set(ring))
    # pair off blues outside B with reds, lowest indices first
    while extras and len(reds) > t:
        trace.append(f"discard b={extras[0]} r={reds[0]}")
        extras.pop(0)
        reds.pop(0)
    if extras:
        trace.append(f"base with extras k={len(ring)}")
        cyc = hull_ordered_hamiltonian(ps, ring + extras + reds)
        if cyc is None:
            raise AssertionError("nested base case has no plane Hamiltonian cycle")
    else:
        cyc = _solve(ps, ring, reds, t, trace)
    assert len(cyc) == 2 * t, f"expected length {2 * t}, got {len(cyc)}"
    return cyc
