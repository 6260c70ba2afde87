"""Plane Hamiltonian cycles in bicolored point sets with few interior points.

The search is exponential only in the number ``k`` of points strictly inside
the convex hull.  The hull boundary is cut into *critical arcs*; inside an arc
colors alternate and every line through two interior points keeps the arc on
one side.  A candidate solution is then described by

* an *initial cycle*: a directed cycle through the interior points in which
  some edges are *gaps* (to be replaced by boundary paths) and the rest are
  fixed noncrossing host edges, and
* an *arc selection*: one critical arc per gap endpoint, naming where that
  endpoint attaches to the boundary.

Seven local conditions on such a pair decide whether it extends to a plane
Hamiltonian cycle, and :func:`construct_from_selection` builds that cycle.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .geometry import convex_hull, orient_sign, segments_cross_unchecked
from .model import BLUE, RED, ColoredPointSet, CycleViolation, PlaneCycle, validate_cycle

log = logging.getLogger(__name__)

WORKERS_ENV = "PLANECYCLES_WORKERS"

FIRST = "first"
SECOND = "second"
BOTH = "both"


class FPTError(ValueError):
    pass


class InfeasibleSelection(ValueError):
    pass


# ---------------------------------------------------------------------------
# critical arcs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArcDecomposition:
    """Boundary order, critical vertices and critical arcs.

    Positions index into ``boundary`` (counterclockwise).  Arc ``a`` covers
    positions ``arc_starts[a]`` up to, not including, ``arc_starts[a + 1]``
    (cyclically).
    """

    boundary: tuple[int, ...]
    interior: tuple[int, ...]
    critical: tuple[tuple[int, str], ...]
    arc_starts: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.boundary)

    @property
    def k(self) -> int:
        return len(self.interior)

    @property
    def s(self) -> int:
        return len(self.arc_starts)

    def arc_len(self, a: int) -> int:
        if self.s == 1:
            return self.m
        nxt = self.arc_starts[(a + 1) % self.s]
        return (nxt - self.arc_starts[a]) % self.m

    def arc_positions(self, a: int) -> list[int]:
        return [(self.arc_starts[a] + j) % self.m for j in range(self.arc_len(a))]

    def arc_vertices(self, a: int) -> list[int]:
        return [self.boundary[p] for p in self.arc_positions(a)]

    def first(self, a: int) -> int:
        return self.boundary[self.arc_starts[a]]

    def last(self, a: int) -> int:
        return self.boundary[(self.arc_starts[a] + self.arc_len(a) - 1) % self.m]

    def first_kind_count(self) -> int:
        return sum(kind in (FIRST, BOTH) for _, kind in self.critical)

    def first_kind_arcs(self) -> frozenset[int]:
        """Arcs whose first vertex is a critical vertex of the first kind."""
        fk = {p for p, kind in self.critical if kind in (FIRST, BOTH)}
        return frozenset(a for a, p in enumerate(self.arc_starts) if p in fk)


def boundary_and_interior(ps: ColoredPointSet) -> tuple[list[int], list[int]]:
    hull = convex_hull(ps.points)
    on = set(hull)
    return hull, [i for i in range(len(ps)) if i not in on]


def _require_bipartite(ps: ColoredPointSet) -> None:
    counts = Counter(ps.colors)
    if set(counts) != {RED, BLUE} or counts[RED] != counts[BLUE]:
        raise FPTError(f"need equally many red and blue points, got {dict(counts)}")


def compute_arcs(ps: ColoredPointSet) -> ArcDecomposition:
    _require_bipartite(ps)
    boundary, interior = boundary_and_interior(ps)
    if len(interior) < 2:
        raise FPTError(f"critical arcs need k >= 2 interior points, got {len(interior)}")
    pts = ps.points
    lines = [(pts[u], pts[v]) for u, v in combinations(interior, 2)]
    m = len(boundary)
    critical = []
    for i in range(m):
        w, prev = boundary[i], boundary[i - 1]
        first = ps.colors[w] == ps.colors[prev]
        second = False
        for a, b in lines:
            s1, s2 = orient_sign(a, b, pts[w]), orient_sign(a, b, pts[prev])
            if s1 == 0 or s2 == 0:
                raise FPTError("boundary point on a line through two interior points")
            if s1 != s2:
                second = True
                break
        if first or second:
            critical.append((i, BOTH if first and second else FIRST if first else SECOND))
    if critical:
        starts = tuple(p for p, _ in critical)
    else:
        # cannot happen for k >= 2: every interior line splits the boundary
        anchor = min(range(m), key=lambda p: boundary[p])
        log.warning("no critical vertices; using one arc anchored at point %d", boundary[anchor])
        starts = (anchor,)
    return ArcDecomposition(tuple(boundary), tuple(interior), tuple(critical), starts)


# ---------------------------------------------------------------------------
# few interior points
# ---------------------------------------------------------------------------


def near_convex_decision(ps: ColoredPointSet) -> PlaneCycle | None:
    """Decide (and build) a plane Hamiltonian cycle when ``k <= 1``."""
    _require_bipartite(ps)
    boundary, interior = boundary_and_interior(ps)
    if len(interior) > 1:
        raise FPTError(f"near_convex_decision needs k <= 1, got {len(interior)}")
    c = ps.colors
    m = len(boundary)
    mono = [i for i in range(m) if c[boundary[i]] == c[boundary[(i + 1) % m]]]
    if not interior:
        return None if mono else _validated(ps, boundary)
    if len(mono) != 1:
        return None
    i = mono[0]
    p = interior[0]
    assert c[p] != c[boundary[i]], "interior point has the color of its insertion gap"
    seq = boundary[: i + 1] + [p] + boundary[i + 1:]
    return _validated(ps, seq)


def _validated(ps: ColoredPointSet, seq: Sequence[int]) -> PlaneCycle:
    res = validate_cycle(ps, seq)
    if isinstance(res, CycleViolation):
        raise AssertionError(f"constructed sequence is not a plane cycle: {res}")
    if len(seq) != len(ps):
        raise AssertionError("constructed cycle is not Hamiltonian")
    return res


# ---------------------------------------------------------------------------
# initial cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InitialCycle:
    """A directed cycle on the interior points with its gap edges.

    Edge ``j`` runs from ``order[j]`` to ``order[j + 1]``.  Gap endpoints are
    listed along the cycle as ``gap_vertices``: slot ``2a`` is where gap ``a``
    starts and slot ``2a + 1`` where it ends.  The pair of slots ``(2a + 1,
    2a + 2)`` is joined by fixed edges; it is a zero-length *dummy* edge when
    both slots sit on the same point.
    """

    order: tuple[int, ...]
    gaps: tuple[int, ...]
    gap_vertices: tuple[int, ...] = field(init=False)
    gap_edges: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        k = len(self.order)
        gv = []
        for j in self.gaps:
            gv += [self.order[j], self.order[(j + 1) % k]]
        object.__setattr__(self, "gap_vertices", tuple(gv))
        object.__setattr__(self, "gap_edges", tuple(self.gaps))

    @property
    def g(self) -> int:
        return len(self.gap_vertices)

    def edges(self) -> list[tuple[int, int]]:
        k = len(self.order)
        return [(self.order[j], self.order[(j + 1) % k]) for j in range(k)]

    def fixed_edges(self) -> list[tuple[int, int]]:
        gs = set(self.gaps)
        return [e for j, e in enumerate(self.edges()) if j not in gs]

    def is_dummy(self, slot: int) -> bool:
        """Is the fixed pair starting at odd ``slot`` a dummy edge?"""
        return self.gap_vertices[slot] == self.gap_vertices[(slot + 1) % self.g]

    def dummy_count(self) -> int:
        return sum(self.is_dummy(i) for i in range(1, self.g, 2))

    def expanded(self) -> tuple[int, ...]:
        """Cycle order with each point incident to two gaps listed twice."""
        out = []
        k = len(self.order)
        gs = set(self.gaps)
        for j, v in enumerate(self.order):
            out.append(v)
            if j in gs and (j - 1) % k in gs:
                out.append(v)
        return tuple(out)

    def chain(self, a: int) -> list[int]:
        """Interior points from the end of gap ``a - 1`` to the start of gap ``a``."""
        k = len(self.order)
        end_edge = self.gaps[a - 1]
        start_edge = self.gaps[a]
        j = (end_edge + 1) % k
        out = [self.order[j]]
        while j != start_edge:
            j = (j + 1) % k
            out.append(self.order[j])
        return out


def _fixed_edges_ok(ps: ColoredPointSet, edges: list[tuple[int, int]]) -> bool:
    pts = ps.points
    for a, b in edges:
        if ps.colors[a] == ps.colors[b]:
            return False
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) == 4 and segments_cross_unchecked(pts[a], pts[b], pts[c], pts[d]):
            return False
    return True


def _gap_sets(k: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, k + 1):
        yield from combinations(range(k), size)


def enumerate_initial_cycles(ps: ColoredPointSet, dec: ArcDecomposition) -> Iterator[InitialCycle]:
    """Directed cycles from the smallest interior index, each with every valid gap set."""
    interior = sorted(dec.interior)
    if len(interior) < 2:
        raise FPTError("initial cycles need k >= 2")
    head, rest = interior[0], interior[1:]
    for perm in permutations(rest):
        order = (head,) + perm
        k = len(order)
        edges = [(order[j], order[(j + 1) % k]) for j in range(k)]
        for gaps in _gap_sets(k):
            gs = set(gaps)
            if _fixed_edges_ok(ps, [e for j, e in enumerate(edges) if j not in gs]):
                yield InitialCycle(order, gaps)


# ---------------------------------------------------------------------------
# feasibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArcSelection:
    """Arc index chosen for each gap slot of an initial cycle."""

    arcs: tuple[int, ...]

    def counts(self) -> Counter:
        return Counter(self.arcs)


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    first_failed_condition: int | None = None
    detail: str = ""
    wrap: int | None = None  # for one-arc selections: the gap slot whose path wraps around


class _Context:
    """Per (instance, decomposition, initial cycle) lookup tables, filled lazily."""

    def __init__(self, ps: ColoredPointSet, dec: ArcDecomposition, f: InitialCycle):
        self.ps, self.dec, self.f = ps, dec, f
        self.pts = ps.points
        self.col = ps.colors
        self.g = f.g
        self.s = dec.s
        self.u = f.gap_vertices
        self.ucol = [self.col[v] for v in self.u]
        self.fixed = f.fixed_edges()
        self.fk = dec.first_kind_arcs()
        self.first = [dec.first(a) for a in range(self.s)]
        self.last = [dec.last(a) for a in range(self.s)]
        self.length = [dec.arc_len(a) for a in range(self.s)]
        self._cross_fixed: dict[tuple[int, int], bool] = {}
        self._cross: dict[tuple[int, int, int, int], bool] = {}
        self._right: dict[tuple[int, int, int], bool] = {}

    # slot pair (i, i + 1) is a gap iff i is even
    @staticmethod
    def is_gap_pair(i: int) -> bool:
        return i % 2 == 0

    def cross_fixed(self, i: int, a: int) -> bool:
        key = (i, a)
        r = self._cross_fixed.get(key)
        if r is None:
            u, w = self.u[i], self.first[a]
            pu, pw = self.pts[u], self.pts[w]
            r = any(
                u not in (x, y) and segments_cross_unchecked(pu, pw, self.pts[x], self.pts[y]) for x, y in self.fixed
            )
            self._cross_fixed[key] = r
        return r

    def cross(self, i: int, a: int, j: int, b: int) -> bool:
        key = (i, a, j, b) if i < j else (j, b, i, a)
        r = self._cross.get(key)
        if r is None:
            u, v = self.u[i], self.u[j]
            w, x = self.first[a], self.first[b]
            r = u != v and segments_cross_unchecked(self.pts[u], self.pts[w], self.pts[v], self.pts[x])
            self._cross[key] = r
        return r

    def right_of(self, i: int, j: int, a: int) -> bool:
        """Is arc ``a`` to the right of the line from slot ``i`` toward slot ``j``?"""
        u, v = self.u[i], self.u[j]
        if u == v:
            return True
        key = (u, v, a)
        r = self._right.get(key)
        if r is None:
            r = orient_sign(self.pts[u], self.pts[v], self.pts[self.first[a]]) < 0
            self._right[key] = r
        return r

    def fk_between(self, a: int, b: int) -> bool:
        """First-kind critical among the starts of arcs after ``a`` up to ``b``."""
        x = a
        while x != b:
            x = (x + 1) % self.s
            if x in self.fk:
                return True
        return False

    def nongap_ok(self, i: int, a: int, b: int) -> tuple[int, str] | None:
        """Conditions 5 and 6 for the fixed pair (i, i + 1) with arcs a, b."""
        j = (i + 1) % self.g
        if a == b:
            if self.ucol[i] == self.ucol[j]:
                return 5, f"fixed pair ({i}, {j}) has one color but shares arc {a}"
            return None
        if b != (a + 1) % self.s:
            return 6, f"arcs {a}, {b} of fixed pair ({i}, {j}) are not adjacent"
        if self.col[self.last[a]] == self.ucol[i]:
            return 6, f"last vertex of arc {a} has the color of slot {i}"
        if self.col[self.first[b]] == self.ucol[j]:
            return 6, f"first vertex of arc {b} has the color of slot {j}"
        return None

    def size_ok(self, a: int, run: list[int], skip_pair: int | None = None) -> tuple[int, str] | None:
        """Condition 7 for arc ``a`` selected by the ordered slots ``run``."""
        mc = 0
        for p, q in zip(run, run[1:]):
            if self.is_gap_pair(p) and p != skip_pair and self.ucol[p] == self.ucol[q]:
                mc += 1
        eps = int(self.col[self.first[a]] == self.ucol[run[0]])
        need = len(run) - mc + eps
        if self.length[a] < need:
            return 7, f"arc {a} has {self.length[a]} vertices, needs {need}"
        return None


def _runs(sel: Sequence[int]) -> list[list[int]]:
    """Maximal cyclic runs of equal arcs, for a selection that is not constant."""
    g = len(sel)
    start = next(i for i in range(g) if sel[i] != sel[i - 1])
    runs: list[list[int]] = []
    for step in range(g):
        i = (start + step) % g
        if step == 0 or sel[i] != sel[i - 1]:
            runs.append([i])
        else:
            runs[-1].append(i)
    return runs


def _check_cyclic(ctx: _Context, sel: Sequence[int]) -> FeasibilityReport:
    g, s = ctx.g, ctx.s
    wind = sum((sel[(i + 1) % g] - sel[i]) % s for i in range(g))
    if wind != s:
        return FeasibilityReport(False, 1, f"selected arcs wind {wind // s} times around the boundary")
    runs = _runs(sel)
    for run in runs:
        a = sel[run[0]]
        for x in range(len(run)):
            for y in range(x + 1, len(run)):
                if not ctx.right_of(run[x], run[y], a):
                    return FeasibilityReport(False, 1, f"arc {a} not right of slots {run[x]} -> {run[y]}")
    for i in range(g):
        if ctx.cross_fixed(i, sel[i]):
            return FeasibilityReport(False, 2, f"slot {i} to arc {sel[i]} crosses a fixed edge")
    for i in range(g):
        for j in range(i + 1, g):
            if sel[i] != sel[j] and ctx.cross(i, sel[i], j, sel[j]):
                return FeasibilityReport(False, 3, f"slots {i} and {j} attach by crossing segments")
    for i in range(0, g, 2):
        a, b = sel[i], sel[i + 1]
        if a != b and ctx.fk_between(a, b):
            return FeasibilityReport(False, 4, f"boundary path of gap ({i}, {i + 1}) is not alternating")
    bad = None
    for i in range(1, g, 2):
        r = ctx.nongap_ok(i, sel[i], sel[(i + 1) % g])
        if r is not None and (bad is None or r[0] < bad[0]):
            bad = r
    if bad is not None:
        return FeasibilityReport(False, *bad)
    for run in runs:
        r = ctx.size_ok(sel[run[0]], run)
        if r is not None:
            return FeasibilityReport(False, *r)
    return FeasibilityReport(True)


def _check_one_arc(ctx: _Context, a: int) -> FeasibilityReport:
    """Every slot selected the same arc; some gap path must wrap around."""
    g = ctx.g
    first_failure = None
    for h in range(0, g, 2):
        order = [(h + 1 + step) % g for step in range(g)]  # starts at the end of the wrapping gap
        r = _check_linear(ctx, a, order, h)
        if r is None:
            return FeasibilityReport(True, wrap=h)
        if first_failure is None:
            first_failure = r
    return FeasibilityReport(False, *first_failure)


def _check_linear(ctx: _Context, a: int, order: list[int], wrap: int) -> tuple[int, str] | None:
    for x in range(len(order)):
        for y in range(x + 1, len(order)):
            if not ctx.right_of(order[x], order[y], a):
                return 1, f"arc {a} not right of slots {order[x]} -> {order[y]}"
    for i in order:
        if ctx.cross_fixed(i, a):
            return 2, f"slot {i} to arc {a} crosses a fixed edge"
    if ctx.fk:
        return 4, f"gap ({wrap}, {wrap + 1}) wraps past a critical vertex of the first kind"
    for i in range(1, ctx.g, 2):
        r = ctx.nongap_ok(i, a, a)
        if r is not None:
            return r
    return ctx.size_ok(a, order, skip_pair=wrap)


def _context(ps, dec, f) -> _Context:
    return _Context(ps, dec, f)


def check_feasible(ps: ColoredPointSet, dec: ArcDecomposition, f: InitialCycle,
                   sel: ArcSelection | Sequence[int]) -> FeasibilityReport:
    arcs = tuple(sel.arcs if isinstance(sel, ArcSelection) else sel)
    if len(arcs) != f.g or any(not 0 <= a < dec.s for a in arcs):
        raise FPTError(f"selection {arcs} does not assign one of {dec.s} arcs to each of {f.g} slots")
    ctx = _context(ps, dec, f)
    if len(set(arcs)) == 1:
        return _check_one_arc(ctx, arcs[0])
    return _check_cyclic(ctx, arcs)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _assign_positions(ctx: _Context, sel: Sequence[int], runs: list[list[int]], wrap: int | None) -> dict[int, int]:
    """Offsets inside the selected arc for every slot (first/last/+1 rules)."""
    g = ctx.g
    x: dict[int, int] = {}
    for run in runs:
        a = sel[run[0]]
        first_col = ctx.col[ctx.first[a]]
        for idx, p in enumerate(run):
            prev = (p - 1) % g
            prev_gap = ctx.is_gap_pair(prev)
            if idx == 0:
                if not prev_gap:
                    x[p] = 0
                else:
                    x[p] = 0 if first_col != ctx.ucol[p] else 1
            else:
                q = run[idx - 1]
                if not prev_gap:
                    x[p] = x[q] + 1
                else:
                    x[p] = x[q] if ctx.ucol[q] == ctx.ucol[p] else x[q] + 1
            last_in_run = idx == len(run) - 1
            if last_in_run and not ctx.is_gap_pair(p) and p != wrap:
                # the next slot continues at the first vertex of the following arc
                if prev_gap:
                    x[p] = ctx.length[a] - 1
    return x


def _build(ctx: _Context, sel: Sequence[int], runs: list[list[int]], wrap: int | None) -> list[int] | None:
    dec, f, g = ctx.dec, ctx.f, ctx.g
    x = _assign_positions(ctx, sel, runs, wrap)
    pos = {}
    for i in range(g):
        a = sel[i]
        if not 0 <= x[i] < ctx.length[a]:
            return None
        pos[i] = (dec.arc_starts[a] + x[i]) % dec.m
    seq: list[int] = []
    for a in range(len(f.gaps)):
        seq += f.chain(a)
        p, q = pos[2 * a], pos[2 * a + 1]
        steps = (q - p) % dec.m
        if 2 * a == wrap and steps == 0:
            steps = dec.m
        seq += [dec.boundary[(p + t) % dec.m] for t in range(steps + 1)]
    return seq


def _attempt(ctx: _Context, sel: Sequence[int], wrap: int | None) -> PlaneCycle | None:
    g = ctx.g
    if wrap is None:
        if len(set(sel)) == 1:
            return None
        runs = _runs(sel)
    else:
        runs = [[(wrap + 1 + t) % g for t in range(g)]]
    seq = _build(ctx, sel, runs, wrap)
    if seq is None or len(seq) != len(ctx.ps) or len(set(seq)) != len(seq):
        return None
    res = validate_cycle(ctx.ps, seq)
    return None if isinstance(res, CycleViolation) else res


def construct_from_selection(ps: ColoredPointSet, dec: ArcDecomposition, f: InitialCycle,
                             sel: ArcSelection | Sequence[int]) -> PlaneCycle:
    arcs = tuple(sel.arcs if isinstance(sel, ArcSelection) else sel)
    report = check_feasible(ps, dec, f, arcs)
    if not report.feasible:
        raise InfeasibleSelection(f"condition {report.first_failed_condition}: {report.detail}")
    cyc = _attempt(_context(ps, dec, f), arcs, report.wrap)
    if cyc is None:
        raise AssertionError(f"feasible selection {arcs} did not yield a plane Hamiltonian cycle")
    return cyc


def attempt_construction(ps: ColoredPointSet, dec: ArcDecomposition, f: InitialCycle,
                         sel: ArcSelection | Sequence[int]) -> PlaneCycle | None:
    """Run the assignment rules without checking feasibility first.

    Returns the cycle if the result is a plane Hamiltonian cycle, else None.
    For one-arc selections every wrapping gap is tried.
    """
    arcs = tuple(sel.arcs if isinstance(sel, ArcSelection) else sel)
    ctx = _context(ps, dec, f)
    if len(set(arcs)) > 1:
        return _attempt(ctx, arcs, None)
    for h in range(0, ctx.g, 2):
        cyc = _attempt(ctx, arcs, h)
        if cyc is not None:
            return cyc
    return None


def boundary_visited_ccw(dec: ArcDecomposition, cycle: Sequence[int]) -> bool:
    """Does one of the two traversals of ``cycle`` meet the hull points in ccw order?"""
    pos = {v: i for i, v in enumerate(dec.boundary)}
    seen = [pos[v] for v in cycle if v in pos]
    m = len(seen)

    def ccw(seq):
        return sum((seq[(i + 1) % m] - seq[i]) % len(dec.boundary) for i in range(m)) == len(dec.boundary)

    return ccw(seen) or ccw(seen[::-1])


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def iter_feasible_selections(ps: ColoredPointSet, dec: ArcDecomposition, f: InitialCycle) -> Iterator[tuple[int, ...]]:
    """Feasible selections for ``f`` in lexicographic order.

    Depth-first over slots with incremental pruning; a completed tuple is
    confirmed with the full check before it is yielded.
    """
    ctx = _context(ps, dec, f)
    g, s = ctx.g, ctx.s
    sel = [0] * g

    def rec(i: int, wind: int) -> Iterator[tuple[int, ...]]:
        if i == g:
            tup = tuple(sel)
            if wind == 0:
                if _check_one_arc(ctx, tup[0]).feasible:
                    yield tup
            elif wind + (sel[0] - sel[-1]) % s == s and _check_cyclic(ctx, tup).feasible:
                yield tup
            return
        for a in range(s):
            w = wind
            if i:
                b = sel[i - 1]
                w += (a - b) % s
                if w > s:
                    continue
                if ctx.is_gap_pair(i - 1):
                    if a != b and ctx.fk_between(b, a):
                        continue
                else:
                    r = ctx.nongap_ok(i - 1, b, a)
                    if r is not None:
                        continue
            if ctx.cross_fixed(i, a):
                continue
            if any(sel[j] != a and ctx.cross(j, sel[j], i, a) for j in range(i)):
                continue
            if w > 0 and not _run_order_ok(ctx, sel, i, a, w, wind):
                continue
            sel[i] = a
            yield from rec(i + 1, w)
        sel[i] = 0

    yield from rec(0, 0)


def _run_order_ok(ctx: _Context, sel: list[int], i: int, a: int, w: int, wind: int) -> bool:
    """Right-of tests that are already decided once the selection is known not to be constant."""
    if wind == 0:
        # leaving the initial constant prefix: its internal order is now fixed
        for x in range(i):
            for y in range(x + 1, i):
                if not ctx.right_of(x, y, sel[0]):
                    return False
        return True
    if sel[i - 1] != a:
        return True
    j = i - 1
    while j > 0 and sel[j - 1] == a:
        j -= 1
    if j == 0:
        return True  # still in the initial run, checked when it ends
    return all(ctx.right_of(x, i, a) for x in range(j, i))


@dataclass(frozen=True)
class HamiltonResult:
    hamiltonian: bool
    cycle: PlaneCycle | None = None
    method: str = ""
    initial_cycle: InitialCycle | None = None
    selection: tuple[int, ...] | None = None
    initial_cycles_tried: int = 0


def _search_chunk(args) -> tuple[int, tuple[int, ...]] | None:
    ps, dec, cycles = args
    for idx, f in cycles:
        for sel in iter_feasible_selections(ps, dec, f):
            return idx, sel
    return None


def _worker_count(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def decide_hamiltonian(ps: ColoredPointSet, construct: bool = False, workers: int | None = None) -> HamiltonResult:
    """Does ``ps`` admit a plane Hamiltonian cycle?

    With ``construct`` the cycle is built from the first feasible pair found
    in enumeration order; the reported witness does not depend on ``workers``.
    """
    _require_bipartite(ps)
    boundary, interior = boundary_and_interior(ps)
    k = len(interior)
    if k <= 1:
        cyc = near_convex_decision(ps)
        return HamiltonResult(cyc is not None, cyc if construct else None, "near_convex")
    dec = compute_arcs(ps)
    if dec.first_kind_count() > k:
        return HamiltonResult(False, None, "first_kind_guard")
    if dec.s < 2:
        from .search import hull_ordered_hamiltonian

        log.warning("fewer than two critical arcs; falling back to exhaustive search")
        cyc = hull_ordered_hamiltonian(ps)
        return HamiltonResult(cyc is not None, cyc if construct else None, "fallback")
    cycles = list(enumerate(enumerate_initial_cycles(ps, dec)))
    n_workers = _worker_count(workers)
    hit = None
    if n_workers == 1 or len(cycles) < 2:
        hit = _search_chunk((ps, dec, cycles))
    else:
        chunks = [cycles[w::n_workers] for w in range(n_workers)]
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            hits = [h for h in pool.map(_search_chunk, [(ps, dec, c) for c in chunks]) if h is not None]
        hit = min(hits) if hits else None
    if hit is None:
        return HamiltonResult(False, None, "search", initial_cycles_tried=len(cycles))
    idx, sel = hit
    f = cycles[idx][1]
    cyc = construct_from_selection(ps, dec, f, sel) if construct else None
    return HamiltonResult(True, cyc, "search", f, sel, idx + 1)
