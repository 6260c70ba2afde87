"""Backtracking search for plane Hamiltonian cycles on a vertex subset.

Every plane spanning cycle meets the convex hull vertices in their cyclic
order, so the search starts at the first hull vertex, only allows the next
hull vertex in counterclockwise order, and never closes a cycle before all
vertices are used.  Crossings are pruned with one bitmask per segment.
"""

from __future__ import annotations

from typing import Iterable

from .geometry import convex_hull, segments_cross_unchecked
from .model import ColoredPointSet, PlaneCycle, require_cycle


def _dist2(p, q) -> int:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def hull_ordered_hamiltonian(ps: ColoredPointSet, vertices: Iterable[int] | None = None,
                             node_limit: int | None = None) -> PlaneCycle | None:
    """A plane Hamiltonian cycle of the subgraph on ``vertices``, or None.

    Neighbors are tried nearest first, ties by index, so the result is
    deterministic.  ``node_limit`` bounds the number of search nodes; on
    exhaustion a ``RuntimeError`` is raised rather than a wrong ``None``.
    """
    verts = sorted(set(range(len(ps)) if vertices is None else vertices))
    n = len(verts)
    if n < 3:
        return None
    pts = [ps.points[v] for v in verts]
    col = [ps.colors[v] for v in verts]
    hull = convex_hull(pts)
    hull_rank = [-1] * n
    for r, h in enumerate(hull):
        hull_rank[h] = r

    bit = [[0] * n for _ in range(n)]
    segs = []
    for i in range(n):
        for j in range(i + 1, n):
            bit[i][j] = bit[j][i] = 1 << len(segs)
            segs.append((i, j))
    crosses = []
    for a, (i, j) in enumerate(segs):
        mask = 0
        for b, (k, l) in enumerate(segs):
            if len({i, j, k, l}) == 4 and segments_cross_unchecked(pts[i], pts[j], pts[k], pts[l]):
                mask |= 1 << b
        crosses.append(mask)
    cross_of = {1 << a: m for a, m in enumerate(crosses)}

    order = [
        sorted((j for j in range(n) if j != i and col[j] != col[i]), key=lambda j: (_dist2(pts[i], pts[j]), j))
        for i in range(n)
    ]
    start = hull[0]
    path = [start]
    used = [False] * n
    used[start] = True
    nodes = 0

    def rec(forbidden: int, next_hull: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise RuntimeError(f"search exceeded {node_limit} nodes")
        last = path[-1]
        if len(path) == n:
            return col[last] != col[start] and not bit[last][start] & forbidden
        for v in order[last]:
            if used[v]:
                continue
            r = hull_rank[v]
            if r >= 0 and r != next_hull:
                continue
            e = bit[last][v]
            if e & forbidden:
                continue
            used[v] = True
            path.append(v)
            if rec(forbidden | cross_of[e], next_hull + (r >= 0)):
                return True
            path.pop()
            used[v] = False
        return False

    if not rec(0, 1):
        return None
    return require_cycle(ps, [verts[i] for i in path])
