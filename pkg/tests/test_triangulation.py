from __future__ import annotations

from collections import deque

import pytest

from planecycles.generate import GenSpec, generate
from planecycles.triangulation import (
    Flip,
    TriangulationError,
    canonical_triangulation,
    flip_path,
    is_triangulation,
    replay,
    triangulate_containing,
)


def seven_points():
    return generate(GenSpec("random", n=7, seed=11, coord_range=500)).points


def all_triangulations(points, verts):
    """Flip-graph BFS from one triangulation: every triangulation is reached."""
    start = triangulate_containing(points, verts)
    seen = {start.edges: start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for e in sorted(cur.edges):
            apex = cur.flippable(e)
            if apex is None:
                continue
            nxt = cur.apply(Flip(e, tuple(sorted(apex))))
            if nxt.edges not in seen:
                seen[nxt.edges] = nxt
                queue.append(nxt)
    return list(seen.values())


def test_greedy_triangulation_keeps_required_edges():
    pts = seven_points()
    tri = triangulate_containing(pts, range(7), [(0, 1)])
    assert (0, 1) in tri and is_triangulation(tri)
    # Euler: 3n - 3 - h edges
    from planecycles.geometry import convex_hull

    assert len(tri.edges) == 3 * 7 - 3 - len(convex_hull(pts))


def test_crossing_required_edges_rejected():
    pts = [(0, 0), (10, 0), (10, 10), (0, 10)]
    with pytest.raises(TriangulationError):
        triangulate_containing(pts, range(4), [(0, 2), (1, 3)])


def test_canonical_is_independent_of_start():
    pts = seven_points()
    tris = all_triangulations(pts, range(7))
    assert len(tris) > 5
    canon = {canonical_triangulation(t).edges for t in tris}
    assert len(canon) == 1


def test_flip_paths_between_all_pairs():
    pts = seven_points()
    tris = all_triangulations(pts, range(7))
    for src in tris[:8]:
        for dst in tris:
            path = flip_path(src, dst)
            cur = src
            for f in path:
                cur = cur.apply(f)
                assert is_triangulation(cur)
            assert cur.edges == dst.edges
            assert replay(src, path).edges == dst.edges


def test_cocircular_ties_terminate():
    # a regular octagon-like set with many cocircular quadruples
    pts = [(2, 0), (0, 2), (-2, 0), (0, -2), (1, 1), (-1, 1), (-1, -1), (1, -1)][:4] + [(0, 0)]
    tris = all_triangulations(pts, range(5))
    assert len({canonical_triangulation(t).edges for t in tris}) == 1


def test_invalid_flip_rejected():
    pts = [(0, 0), (10, 0), (10, 10), (0, 10)]
    tri = triangulate_containing(pts, range(4), [(0, 2)])
    with pytest.raises(TriangulationError):
        tri.apply(Flip((0, 1), (2, 3)))
