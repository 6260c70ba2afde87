from __future__ import annotations

import math

import pytest

from planecycles.generate import random_cycle_instance, random_polygon
from planecycles.geometry import segments_cross_unchecked
from planecycles.model import ColoredPointSet, PlaneCycle, is_rainbow, validate_cycle
from planecycles.monotonicity import (
    EAR,
    MOUTH,
    ShorteningError,
    check_three_principal_path,
    ear_mouth_counts,
    is_convex_cycle,
    principal_points,
    shorten_cycle,
    shorten_step,
    shorten_to_small,
)
from tests.conftest import HEXAGON

DART = ColoredPointSet([(0, 0), (4, 0), (2, 1), (2, 4)], [0, 1, 1, 0])


def test_dart_principal_points():
    pp = {p.vertex: p.kind for p in principal_points(DART, [0, 1, 3, 2])}
    assert pp == {0: EAR, 1: MOUTH, 3: EAR, 2: MOUTH}


def brute_principal(ps, cyc):
    """Neighbors joined by a segment avoiding every edge; midpoint test by ray casting in floats."""
    t = len(cyc)
    pts = ps.points
    out = {}
    for i, v in enumerate(cyc):
        a, b = cyc[i - 1], cyc[(i + 1) % t]
        edges = [(cyc[j], cyc[(j + 1) % t]) for j in range(t)]
        if any(len({a, b, c, d}) == 4 and segments_cross_unchecked(pts[a], pts[b], pts[c], pts[d]) for c, d in edges):
            continue
        mx, my = (pts[a][0] + pts[b][0]) / 2, (pts[a][1] + pts[b][1]) / 2
        inside = False
        for c, d in edges:
            (x1, y1), (x2, y2) = pts[c], pts[d]
            if (y1 > my) != (y2 > my) and mx < x1 + (my - y1) * (x2 - x1) / (y2 - y1):
                inside = not inside
        out[v] = EAR if inside else MOUTH
    return out


def test_principal_points_match_float_oracle(rng):
    for _ in range(200):
        t = rng.randint(4, 10)
        poly = random_polygon(rng, t)
        ps = ColoredPointSet(poly, [i % 2 for i in range(t - t % 2)] + [2] * (t % 2))
        cyc = list(range(t))
        assert {p.vertex: p.kind for p in principal_points(ps, cyc)} == brute_principal(ps, cyc)


def test_alternating_hexagon_uses_chord():
    ps = ColoredPointSet(HEXAGON, [0, 1, 0, 1, 0, 1])
    step = shorten_step(ps, range(6))
    assert step.move == "chord" and step.detail == (0, 3)
    assert step.cycle.vertices == (0, 1, 2, 3)


def test_three_colored_hexagon_uses_principal_point():
    ps = ColoredPointSet(HEXAGON, [0, 1, 2, 0, 1, 2])
    step = shorten_step(ps, range(6))
    assert step.move == "principal" and step.detail == 0
    assert step.cycle.vertices == (1, 2, 3, 4, 5)


def test_flip_move():
    # no bichromatic chord avoids the cycle, so the flip path supplies the shortcut
    ps = ColoredPointSet([(53, 25), (81, 55), (30, 96), (65, 62), (29, 87), (64, 56)], [1, 0, 1, 0, 1, 0])
    step = shorten_step(ps, range(6))
    assert step.move == "flip"
    assert step.cycle.vertices == (3, 0, 1, 2)
    assert not is_rainbow(ps, step.cycle)


@pytest.mark.parametrize(
    "cycle, match",
    [([0, 1, 2, 3], "t >= 6"), ([0, 2, 1, 3, 4, 5], "not a plane cycle")],
)
def test_shorten_rejects_bad_input(cycle, match):
    ps = ColoredPointSet(HEXAGON, [0, 1, 0, 1, 0, 1])
    with pytest.raises(ShorteningError, match=match):
        shorten_step(ps, cycle)


def test_shorten_rejects_rainbow():
    ps = ColoredPointSet(HEXAGON, [0, 1, 2, 3, 4, 5])
    with pytest.raises(ShorteningError, match="rainbow"):
        shorten_cycle(ps, range(6))


def test_shortening_contract(rng):
    for _ in range(150):
        colors = rng.randint(2, 5)
        t = rng.randint(6, 12)
        if colors == 2 and t % 2:
            t -= 1
        ps, cyc = random_cycle_instance(rng, t, colors)
        out = shorten_cycle(ps, cyc)
        assert isinstance(validate_cycle(ps, out), PlaneCycle)
        assert not is_rainbow(ps, out)
        assert math.ceil(t / 2) + 1 <= len(out) <= t - 1
        assert set(out.vertices) <= set(cyc)
        steps = shorten_to_small(ps, cyc)
        assert len(steps[-1].cycle) in (4, 5)


def test_principal_point_properties_on_random_polygons(rng):
    for _ in range(300):
        t = rng.randint(6, 12)
        ps = ColoredPointSet(random_polygon(rng, t), [0, 1] * (t // 2) + [2] * (t % 2))
        cyc = list(range(t))
        assert not check_three_principal_path(ps, cyc)
        ears, mouths = ear_mouth_counts(ps, cyc)
        assert ears >= 2
        if not is_convex_cycle(ps, cyc):
            assert mouths >= 1
