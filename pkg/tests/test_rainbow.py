from __future__ import annotations

import pytest

from planecycles.model import ColoredPointSet, PlaneCycle, is_rainbow, validate_cycle
from planecycles.oracle import enumerate_plane_cycles
from planecycles.rainbow import (
    ConfigurationWitness,
    InvalidWitness,
    check_witness,
    find_configuration,
    has_nonrainbow_plane_cycle,
    witness_cycle,
)
from tests.conftest import random_instance


def test_c2_witness_in_triangle_with_interior_point():
    ps = ColoredPointSet([(0, 0), (4, 0), (2, 3), (2, 1)], [0, 1, 2, 0])
    wit = find_configuration(ps)
    assert wit == ConfigurationWitness("C2", 0, 3, 1, 2)
    cyc = witness_cycle(ps, wit)
    assert len(cyc) == 4 and not is_rainbow(ps, cyc)


def test_separated_classes_have_no_configuration():
    ps = ColoredPointSet([(0, 0), (1, 1), (2, 0), (0, 50), (1, 51), (2, 50)], [0, 0, 0, 1, 1, 1])
    assert find_configuration(ps) is None
    assert not has_nonrainbow_plane_cycle(ps)


def test_c1_on_alternating_square():
    ps = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 1, 0, 1])
    wit = find_configuration(ps)
    assert wit.kind == "C1" and {wit.u, wit.u2} == {0, 2}
    assert witness_cycle(ps, wit).vertices == (0, 1, 2, 3)


def test_c3_example():
    # bichromatic line 0-1 separates the two greens
    ps = ColoredPointSet([(0, 0), (10, 0), (20, 5), (20, -5)], [0, 1, 2, 2])
    wit = find_configuration(ps)
    assert wit.kind == "C3" and (wit.u, wit.u2, wit.v, wit.v2) == (0, 1, 2, 3)


def test_c4_both_corner_layouts():
    # opposite corners share a color: plain 4-cycle
    opp = ColoredPointSet([(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)], [0, 1, 0, 2, 3])
    wit = ConfigurationWitness("C4", 0, 2, 1, 3, 4)
    assert check_witness(opp, wit)
    assert len(witness_cycle(opp, wit)) == 4
    # adjacent corners share a color: the inner point closes a 5-cycle
    adj = ColoredPointSet([(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)], [0, 0, 1, 2, 3])
    wit = ConfigurationWitness("C4", 0, 1, 2, 3, 4)
    assert check_witness(adj, wit)
    cyc = witness_cycle(adj, wit)
    assert len(cyc) == 5 and 4 in cyc.vertices and not is_rainbow(adj, cyc)
    # a line through the inner point still separates a same-colored pair here
    assert find_configuration(adj).kind == "C3"


def test_instance_only_c4_detects():
    ps = ColoredPointSet([(2, 19), (0, 29), (26, 15), (8, 17), (7, 6)], [0, 0, 1, 2, 3])
    wit = find_configuration(ps)
    assert wit == ConfigurationWitness("C4", 0, 1, 2, 4, 3)
    cyc = witness_cycle(ps, wit)
    assert len(cyc) == 5
    assert enumerate_plane_cycles(ps).nonrainbow_count > 0


def test_invalid_witness_rejected():
    ps = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 1, 0, 1])
    bad = ConfigurationWitness("C1", 0, 1, 2, 3)
    assert not check_witness(ps, bad)
    with pytest.raises(InvalidWitness):
        witness_cycle(ps, bad)


@pytest.mark.parametrize("colors", [2, 3, 4, 5])
def test_detection_matches_oracle(rng, colors):
    for _ in range(40):
        ps = random_instance(rng, rng.randint(max(colors, 3), 8), colors)
        truth = enumerate_plane_cycles(ps).nonrainbow_count > 0
        wit = find_configuration(ps)
        assert (wit is not None) == truth
        if wit:
            cyc = witness_cycle(ps, wit)
            assert isinstance(validate_cycle(ps, cyc), PlaneCycle)
            assert len(cyc) in (4, 5) and not is_rainbow(ps, cyc)
