from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from planecycles.model import (
    ColoredPointSet,
    CycleViolation,
    InstanceError,
    PlaneCycle,
    canonical_cycle,
    color_profile,
    format_cycles,
    format_instance,
    parse_cycles,
    parse_instance,
    validate_cycle,
)

SQUARE = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 1, 0, 1])


def test_parse_example():
    ps = parse_instance("0 0 0\n1 0 1\n0 1 0\n1 1 1")
    assert len(ps) == 4 and ps.color_count == 2


def test_parse_rejects_duplicate_with_line_number():
    with pytest.raises(InstanceError) as exc:
        parse_instance("2 2 0\n5 1 1\n2 2 0\n")
    assert exc.value.line == 3


def test_parse_rejects_single_color():
    with pytest.raises(InstanceError, match="at least 2 colors"):
        parse_instance("0 0 0\n1 0 0\n0 1 0\n")


@pytest.mark.parametrize("text", ["0 0\n", "0 0 x\n", "0 0 -1\n", "", "# only a comment\n"])
def test_parse_errors(text):
    with pytest.raises(InstanceError):
        parse_instance(text)


def test_parse_rejects_collinear_and_gapped_colors():
    with pytest.raises(InstanceError, match="general position"):
        parse_instance("0 0 0\n1 1 1\n2 2 0\n")
    with pytest.raises(InstanceError, match="empty classes"):
        parse_instance("0 0 0\n1 0 2\n0 1 0\n")


def test_round_trip_is_bit_exact():
    text = "# comment\n3 -4 1\n-7 9 0\n100 2 2\n"
    ps = parse_instance(text)
    assert format_instance(ps) == "3 -4 1\n-7 9 0\n100 2 2\n"
    assert parse_instance(format_instance(ps)) == ps


def test_validate_examples():
    cyc = validate_cycle(SQUARE, [0, 1, 2, 3])
    assert isinstance(cyc, PlaneCycle)
    assert not color_profile(SQUARE, cyc).rainbow
    bad = validate_cycle(SQUARE, [0, 2, 1, 3])
    assert isinstance(bad, CycleViolation) and bad.condition == "coloring"
    assert "0-2" in bad.message
    tri = ColoredPointSet([(0, 0), (4, 0), (0, 3)], [0, 1, 2])
    assert color_profile(tri, validate_cycle(tri, [0, 1, 2])).rainbow


def test_validate_violation_order():
    assert validate_cycle(SQUARE, [0, 1, 9]).condition == "index"
    assert validate_cycle(SQUARE, [0, 1, 0, 1]).condition == "distinct"
    assert validate_cycle(SQUARE, [0, 1]).condition == "length"
    crossing = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 0, 1, 1])
    v = validate_cycle(crossing, [0, 2, 1, 3])
    assert v.condition == "crossing"


@given(st.integers(0, 3), st.booleans())
def test_validate_invariant_under_rotation_and_reversal(shift, rev):
    for seq in ([0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]):
        s = seq[shift:] + seq[:shift]
        if rev:
            s = s[::-1]
        a, b = validate_cycle(SQUARE, seq), validate_cycle(SQUARE, s)
        assert isinstance(a, PlaneCycle) == isinstance(b, PlaneCycle)
        if isinstance(a, CycleViolation):
            assert a.condition == b.condition


@given(st.permutations(range(7)), st.integers(0, 6), st.booleans())
def test_canonical_cycle(perm, shift, rev):
    seq = list(perm)
    other = seq[shift:] + seq[:shift]
    if rev:
        other = other[::-1]
    c = canonical_cycle(seq)
    assert c == canonical_cycle(other)
    assert c[0] == 0 and c[1] < c[-1]


def test_bipartite_cycles_are_even_and_nonrainbow(rng):
    from planecycles.oracle import iter_plane_cycles
    from tests.conftest import random_instance

    for _ in range(10):
        ps = random_instance(rng, 8, 2)
        for cyc in iter_plane_cycles(ps):
            assert len(cyc) % 2 == 0
            assert not color_profile(ps, cyc).rainbow


def test_cycle_file_round_trip():
    text = format_cycles([[3, 2, 1, 0], [5, 1, 4]])
    assert text == "0 1 2 3\n1 4 5\n"
    assert parse_cycles(text) == [[0, 1, 2, 3], [1, 4, 5]]
