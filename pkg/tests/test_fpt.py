from __future__ import annotations

from itertools import product

import pytest

from planecycles import fpt
from planecycles.fpt import (
    FIRST,
    SECOND,
    ArcSelection,
    FPTError,
    InfeasibleSelection,
    InitialCycle,
    attempt_construction,
    boundary_visited_ccw,
    check_feasible,
    compute_arcs,
    construct_from_selection,
    decide_hamiltonian,
    enumerate_initial_cycles,
    iter_feasible_selections,
)
from planecycles.generate import GenSpec, generate
from planecycles.model import ColoredPointSet, PlaneCycle, validate_cycle
from planecycles.oracle import brute_hamiltonian
from tests.conftest import SQUARE_K2


def test_square_arcs():
    dec = compute_arcs(SQUARE_K2)
    assert dec.boundary == (0, 1, 2, 3)
    assert dec.critical == ((0, SECOND), (2, SECOND))
    assert dec.arc_starts == (0, 2)
    assert [dec.arc_vertices(a) for a in range(dec.s)] == [[0, 1], [2, 3]]
    assert dec.first_kind_count() == 0


def test_square_initial_cycles():
    dec = compute_arcs(SQUARE_K2)
    got = [(f.order, f.gaps) for f in enumerate_initial_cycles(SQUARE_K2, dec)]
    assert got == [((4, 5), (0,)), ((4, 5), (1,)), ((4, 5), (0, 1))]


def test_square_decision_and_witness():
    res = decide_hamiltonian(SQUARE_K2, construct=True)
    assert res.hamiltonian and res.method == "search"
    assert res.initial_cycle == InitialCycle((4, 5), (0,))
    assert res.selection == (0, 1)
    assert res.cycle.vertices == (5, 4, 0, 1, 2, 3)
    assert brute_hamiltonian(SQUARE_K2).vertices == (0, 1, 2, 3, 5, 4)


def test_first_kind_criticals():
    # hull starts at (-2, 19); two same-colored neighbors on the hull give first-kind positions
    ps = ColoredPointSet([(0, 0), (10, -3), (21, 1), (19, 22), (-2, 19), (7, 8), (12, 11), (9, 30)],
                         [0, 0, 1, 0, 1, 1, 0, 1])
    dec = compute_arcs(ps)
    assert dec.boundary == (4, 0, 1, 2, 3, 7) and dec.interior == (5, 6)
    assert dec.critical == ((0, FIRST), (1, SECOND), (2, FIRST), (4, SECOND))
    assert dec.first_kind_count() == 2
    res = decide_hamiltonian(ps, construct=True)
    assert res.selection == (2, 3, 0, 1)
    assert res.cycle.vertices == (5, 1, 2, 3, 7, 6, 4, 0)
    assert brute_hamiltonian(ps) is not None


def test_infeasible_selection_raises():
    dec = compute_arcs(SQUARE_K2)
    f = InitialCycle((4, 5), (0,))
    rep = check_feasible(SQUARE_K2, dec, f, ArcSelection((0, 0)))
    if rep.feasible:
        pytest.skip("selection unexpectedly feasible")
    assert rep.first_failed_condition is not None
    with pytest.raises(InfeasibleSelection):
        construct_from_selection(SQUARE_K2, dec, f, (0, 0))


def test_bad_selection_shape():
    dec = compute_arcs(SQUARE_K2)
    with pytest.raises(FPTError):
        check_feasible(SQUARE_K2, dec, InitialCycle((4, 5), (0,)), (0,))
    with pytest.raises(FPTError):
        check_feasible(SQUARE_K2, dec, InitialCycle((4, 5), (0,)), (0, 7))


def test_requires_balanced_bipartite():
    ps = ColoredPointSet([(0, 0), (4, 0), (0, 3)], [0, 1, 2])
    with pytest.raises(FPTError):
        decide_hamiltonian(ps)
    ps = ColoredPointSet([(0, 0), (4, 0), (0, 3), (1, 1)], [0, 1, 1, 1])
    with pytest.raises(FPTError):
        decide_hamiltonian(ps)


def test_near_convex_small_k():
    ps = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 1, 0, 1])
    res = decide_hamiltonian(ps, construct=True)
    assert res.method == "near_convex" and res.cycle.vertices == (0, 1, 2, 3)
    rrbb = ColoredPointSet([(0, 0), (1, 0), (1, 1), (0, 1)], [0, 0, 1, 1])
    assert not decide_hamiltonian(rrbb).hamiltonian


def _bipartite(seed, n, k):
    return generate(GenSpec("near_convex", n=n, k=k, seed=seed))


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_matches_brute_force(k):
    for seed in range(25):
        ps = _bipartite(seed, 4, k)
        res = decide_hamiltonian(ps, construct=True)
        assert res.hamiltonian == (brute_hamiltonian(ps) is not None), seed
        if res.hamiltonian:
            assert isinstance(validate_cycle(ps, res.cycle), PlaneCycle)
            assert len(res.cycle) == len(ps)
            if k >= 2:
                assert boundary_visited_ccw(compute_arcs(ps), res.cycle)


def test_feasible_iff_constructible():
    for seed in range(6):
        ps = _bipartite(seed, 3, 2)
        dec = compute_arcs(ps)
        for f in enumerate_initial_cycles(ps, dec):
            feasible = set(iter_feasible_selections(ps, dec, f))

            for sel in product(range(dec.s), repeat=f.g):
                rep = check_feasible(ps, dec, f, sel)
                assert rep.feasible == (sel in feasible)
                built = attempt_construction(ps, dec, f, sel)
                assert rep.feasible == (built is not None)
                if rep.feasible:
                    assert len(construct_from_selection(ps, dec, f, sel)) == len(ps)


def test_worker_count_does_not_change_witness(monkeypatch):
    ps = _bipartite(3, 5, 3)
    one = decide_hamiltonian(ps, construct=True, workers=1)
    two = decide_hamiltonian(ps, construct=True, workers=2)
    assert one == two
    monkeypatch.setenv(fpt.WORKERS_ENV, "2")
    assert fpt._worker_count(None) == 2
