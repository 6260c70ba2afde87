"""Brute-force ground truth for small instances.

Backtracking over vertex sequences.  Every segment between two points gets
a bit; a precomputed table maps each segment to the bitmask of segments it
crosses, so extending a path costs one AND.  Nothing in here relies on the
structural results the other modules implement.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from .geometry import segments_cross_unchecked
from .model import ColoredPointSet, PlaneCycle, is_rainbow

MAX_ORACLE_POINTS = 12


class OracleSizeError(ValueError):
    pass


def _check_size(ps: ColoredPointSet) -> None:
    if len(ps) > MAX_ORACLE_POINTS:
        raise OracleSizeError(f"oracle limited to {MAX_ORACLE_POINTS} points, got {len(ps)}")


class _CrossTable:
    def __init__(self, ps: ColoredPointSet):
        n = len(ps)
        self.n = n
        pts = ps.points
        segs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self.bit = {}
        for b, (i, j) in enumerate(segs):
            self.bit[i, j] = self.bit[j, i] = 1 << b
        self.crosses = {}
        for a, (i, j) in enumerate(segs):
            mask = 0
            for b, (k, l) in enumerate(segs):
                if a != b and len({i, j, k, l}) == 4 and segments_cross_unchecked(pts[i], pts[j], pts[k], pts[l]):
                    mask |= 1 << b
            self.crosses[1 << a] = mask


def iter_plane_cycles(ps: ColoredPointSet, max_len: int | None = None, min_len: int = 3) -> Iterator[tuple[int, ...]]:
    """Yield every plane cycle in canonical form, each exactly once."""
    _check_size(ps)
    n = len(ps)
    max_len = n if max_len is None else max_len
    if max_len > n:
        raise ValueError(f"max_len {max_len} exceeds instance size {n}")
    table = _CrossTable(ps)
    bit, crosses = table.bit, table.crosses
    colors = ps.colors

    path: list[int] = []
    used = [False] * n

    def extend(forbidden: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        start = path[0]
        t = len(path)
        if t >= max(3, min_len) and colors[last] != colors[start] and path[1] < last:
            e = bit[last, start]
            if not e & forbidden:
                yield tuple(path)
        if t == max_len:
            return
        for v in range(start + 1, n):
            if used[v] or colors[v] == colors[last]:
                continue
            e = bit[last, v]
            if e & forbidden:
                continue
            used[v] = True
            path.append(v)
            yield from extend(forbidden | crosses[e])
            path.pop()
            used[v] = False

    # a cycle of length L starts at its smallest vertex, so s <= n - L
    for s in range(n - max(3, min_len) + 1):
        path.append(s)
        used[s] = True
        yield from extend(0)
        used[s] = False
        path.pop()


@dataclass
class CycleInventory:
    cycles: dict[int, list[tuple[int, ...]]] = field(default_factory=lambda: defaultdict(list))
    rainbow_count: int = 0
    nonrainbow_count: int = 0

    @property
    def counts(self) -> dict[int, int]:
        return {t: len(cs) for t, cs in sorted(self.cycles.items())}

    @property
    def total(self) -> int:
        return self.rainbow_count + self.nonrainbow_count

    def all_cycles(self) -> list[tuple[int, ...]]:
        return [c for t in sorted(self.cycles) for c in self.cycles[t]]

    def lengths(self) -> set[int]:
        return {t for t, cs in self.cycles.items() if cs}


def enumerate_plane_cycles(ps: ColoredPointSet, max_len: int | None = None) -> CycleInventory:
    inv = CycleInventory()
    for cyc in iter_plane_cycles(ps, max_len):
        inv.cycles[len(cyc)].append(cyc)
        if is_rainbow(ps, cyc):
            inv.rainbow_count += 1
        else:
            inv.nonrainbow_count += 1
    for cs in inv.cycles.values():
        cs.sort()
    return inv


def has_nonrainbow_cycle(ps: ColoredPointSet) -> bool:
    return any(not is_rainbow(ps, c) for c in iter_plane_cycles(ps))


def brute_hamiltonian(ps: ColoredPointSet) -> PlaneCycle | None:
    """First plane Hamiltonian cycle in canonical enumeration order."""
    _check_size(ps)
    n = len(ps)
    if n < 3:
        return None
    for cyc in iter_plane_cycles(ps, max_len=n, min_len=n):
        if len(cyc) == n:
            return PlaneCycle(cyc)
    return None
