"""Colored point sets, plane cycles and their text formats.

An instance is a finite set of integer points in general position, each
carrying a small nonnegative color id.  The host graph is the complete
multipartite graph on the color classes: two points are joined iff their
colors differ.  It is never materialized.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .geometry import (
    CoordinateRangeError,
    Point,
    check_point,
    segments_cross_unchecked,
    validate_general_position,
)

RED = 0
BLUE = 1


class InstanceError(ValueError):
    """Malformed or invalid instance data."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, init=False)
class ColoredPointSet:
    points: tuple[Point, ...]
    colors: tuple[int, ...]
    color_count: int = field(init=False)

    def __init__(self, points: Iterable[Point], colors: Iterable[int], *, _trusted: bool = False):
        if _trusted:
            pts = tuple(points)
        else:
            try:
                pts = tuple(check_point(tuple(p)) for p in points)
            except CoordinateRangeError as exc:
                raise InstanceError(str(exc)) from None
        cols = tuple(colors)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "colors", cols)
        object.__setattr__(self, "color_count", len(set(cols)))
        if not _trusted:
            self._validate()

    def _validate(self) -> None:
        if len(self.points) != len(self.colors):
            raise InstanceError("points and colors differ in length")
        for c in self.colors:
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise InstanceError(f"bad color id {c!r}")
        if self.color_count < 2:
            raise InstanceError(f"need at least 2 colors, got {self.color_count}")
        if max(self.colors) >= self.color_count:
            missing = sorted(set(range(max(self.colors) + 1)) - set(self.colors))
            raise InstanceError(f"color ids must be 0..{self.color_count - 1}; empty classes {missing}")
        violation = validate_general_position(self.points)
        if violation is not None:
            raise InstanceError(f"not in general position: {violation}")

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"ColoredPointSet(n={len(self)}, colors={self.color_count})"

    def is_edge(self, i: int, j: int) -> bool:
        return self.colors[i] != self.colors[j]

    def color_class(self, c: int) -> list[int]:
        return [i for i, col in enumerate(self.colors) if col == c]

    def subset(self, indices: Sequence[int]) -> tuple[ColoredPointSet, list[int]]:
        """Sub-instance on ``indices`` plus the map from new to old indices.

        Color ids are kept as they are, so the result may have gaps in its
        color range; it skips validation since general position is inherited.
        """
        idx = list(indices)
        sub = ColoredPointSet([self.points[i] for i in idx], [self.colors[i] for i in idx], _trusted=True)
        return sub, idx

    def digest(self) -> str:
        return hashlib.sha256(format_instance(self).encode()).hexdigest()[:16]


def is_bipartite_balanced(ps: ColoredPointSet) -> bool:
    counts = Counter(ps.colors)
    return set(counts) == {RED, BLUE} and counts[RED] == counts[BLUE]


# ---------------------------------------------------------------------------
# instance text format
# ---------------------------------------------------------------------------


def parse_instance(stream: TextIO | str) -> ColoredPointSet:
    """Read ``x y color`` lines; ``#`` lines and blank lines are skipped."""
    text = stream if isinstance(stream, str) else stream.read()
    points: list[Point] = []
    colors: list[int] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InstanceError(f"expected 'x y color', got {raw!r}", lineno)
        try:
            x, y, c = (int(v) for v in parts)
        except ValueError:
            raise InstanceError(f"non-integer field in {raw!r}", lineno) from None
        if c < 0:
            raise InstanceError(f"negative color id {c}", lineno)
        try:
            check_point((x, y))
        except CoordinateRangeError as exc:
            raise InstanceError(str(exc), lineno) from None
        points.append((x, y))
        colors.append(c)
        lines.append(lineno)
    if not points:
        raise InstanceError("empty instance")
    seen: dict[Point, int] = {}
    for k, p in enumerate(points):
        if p in seen:
            raise InstanceError(f"duplicate point {p} (first on line {lines[seen[p]]})", lines[k])
        seen[p] = k
    return ColoredPointSet(points, colors)


def format_instance(ps: ColoredPointSet) -> str:
    return "".join(f"{x} {y} {c}\n" for (x, y), c in zip(ps.points, ps.colors))


def read_instance(path: str) -> ColoredPointSet:
    with open(path) as fh:
        return parse_instance(fh)


def write_instance(ps: ColoredPointSet, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_instance(ps))


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest index and pick the lexicographically smaller direction."""
    seq = list(seq)
    if not seq:
        return ()
    k = seq.index(min(seq))
    fwd = seq[k:] + seq[:k]
    bwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, bwd))


@dataclass(frozen=True)
class PlaneCycle:
    """A validated plane cycle; ``vertices`` is the traversal order."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def canonical(self) -> tuple[int, ...]:
        return canonical_cycle(self.vertices)


@dataclass(frozen=True)
class CycleViolation:
    condition: str  # "index", "distinct", "length", "coloring", "crossing"
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.condition}: {self.message}"


@dataclass(frozen=True)
class CycleColorProfile:
    rainbow: bool
    repeated_colors: tuple[int, ...]


def color_profile(ps: ColoredPointSet, cycle: Iterable[int]) -> CycleColorProfile:
    counts = Counter(ps.colors[v] for v in cycle)
    repeated = tuple(sorted(c for c, m in counts.items() if m >= 2))
    return CycleColorProfile(rainbow=not repeated, repeated_colors=repeated)


def is_rainbow(ps: ColoredPointSet, cycle: Iterable[int]) -> bool:
    cols = [ps.colors[v] for v in cycle]
    return len(cols) == len(set(cols))


def validate_cycle(ps: ColoredPointSet, cycle: Sequence[int]) -> PlaneCycle | CycleViolation:
    """Check a candidate cycle.

    Conditions are tested in a fixed order: index range, distinct vertices,
    length at least 3, bichromatic consecutive pairs, and finally pairwise
    crossings of nonadjacent edges.  The first failure is reported.
    """
    seq = tuple(cycle)
    n = len(ps)
    for v in seq:
        if not isinstance(v, int) or not 0 <= v < n:
            return CycleViolation("index", f"vertex {v!r} out of range 0..{n - 1}", (v,))
    seen: set[int] = set()
    for v in seq:
        if v in seen:
            return CycleViolation("distinct", f"vertex {v} repeated", (v,))
        seen.add(v)
    t = len(seq)
    if t < 3:
        return CycleViolation("length", f"cycle has {t} vertices, need at least 3", ())
    for i in range(t):
        a, b = seq[i], seq[(i + 1) % t]
        if ps.colors[a] == ps.colors[b]:
            return CycleViolation("coloring", f"edge {a}-{b} monochromatic", ((a, b),))
    pts = ps.points
    for i in range(t):
        a, b = seq[i], seq[(i + 1) % t]
        # skip the two edges adjacent to edge i
        for j in range(i + 2, t - (1 if i == 0 else 0)):
            c, d = seq[j], seq[(j + 1) % t]
            if segments_cross_unchecked(pts[a], pts[b], pts[c], pts[d]):
                return CycleViolation("crossing", f"edges {a}-{b} and {c}-{d} cross", ((a, b), (c, d)))
    return PlaneCycle(seq)


def require_cycle(ps: ColoredPointSet, cycle: Sequence[int]) -> PlaneCycle:
    result = validate_cycle(ps, cycle)
    if isinstance(result, CycleViolation):
        raise ValueError(f"invalid cycle {list(cycle)}: {result}")
    return result


# ---------------------------------------------------------------------------
# cycle text format
# ---------------------------------------------------------------------------


def parse_cycles(stream: TextIO | str) -> list[list[int]]:
    text = stream if isinstance(stream, str) else stream.read()
    cycles = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            cycles.append([int(v) for v in line.split()])
        except ValueError:
            raise InstanceError(f"non-integer vertex in {raw!r}", lineno) from None
    return cycles


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join(" ".join(str(v) for v in canonical_cycle(c)) + "\n" for c in cycles)
