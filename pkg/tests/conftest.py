from __future__ import annotations

import random

import pytest

from planecycles.model import ColoredPointSet

SQUARE_K2 = ColoredPointSet([(0, 0), (10, 0), (10, 10), (0, 10), (4, 5), (6, 5)], [1, 0, 1, 0, 0, 1])
HEXAGON = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]


@pytest.fixture
def rng():
    return random.Random(20240607)


def random_instance(rng: random.Random, n: int, colors: int, coord: int = 60) -> ColoredPointSet:
    """Rejection-sampled general-position instance using every color."""
    from planecycles.generate import GenSpec, generate

    return generate(GenSpec("random", n=n, color_count=colors, seed=rng.randrange(2**32), coord_range=coord))


def pytest_terminal_summary(terminalreporter):
    import sys

    lines = [line for name, mod in list(sys.modules.items()) if name.endswith("test_acceptance")
             for line in getattr(mod, "RESULTS", [])]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
