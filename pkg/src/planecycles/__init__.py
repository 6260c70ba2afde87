"""Plane cycles in geometric complete multipartite graphs."""

from .geometry import COORD_BOUND, convex_hull, orient, segments_cross, validate_general_position
from .model import (
    BLUE,
    RED,
    ColoredPointSet,
    CycleViolation,
    PlaneCycle,
    parse_instance,
    read_instance,
    validate_cycle,
)
from .rainbow import find_configuration, has_nonrainbow_plane_cycle, witness_cycle
from .monotonicity import principal_points, shorten_cycle
from .nested import cycle_of_length, validate_nested
from .fpt import compute_arcs, decide_hamiltonian
from .oracle import brute_hamiltonian, enumerate_plane_cycles
from .generate import GenSpec, generate

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "COORD_BOUND",
    "ColoredPointSet",
    "CycleViolation",
    "GenSpec",
    "PlaneCycle",
    "RED",
    "brute_hamiltonian",
    "compute_arcs",
    "convex_hull",
    "cycle_of_length",
    "decide_hamiltonian",
    "enumerate_plane_cycles",
    "find_configuration",
    "generate",
    "has_nonrainbow_plane_cycle",
    "orient",
    "parse_instance",
    "principal_points",
    "read_instance",
    "segments_cross",
    "shorten_cycle",
    "validate_cycle",
    "validate_general_position",
    "validate_nested",
    "witness_cycle",
]
