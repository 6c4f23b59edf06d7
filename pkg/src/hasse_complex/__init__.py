"""Simplicial complexes stored as a Hasse diagram, with per-level payloads."""

from .core import Complex, Counts, Relation, Schema, Simplex, canonical_name
from .decimation import DecimationMapping, build_mapping, decimate, fresh_vertex_key, phi
from .errors import (
    ComplexError,
    DimensionError,
    InvalidHandleError,
    LinkConditionError,
    NoIncidentFaceError,
    NoPayloadError,
    NonManifoldError,
    OffParseError,
    SimplexNotFoundError,
)
from .simplexset import (
    SimplexMap,
    SimplexSet,
    set_difference,
    set_equals,
    set_intersection,
    set_union,
)
from .traversal import (
    Visitor,
    bfs_down,
    bfs_up,
    closure,
    iter_neighbors_down,
    iter_neighbors_up,
    k_skeleton,
    level_handles,
    link,
    neighbors_down,
    neighbors_up,
    star,
)

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "Counts",
    "Relation",
    "Schema",
    "Simplex",
    "canonical_name",
    "DecimationMapping",
    "build_mapping",
    "decimate",
    "fresh_vertex_key",
    "phi",
    "ComplexError",
    "DimensionError",
    "InvalidHandleError",
    "LinkConditionError",
    "NoIncidentFaceError",
    "NoPayloadError",
    "NonManifoldError",
    "OffParseError",
    "SimplexNotFoundError",
    "SimplexMap",
    "SimplexSet",
    "set_difference",
    "set_equals",
    "set_intersection",
    "set_union",
    "Visitor",
    "bfs_down",
    "bfs_up",
    "closure",
    "iter_neighbors_down",
    "iter_neighbors_up",
    "k_skeleton",
    "level_handles",
    "link",
    "neighbors_down",
    "neighbors_up",
    "star",
]
