from .off import dumps_off, load_off, loads_off, write_off
from .surface import (
    POSITION_POLICIES,
    LinkReport,
    Orientable,
    OrientationReport,
    SurfaceMesh,
    Vertex,
    assign_relation_orientations,
    check_link_condition,
    collapse_edge,
    link_condition,
    orient,
    propagate_face_orientations,
    relation_sign,
    vertex_tangent,
)

__all__ = [
    "dumps_off",
    "load_off",
    "loads_off",
    "write_off",
    "POSITION_POLICIES",
    "LinkReport",
    "Orientable",
    "OrientationReport",
    "SurfaceMesh",
    "Vertex",
    "assign_relation_orientations",
    "check_link_condition",
    "collapse_edge",
    "link_condition",
    "orient",
    "propagate_face_orientations",
    "relation_sign",
    "vertex_tangent",
]
