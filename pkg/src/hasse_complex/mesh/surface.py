"""Oriented triangle surface meshes in R^3 built on :class:`~hasse_complex.Complex`."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ..core import Complex, Name, Schema, Simplex
from ..decimation import decimate
from ..errors import (
    ComplexError,
    LinkConditionError,
    NoIncidentFaceError,
    NonManifoldError,
)
from ..simplexset import SimplexSet
from ..traversal import link

__all__ = [
    "Vertex",
    "Orientable",
    "SurfaceMesh",
    "relation_sign",
    "assign_relation_orientations",
    "OrientationReport",
    "propagate_face_orientations",
    "orient",
    "vertex_tangent",
    "LinkReport",
    "link_condition",
    "check_link_condition",
    "collapse_edge",
    "POSITION_POLICIES",
]

log = logging.getLogger(__name__)


def _zero3():
    return np.zeros(3)


@dataclass
class Vertex:
    position: np.ndarray = field(default_factory=_zero3)

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float).reshape(3)


@dataclass
class Orientable:
    orientation: int = 0


SURFACE_SCHEMA = Schema(
    node_types=(None, Vertex, None, Orientable),
    edge_types=(Orientable, Orientable, Orientable),
)


class SurfaceMesh(Complex):
    """Two-dimensional complex with vertex positions and orientation signs.

    Faces and every boundary relation carry an :class:`Orientable`; vertices
    carry a :class:`Vertex`.
    """

    def __init__(self):
        super().__init__(SURFACE_SCHEMA)

    def add_vertex(self, key: int, position) -> Simplex:
        return self.insert((key,), data=Vertex(position))

    def position(self, key: int) -> np.ndarray:
        v = self.get_simplex((key,))
        if v is None:
            raise KeyError(key)
        return v.data.position

    def euler_characteristic(self) -> int:
        V, E, F = self.counts().levels
        return V - E + F


def relation_sign(a: Name, v: int) -> int:
    """Sign of the relation ``a -> a | {v}``: ``(-1)**i`` with ``i`` the sorted
    position of ``v`` inside ``a | {v}``."""
    if v in a:
        raise ValueError(f"key {v} already in {list(a)}")
    below = sum(1 for u in a if u < v)
    return -1 if below % 2 else 1


def assign_relation_orientations(mesh: SurfaceMesh) -> None:
    for s in mesh.simplices():
        for key, rel in s._down.items():
            rel.data.orientation = relation_sign(rel.lower.name, key)


class OrientationReport(NamedTuple):
    orientable: bool
    components: int
    conflicts: tuple[Name, ...]  # edges whose two faces could not be reconciled


def _check_manifold_edges(mesh: SurfaceMesh) -> None:
    for e in mesh.level(1):
        if len(e._up) > 2:
            raise NonManifoldError(e.name, len(e._up))


def propagate_face_orientations(mesh: SurfaceMesh) -> OrientationReport:
    """Give every face a sign so that adjacent faces induce opposite signs on
    their shared edge.

    Components are seeded with ``+1`` on their lexicographically smallest
    face and walked breadth-first.  Faces are reset to unset first.
    """
    _check_manifold_edges(mesh)
    faces = sorted(mesh.level(2), key=lambda f: f.name)
    for f in faces:
        for rel in f._down.values():
            if rel.data.orientation == 0:
                raise ComplexError("relation orientations unset; run assign_relation_orientations first")
        f.data.orientation = 0

    components = 0
    conflicts: list[Name] = []
    for seed in faces:
        if seed.data.orientation != 0:
            continue
        components += 1
        seed.data.orientation = 1
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            of = f.data.orientation
            for key in sorted(f._down):
                rel_f = f._down[key]
                edge = rel_f.lower
                for gkey in sorted(edge._up):
                    rel_g = edge._up[gkey]
                    g = rel_g.upper
                    if g is f:
                        continue
                    # rel_f * of + rel_g * og == 0
                    required = -rel_f.data.orientation * of * rel_g.data.orientation
                    og = g.data.orientation
                    if og == 0:
                        g.data.orientation = required
                        queue.append(g)
                    elif og != required and edge.name not in conflicts:
                        conflicts.append(edge.name)
    conflicts.sort()
    if conflicts:
        log.info("mesh is not orientable; conflicting edges: %s", conflicts)
    return OrientationReport(not conflicts, components, tuple(conflicts))


def orient(mesh: SurfaceMesh) -> OrientationReport:
    """Assign relation signs, then propagate face signs."""
    assign_relation_orientations(mesh)
    return propagate_face_orientations(mesh)


def _tangent(mesh: SurfaceMesh, origin: np.ndarray, curr: Simplex):
    top = mesh.dimension
    if curr.level == top:
        return float(curr.data.orientation)
    cover = sorted(curr._up)
    if not cover:
        # dangling lower-dimensional simplex, contributes nothing
        return np.zeros((3,) * (top - curr.level))
    acc = np.zeros((3,) * (top - curr.level))
    for u in cover:
        rel = curr._up[u]
        edge_vec = mesh.position(u) - origin
        acc += rel.data.orientation * np.multiply.outer(edge_vec, _tangent(mesh, origin, rel.upper))
    return acc / len(cover)


def vertex_tangent(mesh: SurfaceMesh, v) -> np.ndarray:
    """Averaged oriented wedge of incident faces at vertex ``v`` as a 3x3 matrix.

    Walks up from the vertex: each coboundary relation contributes its sign
    times ``(position(u) - position(v))`` tensored with the value one level
    higher, averaged over that simplex's cover.  Faces contribute their sign.
    """
    node = mesh._resolve(v)
    if node.level != 0:
        raise ValueError("vertex_tangent expects a vertex")
    if not any(rel.upper._up for rel in node._up.values()):
        raise NoIncidentFaceError(f"vertex {node.name[0]} has no incident face")
    return _tangent(mesh, node.data.position, node)


class LinkReport(NamedTuple):
    link_a: SimplexSet
    link_b: SimplexSet
    link_ab: SimplexSet
    intersection: SimplexSet

    @property
    def passed(self) -> bool:
        return self.intersection == self.link_ab


def _edge(mesh: SurfaceMesh, edge) -> Simplex:
    e = mesh._resolve(edge)
    if e.level != 1:
        raise ValueError(f"{e!r} is not an edge")
    return e


def link_condition(mesh: SurfaceMesh, edge) -> LinkReport:
    e = _edge(mesh, edge)
    a, b = (mesh.get_simplex((k,)) for k in e.name)
    la, lb, lab = link(mesh, a), link(mesh, b), link(mesh, e)
    return LinkReport(la, lb, lab, la & lb)


def check_link_condition(mesh: SurfaceMesh, edge) -> bool:
    """True when ``Link(a) & Link(b) == Link(ab)`` for the edge ``ab``."""
    return link_condition(mesh, edge).passed


POSITION_POLICIES = ("midpoint", "a", "b")
_POLICY_ALIASES = {"endpoint-a": "a", "endpoint-b": "b"}


def collapse_edge(mesh: SurfaceMesh, edge, policy: str = "midpoint", guard: bool = True) -> Simplex:
    """Contract an edge onto a new vertex and re-orient the mesh.

    ``policy`` places the new vertex at the midpoint or at endpoint ``a``
    (smaller key) or ``b``.  With ``guard`` the collapse is refused, leaving
    the mesh untouched, unless the link condition holds.
    """
    policy = _POLICY_ALIASES.get(policy, policy)
    if policy not in POSITION_POLICIES:
        raise ValueError(f"unknown position policy {policy!r}")
    e = _edge(mesh, edge)
    if guard and not check_link_condition(mesh, e):
        raise LinkConditionError(f"collapsing {list(e.name)} would change the topology")
    ka, kb = e.name
    pa, pb = mesh.position(ka), mesh.position(kb)
    new_pos = {"midpoint": (pa + pb) / 2.0, "a": pa.copy(), "b": pb.copy()}[policy]

    def remap(_cx, name, grabbed: SimplexSet):
        level = len(name) - 1
        if level == 0:
            return Vertex(new_pos)
        if level == 2:
            faces = grabbed.level(2)
            return Orientable(faces[-1].data.orientation if faces else 0)
        return None

    p = decimate(mesh, e, remap)
    assign_relation_orientations(mesh)
    try:
        propagate_face_orientations(mesh)
    except NonManifoldError as err:
        log.warning("collapse produced a non-manifold edge, faces left unoriented: %s", err)
    return p
