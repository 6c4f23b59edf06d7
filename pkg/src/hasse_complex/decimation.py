"""Collapse a simplex onto a fresh vertex while remapping user data.

For a simplex ``s`` and a new vertex ``p`` every simplex ``f`` is sent to
``f`` when it misses ``s`` and to ``{p} | (f - s)`` otherwise.  Only the
complete neighborhood ``St(Cl(s))`` changes.  Simplices of that neighborhood
are grouped by image, a user callback turns each group into the payload of
the image simplex, the neighborhood is deleted and the images are inserted.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .core import Complex, Name, Simplex, canonical_name
from .errors import ComplexError
from .simplexset import SimplexMap, SimplexSet
from .traversal import bfs_down, bfs_up

__all__ = [
    "phi",
    "fresh_vertex_key",
    "TraceRow",
    "DecimationMapping",
    "build_mapping",
    "decimate",
]

RemapCallback = Callable[[Complex, Name, SimplexSet], Any]


def phi(f: Iterable[int], s: Iterable[int], p: int) -> Name:
    """Image of simplex ``f`` when ``s`` collapses onto vertex ``p``."""
    f = set(f)
    s = set(s)
    if not f & s:
        return canonical_name(f)
    return canonical_name((f - s) | {p})


def fresh_vertex_key(cx: Complex) -> int:
    return cx.new_vertex_key()


class TraceRow(NamedTuple):
    """One inner-visitor hit: which face of ``s`` was being expanded, which
    neighborhood simplex was found, what was grabbed and where it maps."""

    main: Name
    inner: Name
    grabbed: tuple[Name, ...]
    target: Name


@dataclass
class DecimationMapping:
    new_vertex: int
    table: SimplexMap
    neighborhood: SimplexSet
    trace: list[TraceRow] = field(default_factory=list)


def build_mapping(cx: Complex, s, p: int | None = None) -> DecimationMapping:
    """Group the complete neighborhood of ``s`` by image under the collapse.

    Three nested breadth-first walks: down over the faces ``i`` of ``s``; up
    from each ``i`` over neighborhood simplices ``j`` (which map to
    ``{p} | (j - i)``); down from each ``j`` grabbing every not-yet-grabbed
    neighborhood simplex below it.  Groups landing on an already seen image
    are merged, which covers non-manifold configurations where one group is
    discovered piecewise.
    """
    s = cx._resolve(s)
    if s.level < 1:
        raise ComplexError("only simplices of dimension >= 1 can be collapsed")
    if p is None:
        p = cx.new_vertex_key()
    elif cx.get_simplex((p,)) is not None:
        raise ComplexError(f"vertex {p} already exists")

    nbhd = SimplexSet()

    def collect(_cx, t):
        nbhd.add(t)
        return True

    bfs_up(cx, [cx.get_simplex((v,)) for v in s.name], collect)
    doomed = nbhd.copy()
    table = SimplexMap()
    trace: list[TraceRow] = []

    def main_visitor(_cx, i):
        i_name = set(i.name)

        def inner_visitor(_cx, j):
            if j not in nbhd:
                return True
            target = canonical_name((set(j.name) - i_name) | {p})
            grab = SimplexSet()

            def grab_visitor(_cx, k):
                if k in nbhd:
                    nbhd.remove(k)
                    grab.add(k)
                return True

            bfs_down(cx, j, grab_visitor)
            trace.append(TraceRow(i.name, j.name, tuple(k.name for k in grab), target))
            table.merge(target, grab)
            return True

        bfs_up(cx, i, inner_visitor)
        return True

    bfs_down(cx, s, main_visitor)
    if nbhd:
        raise ComplexError(f"neighborhood simplices left unmapped: {nbhd!r}")
    return DecimationMapping(p, table, doomed, trace)


def decimate(cx: Complex, s, callback: RemapCallback | None = None) -> Simplex:
    """Collapse ``s`` onto a fresh vertex in place and return that vertex.

    ``callback(cx, target_name, grabbed)`` is called once per image simplex
    and returns its payload (ignored at levels without payload).  With no
    callback, images get the schema default.  All callbacks run before the
    complex is touched, so an exception from a callback leaves it unchanged.
    New relations get default relation payloads.
    """
    mapping = build_mapping(cx, s)
    schema = cx.schema
    data: list[tuple[Name, Any]] = []
    stamp = (cx._next_iid, cx._n_relations, len(cx))
    for name, grabbed in mapping.table.items():
        if callback is None:
            factory = schema.node_factory(len(name) - 1)
            payload = factory() if factory is not None else None
        else:
            payload = callback(cx, name, grabbed)
        data.append((name, payload))
    if (cx._next_iid, cx._n_relations, len(cx)) != stamp:
        raise ComplexError("decimation callback mutated the complex")

    for node in sorted(mapping.neighborhood, key=lambda t: (-t.level, t.iid)):
        cx._delete_node(node)
    for name, payload in sorted(data, key=lambda item: (len(item[0]), item[0])):
        node = cx.insert(name)
        if schema.node_factory(node.level) is not None:
            node.data = payload
    return cx.get_simplex((mapping.new_vertex,))
