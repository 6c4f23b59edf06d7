"""ASCII OFF reader and writer for :class:`SurfaceMesh`.

Vertices are keyed by their zero-based index in the file.  Only triangles
are accepted.  The edge count on the counts line is ignored on read and
written as 0.  Trailing fields on vertex and face lines are ignored.
"""

from __future__ import annotations

import io
import math
import os

from ..errors import OffParseError
from .surface import SurfaceMesh

__all__ = ["load_off", "loads_off", "write_off", "dumps_off"]


def _read_text(source) -> str:
    if hasattr(source, "read"):
        data = source.read()
    else:
        with open(os.fspath(source), "rb") as fh:
            data = fh.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as err:
            raise OffParseError(f"not an ASCII OFF file ({err})") from None
    return data


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise OffParseError(f"expected integers in {what}, got {' '.join(tokens)!r}", lineno) from None


def loads_off(text: str) -> SurfaceMesh:
    lines = _content_lines(text)
    last = text.count("\n") + 1

    def take(what):
        try:
            return next(lines)
        except StopIteration:
            raise OffParseError(f"unexpected end of file while reading {what}", last) from None

    lineno, tokens = take("header")
    if tokens[0] != "OFF":
        raise OffParseError(f"missing OFF header, got {tokens[0]!r}", lineno)
    rest = tokens[1:]
    if not rest:
        lineno, rest = take("counts")
    counts = _ints(rest, lineno, "counts line")
    if len(counts) < 2 or any(c < 0 for c in counts):
        raise OffParseError("counts line needs non-negative vertex and face counts", lineno)
    n_vertices, n_faces = counts[0], counts[1]

    mesh = SurfaceMesh()
    for i in range(n_vertices):
        lineno, tokens = take(f"vertex {i}")
        if len(tokens) < 3:
            raise OffParseError(f"vertex {i} needs 3 coordinates", lineno)
        try:
            xyz = [float(t) for t in tokens[:3]]
        except ValueError:
            raise OffParseError(f"bad coordinate in vertex {i}: {' '.join(tokens[:3])!r}", lineno) from None
        if not all(math.isfinite(c) for c in xyz):
            raise OffParseError(f"non-finite coordinate in vertex {i}", lineno)
        mesh.add_vertex(i, xyz)

    for j in range(n_faces):
        lineno, tokens = take(f"face {j}")
        arity = _ints(tokens[:1], lineno, "face arity")[0]
        if arity != 3:
            raise OffParseError(f"unsupported face arity {arity}; only triangles are supported", lineno)
        if len(tokens) < 4:
            raise OffParseError(f"face {j} lists fewer than 3 vertices", lineno)
        idx = _ints(tokens[1:4], lineno, "face indices")
        for k in idx:
            if not 0 <= k < n_vertices:
                raise OffParseError(f"vertex index {k} out of range (0..{n_vertices - 1})", lineno)
        if len(set(idx)) != 3:
            raise OffParseError(f"degenerate face {idx}", lineno)
        mesh.insert(idx)
    return mesh


def load_off(source) -> SurfaceMesh:
    """Read a mesh from a path or a text/byte stream."""
    return loads_off(_read_text(source))


def dumps_off(mesh: SurfaceMesh) -> str:
    """Serialize vertices in ascending key order and faces in ascending name order.

    Keys are renumbered to file indices 0..V-1.  Faces oriented ``-1`` are
    written with their last two vertices swapped so the winding follows the
    orientation.  Edges and vertices outside any face other than isolated
    vertices are not representable and are dropped.
    """
    vertices = sorted(mesh.level(0), key=lambda v: v.name)
    index = {v.name[0]: i for i, v in enumerate(vertices)}
    faces = sorted(mesh.level(2), key=lambda f: f.name)
    out = io.StringIO()
    out.write("OFF\n")
    out.write(f"{len(vertices)} {len(faces)} 0\n")
    for v in vertices:
        out.write(" ".join(repr(float(c)) for c in v.data.position) + "\n")
    for f in faces:
        a, b, c = (index[k] for k in f.name)
        if f.data.orientation < 0:
            b, c = c, b
        out.write(f"3 {a} {b} {c}\n")
    return out.getvalue()


def write_off(mesh: SurfaceMesh, dest) -> None:
    """Write to a path or to a text/byte stream."""
    text = dumps_off(mesh)
    if hasattr(dest, "write"):
        if isinstance(dest, (io.RawIOBase, io.BufferedIOBase)):
            dest.write(text.encode("ascii"))
        else:
            dest.write(text)
    else:
        with open(os.fspath(dest), "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
