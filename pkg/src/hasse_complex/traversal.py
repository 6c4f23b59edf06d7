"""Traversals over a complex: levels, adjacency, visitor BFS, star/closure/link."""

from __future__ import annotations

from collections.abc import Callable, Iterator

from .core import Complex, Simplex
from .errors import DimensionError
from .simplexset import SimplexSet

__all__ = [
    "Visitor",
    "level_handles",
    "iter_neighbors_up",
    "iter_neighbors_down",
    "neighbors_up",
    "neighbors_down",
    "bfs_up",
    "bfs_down",
    "star",
    "closure",
    "link",
    "k_skeleton",
]

VisitFn = Callable[[Complex, Simplex], "bool | None"]


class Visitor:
    """Level-dispatched visit callbacks for :func:`bfs_up` / :func:`bfs_down`.

    Subclasses define ``visit_<k>(complex, simplex)`` for the levels they care
    about and may override the catch-all ``visit``.  Returning ``False`` stops
    the traversal from expanding past that simplex.

    >>> class CountEdges(Visitor):
    ...     def __init__(self):
    ...         self.n = 0
    ...     def visit_1(self, cx, s):
    ...         self.n += 1
    ...         return True
    """

    def __call__(self, cx: Complex, s: Simplex):
        method = getattr(self, f"visit_{s.level}" if s.level >= 0 else "visit_root", None)
        if method is None:
            return self.visit(cx, s)
        return method(cx, s)

    def visit(self, cx: Complex, s: Simplex):
        return True


def _seeds(cx: Complex, x) -> list[Simplex]:
    if isinstance(x, Simplex):
        x = [x]
    return [cx._check(s) for s in x]


def level_handles(cx: Complex, k: int) -> Iterator[Simplex]:
    if not 0 <= k <= cx.dimension:
        raise DimensionError(f"level {k} outside 0..{cx.dimension}")
    return cx.level(k)


def iter_neighbors_up(cx: Complex, s: Simplex) -> Iterator[Simplex]:
    """Same-level simplices sharing a coface with ``s``, with repeats.

    A neighbor sharing several cofaces with ``s`` is yielded once per shared
    coface.
    """
    cx._check(s)
    for rel in s._up.values():
        coface = rel.upper
        for b in coface._down.values():
            if b.lower is not s:
                yield b.lower


def iter_neighbors_down(cx: Complex, s: Simplex) -> Iterator[Simplex]:
    """Same-level simplices sharing a boundary face with ``s``, with repeats.

    Vertices have no such neighbors: their only face is the root.
    """
    cx._check(s)
    if s.level <= 0:
        return
    for rel in s._down.values():
        face = rel.lower
        for b in face._up.values():
            if b.upper is not s:
                yield b.upper


def neighbors_up(cx: Complex, s: Simplex) -> SimplexSet:
    return SimplexSet(iter_neighbors_up(cx, s))


def neighbors_down(cx: Complex, s: Simplex) -> SimplexSet:
    return SimplexSet(iter_neighbors_down(cx, s))


def _bfs(cx: Complex, seeds, visitor: VisitFn, upward: bool) -> None:
    pending: dict[int, set[Simplex]] = {}
    queued: set[Simplex] = set()
    for s in _seeds(cx, seeds):
        if s not in queued:
            queued.add(s)
            pending.setdefault(s.level, set()).add(s)
    pick = min if upward else max
    while pending:
        batch = sorted(pending.pop(pick(pending)), key=lambda s: s.iid)
        for s in batch:
            if visitor(cx, s) is False:
                continue
            if upward:
                nxt = [rel.upper for rel in s._up.values()]
            elif s.level > 0:
                nxt = [rel.lower for rel in s._down.values()]
            else:
                continue
            for t in nxt:
                if t not in queued:
                    queued.add(t)
                    pending.setdefault(t.level, set()).add(t)


def bfs_up(cx: Complex, seeds, visitor: VisitFn) -> None:
    """Breadth-first walk through coboundary relations, one level at a time.

    ``seeds`` is a simplex or an iterable of them.  Within a level, simplices
    are visited in ascending internal-id order; each simplex is visited at
    most once.  ``visitor(cx, s)`` returning ``False`` prunes expansion
    through ``s``.
    """
    _bfs(cx, seeds, visitor, upward=True)


def bfs_down(cx: Complex, seeds, visitor: VisitFn) -> None:
    """Like :func:`bfs_up` but through boundary relations.  The root is never visited."""
    _bfs(cx, seeds, visitor, upward=False)


def _collect(cx: Complex, seeds, upward: bool) -> SimplexSet:
    out = SimplexSet()

    def grab(_cx, s):
        if s.level >= 0:
            out.add(s)
        return True

    _bfs(cx, seeds, grab, upward)
    return out


def star(cx: Complex, x) -> SimplexSet:
    """All simplices containing some member of ``x`` (members included)."""
    return _collect(cx, x, upward=True)


def closure(cx: Complex, x) -> SimplexSet:
    """All faces of members of ``x`` (members included, root excluded)."""
    return _collect(cx, x, upward=False)


def link(cx: Complex, x) -> SimplexSet:
    """Faces of the closed star of ``x`` that miss ``x``: ``Cl(St(x)) - St(Cl(x))``."""
    seeds = _seeds(cx, x)
    return closure(cx, star(cx, seeds)) - star(cx, closure(cx, seeds))


def k_skeleton(cx: Complex, k: int) -> SimplexSet:
    """Every simplex of dimension ``<= k``."""
    if not 0 <= k <= cx.dimension:
        raise DimensionError(f"level {k} outside 0..{cx.dimension}")
    out = SimplexSet()
    for level in range(k + 1):
        out.update(cx.level(level))
    return out
