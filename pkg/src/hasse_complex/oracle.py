"""Brute-force reference complex used as a test oracle.

Names are stored as a plain set of frozensets and every query is a direct
scan over that set, written to mirror the set-builder definitions as closely
as possible.  It is slow on purpose; do not use it for anything but checking.
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

Name = tuple[int, ...]


def _fs(name) -> frozenset:
    return frozenset(name)


def _sorted(names: Iterable[frozenset]) -> set[Name]:
    return {tuple(sorted(n)) for n in names}


class NaiveComplex:
    """A subset-closed family of non-empty vertex sets."""

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        self.simplices: set[frozenset] = set()
        for f in facets:
            self.insert(f)

    @staticmethod
    def is_closed(names: Iterable) -> bool:
        """True when every non-empty proper face of every name is also present."""
        family = {_fs(n) for n in names}
        return all(not s - {v} or s - {v} in family for s in family for v in s)

    def _check(self):
        assert self.is_closed(self.simplices), "closure violated"

    def insert(self, name) -> None:
        s = _fs(name)
        for r in range(1, len(s) + 1):
            for sub in combinations(sorted(s), r):
                self.simplices.add(frozenset(sub))
        self._check()

    def remove(self, name) -> int:
        f = _fs(name)
        doomed = {s for s in self.simplices if f <= s}
        self.simplices -= doomed
        self._check()
        return len(doomed)

    def names(self) -> set[Name]:
        return _sorted(self.simplices)

    def star(self, inputs: Iterable) -> set[Name]:
        fs = [_fs(f) for f in inputs]
        return _sorted(s for s in self.simplices if any(f <= s for f in fs))

    def closure(self, inputs: Iterable) -> set[Name]:
        fs = [_fs(f) for f in inputs]
        return _sorted(s for s in self.simplices if any(s <= f for f in fs))

    def link(self, inputs: Iterable) -> set[Name]:
        # faces of the closed star that do not meet the input
        fs = [_fs(f) for f in inputs]
        union = frozenset().union(*fs)
        closed_star = self.closure(self.star(fs))
        return {s for s in closed_star if not set(s) & union}

    def neighbors_up(self, name) -> set[Name]:
        f = _fs(name)
        k = len(f)
        cofaces = [c for c in self.simplices if len(c) == k + 1 and f < c]
        return _sorted(
            t for t in self.simplices if len(t) == k and t != f and any(t < c for c in cofaces)
        )

    def neighbors_down(self, name) -> set[Name]:
        f = _fs(name)
        k = len(f)
        faces = [c for c in self.simplices if len(c) == k - 1 and c < f]
        return _sorted(
            t for t in self.simplices if len(t) == k and t != f and any(c < t for c in faces)
        )

    def phi_image(self, s, p: int) -> set[Name]:
        s = _fs(s)
        out = set()
        for f in self.simplices:
            out.add(f if not f & s else (f - s) | {p})
        return _sorted(out)

    def phi_preimages(self, s, p: int) -> dict[Name, set[Name]]:
        """Image name -> names of every simplex meeting ``s`` that maps onto it."""
        s = _fs(s)
        out: dict[Name, set[Name]] = {}
        for f in self.simplices:
            if f & s:
                img = tuple(sorted((f - s) | {p}))
                out.setdefault(img, set()).add(tuple(sorted(f)))
        return out
