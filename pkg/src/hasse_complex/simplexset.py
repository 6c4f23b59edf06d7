"""Multi-level simplex containers."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .core import Name, Simplex

__all__ = [
    "SimplexSet",
    "SimplexMap",
    "set_union",
    "set_intersection",
    "set_difference",
    "set_equals",
]


class SimplexSet:
    """A set of simplex handles bucketed by level.

    The root simplex is never a member.  Iteration goes by level, then by
    internal id, so output order is deterministic.
    """

    __slots__ = ("_levels",)

    def __init__(self, simplices: Iterable[Simplex] = ()):
        self._levels: dict[int, set[Simplex]] = {}
        for s in simplices:
            self.add(s)

    def add(self, s: Simplex) -> None:
        if s.level < 0:
            raise ValueError("the root simplex cannot be stored in a SimplexSet")
        self._levels.setdefault(s.level, set()).add(s)

    def discard(self, s: Simplex) -> None:
        bucket = self._levels.get(s.level)
        if bucket is not None:
            bucket.discard(s)
            if not bucket:
                del self._levels[s.level]

    def remove(self, s: Simplex) -> None:
        if s not in self:
            raise KeyError(s)
        self.discard(s)

    def update(self, other: Iterable[Simplex]) -> None:
        for s in other:
            self.add(s)

    def level(self, k: int) -> list[Simplex]:
        """Members at level ``k`` in ascending internal-id order."""
        return sorted(self._levels.get(k, ()), key=lambda s: s.iid)

    def levels(self) -> list[int]:
        return sorted(self._levels)

    def names(self) -> set[Name]:
        return {s.name for s in self}

    def copy(self) -> SimplexSet:
        out = SimplexSet()
        out._levels = {k: set(v) for k, v in self._levels.items()}
        return out

    def __contains__(self, s) -> bool:
        bucket = self._levels.get(getattr(s, "level", None))
        return bucket is not None and s in bucket

    def __iter__(self) -> Iterator[Simplex]:
        for k in sorted(self._levels):
            yield from sorted(self._levels[k], key=lambda s: s.iid)

    def __len__(self) -> int:
        return sum(len(v) for v in self._levels.values())

    def __bool__(self) -> bool:
        return bool(self._levels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplexSet):
            return NotImplemented
        return self._levels == other._levels

    __hash__ = None

    def __or__(self, other: SimplexSet) -> SimplexSet:
        out = self.copy()
        out.update(other)
        return out

    def __and__(self, other: SimplexSet) -> SimplexSet:
        out = SimplexSet()
        for k, bucket in self._levels.items():
            common = bucket & other._levels.get(k, set())
            if common:
                out._levels[k] = common
        return out

    def __sub__(self, other: SimplexSet) -> SimplexSet:
        out = SimplexSet()
        for k, bucket in self._levels.items():
            rest = bucket - other._levels.get(k, set())
            if rest:
                out._levels[k] = rest
        return out

    def __le__(self, other: SimplexSet) -> bool:
        return all(bucket <= other._levels.get(k, set()) for k, bucket in self._levels.items())

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, s.name)) + "}" for s in self)
        return f"SimplexSet({inner})"


def set_union(a: SimplexSet, b: SimplexSet) -> SimplexSet:
    return a | b


def set_intersection(a: SimplexSet, b: SimplexSet) -> SimplexSet:
    return a & b


def set_difference(a: SimplexSet, b: SimplexSet) -> SimplexSet:
    return a - b


def set_equals(a: SimplexSet, b: SimplexSet) -> bool:
    return a == b


class SimplexMap(dict):
    """Maps a post-collapse simplex name to the set of old simplices collapsing onto it."""

    def merge(self, name: Name, grabbed: SimplexSet) -> None:
        if name in self:
            self[name].update(grabbed)
        else:
            self[name] = grabbed
