"""Hasse-diagram storage for abstract simplicial complexes with typed payloads.

Every simplex is one node.  A node keeps two dictionaries keyed by vertex:
``up`` (coboundary: ``name | {v}``) and ``down`` (boundary: ``name - {v}``).
Both directions of a boundary relation point at the same :class:`Relation`
record, so relation payloads are shared by construction.

Payload types are fixed per level by a :class:`Schema`.  Levels declared as
carrying nothing get node classes without a data slot at all.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from operator import index
from typing import Any, NamedTuple

from .errors import (
    ComplexError,
    DimensionError,
    InvalidHandleError,
    NoPayloadError,
    SimplexNotFoundError,
)

__all__ = ["Schema", "Simplex", "Relation", "Complex", "Counts", "canonical_name"]

MAX_KEY = 2**64 - 1

Name = tuple[int, ...]
Factory = Callable[[], Any] | None

_MISSING = object()


def canonical_name(keys: Iterable[int]) -> Name:
    """Sort and deduplicate ``keys`` into a simplex name.

    Keys must be integers in the unsigned 64-bit range.
    """
    if isinstance(keys, (str, bytes)):
        raise TypeError("simplex name must be an iterable of integer keys")
    out = set()
    for k in keys:
        if isinstance(k, bool):
            raise TypeError(f"vertex key must be an integer, got {k!r}")
        k = index(k)
        if k < 0 or k > MAX_KEY:
            raise ValueError(f"vertex key {k} outside the unsigned 64-bit range")
        out.add(k)
    return tuple(sorted(out))


@dataclass(frozen=True)
class Schema:
    """Payload types for every node level and every relation level.

    Parameters
    ----------
    node_types :
        ``N + 2`` factories, one per level ``-1 .. N``.  ``None`` means the
        level stores no payload.  A factory is called with no arguments to
        produce the default payload of auto-created simplices.
    edge_types :
        ``N + 1`` factories, one per relation level ``0 .. N``.  Relation
        level ``k`` joins ``(k-1)``-simplices to ``k``-simplices.  Defaults to
        no relation payloads.
    """

    node_types: tuple[Factory, ...]
    edge_types: tuple[Factory, ...] | None = None

    def __post_init__(self):
        node_types = tuple(self.node_types)
        if len(node_types) < 2:
            raise ValueError("schema needs payload entries for at least levels -1 and 0")
        edge_types = self.edge_types
        if edge_types is None:
            edge_types = (None,) * (len(node_types) - 1)
        edge_types = tuple(edge_types)
        if len(edge_types) != len(node_types) - 1:
            raise ValueError(
                f"expected {len(node_types) - 1} relation types for dimension "
                f"{len(node_types) - 2}, got {len(edge_types)}"
            )
        for f in node_types + edge_types:
            if f is not None and not callable(f):
                raise TypeError(f"payload factory {f!r} is not callable")
        object.__setattr__(self, "node_types", node_types)
        object.__setattr__(self, "edge_types", edge_types)

    @classmethod
    def bare(cls, dimension: int) -> Schema:
        """A schema of the given dimension that stores no payloads at all."""
        if dimension < 0:
            raise ValueError("dimension must be >= 0")
        return cls((None,) * (dimension + 2))

    @property
    def dimension(self) -> int:
        return len(self.node_types) - 2

    def node_factory(self, level: int) -> Factory:
        return self.node_types[level + 1]

    def edge_factory(self, level: int) -> Factory:
        return self.edge_types[level]


class Relation:
    """One boundary relation ``lower -> upper`` where ``upper = lower | {key}``."""

    __slots__ = ("lower", "upper", "key")

    def __init__(self, lower: Simplex, upper: Simplex, key: int):
        self.lower = lower
        self.upper = upper
        self.key = key

    @property
    def level(self) -> int:
        return self.upper._level

    @property
    def data(self):
        raise NoPayloadError(f"relation level {self.level} carries no payload")

    @data.setter
    def data(self, value):
        raise NoPayloadError(f"relation level {self.level} carries no payload")

    def __repr__(self):
        return f"Relation({list(self.lower.name)} -> {list(self.upper.name)})"


class _DataRelation(Relation):
    __slots__ = ("_data",)

    @property
    def data(self):
        return self._data

    @data.setter
    def data(self, value):
        self._data = value


class Simplex:
    """Handle to one simplex of a :class:`Complex`.

    Handles compare by identity.  A handle is invalidated when its simplex
    is removed; using it afterwards raises :class:`InvalidHandleError`.
    """

    __slots__ = ("_iid", "_level", "_up", "_down", "_complex", "_alive")

    def __init__(self, cx: Complex, iid: int, level: int):
        self._complex = cx
        self._iid = iid
        self._level = level
        self._up: dict[int, Relation] = {}
        self._down: dict[int, Relation] = {}
        self._alive = True

    @property
    def iid(self) -> int:
        """Internal id; stable for the simplex's lifetime, for debugging only."""
        return self._iid

    @property
    def level(self) -> int:
        return self._level

    @property
    def alive(self) -> bool:
        return self._alive

    @property
    def name(self) -> Name:
        return tuple(sorted(self._down))

    @property
    def data(self):
        raise NoPayloadError(f"level {self._level} carries no payload")

    @data.setter
    def data(self, value):
        raise NoPayloadError(f"level {self._level} carries no payload")

    def __lt__(self, other: Simplex) -> bool:
        return (self._level, self._iid) < (other._level, other._iid)

    def __repr__(self):
        state = "" if self._alive else " (removed)"
        return f"Simplex({list(self.name)}){state}"


class _DataSimplex(Simplex):
    __slots__ = ("_data",)

    @property
    def data(self):
        return self._data

    @data.setter
    def data(self, value):
        self._data = value


class Counts(NamedTuple):
    """Live simplex counts per level ``0 .. N`` and the total relation count."""

    levels: tuple[int, ...]
    relations: int


class Complex:
    """An abstract simplicial complex stored as a Hasse diagram."""

    def __init__(self, schema: Schema):
        if not isinstance(schema, Schema):
            raise TypeError("Complex expects a Schema")
        self.schema = schema
        self._next_iid = 0
        self._n_relations = 0
        self._key_high_water = -1
        # index = level + 1; dicts keep insertion order, iids are monotone
        self._levels: list[dict[int, Simplex]] = [{} for _ in range(schema.dimension + 2)]
        self.root = self._create_node(-1)

    @property
    def dimension(self) -> int:
        return self.schema.dimension

    # -- node lifecycle -----------------------------------------------------

    def _create_node(self, level: int) -> Simplex:
        factory = self.schema.node_factory(level)
        iid = self._next_iid
        self._next_iid += 1
        if factory is None:
            node = Simplex(self, iid, level)
        else:
            node = _DataSimplex(self, iid, level)
            node._data = factory()
        self._levels[level + 1][iid] = node
        return node

    def _connect(self, lower: Simplex, upper: Simplex, key: int) -> None:
        factory = self.schema.edge_factory(upper._level)
        if factory is None:
            rel = Relation(lower, upper, key)
        else:
            rel = _DataRelation(lower, upper, key)
            rel._data = factory()
        lower._up[key] = rel
        upper._down[key] = rel
        self._n_relations += 1

    def _check(self, s: Simplex) -> Simplex:
        if not isinstance(s, Simplex):
            raise TypeError(f"expected a Simplex handle, got {type(s).__name__}")
        if not s._alive:
            raise InvalidHandleError(f"handle {s!r} refers to a removed simplex")
        if s._complex is not self:
            raise InvalidHandleError(f"handle {s!r} belongs to another complex")
        return s

    def _resolve(self, target) -> Simplex:
        if isinstance(target, Simplex):
            return self._check(target)
        name = canonical_name(target)
        node = self.get_simplex(name)
        if node is None:
            raise SimplexNotFoundError(f"simplex {list(name)} is not in the complex")
        return node

    # -- insertion ----------------------------------------------------------

    def insert(self, keys: Iterable[int], data=_MISSING) -> Simplex:
        """Insert the simplex named by ``keys`` together with all its faces.

        Missing faces and every boundary relation between them are created;
        existing simplices keep their payloads.  If ``data`` is given it
        becomes the payload of the named simplex (only).
        """
        name = canonical_name(keys)
        if len(name) - 1 > self.schema.dimension:
            raise DimensionError(
                f"simplex {list(name)} has dimension {len(name) - 1}, "
                f"complex dimension is {self.schema.dimension}"
            )
        node = self._insert_below(self.root, name, len(name))
        if data is not _MISSING:
            node.data = data
        return node

    def _insert_below(self, base: Simplex, keys: Name, n: int) -> Simplex:
        # Adds keys[0], ..., keys[n-1] to ``base`` in order; the last one
        # recursively completes the full simplex.
        node = base
        for i in range(n):
            node = self._insert_node(base, keys, i)
        return node

    def _insert_node(self, base: Simplex, keys: Name, i: int) -> Simplex:
        v = keys[i]
        rel = base._up.get(v)
        if rel is not None:
            new = rel.upper
        else:
            new = self._create_node(base._level + 1)
            self._connect(base, new, v)
            if base._level == -1 and v > self._key_high_water:
                self._key_high_water = v
            # backfill: every face (base - u) already has a coface (base - u) | v
            for u, down_rel in base._down.items():
                sibling = down_rel.lower._up[v].upper
                self._connect(sibling, new, u)
        return self._insert_below(new, keys, i)

    # -- removal ------------------------------------------------------------

    def remove(self, target) -> int:
        """Remove a simplex and every coface of it.

        ``target`` is a handle or a name.  Returns the number of simplices
        deleted.
        """
        node = self._resolve(target)
        if node is self.root:
            raise ComplexError("cannot remove the root simplex; use clear()")
        doomed = {node}
        stack = [node]
        while stack:
            for rel in stack.pop()._up.values():
                up = rel.upper
                if up not in doomed:
                    doomed.add(up)
                    stack.append(up)
        for s in sorted(doomed, key=lambda s: (-s._level, s._iid)):
            self._delete_node(s)
        return len(doomed)

    def _delete_node(self, s: Simplex) -> None:
        assert not s._up, "cofaces must be deleted first"
        for key, rel in s._down.items():
            del rel.lower._up[key]
            self._n_relations -= 1
        s._down = {}
        s._alive = False
        del self._levels[s._level + 1][s._iid]

    def clear(self) -> None:
        """Remove every simplex except the root.  Used keys stay reserved."""
        for level in range(self.schema.dimension, -1, -1):
            for s in list(self._levels[level + 1].values()):
                self._delete_node(s)

    # -- search -------------------------------------------------------------

    def get_simplex(self, keys: Iterable[int]) -> Simplex | None:
        """Look a simplex up by name, walking up from the root."""
        return self.get_simplex_up(self.root, keys)

    def get_simplex_up(self, start: Simplex, keys: Iterable[int]) -> Simplex | None:
        """The simplex ``name(start) | keys``, or ``None`` if absent."""
        node = self._check(start)
        for k in keys:
            rel = node._up.get(k)
            if rel is None:
                return None
            node = rel.upper
        return node

    def get_simplex_down(self, start: Simplex, keys: Iterable[int]) -> Simplex | None:
        """The simplex ``name(start) - keys``, or ``None`` if a key is not in the name."""
        node = self._check(start)
        for k in keys:
            rel = node._down.get(k)
            if rel is None:
                return None
            node = rel.lower
        return node

    def get_edge_up(self, s: Simplex, key: int) -> Relation:
        """The relation ``s -> s | {key}``."""
        rel = self._check(s)._up.get(key)
        if rel is None:
            raise SimplexNotFoundError(f"no relation up from {list(s.name)} along key {key}")
        return rel

    def get_edge_down(self, s: Simplex, key: int) -> Relation:
        """The relation ``s - {key} -> s``."""
        rel = self._check(s)._down.get(key)
        if rel is None:
            raise SimplexNotFoundError(f"no relation down from {list(s.name)} along key {key}")
        return rel

    def get_name(self, s: Simplex) -> Name:
        return self._check(s).name

    def get_cover(self, s: Simplex) -> list[int]:
        """Keys ``v`` such that ``name(s) | {v}`` exists, ascending."""
        return sorted(self._check(s)._up)

    def __contains__(self, keys) -> bool:
        if isinstance(keys, Simplex):
            return keys._alive and keys._complex is self
        return self.get_simplex(canonical_name(keys)) is not None

    # -- iteration and bookkeeping ------------------------------------------

    def level(self, k: int) -> Iterator[Simplex]:
        """Every live ``k``-simplex, in ascending internal-id order.

        Do not mutate the complex while consuming the iterator.
        """
        if not -1 <= k <= self.schema.dimension:
            raise DimensionError(f"level {k} outside -1..{self.schema.dimension}")
        return iter(self._levels[k + 1].values())

    def simplices(self) -> Iterator[Simplex]:
        """Every non-root simplex, by level then internal id."""
        for k in range(self.schema.dimension + 1):
            yield from self._levels[k + 1].values()

    def facets(self) -> Iterator[Simplex]:
        """Non-root simplices without cofaces."""
        return (s for s in self.simplices() if not s._up)

    def names(self) -> set[Name]:
        return {s.name for s in self.simplices()}

    def counts(self) -> Counts:
        return Counts(
            tuple(len(self._levels[k + 1]) for k in range(self.schema.dimension + 1)),
            self._n_relations,
        )

    def __len__(self) -> int:
        return sum(self.counts().levels)

    def new_vertex_key(self) -> int:
        """A key strictly greater than every key ever used in this complex."""
        if self._key_high_water >= MAX_KEY:
            raise ComplexError("vertex key space exhausted")
        return self._key_high_water + 1

    def validate(self) -> None:
        """Full scan of the structural invariants; raises ComplexError on failure."""
        root_name = self.root.name
        if root_name != () or self.root._level != -1:
            raise ComplexError("root is malformed")
        n_rel = 0
        for reg_level, registry in enumerate(self._levels, start=-1):
            for iid, s in registry.items():
                if s._iid != iid or s._level != reg_level or not s._alive:
                    raise ComplexError(f"registry entry {iid} at level {reg_level} is stale")
                name = s.name
                if len(name) != s._level + 1:
                    raise ComplexError(f"{s!r} has {len(name)} keys at level {s._level}")
                for key, rel in s._down.items():
                    if rel.upper is not s or rel.key != key or rel.lower._up.get(key) is not rel:
                        raise ComplexError(f"asymmetric relation below {s!r} at key {key}")
                    if rel.lower.name != tuple(k for k in name if k != key):
                        raise ComplexError(f"relation below {s!r} at {key} names the wrong face")
                    if not rel.lower._alive:
                        raise ComplexError(f"{s!r} points at a removed face")
                    n_rel += 1
                for key, rel in s._up.items():
                    if rel.lower is not s or rel.upper._down.get(key) is not rel:
                        raise ComplexError(f"asymmetric relation above {s!r} at key {key}")
        if n_rel != self._n_relations:
            raise ComplexError(f"relation count {self._n_relations} != scanned {n_rel}")
