"""Exception types raised by the complex and the mesh layer."""


class ComplexError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(ComplexError, ValueError):
    """A simplex is larger than the complex's schema allows."""


class SimplexNotFoundError(ComplexError, KeyError):
    """A named simplex or relation does not exist."""

    def __str__(self):
        return Exception.__str__(self)


class InvalidHandleError(ComplexError, RuntimeError):
    """A handle whose simplex has been removed was used."""


class NoPayloadError(ComplexError, TypeError):
    """Payload access on a level the schema declares as carrying nothing."""


class NoIncidentFaceError(ComplexError, ValueError):
    """A vertex has no incident top-level simplex."""


class NonManifoldError(ComplexError, ValueError):
    """An edge has more than two incident faces."""

    def __init__(self, edge, count):
        super().__init__(f"edge {list(edge)} has {count} incident faces (at most 2 allowed)")
        self.edge = tuple(edge)
        self.count = count


class LinkConditionError(ComplexError):
    """A guarded edge collapse was refused because the link condition fails."""


class OffParseError(ComplexError, ValueError):
    """Malformed OFF input. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{where}{message}")
