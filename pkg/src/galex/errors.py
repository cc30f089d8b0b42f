"""Exception types shared across the toolkit.

Every error carries a stable ``code`` (its class name) which is what the
CLI prints and the HTTP service returns in error bodies.
"""


class GalexError(Exception):
    """Base class for all toolkit errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DuplicateName(GalexError):
    """An object or attribute name occurs more than once."""


class MalformedTable(GalexError):
    """The input table is structurally invalid (ragged rows, bad cells, ...)."""


class EmptyContext(GalexError):
    """The context has no objects or no attributes."""


class InvalidSet(GalexError):
    """An object/attribute index set contains out-of-range indices."""


class CapacityExceeded(GalexError):
    """A configured size ceiling (context dimension or concept count) was hit."""


class UnknownConcept(GalexError):
    """No concept with the given id exists in the lattice."""


class UnknownAttribute(GalexError):
    """No attribute with the given name exists in the context."""


class UnknownObject(GalexError):
    """No object with the given name exists in the context."""


class NotAdjacent(GalexError):
    """A navigation move targeted a concept that is not a cover neighbour."""


class InvalidThreshold(GalexError):
    """An iceberg threshold below 1 was requested."""


class UnknownSession(GalexError):
    """No live navigation session with the given id exists."""
