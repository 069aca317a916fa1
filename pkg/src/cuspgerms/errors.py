"""Exception types shared across the package."""


class CuspGermsError(Exception):
    """Base class for domain errors raised by this package."""


class GermParseError(CuspGermsError):
    """A germ specification string does not match the input grammar."""


class UndecidableAtTruncation(CuspGermsError):
    """A truncated germ does not carry enough terms to decide the query."""


class NoWitnessInRange(CuspGermsError):
    """The glued curve has no site deep enough to witness the requested power."""


class UnsupportedEssentialProduct(CuspGermsError):
    """The requested operation would need a product of two essential factors."""
