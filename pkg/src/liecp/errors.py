"""Exception hierarchy.

Every domain error derives from :class:`LieCPError` so callers (and the CLI)
can separate "the input is mathematically invalid" from programming bugs.
"""


class LieCPError(Exception):
    """Base class for all domain errors raised by liecp."""


class UnsupportedType(LieCPError):
    pass


class ZeroVector(LieCPError):
    pass


class NonIntegral(LieCPError):
    pass


class IndexOutOfRange(LieCPError, IndexError):
    pass


class NotDominant(LieCPError):
    pass


class DimensionCapExceeded(LieCPError):
    pass


class TagMismatch(LieCPError):
    pass


class NotACharacter(LieCPError):
    """The weight multiset is not the weight system of any representation."""


class CapExceeded(LieCPError):
    pass


class SizeCapExceeded(CapExceeded):
    pass


class NoSuchRootClass(LieCPError):
    pass


class ShapeError(LieCPError):
    pass


class SingularB(LieCPError):
    pass
