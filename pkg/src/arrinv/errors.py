"""Exception types shared across the package."""


class ArrinvError(Exception):
    """Base class for all package errors."""


class MalformedInput(ArrinvError):
    pass


class ZeroForm(MalformedInput):
    pass


class DuplicateHyperplane(MalformedInput):
    pass


class UnsupportedField(MalformedInput):
    pass


class IndexOutOfRange(ArrinvError, IndexError):
    pass


class NotAFlat(ArrinvError):
    pass


class UnknownName(ArrinvError):
    pass


class DimensionTooSmall(ArrinvError):
    pass


class InconsistentInput(ArrinvError):
    pass
