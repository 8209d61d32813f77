"""Exception hierarchy shared by all colorcomp modules."""


class ColorCompError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ColorCompError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class InputError(ColorCompError, ValueError):
    """Malformed or insufficient input data (bad strings, short weight prefixes)."""


class InternalError(ColorCompError, RuntimeError):
    """Internal consistency violation, e.g. an inexact division in a recurrence.

    Raised instead of silently truncating; indicates a bug in a formula.
    """
