"""Exceptions raised by purepolylog.

Every error derives from :class:`PolylogError`, itself a ``RuntimeError``,
so callers can catch the whole family at once. Where a builtin exception
already carries the same meaning it is mixed in as a second base, which lets
``except ZeroDivisionError`` or ``except ValueError`` keep working.
"""


class PolylogError(RuntimeError):
    """Base class for all purepolylog errors."""


class DivisionByZero(PolylogError, ZeroDivisionError):
    """Inverse of zero requested in F_p, F_p(α) or F_p(α, β)."""


class BadArgument(PolylogError, ValueError):
    """An argument lies outside its documented range."""


class UnsupportedOrder(PolylogError, ValueError):
    """A root of unity of the requested order does not exist in F_p."""


class PoleError(PolylogError, ZeroDivisionError):
    """A substitution or specialization made a denominator vanish."""


class InexactDivision(PolylogError, ArithmeticError):
    """An exact division left a nonzero remainder."""


class InternalInconsistency(PolylogError):
    """Two independent constructions of the same object disagree."""


class DegreeGuardExceeded(PolylogError):
    """A bivariate fraction grew past the configured total degree."""
