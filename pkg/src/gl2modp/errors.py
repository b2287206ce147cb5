"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class Gl2ModpError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(Gl2ModpError, ValueError):
    """An input value is malformed or out of range."""


class PreconditionError(Gl2ModpError, ValueError):
    """An operation was called outside its domain (e.g. genericity)."""


class ParityError(Gl2ModpError, ArithmeticError):
    """A halving step met an odd integer."""


class NegativeCoefficientError(Gl2ModpError, ArithmeticError):
    """A cycle subtraction would produce a negative coefficient."""


class InvariantError(Gl2ModpError, AssertionError):
    """A mathematical identity that must hold was found to fail."""
