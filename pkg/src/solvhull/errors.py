"""Exception hierarchy shared across the package."""


class SolvhullError(Exception):
    """Base class for all package errors."""


class StructureError(SolvhullError):
    """The input data does not describe a valid object (axioms fail)."""


class PreconditionError(SolvhullError):
    """An operation was called outside its documented precondition."""


class InternalCheckError(SolvhullError):
    """A self-check that should be mathematically impossible failed.

    Raised when a construction invariant breaks; this indicates a bug in
    the implementation, not bad input, so it is never caught internally.
    """
