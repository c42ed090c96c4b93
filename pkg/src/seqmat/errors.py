"""Exception hierarchy shared by all seqmat modules.

Every domain error raised by the library derives from SeqmatError, so
callers (notably the CLI) can distinguish expected failures from bugs.
Each class also derives from the closest builtin so that generic
``except ValueError`` style handling keeps working.
"""


class SeqmatError(Exception):
    """Base class for all domain errors raised by seqmat."""


class ParseError(SeqmatError, ValueError):
    """Malformed text input (field descriptors, matrix/vector/coding files)."""


class FieldMismatchError(SeqmatError, ValueError):
    """Operands belong to different fields."""


class DimensionMismatchError(SeqmatError, ValueError):
    """Operands have incompatible dimensions."""


class NotInvertibleError(SeqmatError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class PreconditionError(SeqmatError, ValueError):
    """A documented precondition of an operation does not hold."""


class GuardError(SeqmatError, ValueError):
    """A size/iteration guard was exceeded without an explicit override."""


class InvariantViolation(SeqmatError, RuntimeError):
    """An internal invariant that should be impossible to break was broken."""
