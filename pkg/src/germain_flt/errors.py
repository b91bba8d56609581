"""Exception types shared by the toolkit.

The CLI maps :class:`InvalidArgument` to exit code 2 and
:class:`OutOfRange` to exit code 3.
"""


class InvalidArgument(ValueError):
    """An input violates an operation's precondition."""


class OutOfRange(ArithmeticError):
    """An input exceeds a documented size guard."""


class NotFound(LookupError):
    """A bounded search finished without a result."""
