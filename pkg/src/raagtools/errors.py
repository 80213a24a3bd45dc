"""Exception types shared across the package."""


class RaagError(Exception):
    """Base class for errors raised by raagtools."""


class GraphFormatError(RaagError, ValueError):
    """Malformed graph text or an invalid vertex set."""


class UnknownVertexError(RaagError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown vertex {self.name!r}"


class WordSyntaxError(RaagError, ValueError):
    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


class GraphMismatchError(RaagError, ValueError):
    """Elements over different defining graphs were combined."""


class PreconditionError(RaagError, ValueError):
    """Inputs do not satisfy the hypotheses of an operation.

    ``failures`` lists the individual conditions that did not hold."""

    def __init__(self, failures):
        if isinstance(failures, str):
            failures = [failures]
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class BudgetExceeded(RaagError, RuntimeError):
    """A search ran past its resource budget."""


class InvariantViolation(RaagError, AssertionError):
    """A structural guarantee failed on concrete data."""
