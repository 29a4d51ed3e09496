"""
Error hierarchy shared by every app.

Each error carries the process exit code the CLI reports for it.
"""


class CRFramesError(Exception):
    """Base class for all engine errors."""

    exit_code = 1


class ArityError(CRFramesError):
    """A coordinate or jet does not belong to the active class arity."""


class ContractError(CRFramesError):
    """A precondition of an operation was violated by the caller."""


class UnresolvableFactorError(CRFramesError):
    """A denominator factor handle cannot be resolved to a polynomial."""


class SingularPointError(CRFramesError):
    """An evaluation hit a vanishing denominator."""

    exit_code = 4

    def __init__(self, factor='denominator', message=None):
        self.factor = factor
        super().__init__(message or f'singular point: {factor} vanishes')


class DegenerateExpressionError(CRFramesError):
    """No admissible evaluation point was found within the retry limit."""

    exit_code = 4


class DegenerateFrameError(CRFramesError):
    """The frame determinant vanishes identically."""

    exit_code = 4


class ClassHypothesisViolation(CRFramesError):
    """A concrete graphing function does not satisfy its class hypotheses."""

    exit_code = 4

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ExpansionAbandoned(CRFramesError):
    """A stress-mode expansion exceeded its memory budget."""

    exit_code = 3

    def __init__(self, partial_terms, cap):
        self.partial_terms = partial_terms
        self.cap = cap
        super().__init__(
            f'expansion abandoned after {partial_terms} terms (cap {cap})'
        )


class UsageError(CRFramesError):
    """Invalid command-line usage."""

    exit_code = 2
