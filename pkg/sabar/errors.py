"""Exception hierarchy for sabar.

Two families matter to callers: ``InputContractError`` (the caller handed us
something outside an operation's contract, CLI exit code 3) and
``InvariantError`` (we broke one of our own guarantees, CLI exit code 4).
"""


class SabarError(Exception):
    """Base class for all sabar errors."""

    exit_code = 1


class InputContractError(SabarError):
    """Input violates the documented contract of an operation."""

    exit_code = 3


class InvariantError(SabarError):
    """An internal invariant failed."""

    exit_code = 4


class ZeroPolynomialError(InputContractError, ValueError):
    """Operation undefined on the zero polynomial."""


class EndpointRootError(InputContractError, ValueError):
    """A Sturm query endpoint is itself a root."""

    def __init__(self, message: str = "endpoint is a root") -> None:
        super().__init__(message)


class MissingVariableError(InputContractError, KeyError):
    """A variable has no binding, or is absent where it is required."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "missing variable"


class ParseError(InputContractError, ValueError):
    """Malformed polynomial, formula, filtration or points text."""


class NotClosedError(InputContractError, ValueError):
    """make_closed was given a formula whose realization is not closed."""

    def __init__(self, message: str = "realization not closed") -> None:
        super().__init__(message)


class FormulaBudgetError(InputContractError, ValueError):
    """DNF expansion exceeded the configured atom budget."""


class ExactPathUnavailableError(InputContractError, ValueError):
    """Critical values cannot be computed exactly in this dimension."""


class FiltrationError(InputContractError, ValueError):
    """Complexes are not nested, not face-closed, or values are not increasing."""


class IndexRangeError(InputContractError, IndexError):
    """A filtration index is outside the valid range."""


class NotUnivariateError(InputContractError, ValueError):
    """A polynomial depends on more than the one variable an operation allows."""
