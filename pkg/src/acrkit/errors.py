"""Exception hierarchy shared by every acrkit module."""

from __future__ import annotations


class AcrkitError(Exception):
    """Base class for all errors raised by acrkit."""


class InvalidNetworkError(AcrkitError):
    """The reactions do not form a valid network (trivial or duplicate reaction, bad coefficient)."""


class NetworkSyntaxError(InvalidNetworkError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


class NotOneSpeciesError(AcrkitError):
    pass


class NoReactionsError(AcrkitError):
    pass


class NotOneDimensionalError(AcrkitError):
    pass


class WrongReactionCountError(AcrkitError):
    pass


class ReactantsDifferInOtherSpeciesError(AcrkitError):
    """Reactant complexes differ in a species other than the chosen variable."""


class ZeroPolynomialError(AcrkitError):
    """The steady-state polynomial vanishes identically (a continuum of steady states)."""


class NoACRError(AcrkitError):
    pass


class NoPositiveSteadyStateError(AcrkitError):
    pass


class UnclassifiedError(AcrkitError):
    pass


class TooManySpeciesForCoordinatePlotError(AcrkitError):
    pass


class InvariantViolation(AcrkitError):
    """An internal consistency check failed; indicates a bug rather than bad input."""


class OperationError(AcrkitError):
    """An operation cannot be applied to the given network."""

    def __init__(self, message: str, step: int | None = None):
        self.reason = message
        self.step = step
        super().__init__(message if step is None else f"step {step}: {message}")

    def at_step(self, step: int) -> "OperationError":
        return type(self)(self.reason, step=step)


class LeavesOrthantError(OperationError):
    pass


class CreatesTrivialReactionError(OperationError):
    pass


class CreatesDuplicateReactionError(OperationError):
    pass


class ZeroScaleFactorError(OperationError):
    pass


class NonInvertibleError(OperationError):
    pass
