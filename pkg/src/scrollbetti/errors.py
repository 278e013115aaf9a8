"""Exception hierarchy.

Input problems derive from :class:`InvalidInput` (CLI exit 2); cases the
closed formulas do not cover derive from :class:`OutsideKnownFormulas`
(CLI exit 3).
"""


class ScrollBettiError(Exception):
    pass


class InvalidInput(ScrollBettiError, ValueError):
    pass


class OutsideKnownFormulas(ScrollBettiError):
    pass


class ColumnMismatch(ScrollBettiError, ValueError):
    pass


class NegativeUpperIndex(ScrollBettiError, ValueError):
    pass


class NonpositiveDenominator(ScrollBettiError, ValueError):
    pass


class InvalidSpec(InvalidInput):
    pass


class POutOfRange(InvalidInput):
    pass


class ROutOfRange(InvalidInput):
    pass


class Degenerate(InvalidInput):
    pass


class NotSmoothScroll(InvalidInput):
    pass


class OutOfProblemScope(InvalidInput):
    pass


class NoClosedForm(OutsideKnownFormulas):
    pass


class UnsupportedCase(OutsideKnownFormulas):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class InsufficientBound(ScrollBettiError, ValueError):
    pass
