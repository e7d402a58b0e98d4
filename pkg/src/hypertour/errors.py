"""Exception hierarchy shared by every hypertour module."""


class HypertourError(Exception):
    """Base class for all library errors."""


class BadTuple(HypertourError, ValueError):
    """A vertex tuple is malformed: wrong arity, repeated or out-of-range id."""


class DuplicateSubset(HypertourError, ValueError):
    """Two hyperarcs were given over the same k-subset."""


class MissingSubset(HypertourError, ValueError):
    """A k-tournament is missing the hyperarc of at least one k-subset."""


class ParseError(HypertourError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadCycle(HypertourError, ValueError):
    """A cycle does not validate against the hyperdigraph it is used with."""


class RangeUnsupported(HypertourError, ValueError):
    """The (k, n) combination lies outside what an operation supports."""


class NotStrong(HypertourError, ValueError):
    """An operation requiring a strong hyperdigraph got a non-strong one."""


class BudgetExceeded(HypertourError):
    """A search ran out of its node/item budget before finishing."""


class ConfigError(HypertourError, ValueError):
    """An experiment configuration is malformed."""


class InternalGuaranteeViolated(HypertourError, AssertionError):
    """A search failed on an input where success is guaranteed.

    Never a user error. It means a bug or a counterexample, and should stop
    whatever run produced it.
    """
