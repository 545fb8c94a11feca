"""Exception hierarchy shared by all modules."""


class SpecialMonoidsError(Exception):
    """Base class for all errors raised by this package."""


class EmptyRelatorError(SpecialMonoidsError):
    """A group relator freely reduces to the empty word."""


class EmptyWordInListError(SpecialMonoidsError):
    """A word list operation that forbids empty entries saw one."""


class NotReducedError(SpecialMonoidsError):
    """A word list contains an empty word or a duplicate."""


class PresentationSyntaxError(SpecialMonoidsError):
    """Malformed presentation file."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownGeneratorError(SpecialMonoidsError):
    """A word uses a letter outside the declared alphabet."""


class RelationTooLongError(SpecialMonoidsError):
    """A relation exceeds an explicitly given length cap."""


class AlphabetMismatchError(SpecialMonoidsError):
    """A word uses generators outside the oracle's target group."""


class OracleInconclusiveError(SpecialMonoidsError):
    """A group equality query returned Unknown where the pipeline
    needs a definite answer."""


class NotFinalError(SpecialMonoidsError):
    """A word required to be final (no shorter reachable form) is not."""


class NotInvertibleError(SpecialMonoidsError):
    """The argument is not two-sided invertible in the monoid."""


class NotK211Error(SpecialMonoidsError):
    """The symmetrized set fails the 2/11 cancellation condition."""


class InvariantViolationError(SpecialMonoidsError):
    """An internal structural invariant failed at runtime.

    Raised instead of silently proceeding when one of the guaranteed
    properties of the construction (unique factorization, family
    coincidence, cardinality bounds) does not hold.
    """
