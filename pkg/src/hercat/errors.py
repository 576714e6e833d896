"""Exception hierarchy.

``InputError`` subclasses signal malformed input (CLI exit code 2); every
other ``HercatError`` is a failed mathematical precondition (exit code 1).
"""


class HercatError(Exception):
    """Base class for all library errors."""


class InputError(HercatError, ValueError):
    """Malformed input: bad JSON, wrong shapes, out-of-range indices."""


class ParseError(InputError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class DimensionMismatch(InputError):
    pass


class SingularMatrix(HercatError, ArithmeticError):
    pass


class SingularCartan(SingularMatrix):
    pass


class NoIntegralCoxeter(HercatError):
    pass


class LeftRightRadicalMismatch(HercatError):
    pass


class NotExceptionalClass(HercatError):
    pass


class NotTranslatable(HercatError):
    pass


class Unsupported(HercatError):
    pass


class NotSinkOrSource(HercatError):
    pass


class SimpleSummandPresent(HercatError):
    pass


class NotExceptionalSequence(HercatError):
    pass


class ClassificationInconsistency(HercatError):
    pass
