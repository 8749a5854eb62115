"""
Contains exceptions specific for operad presentations, series and equation
systems.
"""

class OperadError(Exception):
    """
    Common base of all errors raised by this package.
    """
    pass

class PresentationSyntaxError(OperadError):
    """
    Raised when a presentation text does not follow the grammar.

    The position of the offending token is kept in `line` and `column`
    (both starting at 1).
    """

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")

class ArityMismatchError(OperadError):
    """
    Raised when a vertex has a number of children different from the arity
    of its generator, or a generator is redeclared with another arity.
    """
    pass

class InvalidLabelingError(OperadError):
    """
    Raised when the leaf labels of a shuffle monomial are not exactly
    {1, ..., n}, or labelled and placeholder leaves are mixed.
    """
    pass

class DuplicateGeneratorError(OperadError):
    """
    Raised when two generators of a presentation share a name.
    """
    pass

class UnknownGeneratorError(OperadError):
    """
    Raised when a relation uses a generator that was never declared.
    """
    pass

class KindMismatchError(OperadError):
    """
    Raised when non-symmetric and shuffle objects are mixed, or an
    operation is called on the wrong kind of operad.
    """
    pass

class NotRegularError(OperadError):
    """
    Raised when a builder needs a shuffle or symmetric regular relation set
    but the presentation has an incomplete skeleton class.

    `skeleton` is the incomplete class and `missing` lists the monomials
    that would complete it.
    """

    def __init__(self, message: str, skeleton=None, missing=None):
        self.skeleton = skeleton
        self.missing = [] if missing is None else list(missing)
        super().__init__(message)

class SeriesMismatchError(OperadError):
    """
    Raised when two series with different flavor or truncation order are
    combined.
    """
    pass

class SeriesDomainError(OperadError):
    """
    Raised when a series does not satisfy the precondition of an operation,
    e.g. a nonzero constant term.
    """
    pass

class NotInvertibleError(SeriesDomainError):
    """
    Raised when the linear coefficient of a series is not invertible, so
    that no compositional inverse exists.
    """
    pass

class EnumerationLimitError(OperadError):
    """
    Raised when an enumeration exceeds its count ceiling or cannot
    terminate.
    """
    pass

class IllFoundedSystemError(OperadError):
    """
    Raised when the coefficients of a system of equations cannot be
    computed arity by arity, because variables depend on each other in the
    same arity.
    """
    pass

class InsufficientOrderError(OperadError):
    """
    Raised when a series is truncated too early to certify a guess.
    """
    pass

class UnknownPresentationError(OperadError):
    """
    Raised when a built-in presentation name is not known.
    """
    pass

class EmitFormatError(OperadError):
    """
    Raised when a system cannot be written in the requested format.
    """
    pass
