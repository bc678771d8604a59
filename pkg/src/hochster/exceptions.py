"""Exception hierarchy shared by all modules."""


class HochsterError(Exception):
    """Base class for errors raised by this package."""


class InvalidVertex(HochsterError, ValueError):
    pass


class NotASimplex(HochsterError, ValueError):
    pass


class InvalidConnectedSum(HochsterError, ValueError):
    pass


class NotASphere(HochsterError, ValueError):
    pass


class NotFound(HochsterError, LookupError):
    pass


class NoSolution(HochsterError, ArithmeticError):
    pass


class TorsionUnsupported(HochsterError, ValueError):
    pass


class NoFundamentalClass(HochsterError, ValueError):
    pass


class NotSubcomplex(HochsterError, ValueError):
    pass


class NotPoincareCandidate(HochsterError, ValueError):
    pass


class NoTopDegree(HochsterError, ValueError):
    pass


class DimensionMismatch(HochsterError, ValueError):
    pass


class NotHomogeneous(HochsterError, ValueError):
    pass


class InternalInconsistency(HochsterError, AssertionError):
    """Two independent computations disagreed; always a bug."""


class ParseError(HochsterError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoMatch(NotFound):
    pass
