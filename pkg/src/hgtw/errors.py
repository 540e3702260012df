"""Exception types shared across the package."""


class HgtwError(Exception):
    """Base class for all package errors."""


class LoopEdgeError(HgtwError):
    pass


class NestedEdgeError(HgtwError):
    """Duplicate edge, or one edge contained in another."""


class UncoveredVertexError(HgtwError):
    pass


class OutOfRangeVertexError(HgtwError):
    pass


class OverlappingSetsError(HgtwError):
    pass


class BadSubsetError(HgtwError):
    pass


class TooLargeError(HgtwError):
    pass


class NotTwoRegularError(HgtwError):
    pass


class NotLinearError(HgtwError):
    pass


class NotMinimalError(HgtwError):
    pass


class IsolatedVertexError(HgtwError):
    pass


class BadParamsError(HgtwError):
    pass


class InfeasibleError(HgtwError):
    pass


class MinDegreeTooLowError(HgtwError):
    pass


class InvalidInputError(HgtwError):
    pass


class InapplicableError(HgtwError):
    pass


class NotLargeError(HgtwError):
    pass


class DegreeTooHighError(HgtwError):
    pass


class PreconditionFailedError(HgtwError):
    pass


class ParseError(HgtwError):
    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
