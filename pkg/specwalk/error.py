# encoding: utf-8


class SpecwalkError(Exception):
    """
    Base class of the exceptions raised by the library.
    """


class GraphError(SpecwalkError):
    pass


class ParseError(GraphError):
    """
    Exception raised when a graph text is malformed.
    ``offset`` is the zero-based byte offset (graph6) and ``line`` the
    one-based line number (edgelist) of the first offending input.
    """

    @property
    def offset(self):
        return self.__offset

    @property
    def line(self):
        return self.__line

    def __init__(self, message, offset=None, line=None):
        self.__offset = offset
        self.__line = line

        location = []
        if offset is not None:
            location.append("offset={:d}".format(offset))
        if line is not None:
            location.append("line={:d}".format(line))

        if location:
            message = "{} ({})".format(message, ", ".join(location))

        super(ParseError, self).__init__(message)


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class SameVertexError(GraphError):
    pass


class InvalidLengthError(GraphError):
    pass


class TooLargeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class AlgebraError(SpecwalkError):
    pass


class ZeroPolynomialError(AlgebraError):
    pass


class ZeroDenominatorError(AlgebraError):
    pass


class DimensionMismatchError(AlgebraError):
    pass


class NumericError(SpecwalkError):
    pass


class ConvergenceFailure(NumericError):
    pass


class MismatchedSupportGridsError(NumericError):
    pass


class InvariantViolation(SpecwalkError):
    """
    Exception raised when a numeric result, a certificate or a runtime
    cross-check contradicts the exact decision procedures.
    """
