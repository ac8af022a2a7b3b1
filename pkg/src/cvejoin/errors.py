"""Exception hierarchy shared by every module."""


class CveError(Exception):
    """Base class for all library errors."""


class GraphError(CveError, ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EndpointOutOfRangeError(GraphError):
    pass


class InvalidSizeError(GraphError):
    pass


class EmptyListError(GraphError):
    pass


class NoEdgesError(GraphError):
    pass


class NotRegularError(GraphError):
    pass


class VertexOutOfRangeError(CveError, IndexError):
    pass


class DisconnectedError(CveError, ValueError):
    def __init__(self, message, u=None, v=None):
        super().__init__(message)
        self.u = u
        self.v = v


class ConstructionError(CveError, ValueError):
    pass


class EmptyEdgeSetG1Error(ConstructionError):
    pass


class EmptyG2Error(ConstructionError):
    pass


class EmptyG3Error(ConstructionError):
    pass


class ClosedFormUnavailableError(CveError):
    pass


class MissingRegularityError(ClosedFormUnavailableError):
    pass


class PreconditionViolatedError(CveError, ValueError):
    pass


class NoConvergenceError(CveError, ArithmeticError):
    def __init__(self, dim, residual):
        super().__init__(f"eigensolver did not converge (dim={dim}, residual={residual:.3e})")
        self.dim = dim
        self.residual = residual


class TooSmallError(CveError, ValueError):
    pass


class H1NotEligibleError(PreconditionViolatedError):
    pass


class H2NotEligibleError(PreconditionViolatedError):
    pass


class H2LeastEigTooSmallError(H2NotEligibleError):
    pass


class MixedOrdersError(CveError, ValueError):
    pass


class ParseError(CveError, ValueError):
    def __init__(self, message, line=None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.line = line
        self.path = path
