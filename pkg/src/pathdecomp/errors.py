"""Exception hierarchy shared by every module."""


class PathDecompError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdge(PathDecompError, ValueError):
    pass


class MalformedInput(PathDecompError, ValueError):
    pass


class NotATriangle(PathDecompError, ValueError):
    pass


class PreconditionViolated(PathDecompError, ValueError):
    pass


class TooManyBranchVertices(PreconditionViolated):
    pass


class InvalidDecomposition(PathDecompError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid decomposition")


class BudgetTooSmall(PathDecompError):
    pass


class OracleBoundMiss(PathDecompError):
    pass


class MissingEndpoint(PathDecompError):
    pass


class BoundViolated(PathDecompError):
    def __init__(self, message, ledger=None):
        self.ledger = ledger
        super().__init__(message)


class InfeasibleSpec(PathDecompError, ValueError):
    pass


class HypothesisNotSatisfied(PathDecompError):
    """An input falls outside the hypotheses of the decomposition theorems."""


class NotTriangleFree(HypothesisNotSatisfied):
    pass


class NotEulerian(HypothesisNotSatisfied):
    pass


class TooSmall(HypothesisNotSatisfied):
    pass


class TriangleComponent(HypothesisNotSatisfied):
    pass


class RemovalSetNotFound(HypothesisNotSatisfied):
    pass


class TrianglesTooClose(HypothesisNotSatisfied):
    def __init__(self, first, second, distance):
        self.first = first
        self.second = second
        self.distance = distance
        super().__init__(f"triangles {first} and {second} are at distance {distance} < 3")
