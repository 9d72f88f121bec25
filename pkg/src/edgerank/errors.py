"""Exception hierarchy shared by every module."""


class EdgeRankError(Exception):
    """Base class for all errors raised by edgerank."""


class GraphError(EdgeRankError):
    """A graph is malformed, a label is unknown, or a transformation
    precondition does not hold."""


class ClassViolation(EdgeRankError):
    """A measure is not defined on the given graph."""

    def __init__(self, measure, predicate, detail=""):
        self.measure = measure
        self.predicate = predicate
        msg = f"{measure} is undefined on this graph: requires {predicate}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ConvergenceError(EdgeRankError):
    """An iterative solver hit its iteration cap before reaching tolerance."""

    def __init__(self, solver, iterations, residual):
        self.solver = solver
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"{solver} did not converge in {iterations} iterations "
            f"(last sup-norm change {residual:.3e})"
        )
