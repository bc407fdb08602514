"""Exception hierarchy shared by every module."""


class SignedGraphError(ValueError):
    """Base class for all errors raised by sgcrit."""


class LoopEdge(SignedGraphError):
    pass


class DuplicateEdge(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class EmptyGraph(SignedGraphError):
    pass


class FormatError(SignedGraphError):
    """Malformed sg/sgm text."""


class NotBipartite(SignedGraphError):
    pass


class BudgetExceeded(SignedGraphError):
    """A bounded search hit its node limit before reaching a verdict.

    Never interpret this as a negative answer.
    """


class BadParameter(SignedGraphError):
    pass


class SimplicityViolated(SignedGraphError):
    pass


class CreatesNegativeDigon(SignedGraphError):
    """An identification would leave a parallel pair of opposite signs."""


class PreconditionFailed(SignedGraphError):
    pass


class InternalAssertion(RuntimeError):
    """A guarantee from the theory did not hold; indicates a solver bug."""


class CapExceeded(SignedGraphError):
    pass
