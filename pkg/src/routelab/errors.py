"""Exception types shared across the package."""


class RouteLabError(Exception):
    """Base class for all errors raised by this package."""


class InvariantViolation(RouteLabError):
    """A structural requirement on a graph or tree does not hold."""


class ParseError(RouteLabError):
    """Malformed graph text. Carries the offending 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class UnknownEdge(RouteLabError):
    """An edge was addressed that the graph does not contain."""


class BridgeRemoval(RouteLabError):
    """Removing this edge would disconnect the graph."""


class NonPositiveScale(RouteLabError):
    """Weight scaling requires a strictly positive factor."""


class ForeignTree(RouteLabError):
    """The tree was built over a different graph than the one given."""


class NonPositiveWeight(RouteLabError):
    """The algorithm requires strictly positive edge weights."""


class TooLarge(RouteLabError):
    """The instance exceeds the exhaustive-computation bound."""


class NotUnicyclic(RouteLabError):
    """The check needs a connected graph with exactly one cycle."""


class NoEligibleEdge(RouteLabError):
    """No edge satisfies the perturbation's order constraints."""


class InfeasibleSpec(RouteLabError):
    """The corpus description cannot produce a valid graph."""


class UnknownCase(RouteLabError):
    """The requested target/axiom pair is not part of the grid."""
