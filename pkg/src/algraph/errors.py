"""Exception hierarchy shared by every module."""


class AlgraphError(Exception):
    """Base class for all package errors."""


class MalformedInputError(AlgraphError, ValueError):
    """Input data is structurally invalid (ragged rows, bad labels, ...)."""


class AmbientMismatchError(MalformedInputError):
    """Vectors or subspaces of different ambient dimensions were combined."""


class InvalidBasisError(AlgraphError, ValueError):
    """A change-of-basis matrix is singular or has the wrong shape."""


class PreconditionError(AlgraphError):
    """An operation's precondition does not hold for the given input."""


class CyclicGraphError(PreconditionError):
    """An acyclic digraph was required; carries a witness oriented cycle."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"digraph has an oriented cycle: {' -> '.join(map(str, self.cycle))}")


class SizeLimitError(PreconditionError):
    """Input exceeds the size limit of an exhaustive-search operation."""


class UncoveredEdgeError(PreconditionError):
    """An edge required to lie in a cell / triangle is not covered."""

    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"edge {edge} lies in no valid cell configuration")


class RoleConditionError(PreconditionError):
    """A coloured arrow claims a cell role that no cell supports."""

    def __init__(self, arrow, role):
        self.arrow = arrow
        self.role = role
        super().__init__(f"arrow {arrow} has no cell supporting its {role} role")


class ConstraintError(AlgraphError, ValueError):
    """Fixture parameters violate a declared constraint predicate."""

    def __init__(self, fixture, constraint):
        self.fixture = fixture
        self.constraint = constraint
        super().__init__(f"fixture {fixture!r}: constraint violated: {constraint}")


class UnknownFixtureError(AlgraphError, KeyError):
    """No fixture with the requested name exists in the catalog."""


class ParseError(MalformedInputError):
    """A JSON document does not conform to the expected schema."""
