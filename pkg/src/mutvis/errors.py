"""Exception types shared across the package."""


class MutvisError(Exception):
    """Base class for every package-specific error."""


class InvalidEdge(MutvisError):
    """Edge endpoint out of range or a self-loop."""


class DuplicateEdge(MutvisError):
    """The same unordered edge was given twice."""


class DisconnectedGraph(MutvisError):
    """Some vertex pair has no connecting path."""


class GraphTooLarge(MutvisError):
    """Graph exceeds the configured exhaustive-enumeration ceiling."""


class UnsupportedVariant(MutvisError):
    """Operation is undefined for the requested visibility variant."""


class UnsupportedFamily(MutvisError):
    """Operation is undefined for the requested graph family."""


class InvalidParams(MutvisError):
    """Construction parameters outside the family's valid range."""


class OutOfRangeParam(MutvisError):
    """Closed-form parameter outside the formula's range of validity."""


class DomainError(MutvisError):
    """Numeric argument outside the function's domain."""


class NotGeodetic(MutvisError):
    """Operation requires a geodetic graph."""


class PreconditionViolated(MutvisError):
    """A caller-checked precondition does not actually hold."""


class NonConvexCoverMember(MutvisError):
    """A pruning cover contained a set that is not convex."""


class SearchSpaceTooLarge(MutvisError):
    """Pruned search still has too many candidates to enumerate."""


class TooManyMaximalSets(MutvisError):
    """Alternating-sum reconstruction would need too many terms."""


class LemmaAssistedDisabled(MutvisError):
    """Pruned search requested but not enabled in the limits."""


class EdgeListParseError(MutvisError):
    """Malformed edge-list document."""
