"""
Error hierarchy for sharptree.

Every error carries the process exit code the CLI reports for it:
0 ok, 1 input error, 2 property violation, 3 resource limit.
"""


class SharpTreeError(Exception):
    """Base class for all sharptree errors."""
    exit_code: int = 1


class ParseError(SharpTreeError):
    """Malformed edge-list line or rational literal."""


class InvalidGraph(SharpTreeError):
    """Self-loop, duplicate edge or repeated vertex label."""


class NotATree(InvalidGraph):
    """Edge set has a cycle or is disconnected."""


class ZeroWeight(SharpTreeError):
    """An edge was given weight zero."""


class UnknownVertex(SharpTreeError):
    """A vertex label does not belong to the graph."""


class NotApplicable(SharpTreeError):
    """An operation's precondition does not hold for this input."""


class NotAStar(NotApplicable):
    pass


class NotOddPath(NotApplicable):
    pass


class NotInClassT(NotApplicable):
    """Tree has a non-pendant vertex without a pendant neighbour."""


class NonPositiveWeights(NotApplicable):
    pass


class DimensionMismatch(NotApplicable):
    pass


class InvariantViolation(SharpTreeError):
    """An internal cross-check failed. Always a defect or a counterexample."""
    exit_code = 2


class SingularCore(InvariantViolation):
    """G·F of a full-rank factorization was not invertible."""


class NoPositiveEigenvalue(InvariantViolation):
    pass


class ToleranceTooTight(InvariantViolation):
    """Floating residuals exceed the requested tolerance."""


class ResourceLimit(SharpTreeError):
    """An enumeration or search exceeded its configured cap."""
    exit_code = 3
