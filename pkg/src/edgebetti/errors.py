"""Exception types shared across the package."""


class EdgeBettiError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpec(EdgeBettiError):
    """A family specification violates its invariants."""


class PathLengthOne(InvalidSpec):
    """Multi-path spec contains a path of length one (apex-apex edge)."""


class Disconnected(EdgeBettiError):
    """Operation requires a connected graph."""


class UnknownVertex(EdgeBettiError):
    """A vertex name does not belong to the graph."""


class UnsupportedFamily(EdgeBettiError):
    """Operation is only defined for the recognized graph families."""


class OddCycleConditionViolated(EdgeBettiError):
    """Graph fails the odd-cycle condition, so the edge ring is not normal."""


class NotDivisible(EdgeBettiError):
    """Componentwise subtraction of multidegrees would go negative."""


class DimensionMismatch(EdgeBettiError):
    """Vector is indexed by vertices outside the system's graph."""


class BipartiteGraph(EdgeBettiError):
    """Operation only applies to non-bipartite graphs."""


class NotTypeThree(EdgeBettiError):
    """Graph is not a compact graph with three big vertices."""


class OddTotalDegree(EdgeBettiError):
    """A Betti degree has odd total degree, signalling a corrupted table."""


class UnitColon(EdgeBettiError):
    """A colon ideal contains a unit (the divisor divides a prefix member)."""


class IrregularStep(EdgeBettiError):
    """Mapping-cone bound requested although some quotient is not regular."""


class RegionTooLarge(EdgeBettiError):
    """Degree scan would exceed the configured cap."""


class ParseError(EdgeBettiError):
    """A graph-spec DSL string could not be parsed."""


class InternalInconsistency(EdgeBettiError):
    """Two routes that must agree disagreed; this indicates a bug."""
