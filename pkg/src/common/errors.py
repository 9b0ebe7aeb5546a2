"""
    Error hierarchy shared by the library and the command line.
    Each category carries the exit code used by run_gac.py.
"""


class GacError(Exception):
    """Base class for every error raised on purpose by the framework."""
    exit_code = 1


class UsageError(GacError):
    """Bad invocation or unparsable input."""
    exit_code = 2


class SemanticError(GacError):
    """Input parses but violates a mathematical precondition."""
    exit_code = 3


class ResourceLimitError(GacError):
    """Request exceeds the desk-scale limits of exhaustive enumeration."""
    exit_code = 4


# Usage / parsing
class ParseError(UsageError):
    """Graph, building set or argument could not be parsed."""


class UnknownFamily(UsageError):
    """Family name is not one of the supported series."""
    def __init__(self, name, known):
        super().__init__(f"unknown family '{name}', expected one of {', '.join(known)}")
        self.name = name


class UnknownSuite(UsageError):
    """Verification suite name is not known."""
    def __init__(self, name, known):
        super().__init__(f"unknown suite '{name}', expected one of {', '.join(known)}")
        self.name = name


class UnknownIdentity(UsageError):
    """Generating-function identity name is not known."""
    def __init__(self, name, known):
        super().__init__(f"unknown identity '{name}', expected one of {', '.join(known)}")
        self.name = name


# Semantic
class EmptyElement(SemanticError):
    """A building-set element is the empty set."""
    def __init__(self):
        super().__init__("building set contains the empty set")


class ElementOutsideGround(SemanticError):
    """A building-set element has labels outside the ground set."""
    def __init__(self, element, ground):
        super().__init__(f"element {element} is not contained in ground set {ground}")
        self.element = element
        self.ground = ground


class MissingSingleton(SemanticError):
    """Singleton {i} is not an element."""
    def __init__(self, node):
        super().__init__(f"singleton {{{node}}} is missing")
        self.node = node


class UnionViolation(SemanticError):
    """Two intersecting elements whose union is absent."""
    def __init__(self, first, second):
        super().__init__(f"{first} and {second} intersect but their union is missing")
        self.first = first
        self.second = second


class SNotInB(SemanticError):
    """Set is required to be an element of the building set."""
    def __init__(self, node_set):
        super().__init__(f"{node_set} is not an element of the building set")
        self.node_set = node_set


class EmptyGround(SemanticError):
    """Operation would leave an empty ground set."""
    def __init__(self, node_set):
        super().__init__(f"removing {node_set} leaves an empty ground set")
        self.node_set = node_set


class NotConnected(SemanticError):
    """Building set or graph is required to be connected."""


class PartCountMismatch(SemanticError):
    """Substitution needs one part per ground node."""
    def __init__(self, expected, got):
        super().__init__(f"substitution expects {expected} parts, got {got}")
        self.expected = expected
        self.got = got


class SNotConnected(SemanticError):
    """Node set does not induce a connected subgraph."""
    def __init__(self, node_set):
        super().__init__(f"{node_set} does not induce a connected subgraph")
        self.node_set = node_set


class VNotClique(SemanticError):
    """Node set does not induce a complete subgraph."""
    def __init__(self, node_set):
        super().__init__(f"{node_set} does not induce a complete subgraph")
        self.node_set = node_set


class ElementNotFacet(SemanticError):
    """Candidate is the full ground set or not an element."""
    def __init__(self, node_set):
        super().__init__(f"{node_set} does not correspond to a facet")
        self.node_set = node_set


class NotSymmetric(SemanticError):
    """h-vector fails Dehn-Sommerville symmetry."""
    def __init__(self, h):
        super().__init__(f"h-vector {list(h)} is not symmetric")
        self.h = h


class NonIntegerResult(SemanticError):
    """A formula that must produce integers did not."""


class DegreeMismatch(SemanticError):
    """Vectors of different kinds or degrees were compared."""


class OutOfRange(SemanticError):
    """Index outside the domain of a combinatorial number."""


class MTooSmall(SemanticError):
    """Graph generator called with too few nodes."""
    def __init__(self, kind, m, minimum):
        super().__init__(f"{kind} graph needs at least {minimum} nodes, got {m}")
        self.m = m


class GammaUndefined(SemanticError):
    """A gamma-vector was requested for a non-symmetric h-vector."""


# Resource limits
class GroundTooLarge(ResourceLimitError):
    """Ground set exceeds the supported size."""
    def __init__(self, size, limit):
        super().__init__(f"ground set of size {size} exceeds the limit {limit}")
        self.size = size
        self.limit = limit


class MTooLarge(ResourceLimitError):
    """Enumeration requested for too many nodes."""
    def __init__(self, kind, m, limit):
        super().__init__(f"{kind} enumeration supports m <= {limit}, got {m}")
        self.m = m
        self.limit = limit


class TooLargeForHamiltonicity(ResourceLimitError):
    """Hamiltonicity test requested for too many nodes."""
    def __init__(self, m, limit):
        super().__init__(f"hamiltonicity test supports m <= {limit}, got {m}")
        self.m = m


class OrderTooLarge(ResourceLimitError):
    """Truncation order of a series exceeds the limit."""
    def __init__(self, order, limit):
        super().__init__(f"series order {order} exceeds the limit {limit}")
        self.order = order
