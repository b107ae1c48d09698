"""Exception types shared across the package."""


class MonskyError(Exception):
    """Base class for every error raised by this library."""


class NotADisk(MonskyError):
    """The input complex is not a triangulated disk.

    Raised on manifold failures (an edge in three triangles), bad links,
    a boundary that is not a single cycle through the corners, duplicate
    triangles, or a disconnected dual graph.
    """


class OrientationError(MonskyError):
    """No consistent counterclockwise orientation of the triangles exists."""


class CountMismatch(MonskyError):
    """Triangle count differs from 2k + n - 2 (k interior vertices, n corners)."""


class BadCondition(MonskyError):
    """The collinearity set is not the vertex set of a contiguous group of
    triangles, or it contains more than two corners."""


class NotNonSeparating(MonskyError):
    """Some component of the off-condition subgraph contains no corner."""


class NotAQuadrilateral(MonskyError):
    """The operation is only defined for four-corner triangulations."""


class BadParameters(MonskyError):
    """Arguments are outside the documented range."""


class NotGoodEdge(MonskyError):
    """The edge is not contractible with the required relation to the condition."""


class NotAMosquito(MonskyError):
    """The vertex is not a condition vertex with all neighbors in the condition."""


class NotASubdivision(MonskyError):
    """The triple does not bound a nonempty re-triangulated region."""


class ConditionMismatch(MonskyError):
    """The two candidate conditions for a deleted region disagree."""


class NotKillable(MonskyError):
    """The triangle cannot be absorbed into the condition."""


class PreconditionFailed(MonskyError):
    """A documented operation precondition does not hold."""


class BudgetExceeded(MonskyError):
    """Internal signal: the node or time budget ran out mid-search."""


class ZeroPolynomial(MonskyError):
    """The zero polynomial has no content, degree, or primitive part."""


class MissingVariable(MonskyError):
    """An evaluation assignment does not cover the variable universe."""


class VariableUniverseMismatch(MonskyError):
    """Operands were built over different variable universes."""


class IndexOutOfRange(MonskyError):
    """A linear-form index lies outside 0..n+1."""


class NotDivisible(MonskyError):
    """Exact polynomial division left a remainder."""


class DegenerateAfterRetries(MonskyError):
    """Every sampling attempt produced a degenerate triangle."""
