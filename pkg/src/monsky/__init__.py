"""Exact tools for triangulated quadrilaterals with collinearity conditions:
area-polynomial degree bounds, closed-form polynomials for the diagonal
family, and rational sample drawings that certify vanishing.
"""

from .degree import (
    DegreeResult,
    Strategy,
    TraceNode,
    degree_lower_bound,
    is_linear,
    replay,
    trace_from_jsonable,
    trace_to_jsonable,
)
from .draw import (
    AreaVector,
    Drawing,
    Point,
    VerifyReport,
    areas,
    drawing_from_jsonable,
    drawing_to_jsonable,
    polynomial_assignment,
    render_svg,
    sample_drawing,
    verify_vanishing,
)
from .errors import (
    BadCondition,
    BadParameters,
    BudgetExceeded,
    ConditionMismatch,
    CountMismatch,
    DegenerateAfterRetries,
    IndexOutOfRange,
    MissingVariable,
    MonskyError,
    NotADisk,
    NotAMosquito,
    NotAQuadrilateral,
    NotASubdivision,
    NotDivisible,
    NotGoodEdge,
    NotKillable,
    NotNonSeparating,
    OrientationError,
    PreconditionFailed,
    VariableUniverseMismatch,
    ZeroPolynomial,
)
from .moves import (
    KillOutcome,
    contract,
    delete_subdivision,
    eliminate_mosquito,
    flip_within_condition,
    kill,
    subdivision_regions,
)
from .poly import (
    MultiPoly,
    diagonal_raw,
    diagonal_variables,
    diagonal_with_factor,
    divide_by_linear,
    L,
    L_product,
    monsky_diagonal,
    poly_from_jsonable,
    poly_from_text,
    poly_to_jsonable,
    poly_to_text,
    sigma,
    sigma_bar,
)
from .triangulation import (
    DiskComplex,
    Triangulation,
    canonical_key,
    from_json,
    from_jsonable,
    good_edges,
    is_non_separating,
    isomorphism,
    killable_triangles,
    linearity_type,
    make_diagonal,
    make_exploded,
    mosquitos,
    subdivisions,
    to_json,
    to_jsonable,
    validate,
    with_labels,
)

__version__ = "0.1.0"

__all__ = [
    "AreaVector",
    "BadCondition",
    "BadParameters",
    "BudgetExceeded",
    "ConditionMismatch",
    "CountMismatch",
    "DegenerateAfterRetries",
    "DegreeResult",
    "DiskComplex",
    "Drawing",
    "IndexOutOfRange",
    "KillOutcome",
    "L",
    "L_product",
    "MissingVariable",
    "MonskyError",
    "MultiPoly",
    "NotADisk",
    "NotAMosquito",
    "NotAQuadrilateral",
    "NotASubdivision",
    "NotDivisible",
    "NotGoodEdge",
    "NotKillable",
    "NotNonSeparating",
    "OrientationError",
    "Point",
    "PreconditionFailed",
    "Strategy",
    "TraceNode",
    "Triangulation",
    "VariableUniverseMismatch",
    "VerifyReport",
    "ZeroPolynomial",
    "__version__",
    "areas",
    "canonical_key",
    "contract",
    "degree_lower_bound",
    "delete_subdivision",
    "diagonal_raw",
    "diagonal_variables",
    "diagonal_with_factor",
    "divide_by_linear",
    "drawing_from_jsonable",
    "drawing_to_jsonable",
    "eliminate_mosquito",
    "flip_within_condition",
    "from_json",
    "from_jsonable",
    "good_edges",
    "is_linear",
    "is_non_separating",
    "isomorphism",
    "kill",
    "killable_triangles",
    "linearity_type",
    "make_diagonal",
    "make_exploded",
    "monsky_diagonal",
    "mosquitos",
    "poly_from_jsonable",
    "poly_from_text",
    "poly_to_jsonable",
    "poly_to_text",
    "polynomial_assignment",
    "render_svg",
    "replay",
    "sample_drawing",
    "sigma",
    "sigma_bar",
    "subdivision_regions",
    "subdivisions",
    "to_json",
    "to_jsonable",
    "trace_from_jsonable",
    "trace_to_jsonable",
    "validate",
    "verify_vanishing",
    "with_labels",
]
