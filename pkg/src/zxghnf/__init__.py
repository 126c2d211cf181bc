"""Canonical bases (generalized Hermite normal forms) of Z[x] column modules."""

from .bounds import (
    BoundReport,
    bound_report,
    ghnf_bounds,
    loop_bound,
    scalar_height_bounds,
    transform_degree_bound,
    width_bound,
)
from .ghnf import (
    CoeffLayout,
    GhnfRun,
    Strategy,
    coeff_matrix,
    divide,
    expand,
    ghnf1,
    ghnfn,
    phnf,
    prolong,
    syzygy_basis_zx,
)
from .inthnf import (
    HnfResult,
    IntMatrix,
    det_int,
    from_columns,
    hnf_with_transform,
    int_matrix,
    is_hnf_int,
    mat_mul,
)
from .matio import (
    ParseError,
    emit_matrix,
    load_matrix,
    parse_matrix,
    save_matrix,
)
from .oracle import buchberger, interreduce
from .poly import (
    IntPoly,
    PolyMatrix,
    PolyVec,
    Term,
    content_primpart,
    degree,
    gcd_zx,
    height,
    leading,
    matrix,
    primpart,
    reduce_by_basis,
    reduce_term_by,
    svector,
)
from .verify import is_ghnf, is_groebner, membership, structure_check_zx

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CoeffLayout",
    "GhnfRun",
    "HnfResult",
    "IntMatrix",
    "IntPoly",
    "ParseError",
    "PolyMatrix",
    "PolyVec",
    "Strategy",
    "Term",
    "bound_report",
    "buchberger",
    "coeff_matrix",
    "content_primpart",
    "degree",
    "det_int",
    "divide",
    "emit_matrix",
    "expand",
    "from_columns",
    "gcd_zx",
    "ghnf1",
    "ghnf_bounds",
    "ghnfn",
    "height",
    "hnf_with_transform",
    "int_matrix",
    "interreduce",
    "is_ghnf",
    "is_groebner",
    "is_hnf_int",
    "leading",
    "load_matrix",
    "loop_bound",
    "mat_mul",
    "matrix",
    "membership",
    "parse_matrix",
    "phnf",
    "primpart",
    "prolong",
    "reduce_by_basis",
    "reduce_term_by",
    "save_matrix",
    "scalar_height_bounds",
    "structure_check_zx",
    "svector",
    "syzygy_basis_zx",
    "transform_degree_bound",
    "width_bound",
    "__version__",
]
