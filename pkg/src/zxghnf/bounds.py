"""Worst-case size estimates for the normal-form iteration."""

import math
from dataclasses import dataclass


def _log2p(x) -> float:
    """log2 clamped so degenerate inputs (d = 0) stay finite."""
    return math.log2(max(x, 1))


def ghnf_bounds(n: int, d: int, h: float, r_i: int):
    """Degree and height bounds for the pivot-row entries of block r_i.

    The bounds apply to the polynomial sitting in row r_i of each column
    whose leading row is r_i, for full-row-rank inputs with at most n
    rows, degree at most d and coefficient height at most h (heights are
    measured in bits, log base 2).
    """
    if not 1 <= r_i <= n:
        raise ValueError("row index out of range")
    k = n - r_i + 1
    deg = k * d
    # degree bound honors d = 0; the height formula clamps d to 1 so
    # constant inputs still get a positive height allowance
    de = max(d, 1)
    height = 6.0 * k**3 * de * de * (h + 1 + _log2p(k * k * de))
    return deg, height


def transform_degree_bound(n: int, d: int, h: float) -> float:
    """Degree bound for entries of the transformation to the normal form."""
    return 73.0 * n**8 * d**5 * (h + 1 + _log2p(n * n * d))


def loop_bound(n: int, d: int, h: float) -> float:
    """Upper bound on the number of iteration loops until stabilization."""
    if n == 1:
        return 73.0 * d**5 * (h + _log2p(d) + 1) + d
    return transform_degree_bound(n, d, h) + n * d


def width_bound(n: int, d: int) -> int:
    """Maximum number of columns any prolonged matrix can reach."""
    if n == 1:
        return 2 * d + 1
    return n * (n + 1) * d + n


def scalar_height_bounds(d: int, h: float):
    """Height bounds for a gcd and for the normal form of a Z[x] ideal."""
    gcd_h = 0.5 * math.log2(d + 1) + d + h
    ghnf_h = (2 * d + 1) * (h + d + math.log2(d + 1))
    return gcd_h, ghnf_h


@dataclass(frozen=True)
class BoundReport:
    """All size estimates for one input matrix, heights in bits."""

    n: int
    m: int
    d: int
    h: float
    degree_bounds: tuple
    height_bounds: tuple
    transform_degree: float
    loop_limit: float
    width_limit: int
    gcd_height: float
    scalar_height: float


def bound_report(F) -> BoundReport:
    """Evaluate every bound for the matrix F."""
    dd = F.deg()
    if dd < 0:
        raise ValueError("zero module")
    d = int(dd)
    h = F.height()
    n, m = F.n, F.width()
    per_row = [ghnf_bounds(n, d, h, r) for r in range(1, n + 1)]
    gcd_h, ghnf_h = scalar_height_bounds(d, h)
    return BoundReport(
        n=n,
        m=m,
        d=d,
        h=h,
        degree_bounds=tuple(b[0] for b in per_row),
        height_bounds=tuple(b[1] for b in per_row),
        transform_degree=transform_degree_bound(n, max(d, 1), h),
        loop_limit=loop_bound(n, max(d, 1), h),
        width_limit=width_bound(n, d),
        gcd_height=gcd_h,
        scalar_height=ghnf_h,
    )
