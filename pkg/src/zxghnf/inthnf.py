"""Column Hermite normal form of integer matrices with transform tracking."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entry shape mismatch")

    def col(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def column_lists(self):
        return [self.col(j) for j in range(self.cols)]


def int_matrix(entries) -> IntMatrix:
    """Build an IntMatrix from a list of rows."""
    entries = tuple(tuple(int(x) for x in r) for r in entries)
    rows = len(entries)
    cols = len(entries[0]) if entries else 0
    return IntMatrix(rows, cols, entries)


def from_columns(n: int, cols) -> IntMatrix:
    """Build an IntMatrix from column lists (n rows)."""
    return IntMatrix(
        n, len(cols), tuple(tuple(c[i] for c in cols) for i in range(n))
    )


@dataclass(frozen=True)
class HnfResult:
    """HNF plus the unimodular transform that produced it.

    H has the zero columns stripped; A*U = [0 | H] with the zero columns
    first; U1 holds the first (cols - width(H)) columns of U, a basis of
    the integer syzygies of A; pivot_rows are the 0-based pivot rows of
    H's columns, strictly increasing.
    """

    H: IntMatrix
    U: IntMatrix
    U1: IntMatrix
    pivot_rows: tuple


def _eliminate_row(r, work, active, track):
    """Fold row r of the active columns down to a single nonzero entry.

    Returns the index of the surviving column or None when the row is
    already zero. track carries the transform columns, updated in step.
    """
    nz = [j for j in active if work[j][r]]
    if not nz:
        return None
    while len(nz) > 1:
        piv = min(nz, key=lambda j: abs(work[j][r]))
        pv = work[piv][r]
        nxt = []
        for j in nz:
            if j == piv:
                continue
            q = work[j][r] // pv
            if q:
                wj, wp = work[j], work[piv]
                for i in range(len(wj)):
                    wj[i] -= q * wp[i]
                if track is not None:
                    tj, tp = track[j], track[piv]
                    for i in range(len(tj)):
                        tj[i] -= q * tp[i]
            if work[j][r]:
                nxt.append(j)
        nxt.append(piv)
        nz = nxt
    win = nz[0]
    if work[win][r] < 0:
        work[win] = [-x for x in work[win]]
        if track is not None:
            track[win] = [-x for x in track[win]]
    return win


def _hnf_columns(n: int, cols, transform: bool):
    """Core column HNF on raw column lists.

    Returns (zero_idx, pivot_idx, pivot_rows, work, track): the ordered
    zero/pivot column indices into work, the 0-based pivot rows ascending,
    and the transformed columns.
    """
    m = len(cols)
    work = [list(c) for c in cols]
    track = None
    if transform:
        track = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    active = list(range(m))
    pivots = []  # (row, column index), discovered bottom-up
    for r in range(n - 1, -1, -1):
        win = _eliminate_row(r, work, active, track)
        if win is None:
            continue
        active.remove(win)
        pivots.append((r, win))
    pivots.reverse()
    # right-reduce: entries right of each pivot in its row into [0, pivot).
    # Descending pivot order: subtracting a pivot column only touches rows
    # at or above its pivot, so earlier rows are finalized last.
    order = [j for _, j in pivots]
    for p in range(len(pivots) - 1, -1, -1):
        r, j = pivots[p]
        pv = work[j][r]
        for k in order[p + 1 :]:
            q = work[k][r] // pv
            if q:
                wk, wj = work[k], work[j]
                for i in range(len(wk)):
                    wk[i] -= q * wj[i]
                if track is not None:
                    tk, tj = track[k], track[j]
                    for i in range(len(tk)):
                        tk[i] -= q * tj[i]
    zero_idx = [j for j in active]
    pivot_rows = tuple(r for r, _ in pivots)
    return zero_idx, order, pivot_rows, work, track


def hnf_with_transform(A: IntMatrix, transform: bool = True) -> HnfResult:
    """Canonical column HNF of A with unimodular transform.

    With transform=False the U and U1 fields are empty placeholders and
    only H and pivot_rows are computed (faster inner loops).
    """
    n, m = A.rows, A.cols
    zero_idx, pivot_idx, pivot_rows, work, track = _hnf_columns(
        n, A.column_lists(), transform
    )
    H = from_columns(n, [work[j] for j in pivot_idx])
    if transform:
        ordered = [track[j] for j in zero_idx] + [track[j] for j in pivot_idx]
        U = from_columns(m, ordered)
        U1 = from_columns(m, ordered[: len(zero_idx)])
    else:
        U = IntMatrix(0, 0, ())
        U1 = IntMatrix(0, 0, ())
    return HnfResult(H=H, U=U, U1=U1, pivot_rows=pivot_rows)


def is_hnf_int(H: IntMatrix) -> bool:
    """Shape predicate: zero columns first, then a positive pivot staircase.

    Pivot rows strictly increase left to right, entries below a pivot are
    zero, and entries to the right of a pivot in its row lie in
    [0, pivot).
    """
    last_pivot = -1
    seen_nonzero = False
    pivots = []  # (row, col, value)
    for j in range(H.cols):
        col = H.col(j)
        nz = [i for i in range(H.rows) if col[i]]
        if not nz:
            if seen_nonzero:
                return False
            continue
        seen_nonzero = True
        p = max(nz)
        if col[p] < 1 or p <= last_pivot:
            return False
        last_pivot = p
        pivots.append((p, j, col[p]))
    for p, j, v in pivots:
        for k in range(j + 1, H.cols):
            e = H.entries[p][k]
            if not 0 <= e < v:
                return False
    return True


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    """Exact integer matrix product."""
    if A.cols != B.rows:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(A.rows):
        ra = A.entries[i]
        out.append(
            tuple(
                sum(ra[k] * B.entries[k][j] for k in range(A.cols))
                for j in range(B.cols)
            )
        )
    return IntMatrix(A.rows, B.cols, tuple(out))


def det_int(A: IntMatrix):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = [list(row) for row in A.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact integer division is the Bareiss invariant
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
