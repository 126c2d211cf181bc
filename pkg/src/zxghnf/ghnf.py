"""Coefficient encoding, the polynomial HNF operator, and the GHNF iteration."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum

from . import bounds as bounds_mod
from . import oracle, verify
from .inthnf import IntMatrix, hnf_with_transform
from .poly import (
    PolyMatrix,
    lc,
    leading,
    pnorm,
    reduce_by_basis,
    vis_zero,
    vnorm,
    vshift,
)

LOOP_HARD_CAP = 10000


class Strategy(str, Enum):
    """Prolongation policy: degree-capped (partial) or uncapped (full)."""

    PARTIAL = "partial"
    FULL = "full"


@dataclass(frozen=True)
class CoeffLayout:
    """Stacked-coefficient row layout: (module row, ascending degree) blocks."""

    row_degree_caps: tuple
    block_offsets: tuple
    dropped: int = 0

    @property
    def total(self) -> int:
        return sum(c + 1 for c in self.row_degree_caps)

    def stacked(self, row: int, deg: int) -> int:
        """Stacked row index of x^deg in 0-based module row `row`."""
        return self.block_offsets[row] + deg


@dataclass(frozen=True)
class GhnfRun:
    """Result and per-loop statistics of one GHNF computation."""

    ghnf: PolyMatrix
    loops: int
    widths: tuple
    heights: tuple
    strategy: Strategy
    trace: tuple | None = None
    fallback: bool = False


def coeff_matrix(F: PolyMatrix, drop_zero: bool = True):
    """Stacked coefficient matrix of F and its layout.

    All-zero columns carry no coefficient data and are dropped by default
    (the count is recorded on the layout); expand inverts the encoding on
    the remaining columns.
    """
    cols = list(F.cols)
    dropped = 0
    if drop_zero:
        kept = [c for c in cols if not vis_zero(c)]
        dropped = len(cols) - len(kept)
        cols = kept
    caps = []
    for i in range(F.n):
        vi = 0
        for c in cols:
            if c[i]:
                vi = max(vi, len(c[i]) - 1)
        caps.append(vi)
    offsets = []
    run = 0
    for vi in caps:
        offsets.append(run)
        run += vi + 1
    layout = CoeffLayout(tuple(caps), tuple(offsets), dropped)
    s = layout.total
    entries = []
    for r in range(s):
        entries.append(tuple(0 for _ in cols))
    entries = [list(r) for r in entries]
    for j, c in enumerate(cols):
        for i in range(F.n):
            off = offsets[i]
            for deg, cf in enumerate(c[i]):
                entries[off + deg][j] = cf
    C = IntMatrix(s, len(cols), tuple(tuple(r) for r in entries))
    return layout, C


def expand(layout: CoeffLayout, H: IntMatrix) -> PolyMatrix:
    """Inverse of coeff_matrix: stacked integer columns back to Z[x] columns."""
    if H.cols and H.rows != layout.total:
        raise ValueError("dimension mismatch")
    n = len(layout.row_degree_caps)
    cols = []
    for j in range(H.cols):
        c = H.col(j)
        entries = []
        for i in range(n):
            off = layout.block_offsets[i]
            cap = layout.row_degree_caps[i]
            entries.append(pnorm(c[off : off + cap + 1]))
        cols.append(tuple(entries))
    return PolyMatrix(n, tuple(cols))


def phnf(F: PolyMatrix) -> PolyMatrix:
    """Polynomial HNF: expand the integer HNF of the coefficient matrix.

    The result is canonical for the integer span of the columns, ascending
    under the term order, with zero columns removed.
    """
    layout, C = coeff_matrix(F)
    if C.cols == 0:
        return PolyMatrix(F.n, ())
    res = hnf_with_transform(C, transform=False)
    return expand(layout, res.H)


def divide(F: PolyMatrix):
    """Split columns by deepest nonzero row into per-row blocks.

    Block t collects the columns whose leading row is t, ascending by the
    degree of the t-th entry.
    """
    blocks = [[] for _ in range(F.n)]
    for c in F.cols:
        if vis_zero(c):
            raise ValueError("zero column in divide")
        t = leading(c).row
        blocks[t - 1].append(c)
    out = []
    for t, b in enumerate(blocks):
        b.sort(key=lambda c: len(c[t]) - 1)
        out.append(PolyMatrix(F.n, tuple(b)))
    return out


def prolong(Gprev: PolyMatrix, d_caps, strategy: Strategy) -> PolyMatrix:
    """One prolongation step.

    partial keeps block-t columns whose t-th entry has degree <= d_t and
    appends x times those with degree <= d_t - 1; full appends x times
    everything.
    """
    strategy = Strategy(strategy)
    if strategy is Strategy.FULL:
        cols = list(Gprev.cols) + [vshift(c, 1) for c in Gprev.cols]
        return PolyMatrix(Gprev.n, tuple(cols))
    cols = []
    for t, block in enumerate(divide(Gprev)):
        cap = d_caps[t]
        kept = [c for c in block.cols if len(c[t]) - 1 <= cap]
        shifted = [vshift(c, 1) for c in block.cols if len(c[t]) - 1 <= cap - 1]
        cols.extend(kept)
        cols.extend(shifted)
    return PolyMatrix(Gprev.n, tuple(cols))


def _capped_columns(G: PolyMatrix, d_caps):
    """Columns whose leading-row degree is within the per-row caps."""
    cols = []
    for c in G.cols:
        t = leading(c).row
        if len(c[t - 1]) - 1 <= d_caps[t - 1]:
            cols.append(c)
    return tuple(cols)


def _pick(G: PolyMatrix) -> PolyMatrix:
    """Keep one column per distinct leading coefficient within each block.

    Scans each block in ascending degree, keeps a column when its leading
    coefficient differs from its predecessor's, and reduces every kept
    column by the block's previous picks.
    """
    picked = []
    for t, block in enumerate(divide(G)):
        if not block.cols:
            continue
        block_pick = [block.cols[0]]
        for j in range(1, len(block.cols)):
            prev, cur = block.cols[j - 1], block.cols[j]
            if lc(prev[t]) != lc(cur[t]):
                red = reduce_by_basis(cur, PolyMatrix(G.n, tuple(block_pick)))
                block_pick.append(red)
        picked.extend(block_pick)
    return PolyMatrix(G.n, tuple(picked))


def _certified(F: PolyMatrix, R: PolyMatrix) -> bool:
    """True iff R is a GHNF and every input column reduces to zero by R."""
    ok, _ = verify.is_ghnf(R)
    if not ok:
        return False
    for c in F.cols:
        if vis_zero(c):
            continue
        if not vis_zero(reduce_by_basis(c, R)):
            return False
    return True


def _loop_cap(n: int, d: int, h: float) -> int:
    bound = bounds_mod.loop_bound(n, max(d, 1), max(h, 0.0))
    return min(int(math.ceil(bound)) + 8, LOOP_HARD_CAP)


def _state_digest(G: PolyMatrix) -> bytes:
    """Collision-safe fingerprint of an iteration state for cycle detection."""
    return hashlib.blake2b(repr(G.cols).encode(), digest_size=16).digest()


def ghnfn(
    F: PolyMatrix,
    strategy: Strategy = Strategy.PARTIAL,
    keep_trace: bool = False,
) -> GhnfRun:
    """Canonical GHNF (reduced basis) of the column module of F.

    Iterates prolongation + polynomial HNF to a fixpoint, picks one column
    per leading coefficient, interreduces, and certifies the result; a
    failed certificate under the partial strategy falls back to the full
    strategy once.
    """
    strategy = Strategy(strategy)
    if all(vis_zero(c) for c in F.cols):
        raise ValueError("zero module")
    d = int(F.deg())
    h = F.height()
    n = F.n
    d_caps = [(n - t) * d for t in range(n)]  # (n-t+1)d with 0-based t
    cap = _loop_cap(n, d, h)
    G = phnf(F)
    trace = [G] if keep_trace else None
    widths = []
    heights = []
    seen = set()
    loops = 0
    capped_prev = _capped_columns(G, d_caps)
    final = None
    while loops < cap:
        loops += 1
        P = prolong(G, d_caps, strategy)
        Gnew = phnf(P)
        widths.append(P.width())
        heights.append(Gnew.height())
        if keep_trace:
            trace.append(Gnew)
        if loops == 1 and Gnew.cols != G.cols and _certified(F, G):
            # the input was already the canonical form; the prolongation
            # only re-saturates the degree ladder, so stop at one loop
            final = G
            break
        if strategy is Strategy.PARTIAL:
            if Gnew.cols == G.cols:
                picked = _pick(Gnew)
                final = oracle.interreduce(picked, checked=False)
                if not _certified(F, final):
                    # degree caps are only justified under full row rank;
                    # rerun uncapped, which needs no rank hypothesis
                    run = ghnfn(F, Strategy.FULL, keep_trace=keep_trace)
                    return GhnfRun(
                        ghnf=run.ghnf,
                        loops=run.loops,
                        widths=run.widths,
                        heights=run.heights,
                        strategy=run.strategy,
                        trace=run.trace,
                        fallback=True,
                    )
                break
            digest = _state_digest(Gnew)
            if digest in seen:
                raise RuntimeError("internal error: iteration cycled")
            seen.add(digest)
            G = Gnew
        else:
            capped_new = _capped_columns(Gnew, d_caps)
            G = Gnew
            if capped_new == capped_prev:
                picked = _pick(PolyMatrix(n, capped_new))
                candidate = oracle.interreduce(picked, checked=False)
                if _certified(F, candidate):
                    final = candidate
                    break
            capped_prev = capped_new
    if final is None:
        raise RuntimeError("internal error: loop bound exceeded")
    return GhnfRun(
        ghnf=final,
        loops=loops,
        widths=tuple(widths),
        heights=tuple(heights),
        strategy=strategy,
        trace=tuple(trace) if keep_trace else None,
        fallback=False,
    )


def ghnf1(
    F: PolyMatrix,
    strategy: Strategy = Strategy.PARTIAL,
    keep_trace: bool = False,
) -> GhnfRun:
    """GHNF of a single-row module (vector of Z[x] polynomials)."""
    if F.n != 1:
        raise ValueError("ghnf1 expects a single-row matrix")
    return ghnfn(F, strategy, keep_trace=keep_trace)


def _poly_mat_mul(A, B):
    """Product of two dense polynomial matrices given as lists of lists."""
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[() for _ in range(cols)] for _ in range(rows)]
    from .poly import padd, pmul

    for i in range(rows):
        for k in range(inner):
            a = A[i][k]
            if not a:
                continue
            for j in range(cols):
                b = B[k][j]
                if b:
                    out[i][j] = padd(out[i][j], pmul(a, b))
    return out


def _int_cols_to_poly(M: IntMatrix):
    """Integer matrix to a constant polynomial matrix (list of rows)."""
    return [
        [pnorm([M.entries[i][j]]) for j in range(M.cols)] for i in range(M.rows)
    ]


def syzygy_basis_zx(F: PolyMatrix):
    """Generators of the syzygy module of a single-row F over Z[x].

    Accumulates the transform products of each prolonged HNF step and maps
    every step's integer kernel basis back to length-m vectors; steps run
    through degree(F) regardless of when the iteration stabilizes.
    """
    if F.n != 1:
        raise ValueError("syzygy extraction supports n = 1 only")
    m = F.width()
    if all(vis_zero(c) for c in F.cols):
        return [
            tuple((1,) if j == i else () for j in range(m)) for i in range(m)
        ]
    d = int(F.deg())
    gens = []

    def collect(T_rows, U1: IntMatrix):
        if U1.cols == 0:
            return
        prod = _poly_mat_mul(T_rows, _int_cols_to_poly(U1))
        for j in range(U1.cols):
            vec = vnorm(prod[i][j] for i in range(m))
            if not vis_zero(vec) and vec not in gens:
                gens.append(vec)

    layout, C = coeff_matrix(F, drop_zero=False)
    res = hnf_with_transform(C)
    collect([[(() if i != j else (1,)) for j in range(m)] for i in range(m)], res.U1)
    T = _int_cols_to_poly(res.U)
    T = [row[res.U1.cols :] for row in T]  # keep the H-producing columns
    G = expand(layout, res.H)
    for _ in range(d):
        v = G.width()
        sel = [j for j in range(v) if len(G.cols[j][0]) - 1 <= d - 1]
        # X = [I_v | x * selector], matching the prolongation column order
        X = [[() for _ in range(v + len(sel))] for _ in range(v)]
        for j in range(v):
            X[j][j] = (1,)
        for pos, j in enumerate(sel):
            X[j][v + pos] = (0, 1)
        P_cols = list(G.cols) + [vshift(G.cols[j], 1) for j in sel]
        P = PolyMatrix(1, tuple(P_cols))
        layout, C = coeff_matrix(P, drop_zero=False)
        res = hnf_with_transform(C)
        W = _poly_mat_mul(T, X)
        collect(W, res.U1)
        U2 = _int_cols_to_poly(res.U)
        U2 = [row[res.U1.cols :] for row in U2]
        T = _poly_mat_mul(W, U2)
        G = expand(layout, res.H)
    return gens
