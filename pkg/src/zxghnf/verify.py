"""Certification predicates for column bases of Z[x]-modules."""

from .poly import (
    lc,
    leading,
    matrix,
    pdiv_exact,
    primpart,
    reduce_by_basis,
    svector,
    vec_reduced,
    vis_zero,
    vshift,
    vsub,
    vscale,
)


def _blocks(C):
    """Group column indices of C by leading row, in column order."""
    groups = []
    for j, col in enumerate(C.cols):
        row = leading(col).row
        if groups and groups[-1][0] == row:
            groups[-1][1].append(j)
        else:
            groups.append((row, [j]))
    return groups


def is_ghnf(C):
    """Decide whether C is a generalized Hermite normal form.

    Returns (ok, violations).  Each violation is a 4-tuple
    (i, j1, j2, condition) with 1-based indices: i is the block number,
    j1/j2 are column positions inside that block for conditions 1-3.
    For condition 4 the pair is (offending column, reducer column) as
    1-based global column indices with i the offending column's block.
    Shape defects (zero column, column order, nonpositive pivot
    coefficient) are reported with condition 0 and global indices.
    Only the first failing check is reported.
    """
    for j, col in enumerate(C.cols):
        if vis_zero(col):
            return False, [(0, j + 1, j + 1, 0)]
    keys = [leading(col).key() for col in C.cols]
    for j in range(len(keys) - 1):
        if keys[j + 1] <= keys[j]:
            return False, [(0, j + 1, j + 2, 0)]
    for j, col in enumerate(C.cols):
        if leading(col).coeff <= 0:
            return False, [(0, j + 1, j + 1, 0)]

    groups = _blocks(C)
    # Condition 1: pivot degrees strictly increase inside each block.
    for i, (_, idx) in enumerate(groups, start=1):
        degs = [leading(C.cols[j]).degree for j in idx]
        for j in range(len(degs) - 1):
            if degs[j] >= degs[j + 1]:
                return False, [(i, j + 1, j + 2, 1)]
    # Condition 2: each later pivot coefficient divides every earlier one.
    for i, (_, idx) in enumerate(groups, start=1):
        lcs = [leading(C.cols[j]).coeff for j in idx]
        for j1 in range(len(lcs)):
            for j2 in range(j1 + 1, len(lcs)):
                if lcs[j1] % lcs[j2]:
                    return False, [(i, j1 + 1, j2 + 1, 2)]
    # Condition 3: in-block S-vectors reduce to zero by the whole matrix.
    for i, (_, idx) in enumerate(groups, start=1):
        for j1 in range(len(idx)):
            for j2 in range(j1 + 1, len(idx)):
                f = C.cols[idx[j1]]
                g = C.cols[idx[j2]]
                lf, lg = leading(f), leading(g)
                s = vsub(vshift(f, lg.degree - lf.degree),
                         vscale(g, lf.coeff // lg.coeff))
                r = reduce_by_basis(s, C)
                if not vis_zero(r):
                    return False, [(i, j1 + 1, j2 + 1, 3)]
    # Condition 4: every column is reduced against every other column.
    for i, (_, idx) in enumerate(groups, start=1):
        for j in idx:
            for j2 in range(len(C.cols)):
                if j2 == j:
                    continue
                if not vec_reduced(C.cols[j], leading(C.cols[j2])):
                    return False, [(i, j + 1, j2 + 1, 4)]
    return True, []


def is_groebner(G):
    """Check Buchberger's criterion: all S-vectors reduce to zero by G."""
    cols = [c for c in G.cols if not vis_zero(c)]
    if not cols:
        return True
    B = matrix(G.n, cols)
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            if leading(cols[a]).row != leading(cols[b]).row:
                continue
            s = svector(cols[a], cols[b])
            r = reduce_by_basis(s, B)
            if not vis_zero(r):
                return False
    return True


def structure_check_zx(G):
    """Check the arithmetic profile every reduced Z[x] ideal basis satisfies.

    G must be a single-row matrix b_1, ..., b_k in ascending order:
    degrees strictly increase, leading coefficients form a strict
    divisibility chain c_k | ... | c_1 with consecutive terms distinct,
    c_j / c_k divides every coefficient of b_j, and the primitive part
    of b_1 divides every b_j as a polynomial.
    """
    if G.n != 1:
        raise ValueError("structure check applies to single-row modules only")
    bs = [col[0] for col in G.cols]
    if not bs or any(not b for b in bs):
        return False
    degs = [len(b) - 1 for b in bs]
    if any(degs[j] >= degs[j + 1] for j in range(len(bs) - 1)):
        return False
    cs = [lc(b) for b in bs]
    if any(c <= 0 for c in cs):
        return False
    for j in range(len(bs) - 1):
        if cs[j] % cs[j + 1] or cs[j] == cs[j + 1]:
            return False
    ck = cs[-1]
    for j, b in enumerate(bs):
        ratio = cs[j] // ck
        if any(coef % ratio for coef in b):
            return False
    p1 = primpart(bs[0])
    for b in bs[1:]:
        if pdiv_exact(b, p1) is None:
            return False
    return True


def membership(f, G, checked=False):
    """Decide whether the vector f lies in the module generated by G."""
    if checked and not is_groebner(G):
        raise ValueError("basis is not a Groebner basis")
    r = reduce_by_basis(f, G)
    return vis_zero(r)
