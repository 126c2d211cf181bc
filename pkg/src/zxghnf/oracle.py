"""Reference Groebner engine used to cross-check the iteration."""

from collections import deque

from . import verify
from .poly import (
    leading,
    matrix,
    reduce_by_basis,
    svector,
    vis_zero,
    vnorm,
    vscale,
    vshift,
)

PAIR_BUDGET = 100_000


def buchberger(F):
    """Groebner basis of the column module of F by pair completion.

    The input columns and their x-shifts up to the degree bound are
    first replaced by the integer-lattice normal form of their
    coefficient matrix: the same module, but with a lattice-minimal
    representative in every pivot slot, which keeps coefficient growth
    bounded.  Pairs are then processed first-in first-out and every new
    element is reduced against the current basis before insertion.  The
    result is a Groebner basis but not the reduced one; follow with
    interreduce.
    """
    from .ghnf import phnf  # deferred: ghnf imports this module

    seeds = [vnorm(c) for c in F.cols if not vis_zero(c)]
    if not seeds:
        raise ValueError("zero module")
    depth = F.n * int(F.deg())
    prolonged = [vshift(c, j) for j in range(depth + 1) for c in seeds]
    basis = list(phnf(matrix(F.n, prolonged)).cols)
    pairs = deque((a, b) for a in range(len(basis)) for b in range(a + 1, len(basis)))
    G = matrix(F.n, basis)
    processed = 0
    while pairs:
        processed += 1
        if processed > PAIR_BUDGET:
            raise RuntimeError("pair budget of %d exceeded" % PAIR_BUDGET)
        a, b = pairs.popleft()
        f, g = basis[a], basis[b]
        if leading(f).row != leading(g).row:
            continue
        s = svector(f, g)
        if vis_zero(s):
            continue
        r = reduce_by_basis(s, G)
        if vis_zero(r):
            continue
        new = len(basis)
        basis.append(r)
        G = matrix(F.n, basis)
        pairs.extend((k, new) for k in range(new))
    return G


def interreduce(G, checked=True):
    """Unique reduced Groebner basis obtained from the basis G.

    Redundant columns (leading term divisible by another column's) are
    dropped, leading coefficients are made positive, every column is
    replaced by its normal form against the others, and the columns are
    sorted ascending.  With checked=True the input must already be a
    Groebner basis; otherwise a ValueError is raised.
    """
    if checked and not verify.is_groebner(G):
        raise ValueError("input is not a Groebner basis")
    cols = sorted(
        (vnorm(c) for c in G.cols if not vis_zero(c)),
        key=lambda c: leading(c).key(),
    )
    kept = []
    for c in cols:
        lt = leading(c)
        redundant = False
        for k in kept:
            lk = leading(k)
            if (lk.row == lt.row and lk.degree <= lt.degree
                    and abs(lt.coeff) % abs(lk.coeff) == 0):
                redundant = True
                break
        if not redundant:
            kept.append(c)
    kept = [vscale(c, -1) if leading(c).coeff < 0 else c for c in kept]
    for idx in range(len(kept)):
        others = kept[:idx] + kept[idx + 1:]
        kept[idx] = reduce_by_basis(kept[idx], matrix(G.n, others))
    kept = [c for c in kept if not vis_zero(c)]
    kept.sort(key=lambda c: leading(c).key())
    return matrix(G.n, kept)
