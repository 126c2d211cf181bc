"""Exact arithmetic for Z[x] polynomials, term order, and vector reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass

NEG_INF = float("-inf")

# A polynomial is a tuple of int coefficients, ascending degree, no trailing
# zeros; the zero polynomial is the empty tuple.
IntPoly = tuple

ZERO = ()


def pnorm(coeffs) -> IntPoly:
    """Strip trailing zeros and return the canonical tuple form."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p) -> int | float:
    """Degree of p; the zero polynomial gets a -inf sentinel, never -1."""
    return len(p) - 1 if p else NEG_INF


def ilog2(c: int) -> float:
    """log2 of a positive integer, safe for values beyond float range."""
    bl = c.bit_length()
    if bl <= 53:
        return math.log2(c)
    return math.log2(c >> (bl - 53)) + (bl - 53)


def height(p) -> float:
    """log2 of the largest absolute coefficient; height(0) = 0."""
    if not p:
        return 0.0
    return ilog2(max(abs(c) for c in p))


def lc(p) -> int:
    """Leading coefficient of a nonzero polynomial."""
    if not p:
        raise ValueError("zero polynomial has no leading coefficient")
    return p[-1]


def padd(a, b) -> IntPoly:
    """Add two polynomials."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return pnorm(out)


def pneg(a) -> IntPoly:
    """Negate a polynomial."""
    return tuple(-c for c in a)


def psub(a, b) -> IntPoly:
    """Subtract b from a."""
    return padd(a, pneg(b))


def pscale(a, k: int) -> IntPoly:
    """Multiply by an integer scalar."""
    if k == 0:
        return ZERO
    return tuple(c * k for c in a)


def pshift(a, k: int) -> IntPoly:
    """Multiply by x^k."""
    if not a:
        return ZERO
    return (0,) * k + tuple(a)


def pmul(a, b) -> IntPoly:
    """Multiply two polynomials."""
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return pnorm(out)


def content(p) -> int:
    """Positive gcd of the coefficients of a nonzero polynomial."""
    g = 0
    for c in p:
        g = math.gcd(g, c)
    return g


def primpart(p) -> IntPoly:
    """Primitive part of p with positive leading coefficient."""
    if not p:
        return ZERO
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def _pseudo_rem(a, b) -> IntPoly:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    bl = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        top = r[-1]
        shift = len(r) - 1 - db
        r = [c * bl for c in r]
        for j, cb in enumerate(b):
            r[shift + j] -= top * cb
        r.pop()
    return pnorm(r)


def gcd_zx(a, b) -> IntPoly:
    """gcd in Z[x] via contents and a primitive pseudo-remainder sequence."""
    if not a and not b:
        return ZERO
    if not a:
        return pscale(primpart(b), content(b))
    if not b:
        return pscale(primpart(a), content(a))
    c = math.gcd(content(a), content(b))
    f, g = primpart(a), primpart(b)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _pseudo_rem(f, g)
        f, g = g, primpart(r)
    return pscale(f, c)


def pdiv_exact(a, b):
    """Quotient a/b when b divides a exactly in Z[x]; None otherwise."""
    if not b:
        return None
    if not a:
        return ZERO
    if len(a) < len(b):
        return None
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    bl = b[-1]
    for sh in range(len(q) - 1, -1, -1):
        c = r[sh + len(b) - 1]
        if c % bl:
            return None
        f = c // bl
        q[sh] = f
        if f:
            for j, cb in enumerate(b):
                r[sh + j] -= f * cb
    if any(r):
        return None
    return pnorm(q)


def content_primpart(fs):
    """Content and primitive part of a polynomial family.

    content is the gcd of every coefficient; primpart is gcd(fs)/content
    with positive leading coefficient.
    """
    fs = [pnorm(f) for f in fs]
    nonzero = [f for f in fs if f]
    if not nonzero:
        raise ValueError("zero family")
    cont = 0
    for f in nonzero:
        cont = math.gcd(cont, content(f))
    g = ZERO
    for f in nonzero:
        g = gcd_zx(g, f)
    pp = tuple(c // cont for c in g)
    if pp and pp[-1] < 0:
        pp = pneg(pp)
    return cont, pp


@dataclass(frozen=True)
class Term:
    """A single term a*x^degree*e_row with a != 0 and 1-based row."""

    coeff: int
    degree: int
    row: int

    def key(self):
        """Sort key realizing the position-then-degree order."""
        return (self.row, self.degree, abs(self.coeff))


# A vector in Z[x]^n is a tuple of n polynomials, row 1 first.
PolyVec = tuple


def vnorm(entries) -> PolyVec:
    """Canonicalize every entry of a vector."""
    return tuple(pnorm(e) for e in entries)


def vzero(n: int) -> PolyVec:
    """Zero vector with n rows."""
    return (ZERO,) * n


def vis_zero(v) -> bool:
    """True iff every entry is zero."""
    return all(not e for e in v)


def vadd(a, b) -> PolyVec:
    """Add two vectors."""
    return tuple(padd(x, y) for x, y in zip(a, b))


def vsub(a, b) -> PolyVec:
    """Subtract b from a."""
    return tuple(psub(x, y) for x, y in zip(a, b))


def vscale(a, k: int) -> PolyVec:
    """Multiply a vector by an integer."""
    return tuple(pscale(e, k) for e in a)


def vshift(a, k: int) -> PolyVec:
    """Multiply a vector by x^k."""
    return tuple(pshift(e, k) for e in a)


def vpmul(a, q) -> PolyVec:
    """Multiply a vector by a polynomial."""
    return tuple(pmul(e, q) for e in a)


def leading(v) -> Term:
    """Maximal term of a nonzero vector: deepest nonzero row, top degree."""
    for row in range(len(v), 0, -1):
        e = v[row - 1]
        if e:
            return Term(e[-1], len(e) - 1, row)
    raise ValueError("zero vector has no leading term")


def term_reduced(coeff: int, deg: int, row: int, lt: Term) -> bool:
    """True iff the term coeff*x^deg*e_row is reduced against lt."""
    if row != lt.row or deg < lt.degree:
        return True
    return 0 <= coeff < abs(lt.coeff)


def vec_reduced(f, lt: Term) -> bool:
    """True iff every term of f is reduced against lt."""
    e = f[lt.row - 1]
    for deg in range(lt.degree, len(e)):
        c = e[deg]
        if not 0 <= c < abs(lt.coeff):
            return False
    return True


def reduce_term_by(f, g):
    """Remainder and quotient of f under termwise reduction by g.

    remainder = f - quotient*g, and every term of the remainder is
    LT(g)-reduced.
    """
    lt = leading(g)  # raises on g = 0
    row, beta, b = lt.row - 1, lt.degree, lt.coeff
    ab = abs(b)
    r = [list(e) for e in f]
    q = {}
    alpha = len(r[row]) - 1
    while alpha >= beta:
        c = r[row][alpha] if alpha < len(r[row]) else 0
        if not 0 <= c < ab:
            m = c % ab
            qa = (c - m) // b
            q[alpha - beta] = q.get(alpha - beta, 0) + qa
            # subtract qa * x^(alpha-beta) * g from every row
            sh = alpha - beta
            for i, ge in enumerate(g):
                if ge:
                    ri = r[i]
                    need = sh + len(ge)
                    if len(ri) < need:
                        ri.extend([0] * (need - len(ri)))
                    for j, gc in enumerate(ge):
                        ri[sh + j] -= qa * gc
        alpha -= 1
    rem = vnorm(r)
    if q:
        qp = [0] * (max(q) + 1)
        for k, v in q.items():
            qp[k] = v
        quot = pnorm(qp)
    else:
        quot = ZERO
    return rem, quot


def reduce_by_basis(f, G):
    """Normal form of f against the columns of G.

    Sweeps the columns from the last down to the first and repeats the
    sweep until a fixpoint, which is the unique fully reduced remainder.
    """
    cols = G.cols
    r = vnorm(f)
    while True:
        changed = False
        for g in reversed(cols):
            r2, q = reduce_term_by(r, g)
            if q:
                changed = True
                r = r2
        if not changed:
            return r


def _ext_gcd(a: int, b: int):
    """Return (g, u, v) with g = gcd(a,b) = u*a + v*b, g > 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def svector(f, g):
    """Minimal leading-term-cancelling combination of two vectors.

    Zero when the leading rows differ; otherwise the divisibility case
    split on the leading coefficients, with a Bezout combination in the
    mixed case. Swaps the arguments internally so the lower-degree leading
    term is the divisor side.
    """
    ltf, ltg = leading(f), leading(g)
    if ltf.row != ltg.row:
        return vzero(len(f))
    if ltf.degree < ltg.degree:
        f, g = g, f
        ltf, ltg = ltg, ltf
    a, k = ltf.coeff, ltf.degree
    b, s = ltg.coeff, ltg.degree
    if a % b == 0:
        return vsub(f, vscale(vshift(g, k - s), a // b))
    if b % a == 0:
        return vsub(vscale(f, b // a), vshift(g, k - s))
    _, u, v = _ext_gcd(a, b)
    return vadd(vscale(f, u), vscale(vshift(g, k - s), v))


@dataclass(frozen=True)
class PolyMatrix:
    """A matrix over Z[x] stored as a tuple of column vectors."""

    n: int
    cols: tuple

    def __post_init__(self):
        for c in self.cols:
            if len(c) != self.n:
                raise ValueError("column row count mismatch")

    def deg(self):
        """Max entry degree; -inf for the zero matrix."""
        d = NEG_INF
        for c in self.cols:
            for e in c:
                if e:
                    d = max(d, len(e) - 1)
        return d

    def height(self):
        """Max entry height; 0 for the zero matrix."""
        h = 0.0
        for c in self.cols:
            for e in c:
                if e:
                    h = max(h, height(e))
        return h

    def width(self) -> int:
        return len(self.cols)


def matrix(n: int, cols) -> PolyMatrix:
    """Build a PolyMatrix from raw column coefficient lists."""
    return PolyMatrix(n, tuple(vnorm(c) for c in cols))


def sort_columns(cols):
    """Sort nonzero columns ascending under the term order."""
    return tuple(sorted(cols, key=lambda c: leading(c).key()))
