"""Shared test helpers and the seeded random-instance corpus."""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import pytest

from zxghnf import oracle
from zxghnf.cli import random_matrix
from zxghnf.ghnf import GhnfRun, Strategy, ghnfn
from zxghnf.poly import PolyMatrix, padd, pmul

CORPUS_SEED = 24117
CORPUS_SIZE = 200


def frac_rank(rows):
    """Rank of an integer matrix (list of rows) over the rationals."""
    rows = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def peval(p, x):
    """Evaluate a coefficient tuple at an integer point."""
    v = 0
    for c in reversed(p):
        v = v * x + c
    return v


def row_dot(F, u):
    """F*u for a single-row matrix F and a length-m vector u."""
    out = ()
    for j in range(F.width()):
        out = padd(out, pmul(F.cols[j][0], u[j]))
    return out


@dataclass(frozen=True)
class CorpusCase:
    """One random instance with both strategy runs and the oracle result."""

    n: int
    m: int
    d: int
    F: PolyMatrix
    partial: GhnfRun
    full: GhnfRun
    reduced: PolyMatrix


@dataclass(frozen=True)
class Corpus:
    """All corpus cases plus the wall time spent building them."""

    cases: tuple
    seconds: float


@pytest.fixture(scope="session")
def corpus():
    """Seeded instances solved by both strategies and the reference engine."""
    t0 = time.perf_counter()
    rng = random.Random(CORPUS_SEED)
    cases = []
    for _ in range(CORPUS_SIZE):
        n = rng.choice([1, 2, 3])
        m = rng.randint(2, 5)
        d = rng.randint(1, 5)
        F = random_matrix(rng, n, m, d, 20)
        cases.append(
            CorpusCase(
                n=n,
                m=m,
                d=d,
                F=F,
                partial=ghnfn(F, Strategy.PARTIAL),
                full=ghnfn(F, Strategy.FULL),
                reduced=oracle.interreduce(oracle.buchberger(F)),
            )
        )
    return Corpus(tuple(cases), time.perf_counter() - t0)
