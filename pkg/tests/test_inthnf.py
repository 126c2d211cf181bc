"""Unit tests for the integer column HNF engine and its transform."""

import random

import pytest

from conftest import frac_rank
from zxghnf.inthnf import (
    IntMatrix,
    det_int,
    from_columns,
    hnf_with_transform,
    int_matrix,
    is_hnf_int,
    mat_mul,
)


def _check_invariants(A, res):
    zeros = res.U.cols - res.H.cols
    target = IntMatrix(
        A.rows,
        res.U.cols,
        tuple(
            tuple(0 for _ in range(zeros)) + res.H.entries[i]
            for i in range(A.rows)
        ),
    )
    assert mat_mul(A, res.U) == target
    assert abs(det_int(res.U)) == 1
    assert is_hnf_int(res.H)
    assert all(
        res.pivot_rows[k] < res.pivot_rows[k + 1]
        for k in range(len(res.pivot_rows) - 1)
    )
    for j, r in enumerate(res.pivot_rows):
        col = res.H.col(j)
        assert col[r] > 0
        assert all(col[i] == 0 for i in range(r + 1, A.rows))


def test_single_row_euclidean():
    A = int_matrix([[4, 2]])
    res = hnf_with_transform(A)
    assert res.H == IntMatrix(1, 1, ((2,),))
    assert res.pivot_rows == (0,)
    assert res.U1.cols == 1
    u = res.U1.col(0)
    assert tuple(u) in {(1, -2), (-1, 2)}
    _check_invariants(A, res)


def test_identity_fixpoint():
    A = int_matrix([[1, 0], [0, 1]])
    res = hnf_with_transform(A)
    assert res.H == A
    assert res.U == A
    assert res.U1.cols == 0
    assert res.pivot_rows == (0, 1)


def test_is_hnf_int_examples():
    assert is_hnf_int(int_matrix([[2, 0], [0, 3]]))
    assert is_hnf_int(int_matrix([[2, 1], [0, 3]]))
    assert not is_hnf_int(int_matrix([[2, 2], [0, 3]]))
    # zero columns must precede the staircase
    assert is_hnf_int(int_matrix([[0, 2], [0, 0]]))
    assert not is_hnf_int(int_matrix([[2, 0], [0, 0]]))
    assert not is_hnf_int(int_matrix([[-2]]))
    assert not is_hnf_int(int_matrix([[0, 2], [3, 0]]))


def test_right_reduction_runs_bottom_up():
    # right-reducing in ascending pivot order would leave a -1 at (0, 2)
    A = from_columns(3, [[2, 0, 0], [1, 2, 0], [0, 3, 1]])
    res = hnf_with_transform(A)
    assert res.H == IntMatrix(3, 3, ((2, 1, 1), (0, 2, 1), (0, 0, 1)))
    _check_invariants(A, res)


def test_zero_matrix():
    A = int_matrix([[0, 0], [0, 0]])
    res = hnf_with_transform(A)
    assert res.H.cols == 0
    assert res.pivot_rows == ()
    assert res.U1.cols == 2
    assert abs(det_int(res.U)) == 1


def test_random_invariants():
    rng = random.Random(1201)
    for _ in range(80):
        r = rng.randint(1, 8)
        c = rng.randint(1, 8)
        A = int_matrix(
            [[rng.randint(-50, 50) for _ in range(c)] for _ in range(r)]
        )
        res = hnf_with_transform(A)
        _check_invariants(A, res)
        rank = frac_rank([list(row) for row in A.entries])
        assert res.H.cols == rank
        assert res.U1.cols == c - rank
        if res.U1.cols:
            K = mat_mul(A, res.U1)
            assert all(v == 0 for row in K.entries for v in row)
            assert frac_rank([list(row) for row in res.U1.entries]) == c - rank


def test_canonical_and_permutation_invariant():
    rng = random.Random(771)
    for _ in range(30):
        r = rng.randint(1, 6)
        c = rng.randint(1, 6)
        A = int_matrix(
            [[rng.randint(-30, 30) for _ in range(c)] for _ in range(r)]
        )
        H = hnf_with_transform(A, transform=False).H
        again = hnf_with_transform(H, transform=False).H
        assert again == H
        perm = list(range(c))
        rng.shuffle(perm)
        P = from_columns(r, [A.col(j) for j in perm])
        assert hnf_with_transform(P, transform=False).H == H


def test_det_int():
    assert det_int(int_matrix([[1, 2], [3, 4]])) == -2
    assert det_int(int_matrix([[2, 0], [0, 3]])) == 6
    assert det_int(int_matrix([[1, 2], [2, 4]])) == 0
    assert det_int(int_matrix([[2, 0, 1], [1, 1, 0], [0, 3, 1]])) == 5
    assert det_int(IntMatrix(0, 0, ())) == 1
    with pytest.raises(ValueError):
        det_int(int_matrix([[1, 2]]))


def test_mat_mul_mismatch():
    with pytest.raises(ValueError):
        mat_mul(int_matrix([[1, 2]]), int_matrix([[1, 2]]))
