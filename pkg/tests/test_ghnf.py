"""Unit tests for coefficient encoding, PHNF, prolongation, and the iteration."""

import random

import pytest

from conftest import row_dot
from zxghnf.cli import random_matrix
from zxghnf.ghnf import (
    CoeffLayout,
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
from zxghnf.inthnf import IntMatrix
from zxghnf.poly import matrix, vis_zero
from zxghnf.verify import is_ghnf, membership


def test_coeff_matrix_placement():
    layout, C = coeff_matrix(matrix(1, [[[2]], [[0, 1]]]))
    assert layout.row_degree_caps == (1,)
    assert layout.block_offsets == (0,)
    assert C == IntMatrix(2, 2, ((2, 0), (0, 1)))
    F = matrix(1, [[[12, 0, 3, 6]], [[0, 6, 3, 6]], [[0, 0, 15, 6]], [[0, 0, 3, 6]]])
    _, C2 = coeff_matrix(F)
    assert C2.col(0) == [12, 0, 3, 6]


def test_coeff_matrix_drops_zero_columns():
    layout, C = coeff_matrix(matrix(1, [[[0]]]))
    assert C.cols == 0
    assert layout.row_degree_caps == (0,)
    assert layout.dropped == 1


def test_expand_round_trip():
    layout = CoeffLayout((1,), (0,))
    H = IntMatrix(2, 2, ((2, 0), (0, 1)))
    assert expand(layout, H) == matrix(1, [[[2]], [[0, 1]]])
    assert expand(CoeffLayout((0,), (0,)), IntMatrix(0, 0, ())) == matrix(1, [])
    with pytest.raises(ValueError):
        expand(CoeffLayout((1,), (0,)), IntMatrix(3, 1, ((1,), (0,), (0,))))


def test_expand_inverts_coeff_matrix_random():
    rng = random.Random(88)
    for _ in range(25):
        n = rng.choice([1, 2, 3])
        m = rng.randint(1, 4)
        F = random_matrix(rng, n, m, rng.randint(0, 3), 9)
        layout, C = coeff_matrix(F)
        assert expand(layout, C) == F


def test_phnf_examples():
    assert phnf(matrix(1, [[[0, 1]], [[2]]])) == matrix(1, [[[2]], [[0, 1]]])
    I2 = matrix(2, [[[1], []], [[], [1]]])
    assert phnf(I2) == I2
    assert phnf(matrix(2, [])) == matrix(2, [])


def test_phnf_idempotent_random():
    rng = random.Random(19)
    for _ in range(25):
        n = rng.choice([1, 2])
        F = random_matrix(rng, n, rng.randint(1, 4), rng.randint(0, 3), 15)
        G = phnf(F)
        assert phnf(G) == G


def test_divide():
    I2 = matrix(2, [[[1], []], [[], [1]]])
    blocks = divide(I2)
    assert blocks[0].cols == (((1,), ()),)
    assert blocks[1].cols == (((), (1,)),)
    # within a block, columns come back ordered by leading degree
    G = matrix(1, [[[0, 0, 1]], [[2]]])
    assert divide(G)[0].cols == (((2,),), ((0, 0, 1),))
    with pytest.raises(ValueError):
        divide(matrix(1, [[[0]]]))


def test_prolong_partial_and_full():
    G = matrix(1, [[[2]]])
    assert prolong(G, [1], Strategy.PARTIAL) == matrix(1, [[[2]], [[0, 2]]])
    G2 = matrix(1, [[[2]], [[0, 1]]])
    assert prolong(G2, [1], Strategy.FULL) == matrix(
        1, [[[2]], [[0, 1]], [[0, 2]], [[0, 0, 1]]]
    )
    ladder = matrix(1, [[[12]], [[0, 6]], [[0, 0, 12]], [[0, 0, 3, 6]]])
    assert prolong(ladder, [3], Strategy.PARTIAL) == matrix(
        1,
        [
            [[12]],
            [[0, 6]],
            [[0, 0, 12]],
            [[0, 0, 3, 6]],
            [[0, 12]],
            [[0, 0, 6]],
            [[0, 0, 0, 12]],
        ],
    )
    # over-cap columns are dropped entirely, under-cap ones also shift
    G3 = matrix(1, [[[2]], [[0, 0, 1]]])
    assert prolong(G3, [1], Strategy.PARTIAL) == matrix(1, [[[2]], [[0, 2]]])


def test_ghnfn_small_examples():
    run = ghnfn(matrix(1, [[[0, 1]], [[2]]]))
    assert run.ghnf == matrix(1, [[[2]], [[0, 1]]])
    assert run.loops == 1
    I2 = matrix(2, [[[1], []], [[], [1]]])
    run2 = ghnfn(I2)
    assert run2.ghnf == I2
    assert run2.loops == 1
    with pytest.raises(ValueError):
        ghnfn(matrix(1, [[[0]]]))
    with pytest.raises(ValueError):
        ghnf1(matrix(2, [[[1], [1]]]))


def test_ghnfn_run_fields():
    F = matrix(1, [[[12, 0, 3, 6]], [[0, 6, 3, 6]], [[0, 0, 15, 6]], [[0, 0, 3, 6]]])
    run = ghnfn(F, keep_trace=True)
    assert len(run.widths) == run.loops
    assert len(run.heights) == run.loops
    assert run.trace[0] == phnf(F)
    assert len(run.trace) == run.loops + 1
    assert run.strategy is Strategy.PARTIAL
    assert run.fallback is False
    assert ghnfn(F).trace is None


def test_ghnfn_certifies_random():
    rng = random.Random(3110)
    for _ in range(25):
        n = rng.choice([1, 2, 3])
        F = random_matrix(rng, n, rng.randint(2, 4), rng.randint(1, 3), 20)
        run = ghnfn(F)
        ok, violations = is_ghnf(run.ghnf)
        assert ok, violations
        for c in F.cols:
            assert membership(c, run.ghnf)
        assert ghnfn(F, Strategy.FULL).ghnf == run.ghnf


def test_ghnfn_rerun_stops_after_one_loop():
    rng = random.Random(6006)
    for _ in range(10):
        n = rng.choice([1, 2, 3])
        F = random_matrix(rng, n, rng.randint(2, 4), rng.randint(1, 3), 15)
        G = ghnfn(F).ghnf
        rerun = ghnfn(G)
        assert rerun.ghnf == G
        assert rerun.loops == 1


def test_syzygy_examples():
    F = matrix(1, [[[2]], [[0, 1]]])
    gens = syzygy_basis_zx(F)
    assert gens
    for u in gens:
        assert not row_dot(F, u)
    B = ghnfn(matrix(2, gens)).ghnf
    assert membership(((0, 1), (-2,)), B)

    F2 = matrix(1, [[[4]], [[2]]])
    gens2 = syzygy_basis_zx(F2)
    for u in gens2:
        assert not row_dot(F2, u)
    B2 = ghnfn(matrix(2, gens2)).ghnf
    assert membership(((1,), (-2,)), B2)

    assert syzygy_basis_zx(matrix(1, [[[6]]])) == []
    with pytest.raises(ValueError):
        syzygy_basis_zx(matrix(2, [[[1], [1]]]))


def test_syzygy_zero_module_unit_vectors():
    F = matrix(1, [[[0]], [[0]]])
    assert syzygy_basis_zx(F) == [((1,), ()), ((), (1,))]


def test_syzygy_random_products_vanish():
    rng = random.Random(2024)
    for _ in range(20):
        m = rng.randint(2, 4)
        F = random_matrix(rng, 1, m, rng.randint(1, 3), 12)
        for u in syzygy_basis_zx(F):
            assert not row_dot(F, u)
