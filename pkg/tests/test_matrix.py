"""Exact linear algebra: elimination, Smith normal form, solvers."""

import random
from fractions import Fraction

import pytest

from gorlab.matrix import (
    Matrix,
    cokernel_data,
    det,
    field_kernel,
    field_rank,
    kernel,
    rank,
    rref,
    smith_normal_form,
    solve,
    solve_matrix,
    z_kernel,
)
from gorlab.rings import GF, QQ, ZZ


def rand_z(rng, nrows, ncols, lo=-6, hi=6):
    return Matrix(ZZ, [[rng.randint(lo, hi) for _ in range(ncols)]
                       for _ in range(nrows)])


def rand_q(rng, nrows, ncols):
    return Matrix(QQ, [[Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                        for _ in range(ncols)] for _ in range(nrows)])


def rand_unimodular(rng, n, steps=12):
    """Product of random elementary matrices; determinant +/-1 by design."""
    m = Matrix.identity(ZZ, n)
    rows = [list(r) for r in m.rows]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return Matrix(ZZ, rows)


def test_rref_known_matrix():
    m = Matrix(QQ, [[Fraction(2), Fraction(4)], [Fraction(1), Fraction(2)]])
    ech, pivots = rref(m)
    assert pivots == [0]
    assert ech.rows[0] == [Fraction(1), Fraction(2)]
    assert ech.rows[1] == [Fraction(0), Fraction(0)]


def test_field_kernel_rank_nullity():
    rng = random.Random(11)
    for _ in range(15):
        m = rand_q(rng, rng.randint(1, 5), rng.randint(1, 5))
        k = field_kernel(m)
        prod = m.mul(k)
        assert all(x == 0 for row in prod.rows for x in row)
        assert k.ncols == m.ncols - field_rank(m)


def test_field_kernel_mod_p():
    rng = random.Random(12)
    f5 = GF(5)
    for _ in range(10):
        m = Matrix(f5, [[rng.randrange(5) for _ in range(4)] for _ in range(3)])
        k = field_kernel(m)
        prod = m.mul(k)
        assert all(x == 0 for row in prod.rows for x in row)
        assert k.ncols == m.ncols - field_rank(m)


def test_smith_form_unimodular_and_divisibility():
    rng = random.Random(13)
    for _ in range(25):
        m = rand_z(rng, rng.randint(1, 5), rng.randint(1, 5))
        snf = smith_normal_form(m)
        left = snf.u.mul(m).mul(snf.v)
        assert left.rows == snf.d.rows
        assert det(snf.u) in (1, -1)
        assert det(snf.v) in (1, -1)
        diag = snf.diagonal
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        # tracked inverses really invert
        assert snf.u.mul(snf.uinv).rows == Matrix.identity(ZZ, m.nrows).rows
        assert snf.v.mul(snf.vinv).rows == Matrix.identity(ZZ, m.ncols).rows


def test_cokernel_invariant_under_unimodular_action():
    rng = random.Random(14)
    for _ in range(15):
        m = rand_z(rng, rng.randint(1, 4), rng.randint(1, 4))
        base_data = cokernel_data(m)
        u = rand_unimodular(rng, m.nrows)
        v = rand_unimodular(rng, m.ncols)
        assert cokernel_data(u.mul(m)) == base_data
        assert cokernel_data(m.mul(v)) == base_data
        assert cokernel_data(u.mul(m).mul(v)) == base_data


def test_z_kernel_saturated():
    m = Matrix(ZZ, [[2, 4], [3, 6]])
    k = z_kernel(m)
    assert k.ncols == 1
    col = k.col(0)
    # saturated: the primitive vector (2, -1) up to sign, not a multiple
    assert sorted(abs(x) for x in col) == [1, 2]


def test_solve_matrix_integer_obstruction():
    m = Matrix(ZZ, [[2]])
    assert solve_matrix(m, Matrix(ZZ, [[3]])) is None
    sol = solve_matrix(m, Matrix(ZZ, [[6]]))
    assert sol.rows == [[3]]


def test_solve_roundtrip_random():
    rng = random.Random(15)
    for _ in range(10):
        m = rand_z(rng, 4, 3)
        x = Matrix(ZZ, [[rng.randint(-3, 3)] for _ in range(3)])
        rhs = m.mul(x)
        got = solve_matrix(m, rhs)
        assert got is not None
        assert m.mul(got).rows == rhs.rows


def test_solve_vector_interface():
    m = Matrix(QQ, [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]])
    v = solve(m, [Fraction(3), Fraction(2)])
    assert v == [Fraction(1), Fraction(2)]


def test_rank_agrees_across_bases():
    m_z = Matrix(ZZ, [[2, 0], [0, 3], [2, 3]])
    assert rank(m_z) == 2
    m_q = m_z.map_base(QQ, lambda x: Fraction(x))
    assert rank(m_q) == 2


def test_det_exact():
    rng = random.Random(16)
    m = Matrix(ZZ, [[3, 1], [4, 2]])
    assert det(m) == 2
    for _ in range(10):
        a = rand_z(rng, 3, 3)
        b = rand_z(rng, 3, 3)
        assert det(a.mul(b)) == det(a) * det(b)


def test_kernel_dispatch():
    mq = Matrix(QQ, [[Fraction(1), Fraction(1)]])
    mz = Matrix(ZZ, [[1, 1]])
    assert kernel(mq).ncols == 1
    assert kernel(mz).ncols == 1


def test_snf_rejects_field_base():
    with pytest.raises(ValueError):
        smith_normal_form(Matrix(QQ, [[Fraction(1)]]))


def test_rref_rejects_integer_base():
    with pytest.raises(ValueError):
        rref(Matrix(ZZ, [[1]]))
