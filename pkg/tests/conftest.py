"""Shared fixtures: bundled algebras plus small random-module helpers."""

import pytest

from gorlab.matrix import Matrix, column_space_basis, solve_matrix
from gorlab.modules import AlgebraModule, quotient_module
from gorlab.presets import (
    commutative_fat_point,
    group_algebra,
    quantum_exterior,
    truncated_poly,
    upper_triangular,
)
from gorlab.rings import ZZ
from gorlab.serialize import trivial_module


@pytest.fixture(scope="session")
def tp2():
    return truncated_poly(2)


@pytest.fixture(scope="session")
def tp3():
    return truncated_poly(3)


@pytest.fixture(scope="session")
def ut2():
    return upper_triangular(2)


@pytest.fixture(scope="session")
def qe2():
    return quantum_exterior(2)


@pytest.fixture(scope="session")
def fat():
    return commutative_fat_point()


@pytest.fixture(scope="session")
def zc2():
    return group_algebra("cyclic", 2, ZZ)


@pytest.fixture(scope="session")
def zc3():
    return group_algebra("cyclic", 3, ZZ)


@pytest.fixture(scope="session")
def zc6():
    return group_algebra("cyclic", 6, ZZ)


def cyclic_quotient(alg, k, name=None):
    """A/(x^k) over truncated_poly(n): the rank-1 free module modulo the
    ideal spanned by the basis vectors x^k, ..., x^(n-1)."""
    n = alg.rank
    b = alg.base
    f = AlgebraModule.free(alg, 1)
    cols = Matrix.from_cols(
        b,
        [[b.one if t == j else b.zero for t in range(n)] for j in range(k, n)],
        n,
    )
    q, _ = quotient_module(f, cols, name=name or ("A/(x^%d)" % k))
    return q


def torsion_trivial(alg, p, name=None):
    """Z/p with the trivial action, over a group algebra Z[G]."""
    t = trivial_module(alg)
    q, _ = quotient_module(
        t, Matrix(ZZ, [[p]], 1), name=name or ("Z/%d" % p)
    )
    return q


def action_closure(m, cols):
    """Smallest action-closed column span containing the given columns."""
    span = column_space_basis(cols)
    while span.ncols:
        big = span
        for a in m.action:
            big = big.hstack(a.mul(span))
        new = column_space_basis(big)
        if new.ncols == span.ncols and solve_matrix(span, new) is not None:
            break
        span = new
    return span


def random_module(alg, rng, copies=2, cuts=1):
    """A random quotient of A^copies by a randomly generated submodule.

    Closing the random columns under the action keeps the quotient a
    genuine module; degenerate draws (zero quotient) are retried.
    """
    b = alg.base
    for _ in range(20):
        f = AlgebraModule.free(alg, copies)
        cols = Matrix.from_cols(
            b,
            [[b.from_int(rng.randint(-2, 2)) for _ in range(f.gens)]
             for _ in range(cuts)],
            f.gens,
        )
        closed = action_closure(f, cols)
        if closed.ncols == 0:
            return f
        q, _ = quotient_module(f, closed, name="random quotient")
        if not q.r_invariants().is_zero():
            return q.check()
    raise AssertionError("random module generation kept collapsing to zero")
