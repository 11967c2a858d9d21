"""Resolutions, Ext, Tor, projective dimension: frozen values and laws.

The regression values here were computed once from the closed forms for
truncated polynomial rings, path algebras of A2, and cyclic group rings,
then pinned: minimal resolutions of k over k[x]/(x^n) alternate between
ranks 1 and 1 (n = 2) or follow the 1,1,1,... / interleaved pattern for
the cyclic quotients, and integral group cohomology of C_n is Z, 0, Z/n,
0, Z/n, ...
"""

import random

import pytest

from conftest import cyclic_quotient, random_module, torsion_trivial
from gorlab.matrix import Matrix, rank, solve_matrix
from gorlab.modules import AlgebraModule, module_iso, simple_modules
from gorlab.resolutions import (
    ext,
    proj_dim,
    resolution_of,
    syzygy,
    tor,
    try_split_cover,
)
from gorlab.rings import ZZ
from gorlab.serialize import trivial_module


def graded_repr(g):
    return [repr(g[i]) for i in g.degrees()]


# -- minimal resolutions over fields ----------------------------------


def test_tp2_minimal_resolution_ranks(tp2):
    k = cyclic_quotient(tp2, 1)
    res = resolution_of(k)
    assert [len(res.cover(i).slots) for i in range(4)] == [1, 1, 1, 1]
    assert [res.syzygy(i).r_invariants().free_rank for i in range(4)] == [1, 1, 1, 1]


def test_tp3_syzygy_pattern(tp3):
    k = cyclic_quotient(tp3, 1)
    ax2 = cyclic_quotient(tp3, 2)
    rk = resolution_of(k)
    ra = resolution_of(ax2)
    assert [rk.syzygy(i).r_invariants().free_rank for i in range(5)] == [1, 2, 1, 2, 1]
    assert [ra.syzygy(i).r_invariants().free_rank for i in range(4)] == [2, 1, 2, 1]


def test_fat_point_betti_numbers(fat):
    s = simple_modules(fat)[0][1]
    res = resolution_of(s)
    assert [len(res.cover(i).slots) for i in range(4)] == [1, 2, 4, 8]


def test_quantum_exterior_betti_numbers(qe2):
    s = simple_modules(qe2)[0][1]
    res = resolution_of(s)
    assert [len(res.cover(i).slots) for i in range(5)] == [1, 2, 3, 4, 5]


def test_resolution_differentials_compose_to_zero(tp3, zc2):
    rng = random.Random(31)
    for m in (random_module(tp3, rng), trivial_module(zc2)):
        res = resolution_of(m)
        res.ensure(3)
        for i in range(1, 3):
            prod = res.differential(i).matrix.mul(res.differential(i + 1).matrix)
            assert prod.is_zero()


def test_resolution_exact_at_window_edges(zc2):
    # rank bookkeeping: ker(d_i) = im(d_{i+1}) checked by containment
    # both ways at every inner degree of the window
    t = trivial_module(zc2)
    res = resolution_of(t)
    res.ensure(3)
    for i in range(1, 3):
        d_i = res.differential(i).matrix
        d_next = res.differential(i + 1).matrix
        from gorlab.matrix import kernel
        ker = kernel(d_i)
        # im(d_{i+1}) inside ker(d_i)
        assert solve_matrix(ker, d_next) is not None
        # and the ranks agree, so the containment is an equality
        assert rank(ker) == rank(d_next)


# -- Ext and Tor regression values ------------------------------------


def test_ext_self_tp2(tp2):
    k = cyclic_quotient(tp2, 1)
    assert graded_repr(ext(k, k, 4)) == ["Q", "Q", "Q", "Q", "Q"]


def test_ext_tables_upper_triangular(ut2):
    sims = [s for _, s in simple_modules(ut2)]
    table = {
        (0, 0): ["Q", "0", "0"],
        (0, 1): ["0", "Q", "0"],
        (1, 0): ["0", "0", "0"],
        (1, 1): ["Q", "0", "0"],
    }
    for (i, j), want in table.items():
        assert graded_repr(ext(sims[i], sims[j], 2)) == want


def test_ext_into_regular_upper_triangular(ut2):
    sims = [s for _, s in simple_modules(ut2)]
    f1 = AlgebraModule.free(ut2, 1)
    assert graded_repr(ext(sims[0], f1, 3)) == ["0", "Q", "0", "0"]
    assert graded_repr(ext(sims[1], f1, 3)) == ["Q^2", "0", "0", "0"]


def test_integral_group_cohomology_cyclic(zc2, zc6):
    t2 = trivial_module(zc2)
    t6 = trivial_module(zc6)
    assert graded_repr(ext(t2, t2, 4)) == ["Z", "0", "Z/2", "0", "Z/2"]
    assert graded_repr(ext(t6, t6, 4)) == ["Z", "0", "Z/6", "0", "Z/6"]


def test_integral_group_homology_cyclic(zc2):
    t = trivial_module(zc2)
    t_right = AlgebraModule(zc2, "right", t.gens, t.relations, t.action,
                            name="Z as right module")
    assert graded_repr(tor(t_right, t, 4)) == ["Z", "Z/2", "0", "Z/2", "0"]


def test_tor_balance_through_opposite(zc2):
    """Tor computed from a resolution of the second argument agrees with
    Tor computed from a resolution of the first (via the opposite
    algebra)."""
    t = trivial_module(zc2)
    t_right = AlgebraModule(zc2, "right", t.gens, t.relations, t.action)
    op = zc2.opposite()
    t_right_op = AlgebraModule(op, "right", t.gens, t.relations, t.action)
    lhs = tor(t_right, t, 3)
    rhs = tor(t_right_op, t_right.as_left(), 3)
    assert graded_repr(lhs) == graded_repr(rhs)


# -- projective dimension verdicts ------------------------------------


def test_pd_projectives(ut2, zc2):
    assert proj_dim(AlgebraModule.free(ut2, 2)).value == 0
    assert proj_dim(AlgebraModule.free(zc2, 1)).value == 0


def test_pd_hereditary(ut2):
    sims = [s for _, s in simple_modules(ut2)]
    v0 = proj_dim(sims[0])
    v1 = proj_dim(sims[1])
    assert (v0.kind, v0.value) == ("Finite", 1)
    assert (v1.kind, v1.value) == ("Finite", 0)


def test_pd_infinite_certificates(tp2, tp3):
    v = proj_dim(cyclic_quotient(tp2, 1))
    assert v.kind == "InfiniteCertified"
    assert (v.certificate["a"], v.certificate["b"]) == (0, 1)
    w = proj_dim(cyclic_quotient(tp3, 2))
    assert w.kind == "InfiniteCertified"
    assert (w.certificate["a"], w.certificate["b"]) == (0, 2)


def test_pd_infinite_certificate_recomposes(tp3):
    """Re-verify the recurrence named by the certificate from scratch."""
    m = cyclic_quotient(tp3, 2)
    v = proj_dim(m)
    a, b = v.certificate["a"], v.certificate["b"]
    res = resolution_of(m)
    again = module_iso(res.syzygy(a), res.syzygy(b))
    assert again.status == "isomorphic"
    obstruction = ext(res.syzygy(a), res.syzygy(a + 1), 1)[1]
    assert not obstruction.is_zero()


def test_pd_integer_certificates(zc2):
    v = proj_dim(trivial_module(zc2), depth=6)
    assert v.kind == "InfiniteCertified"
    assert (v.certificate["a"], v.certificate["b"]) == (0, 2)
    w = proj_dim(torsion_trivial(zc2, 2), depth=6)
    assert w.kind == "InfiniteCertified"
    assert (w.certificate["a"], w.certificate["b"]) == (1, 2)


def test_pd_stable_under_depth(ut2, zc2):
    sims = [s for _, s in simple_modules(ut2)]
    for depth in (4, 8, 12):
        v = proj_dim(sims[0], depth=depth)
        assert (v.kind, v.value) == ("Finite", 1)
    for depth in (4, 8):
        w = proj_dim(AlgebraModule.free(zc2, 1), depth=depth)
        assert (w.kind, w.value) == ("Finite", 0)


def test_try_split_cover_detects_projectivity(zc2):
    f = AlgebraModule.free(zc2, 1)
    assert try_split_cover(f) is not None
    assert try_split_cover(trivial_module(zc2)) is None


# -- dimension shift (quantified property) -----------------------------


def test_dimension_shift(tp3, ut2, zc2):
    """Ext^{i+1}(M, N) = Ext^1(syzygy_i(M), N) for 1 <= i <= 4."""
    rng = random.Random(32)
    cases = []
    for alg in (tp3, ut2):
        cases.append((random_module(alg, rng), random_module(alg, rng)))
    cases.append((trivial_module(zc2), torsion_trivial(zc2, 2)))
    for m, n in cases:
        high = ext(m, n, 5)
        for i in range(1, 5):
            shifted = ext(syzygy(m, i), n, 1)
            assert repr(shifted[1]) == repr(high[i + 1])
