"""Algebra layer: presets, opposites, radicals, idempotents, simples."""

import pytest

from gorlab.algebra import AlgebraValidationError, FiniteAlgebra
from gorlab.matrix import Matrix
from gorlab.modules import ModuleError, simple_modules
from gorlab.presets import (
    commutative_fat_point,
    group_algebra,
    quantum_exterior,
    truncated_poly,
    upper_triangular,
)
from gorlab.rings import GF, QQ, ZZ
from gorlab.serialize import trivial_module


def test_presets_validate(tp2, tp3, ut2, qe2, fat, zc2, zc6):
    for alg in (tp2, tp3, ut2, qe2, fat, zc2, zc6):
        alg.assert_valid()
    group_algebra("symmetric", 3, QQ).assert_valid()
    quantum_exterior(2, GF(5)).assert_valid()


def test_preset_ranks(tp2, tp3, ut2, qe2, fat, zc6):
    assert tp2.rank == 2
    assert tp3.rank == 3
    assert ut2.rank == 3
    assert qe2.rank == 4
    assert fat.rank == 3
    assert zc6.rank == 6
    assert group_algebra("symmetric", 3, QQ).rank == 6


def test_unit_multiplies_as_identity(tp3):
    x = tp3.basis_vector(1)
    assert tp3.multiply(tp3.unit, x) == x
    assert tp3.multiply(x, tp3.unit) == x


def test_truncated_poly_nilpotency(tp3):
    x = tp3.basis_vector(1)
    x2 = tp3.multiply(x, x)
    assert x2 == tp3.basis_vector(2)
    assert tp3.multiply(x, x2) == [QQ.zero] * 3


def test_quantum_exterior_relation(qe2):
    # x y = -q y x with q = 2
    x, y = qe2.basis_vector(1), qe2.basis_vector(2)
    xy = qe2.multiply(x, y)
    yx = qe2.multiply(y, x)
    assert xy == [QQ.mul(QQ.from_int(-2), c) for c in yx]
    assert qe2.multiply(x, x) == [QQ.zero] * 4
    assert qe2.multiply(y, y) == [QQ.zero] * 4


def test_opposite_is_involution(ut2, zc2):
    for alg in (ut2, zc2):
        op = alg.opposite()
        assert op.opposite() is alg
        n = alg.rank
        for i in range(n):
            for j in range(n):
                assert op.mult[i][j] == alg.mult[j][i]
        op.assert_valid()


def test_opposite_of_commutative_is_same_table(tp3, zc6):
    for alg in (tp3, zc6):
        assert alg.is_commutative()
        assert alg.opposite().mult == alg.mult


def test_validate_catches_broken_associativity():
    # start from a valid algebra and corrupt one structure constant
    alg = truncated_poly(3)
    mult = [[list(v) for v in row] for row in alg.mult]
    mult[1][1][0] = QQ.one
    broken = FiniteAlgebra(QQ, mult, alg.unit, name="broken")
    with pytest.raises(AlgebraValidationError):
        broken.assert_valid()


def test_radical_dimensions(tp3, ut2, qe2, fat):
    assert tp3.radical_basis().ncols == 2
    assert ut2.radical_basis().ncols == 1
    assert qe2.radical_basis().ncols == 3
    assert fat.radical_basis().ncols == 2
    s3 = group_algebra("symmetric", 3, QQ)
    assert s3.radical_basis().ncols == 0


def test_radical_char_p_group_algebra():
    # F_2[C_2] is local: radical is the augmentation ideal
    a = group_algebra("cyclic", 2, GF(2))
    assert a.radical_basis().ncols == 1
    # F_3[C_2] is semisimple (2 invertible mod 3)
    b = group_algebra("cyclic", 2, GF(3))
    assert b.radical_basis().ncols == 0


def test_upper_triangular_idempotents(ut2):
    idems = ut2.primitive_idempotents()
    assert sorted(tuple(e) for e in idems) == [
        (QQ.zero, QQ.zero, QQ.one),
        (QQ.one, QQ.zero, QQ.zero),
    ]
    # complete and orthogonal
    total = [QQ.zero] * 3
    for e in idems:
        assert ut2.multiply(e, e) == e
        total = [QQ.add(a, b) for a, b in zip(total, e)]
    assert total == ut2.unit
    assert ut2.multiply(idems[0], idems[1]) == [QQ.zero] * 3


def test_simple_modules_counts(tp2, ut2, qe2, fat):
    assert [s.r_invariants().free_rank for _, s in simple_modules(tp2)] == [1]
    assert [s.r_invariants().free_rank for _, s in simple_modules(ut2)] == [1, 1]
    assert [s.r_invariants().free_rank for _, s in simple_modules(qe2)] == [1]
    assert [s.r_invariants().free_rank for _, s in simple_modules(fat)] == [1]


def test_simple_modules_symmetric_group():
    s3 = group_algebra("symmetric", 3, QQ)
    dims = sorted(s.r_invariants().free_rank for _, s in simple_modules(s3))
    assert dims == [1, 1, 2]


def test_simple_modules_reject_integer_base(zc2):
    with pytest.raises(ModuleError):
        simple_modules(zc2)


def test_trivial_module_group_algebra(zc2, zc6):
    for alg in (zc2, zc6):
        t = trivial_module(alg)
        t.check()
        inv = t.r_invariants()
        assert inv.free_rank == 1 and not inv.factors


def test_trivial_module_rejects_non_augmented(tp2):
    # x |-> 1 is not an algebra map out of Q[x]/(x^2)
    with pytest.raises(ModuleError):
        trivial_module(tp2)


def test_opposite_commutes_with_base_change(zc6):
    p2 = GF(2)
    left = zc6.opposite().change_base(p2)
    right = zc6.change_base(p2).opposite()
    assert left.mult == right.mult
    assert left.unit == right.unit


def test_enveloping_commutes_with_base_change(zc2):
    p3 = GF(3)
    left = zc2.enveloping().change_base(p3)
    right = zc2.change_base(p3).enveloping()
    assert left.mult == right.mult
    assert left.unit == right.unit


def test_enveloping_rank(tp2):
    env = tp2.enveloping()
    assert env.rank == 4
    env.assert_valid()


def test_group_algebra_arguments():
    with pytest.raises(ValueError):
        group_algebra("dihedral", 4, ZZ)
