"""Bundled algebra constructors.

Every preset validates its structure constants before returning; a
preset that fails validation is a bug, not a user error.
"""

from itertools import permutations

from .algebra import FiniteAlgebra
from .rings import QQ


def truncated_poly(n, base=QQ):
    """k[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    z, o = base.zero, base.one
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            vec = [z] * n
            if i + j < n:
                vec[i + j] = o
            row.append(vec)
        mult.append(row)
    unit = [o] + [z] * (n - 1)
    return FiniteAlgebra(
        base, mult, unit, name="truncated_poly(%d) over %s" % (n, base)
    ).assert_valid()


def _group_algebra_from_table(elements, op, base, name):
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    z, o = base.zero, base.one
    mult = []
    for g in elements:
        row = []
        for h in elements:
            vec = [z] * n
            vec[index[op(g, h)]] = o
            row.append(vec)
        mult.append(row)
    unit = [z] * n
    identity = next(g for g in elements if all(op(g, h) == h for h in elements))
    unit[index[identity]] = o
    return FiniteAlgebra(base, mult, unit, name=name).assert_valid()


def group_algebra(kind, n, base):
    """Group algebra of a cyclic group C_n or the symmetric group S_3.

    ``kind`` is "cyclic" or "symmetric"; for "symmetric" only n = 3 is
    available.
    """
    if kind == "cyclic":
        if n < 1:
            raise ValueError("cyclic group needs n >= 1")
        elements = list(range(n))
        return _group_algebra_from_table(
            elements,
            lambda a, b: (a + b) % n,
            base,
            "group_algebra(cyclic %d) over %s" % (n, base),
        )
    if kind == "symmetric":
        if n != 3:
            raise ValueError("only symmetric group S_3 is bundled")
        elements = sorted(permutations(range(3)))

        def compose(s, t):
            # (s t)(i) = s(t(i))
            return tuple(s[t[i]] for i in range(3))

        return _group_algebra_from_table(
            elements, compose, base, "group_algebra(symmetric 3) over %s" % base
        )
    raise ValueError("unknown group kind %r" % (kind,))


def upper_triangular(n, base=QQ):
    """Upper triangular n x n matrices; basis E_ij (i <= j) in row-major
    order."""
    if n < 1:
        raise ValueError("need n >= 1")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {p: t for t, p in enumerate(pairs)}
    rank = len(pairs)
    z, o = base.zero, base.one
    mult = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            vec = [z] * rank
            if j == k:
                vec[index[(i, l)]] = o
            row.append(vec)
        mult.append(row)
    unit = [z] * rank
    for i in range(n):
        unit[index[(i, i)]] = o
    return FiniteAlgebra(
        base, mult, unit, name="upper_triangular(%d) over %s" % (n, base)
    ).assert_valid()


def quantum_exterior(q, base=QQ):
    """The four-dimensional algebra on 1, x, y, xy with x^2 = y^2 = 0 and
    xy = -q yx.  The parameter must be invertible; q = 0 is rejected."""
    q = base.parse(q) if isinstance(q, str) else q
    if isinstance(q, int):
        q = base.from_int(q)
    if not base.is_unit(q):
        raise ValueError("quantum_exterior parameter must be a unit (q != 0)")
    z, o = base.zero, base.one
    # basis order: 1, x, y, m with m = xy; then y x = -(1/q) m
    yx = base.neg(base.div(o, q))
    vecs = {}
    n = 4
    for i in range(n):
        for j in range(n):
            vecs[(i, j)] = [z] * n
    for j in range(n):
        vecs[(0, j)][j] = o
        vecs[(j, 0)][j] = o
    vecs[(1, 2)][3] = o          # x y = m
    vecs[(2, 1)][3] = yx         # y x = -(1/q) m
    # every other nonunit product vanishes
    mult = [[vecs[(i, j)] for j in range(n)] for i in range(n)]
    unit = [o, z, z, z]
    return FiniteAlgebra(
        base, mult, unit, name="quantum_exterior(%s) over %s" % (base.format(q), base)
    ).assert_valid()


def commutative_fat_point(base=QQ):
    """k[x, y]/(x^2, xy, y^2): basis 1, x, y, all products of x and y
    vanish."""
    z, o = base.zero, base.one
    n = 3
    mult = [[[z] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        mult[0][j][j] = o
        mult[j][0][j] = o
    unit = [o, z, z]
    return FiniteAlgebra(
        base, mult, unit, name="commutative_fat_point over %s" % base
    ).assert_valid()
