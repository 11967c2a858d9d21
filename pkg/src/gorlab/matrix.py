"""Dense exact matrices over Q, F_p and Z, with the solvers the rest of
the package leans on.

Over a field the workhorse is reduced row echelon form; over Z it is the
Smith normal form with unimodular transforms tracked on both sides.  The
SNF pivot rule is fixed (least absolute value, ties broken by lowest row
then lowest column) so integer results are reproducible down to the
transform matrices.

Shapes may be zero in either direction; kernels of maps into R^0, images
of maps out of R^0 and friends all come up constantly in resolutions, so
the degenerate cases are handled rather than rejected.
"""

from .rings import ZZ


class Matrix:
    """An immutable-by-convention dense matrix over a BaseRing."""

    __slots__ = ("base", "nrows", "ncols", "rows")

    def __init__(self, base, rows, ncols=None):
        self.base = base
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, base, n):
        z, o = base.zero, base.one
        return cls(base, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, base, nrows, ncols):
        z = base.zero
        return cls(base, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_cols(cls, base, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs explicit nrows")
            return cls.zeros(base, nrows, 0)
        n = len(cols[0])
        return cls(base, [[c[i] for c in cols] for i in range(n)], len(cols))

    @classmethod
    def from_int_rows(cls, base, rows, ncols=None):
        conv = base.from_int
        return cls(base, [[conv(x) for x in r] for r in rows], ncols)

    # -- access -------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j):
        return [r[j] for r in self.rows]

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def row(self, i):
        return list(self.rows[i])

    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.base is other.base
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.base, self.nrows, self.ncols, tuple(map(tuple, self.rows))))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return "Matrix(%s, %dx%d)" % (self.base, self.nrows, self.ncols)
        body = "; ".join(" ".join(self.base.format(x) for x in r) for r in self.rows)
        return "Matrix(%s, [%s])" % (self.base, body)

    def is_zero(self):
        z = self.base.zero
        return all(x == z for r in self.rows for x in r)

    # -- arithmetic ---------------------------------------------------
    def add(self, other):
        b = self.base
        return Matrix(
            b,
            [
                [b.add(x, y) for x, y in zip(r, s)]
                for r, s in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def sub(self, other):
        b = self.base
        return Matrix(
            b,
            [
                [b.sub(x, y) for x, y in zip(r, s)]
                for r, s in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def neg(self):
        b = self.base
        return Matrix(b, [[b.neg(x) for x in r] for r in self.rows], self.ncols)

    def scale(self, c):
        b = self.base
        return Matrix(b, [[b.mul(c, x) for x in r] for r in self.rows], self.ncols)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError(
                "shape mismatch %s * %s" % (self.shape(), other.shape())
            )
        b = self.base
        z = b.zero
        ocols = other.ncols
        out = []
        for r in self.rows:
            row = []
            for j in range(ocols):
                acc = z
                for k, x in enumerate(r):
                    if x != z:
                        acc = b.add(acc, b.mul(x, other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(b, out, ocols)

    def mul_vec(self, v):
        b = self.base
        z = b.zero
        out = []
        for r in self.rows:
            acc = z
            for x, y in zip(r, v):
                if x != z and y != z:
                    acc = b.add(acc, b.mul(x, y))
            out.append(acc)
        return out

    def transpose(self):
        return Matrix(
            self.base,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(
            self.base,
            [r + s for r, s in zip(self.rows, other.rows)],
            self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.base, self.rows + other.rows, self.ncols)

    def take_cols(self, idx):
        return Matrix(
            self.base, [[r[j] for j in idx] for r in self.rows], len(idx)
        )

    def take_rows(self, idx):
        return Matrix(self.base, [self.rows[i] for i in idx], self.ncols)

    def kron(self, other):
        """Kronecker product, used to build enveloping-algebra actions."""
        b = self.base
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append([b.mul(x, y) for x in r for y in s])
        return Matrix(b, rows, self.ncols * other.ncols)

    def map_base(self, new_base, conv):
        return Matrix(new_base, [[conv(x) for x in r] for r in self.rows], self.ncols)


# ---------------------------------------------------------------------
# field elimination


def rref(m):
    """Reduced row echelon form.  Returns (echelon Matrix, pivot column list)."""
    b = m.base
    if not b.is_field:
        raise ValueError("rref needs a field base")
    rows = [list(r) for r in m.rows]
    z = b.zero
    pivots = []
    r = 0
    for c in range(m.ncols):
        pr = None
        for i in range(r, m.nrows):
            if rows[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = b.div(b.one, rows[r][c])
        rows[r] = [b.mul(inv, x) for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [b.sub(x, b.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return Matrix(b, rows, m.ncols), pivots


def field_rank(m):
    return len(rref(m)[1])


def field_kernel(m):
    """Basis of the right kernel over a field, as a matrix of columns."""
    b = m.base
    ech, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    cols = []
    for f in free:
        v = [b.zero] * m.ncols
        v[f] = b.one
        for i, p in enumerate(pivots):
            v[p] = b.neg(ech.rows[i][f])
        cols.append(v)
    return Matrix.from_cols(b, cols, m.ncols)


def field_solve_matrix(m, rhs):
    """Solve m X = rhs over a field; None when inconsistent."""
    b = m.base
    aug = m.hstack(rhs)
    ech, pivots = rref(aug)
    for p in pivots:
        if p >= m.ncols:
            return None
    out_cols = []
    for j in range(rhs.ncols):
        v = [b.zero] * m.ncols
        for i, p in enumerate(pivots):
            v[p] = ech.rows[i][m.ncols + j]
        out_cols.append(v)
    return Matrix.from_cols(b, out_cols, m.ncols)


# ---------------------------------------------------------------------
# Smith normal form


class SmithForm:
    """U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...

    ``uinv`` and ``vinv`` are the tracked inverses; ``diagonal`` lists the
    nonzero diagonal entries (all positive), and ``invariant_factors``
    the entries >= 2 after normalization.
    """

    __slots__ = ("u", "uinv", "v", "vinv", "d", "diagonal")

    def __init__(self, u, uinv, v, vinv, d):
        self.u = u
        self.uinv = uinv
        self.v = v
        self.vinv = vinv
        self.d = d
        self.diagonal = [
            d.rows[i][i] for i in range(min(d.nrows, d.ncols)) if d.rows[i][i] != 0
        ]

    @property
    def rank(self):
        return len(self.diagonal)

    @property
    def invariant_factors(self):
        return [x for x in self.diagonal if x not in (1, -1)]


def smith_normal_form(m):
    if m.base is not ZZ:
        raise ValueError("Smith normal form is an integer operation")
    n, c = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    uinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    vinv = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def addmul_row(src, dst, q):
        # row dst += q * row src
        if q == 0:
            return
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]
        for r in uinv:
            r[src] -= q * r[dst]

    def addmul_col(src, dst, q):
        if q == 0:
            return
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]
        vinv[src] = [x - q * y for x, y in zip(vinv[src], vinv[dst])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    t = 0
    while t < min(n, c):
        # deterministic pivot: least |value|, ties by lowest row then column
        best = None
        for i in range(t, n):
            for j in range(t, c):
                x = a[i][j]
                if x != 0:
                    key = (abs(x), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        dirty = False
        piv = a[t][t]
        for i in range(t + 1, n):
            if a[i][t] != 0:
                q = a[i][t] // piv
                addmul_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, c):
            if a[t][j] != 0:
                q = a[t][j] // piv
                addmul_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the remaining block for the factor chain
        stuck = False
        for i in range(t + 1, n):
            if stuck:
                break
            for j in range(t + 1, c):
                if a[i][j] % piv != 0:
                    addmul_row(i, t, 1)
                    stuck = True
                    break
        if stuck:
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    return SmithForm(
        Matrix(ZZ, u, n),
        Matrix(ZZ, uinv, n),
        Matrix(ZZ, v, c),
        Matrix(ZZ, vinv, c),
        Matrix(ZZ, a, c),
    )


def z_kernel(m):
    """Basis of {x in Z^c : m x = 0}; a saturated sublattice of Z^c."""
    snf = smith_normal_form(m)
    r = snf.rank
    return snf.v.take_cols(range(r, m.ncols))


def z_solve_matrix(m, rhs):
    """Integer solve m X = rhs; None when no integral solution exists."""
    snf = smith_normal_form(m)
    ub = snf.u.mul(rhs)
    r = snf.rank
    ycols = []
    for j in range(rhs.ncols):
        y = [0] * m.ncols
        for i in range(m.nrows):
            val = ub.rows[i][j]
            if i < r:
                d = snf.d.rows[i][i]
                if val % d != 0:
                    return None
                y[i] = val // d
            elif val != 0:
                return None
        ycols.append(y)
    return snf.v.mul(Matrix.from_cols(ZZ, ycols, m.ncols))


# ---------------------------------------------------------------------
# base-independent entry points


def kernel(m):
    if m.base.is_field:
        return field_kernel(m)
    return z_kernel(m)


def solve_matrix(m, rhs):
    if m.nrows != rhs.nrows:
        raise ValueError(
            "solve: lhs has %d rows, rhs has %d" % (m.nrows, rhs.nrows)
        )
    if m.base.is_field:
        return field_solve_matrix(m, rhs)
    return z_solve_matrix(m, rhs)


def solve(m, b_vec):
    x = solve_matrix(m, Matrix.from_cols(m.base, [list(b_vec)], m.nrows))
    if x is None:
        return None
    return x.col(0)


def rank(m):
    if m.base.is_field:
        return field_rank(m)
    return smith_normal_form(m).rank


def column_space_basis(m):
    """A matrix whose columns are a basis of the column span.

    Over a field the basis is a subset of the original columns (the pivot
    columns); over Z it is a lattice basis of the column lattice, which
    in general is not spanned by any subset of the input columns.
    """
    if m.base.is_field:
        _, piv = rref(m)
        return m.take_cols(piv)
    snf = smith_normal_form(m)
    cols = []
    for i, d in enumerate(snf.diagonal):
        cols.append([d * x for x in snf.uinv.col(i)])
    return Matrix.from_cols(ZZ, cols, m.nrows)


def in_span(m, v):
    return solve(m, v) is not None


def cokernel_data(m):
    """Invariants of R^nrows / im(m): (free_rank, invariant_factors).

    Over a field the second component is always empty and free_rank is
    the dimension of the cokernel.
    """
    if m.base.is_field:
        return m.nrows - field_rank(m), []
    snf = smith_normal_form(m)
    return m.nrows - snf.rank, snf.invariant_factors


def det(m):
    """Exact determinant, by fraction-free elimination over Z and plain
    elimination over fields.  Square matrices only."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.base.one
    b = m.base
    if b.is_field:
        rows = [list(r) for r in m.rows]
        dval = b.one
        for c in range(n):
            pr = None
            for i in range(c, n):
                if rows[i][c] != b.zero:
                    pr = i
                    break
            if pr is None:
                return b.zero
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                dval = b.neg(dval)
            dval = b.mul(dval, rows[c][c])
            inv = b.div(b.one, rows[c][c])
            for i in range(c + 1, n):
                f = b.mul(inv, rows[i][c])
                rows[i] = [b.sub(x, b.mul(f, y)) for x, y in zip(rows[i], rows[c])]
        return dval
    # Bareiss over Z
    rows = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if rows[c][c] == 0:
            pr = None
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                return 0
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                rows[i][j] = (rows[i][j] * rows[c][c] - rows[i][c] * rows[c][j]) // prev
            rows[i][c] = 0
        prev = rows[c][c]
    return sign * rows[n - 1][n - 1]
