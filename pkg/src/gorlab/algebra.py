"""Finite R-algebras given by structure constants.

An algebra of rank n over the base is a tensor c with c[i][j] the
coordinate vector of e_i * e_j, together with the coordinates of 1.
Everything downstream (opposite, enveloping, regular representations,
radical, idempotents) is computed from c alone.

The radical machinery is field-only.  In characteristic zero the radical
is the kernel of the trace form of the regular representation.  In
characteristic p that criterion is too weak, so we take the descending
chain cut out by the characteristic-polynomial coefficients c_{p^j} of
the regular representation (trace first, then c_p, c_{p^2}, ...); on
each step the constraint is additive in the relevant argument over the
prime field, so plain linear algebra applies.  The chain stabilizes on
the radical once p^j reaches the rank.
"""

import random

from sympy import GF as sympy_GF
from sympy import QQ as sympy_QQ
from sympy import Poly, Symbol

from .matrix import (
    Matrix,
    field_kernel,
    field_solve_matrix,
    rref,
)
from .rings import QQ, ZZ, PrimeField

_T = Symbol("t")


class AlgebraValidationError(ValueError):
    pass


class FiniteAlgebra:
    def __init__(self, base, mult, unit, name=None):
        self.base = base
        self.rank = len(mult)
        n = self.rank
        if any(len(row) != n for row in mult) or any(
            len(vec) != n for row in mult for vec in row
        ):
            raise AlgebraValidationError("structure tensor is not rank x rank x rank")
        if len(unit) != n:
            raise AlgebraValidationError("unit vector has wrong length")
        self.mult = [[list(vec) for vec in row] for row in mult]
        self.unit = list(unit)
        self.name = name or "algebra(rank %d over %s)" % (n, base)
        self._cache = {}

    def __repr__(self):
        return "FiniteAlgebra(%s)" % self.name

    # -- arithmetic on coordinate vectors -----------------------------
    def basis_vector(self, i):
        v = [self.base.zero] * self.rank
        v[i] = self.base.one
        return v

    def multiply(self, x, y):
        b = self.base
        out = [b.zero] * self.rank
        for i, xi in enumerate(x):
            if xi == b.zero:
                continue
            for j, yj in enumerate(y):
                if yj == b.zero:
                    continue
                coef = b.mul(xi, yj)
                for k, ck in enumerate(self.mult[i][j]):
                    if ck != b.zero:
                        out[k] = b.add(out[k], b.mul(coef, ck))
        return out

    def left_mult_matrix(self, x):
        """Matrix of a |-> x * a on basis coordinates."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.rank)]
        return Matrix.from_cols(self.base, cols, self.rank)

    def right_mult_matrix(self, x):
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.rank)]
        return Matrix.from_cols(self.base, cols, self.rank)

    def scalar_element(self, c):
        b = self.base
        return [b.mul(c, u) for u in self.unit]

    def is_commutative(self):
        return all(
            self.mult[i][j] == self.mult[j][i]
            for i in range(self.rank)
            for j in range(i)
        )

    # -- validation ---------------------------------------------------
    def validate(self):
        """Associativity and unit checks on all basis triples/pairs.

        Returns a report dict; raises nothing.  Preset constructors
        assert the report is clean.
        """
        failures = []
        n = self.rank
        for i in range(n):
            ei = self.basis_vector(i)
            if self.multiply(self.unit, ei) != ei:
                failures.append(("unit_left", i))
            if self.multiply(ei, self.unit) != ei:
                failures.append(("unit_right", i))
        for i in range(n):
            for j in range(n):
                ij = self.mult[i][j]
                for k in range(n):
                    lhs = self.multiply(ij, self.basis_vector(k))
                    rhs = self.multiply(self.basis_vector(i), self.mult[j][k])
                    if lhs != rhs:
                        failures.append(("associativity", i, j, k))
        return {"valid": not failures, "failures": failures}

    def assert_valid(self):
        rep = self.validate()
        if not rep["valid"]:
            raise AlgebraValidationError(
                "structure constants invalid: %s" % rep["failures"][:5]
            )
        return self

    # -- derived algebras ---------------------------------------------
    def opposite(self):
        if "opposite" not in self._cache:
            n = self.rank
            op = FiniteAlgebra(
                self.base,
                [[self.mult[j][i] for j in range(n)] for i in range(n)],
                self.unit,
                name="(%s)^op" % self.name,
            )
            op._cache["opposite"] = self
            self._cache["opposite"] = op
        return self._cache["opposite"]

    def enveloping(self):
        """A tensor A^op, with basis (i, j) |-> i * rank + j.

        Left modules over the result are (A, A)-bimodules: (e_i (x) e_j)
        acts as left multiplication by e_i composed with right
        multiplication by e_j.
        """
        if "enveloping" in self._cache:
            return self._cache["enveloping"]
        b = self.base
        n = self.rank
        z = b.zero
        mult = []
        for i in range(n):
            for j in range(n):
                row = []
                for k in range(n):
                    for l in range(n):
                        vec = [z] * (n * n)
                        left = self.mult[i][k]
                        right = self.mult[l][j]
                        for m in range(n):
                            lm = left[m]
                            if lm == z:
                                continue
                            for r in range(n):
                                rr = right[r]
                                if rr != z:
                                    vec[m * n + r] = b.add(
                                        vec[m * n + r], b.mul(lm, rr)
                                    )
                        row.append(vec)
                mult.append(row)
        unit = [z] * (n * n)
        for i in range(n):
            ui = self.unit[i]
            if ui == z:
                continue
            for j in range(n):
                uj = self.unit[j]
                if uj != z:
                    unit[i * n + j] = b.add(unit[i * n + j], b.mul(ui, uj))
        env = FiniteAlgebra(b, mult, unit, name="%s (x) op" % self.name)
        self._cache["enveloping"] = env
        return env

    def change_base(self, new_base):
        """Reduce an integral algebra mod p (or extend Z -> Q)."""
        if self.base is not ZZ:
            raise ValueError("change_base starts from an integral algebra")
        conv = new_base.from_int
        mult = [[[conv(x) for x in vec] for vec in row] for row in self.mult]
        unit = [conv(x) for x in self.unit]
        return FiniteAlgebra(
            new_base, mult, unit, name="%s mod %s" % (self.name, new_base)
        )

    # -- radical and idempotents (field base) -------------------------
    def radical_basis(self):
        """Columns spanning rad(A).  Field base only."""
        if "radical" in self._cache:
            return self._cache["radical"]
        b = self.base
        if not b.is_field:
            raise ValueError("radical_basis needs a field base")
        n = self.rank
        left = [self.left_mult_matrix(self.basis_vector(i)) for i in range(n)]
        if b.char == 0:
            gram = Matrix(
                b,
                [
                    [_trace(left[i].mul(left[j])) for i in range(n)]
                    for j in range(n)
                ],
                n,
            )
            rad = field_kernel(gram)
        else:
            rad = self._radical_char_p(left)
        self._cache["radical"] = rad
        return rad

    def _radical_char_p(self, left):
        b = self.base
        p = b.char
        n = self.rank
        # current ideal, as a column basis of the whole algebra to start
        cur = Matrix.identity(b, n)
        j = 0
        while True:
            k = p**j
            if k > n:
                break
            mats = [
                _left_action_on(self, cur.col(t)) for t in range(cur.ncols)
            ]
            # constraint rows: for each y in the current basis, the map
            # x |-> c_k(L_x L_y) is additive on the current ideal
            rows = []
            for my in mats:
                rows.append(
                    [_charpoly_coeff(mx.mul(my), k) for mx in mats]
                )
            coeffs = field_kernel(Matrix(b, rows, cur.ncols))
            cur = cur.mul(coeffs)
            if cur.ncols == 0:
                break
            j += 1
        return cur

    def semisimple_quotient(self):
        """(Abar, project, lift): Abar = A/rad with its own structure
        constants, project the coordinate map A -> Abar, lift a section.
        """
        if "ssq" in self._cache:
            return self._cache["ssq"]
        b = self.base
        n = self.rank
        rad = self.radical_basis()
        # complement: standard basis vectors completing rad to all of A
        chosen = []
        cur = rad
        for i in range(n):
            cand = cur.hstack(
                Matrix.from_cols(b, [self.basis_vector(i)], n)
            )
            if len(rref(cand)[1]) > cur.ncols:
                chosen.append(i)
                cur = cand
        lift = Matrix.from_cols(b, [self.basis_vector(i) for i in chosen], n)
        full = lift.hstack(rad)
        inv = field_solve_matrix(full, Matrix.identity(b, n))
        proj = inv.take_rows(range(len(chosen)))
        m = len(chosen)
        mult = []
        for i in range(m):
            row = []
            for jj in range(m):
                prod = self.multiply(lift.col(i), lift.col(jj))
                row.append(proj.mul_vec(prod))
            mult.append(row)
        abar = FiniteAlgebra(
            b, mult, proj.mul_vec(self.unit), name="%s / rad" % self.name
        )
        out = (abar, proj, lift)
        self._cache["ssq"] = out
        return out

    def primitive_idempotents(self):
        """A complete orthogonal set of primitive idempotents, as
        coordinate vectors in A.  Computed by splitting the semisimple
        quotient and lifting through the radical."""
        if "idempotents" in self._cache:
            return self._cache["idempotents"]
        b = self.base
        n = self.rank
        rad = self.radical_basis()
        if rad.ncols == 0 and self.rank == 0:
            return []
        abar, proj, lift = self.semisimple_quotient()
        bar_idems = _split_idempotents(abar)
        # lift sequentially, keeping orthogonality
        lifted = []
        s = [b.zero] * n
        for t, ebar in enumerate(bar_idems):
            if t == len(bar_idems) - 1:
                last = [b.sub(u, x) for u, x in zip(self.unit, s)]
                lifted.append(last)
                break
            x = lift.mul_vec(ebar)
            corner = self._corner(s)
            y = corner(x)
            y = self._newton_idempotent(y)
            lifted.append(y)
            s = [b.add(a, c) for a, c in zip(s, y)]
        for e in lifted:
            if self.multiply(e, e) != e:
                raise ArithmeticError("idempotent lifting failed to converge")
        self._cache["idempotents"] = lifted
        return lifted

    def _corner(self, s):
        b = self.base
        f = [b.sub(u, x) for u, x in zip(self.unit, s)]

        def conj(x):
            return self.multiply(f, self.multiply(x, f))

        return conj

    def _newton_idempotent(self, y):
        # y^2 = y mod nilpotents; iterate 3y^2 - 2y^3 to an actual idempotent
        b = self.base
        for _ in range(64):
            y2 = self.multiply(y, y)
            if y2 == y:
                return y
            y3 = self.multiply(y2, y)
            y = [
                b.sub(b.mul(b.from_int(3), a2), b.mul(b.from_int(2), a3))
                for a2, a3 in zip(y2, y3)
            ]
        raise ArithmeticError("idempotent iteration did not converge")


def _trace(m):
    b = m.base
    acc = b.zero
    for i in range(m.nrows):
        acc = b.add(acc, m.rows[i][i])
    return acc


def _left_action_on(algebra, x):
    return algebra.left_mult_matrix(x)


def _charpoly_coeff(m, k):
    """Coefficient c_k of charpoly(m) = t^n + c_1 t^(n-1) + ... + c_n,
    by the Hessenberg recurrence (works in any characteristic)."""
    b = m.base
    n = m.nrows
    if k > n:
        return b.zero
    h = [list(r) for r in m.rows]
    z = b.zero
    for c in range(n - 2):
        pr = None
        for i in range(c + 1, n):
            if h[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        if pr != c + 1:
            h[c + 1], h[pr] = h[pr], h[c + 1]
            for r in h:
                r[c + 1], r[pr] = r[pr], r[c + 1]
        piv = h[c + 1][c]
        inv = b.div(b.one, piv)
        for i in range(c + 2, n):
            if h[i][c] != z:
                f = b.mul(inv, h[i][c])
                h[i] = [b.sub(x, b.mul(f, y)) for x, y in zip(h[i], h[c + 1])]
                for r in h:
                    r[c + 1] = b.add(r[c + 1], b.mul(f, r[i]))
    # p[m] = charpoly of leading m x m block, as coefficient lists
    # (index d = coefficient of t^d), low degree last kept explicit
    polys = [[b.one]]
    for mm in range(1, n + 1):
        prev = polys[mm - 1]
        diag = h[mm - 1][mm - 1]
        cur = _poly_sub(
            b, _poly_shift(prev), _poly_scale(b, prev, diag)
        )
        run = b.one
        for i in range(1, mm):
            run = b.mul(run, h[mm - i][mm - i - 1])
            coef = b.mul(h[mm - 1 - i][mm - 1], run)
            if coef != z:
                cur = _poly_sub(
                    b, cur, _poly_scale(b, polys[mm - 1 - i], coef)
                )
        polys.append(cur)
    cp = polys[n]
    # cp has degree n with leading coefficient 1; c_k multiplies t^(n-k)
    idx = n - k
    return cp[idx] if 0 <= idx < len(cp) else b.zero


# polynomial helpers on coefficient lists, index = degree
def _poly_shift(p):
    return [0] + list(p)


def _poly_scale(b, p, c):
    return [b.mul(c, x) for x in p]


def _poly_sub(b, p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        x = p[i] if i < len(p) else b.zero
        y = q[i] if i < len(q) else b.zero
        out.append(b.sub(x, y))
    return out


# ---------------------------------------------------------------------
# idempotent splitting of a semisimple algebra


def _split_idempotents(abar):
    """Complete orthogonal primitive idempotents of a semisimple algebra.

    Recursively splits corners using zero divisors found through minimal
    polynomial factorization; candidates are scanned deterministically
    before a fixed-seed random phase.  Raises if a corner refuses to
    split but still looks decomposable (only reachable for exotic
    division-algebra blocks, which the bundled presets never produce).
    """
    n = abar.rank
    basis = Matrix.identity(abar.base, n)
    return _split_corner(abar, basis, abar.unit)


def _split_corner(abar, basis, unit):
    b = abar.base
    if basis.ncols == 0:
        return []
    if basis.ncols == 1:
        return [unit]
    cands = _candidate_elements(abar, basis, unit)
    for z in cands:
        e = _try_split_element(abar, z, unit)
        if e is not None:
            f = [b.sub(u, x) for u, x in zip(unit, e)]
            left = _corner_basis(abar, e)
            right = _corner_basis(abar, f)
            return _split_corner(abar, left, e) + _split_corner(abar, right, f)
    # no splitting element: the corner is a division algebra, unit primitive
    return [unit]


def _candidate_elements(abar, basis, unit):
    cols = [basis.col(j) for j in range(basis.ncols)]
    out = list(cols)
    for i in range(len(cols)):
        for j in range(i):
            out.append(
                [abar.base.add(x, y) for x, y in zip(cols[i], cols[j])]
            )
    rng = random.Random(11)
    span = Matrix.from_cols(abar.base, cols, abar.rank)
    for _ in range(40):
        coeffs = [abar.base.from_int(rng.randint(-3, 3)) for _ in cols]
        v = span.mul_vec(coeffs)
        out.append(v)
    return out


def _try_split_element(abar, z, unit):
    """Return a nontrivial idempotent of the corner from z, or None."""
    b = abar.base
    mu = _minimal_polynomial(abar, z, unit)
    factors = _factor_poly(b, mu)
    if len(factors) < 2:
        return None
    f1, m1 = factors[0]
    part1 = _poly_pow(b, f1, m1)
    rest = [b.one]
    for fi, mi in factors[1:]:
        rest = _poly_mul(b, rest, _poly_pow(b, fi, mi))
    g, u, v = _poly_xgcd(b, part1, rest)
    if len(g) != 1:
        return None
    # normalize so that u*part1 + v*rest = 1
    inv = b.div(b.one, g[0])
    u = _poly_scale(b, u, inv)
    e = _poly_eval_in_algebra(abar, _poly_mul(b, u, part1), z, unit)
    zero = [b.zero] * abar.rank
    if e == zero or e == unit:
        return None
    if abar.multiply(e, e) != e:
        return None
    return e


def _corner_basis(abar, e):
    cols = []
    n = abar.rank
    for i in range(n):
        v = abar.multiply(e, abar.multiply(abar.basis_vector(i), e))
        cols.append(v)
    m = Matrix.from_cols(abar.base, cols, n)
    _, piv = rref(m)
    return m.take_cols(piv)


def _minimal_polynomial(abar, z, unit):
    """Monic minimal polynomial of z relative to the corner unit, as a
    coefficient list (index = degree)."""
    b = abar.base
    n = abar.rank
    powers = [unit]
    cur = unit
    while True:
        cur = abar.multiply(cur, z)
        mat = Matrix.from_cols(b, powers, n)
        sol = field_solve_matrix(mat, Matrix.from_cols(b, [cur], n))
        if sol is not None:
            coeffs = [b.neg(x) for x in sol.col(0)]
            coeffs.append(b.one)
            return coeffs
        powers.append(cur)
        if len(powers) > n + 1:
            raise ArithmeticError("minimal polynomial search ran away")


def _factor_poly(base, coeffs):
    """Factor a monic univariate polynomial over Q or F_p via sympy.
    Returns [(coefficient_list, multiplicity), ...]."""
    if isinstance(base, PrimeField):
        dom = sympy_GF(base.p)
        ipoly = Poly([int(c) for c in reversed(coeffs)], _T, domain=dom)
    elif base is QQ:
        from sympy import Rational

        ipoly = Poly(
            [Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
            _T,
            domain=sympy_QQ,
        )
    else:
        raise ValueError("factorization implemented over Q and F_p only")
    _, parts = ipoly.factor_list()
    out = []
    for fac, mult in parts:
        cs = fac.all_coeffs()  # high degree first
        conv = []
        for c in reversed(cs):
            if isinstance(base, PrimeField):
                conv.append(base.from_int(int(c)))
            else:
                from fractions import Fraction

                conv.append(Fraction(int(c.p), int(c.q)))
        # make monic (sympy factors over a field are monic already up to
        # the constant pulled out in factor_list)
        lead = conv[-1]
        conv = [base.div(x, lead) for x in conv]
        out.append((conv, mult))
    return out


def _poly_mul(b, p, q):
    out = [b.zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x == b.zero:
            continue
        for j, y in enumerate(q):
            if y != b.zero:
                out[i + j] = b.add(out[i + j], b.mul(x, y))
    return out


def _poly_pow(b, p, k):
    out = [b.one]
    for _ in range(k):
        out = _poly_mul(b, out, p)
    return out


def _poly_divmod(b, p, q):
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [b.zero] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and any(x != b.zero for x in p):
        if p[-1] == b.zero:
            p.pop()
            continue
        shift = len(p) - 1 - dq
        c = b.div(p[-1], lead)
        quo[shift] = b.add(quo[shift], c)
        for i in range(len(q)):
            p[shift + i] = b.sub(p[shift + i], b.mul(c, q[i]))
        while len(p) > 1 and p[-1] == b.zero:
            p.pop()
        if len(p) - 1 < dq:
            break
    while len(p) > 1 and p[-1] == b.zero:
        p.pop()
    return quo, p


def _poly_xgcd(b, p, q):
    r0, r1 = list(p), list(q)
    s0, s1 = [b.one], [b.zero]
    t0, t1 = [b.zero], [b.one]
    while any(x != b.zero for x in r1):
        quo, rem = _poly_divmod(b, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(b, s0, _poly_mul(b, quo, s1))
        t0, t1 = t1, _poly_sub(b, t0, _poly_mul(b, quo, t1))
    while len(r0) > 1 and r0[-1] == b.zero:
        r0.pop()
    return r0, s0, t0


def _poly_eval_in_algebra(abar, p, z, unit):
    b = abar.base
    acc = [b.zero] * abar.rank
    power = unit
    for c in p:
        if c != b.zero:
            acc = [b.add(a, b.mul(c, x)) for a, x in zip(acc, power)]
        power = abar.multiply(power, z)
    return acc
