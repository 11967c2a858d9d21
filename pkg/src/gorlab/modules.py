"""Finitely generated modules over a finite algebra, and the maps
between them.

A module is stored by an R-presentation (generators and relations over
the base ring) plus one action matrix per algebra basis element.  Left
and right modules share one engine: a right A-module is a left module
over A^op, and ``as_left`` performs that relabeling without touching
the matrices.

Design notes that matter for correctness:

* Everything is computed at generator level, "mod relations": two
  matrices represent the same map when their difference lands columnwise
  in the span of the target's relations.

* Over Z a submodule of a free module is free, so kernels and images of
  maps between lattices stay in lattice form (no relations); honest
  torsion presentations appear only where they must (cokernels, p-torsion
  modules, Hom groups).

* Hom_A(M, N) is carved out of Hom_R(M, N) by linear conditions with
  slack variables absorbing the relations of N, then reduced modulo the
  maps that are zero on generators (rel_N composed with anything).
"""

import random

from .matrix import (
    Matrix,
    column_space_basis,
    cokernel_data,
    kernel,
    solve_matrix,
)
from .rmodules import ModuleInvariants, PresentedRModule


class ModuleError(ValueError):
    pass


def _eq_mod(diff, rel):
    """Does every column of diff lie in the column span of rel?"""
    if diff.is_zero():
        return True
    if rel.ncols == 0:
        return False
    return solve_matrix(rel, diff) is not None


class AlgebraModule:
    """A left or right module over a FiniteAlgebra, by presentation."""

    def __init__(self, algebra, side, gens, relations, action, name=None,
                 free_rank=None):
        if side not in ("left", "right"):
            raise ModuleError("side must be 'left' or 'right'")
        self.algebra = algebra
        self.side = side
        self.gens = gens
        base = algebra.base
        if relations is None:
            relations = Matrix.zeros(base, gens, 0)
        self.relations = relations
        self.action = list(action)
        if len(self.action) != algebra.rank:
            raise ModuleError("need one action matrix per algebra basis element")
        self.name = name or "module(%d gens over %s)" % (gens, algebra.name)
        self.free_rank = free_rank  # set when constructed as a free module
        self._cache = {}

    @property
    def base(self):
        return self.algebra.base

    def __repr__(self):
        return "AlgebraModule(%s, %s, %s)" % (self.name, self.side, self.r_invariants())

    # -- basic structure ----------------------------------------------
    @classmethod
    def zero(cls, algebra, side="left"):
        return cls(
            algebra, side, 0, Matrix.zeros(algebra.base, 0, 0),
            [Matrix.zeros(algebra.base, 0, 0)] * algebra.rank,
            name="0",
        )

    @classmethod
    def free(cls, algebra, k, side="left", name=None):
        """A^k with R-coordinates (copy j, basis element t) at j*n + t."""
        n = algebra.rank
        eye = Matrix.identity(algebra.base, k)
        if side == "left":
            mats = [algebra.left_mult_matrix(algebra.basis_vector(i)) for i in range(n)]
        else:
            mats = [algebra.right_mult_matrix(algebra.basis_vector(i)) for i in range(n)]
        action = [eye.kron(m) for m in mats]
        return cls(
            algebra, side, n * k, None, action,
            name=name or ("A^%d" % k if side == "left" else "A^%d (right)" % k),
            free_rank=k,
        )

    def is_lattice(self):
        return self.relations.ncols == 0

    def as_left(self):
        """The same data viewed as a left module (over A^op if this is a
        right module).  Action matrices are unchanged."""
        if self.side == "left":
            return self
        out = AlgebraModule(
            self.algebra.opposite(), "left", self.gens, self.relations,
            self.action, name=self.name, free_rank=self.free_rank,
        )
        out._cache = self._cache
        return out

    def presented(self):
        return PresentedRModule(self.base, self.gens, self.relations)

    def r_invariants(self):
        return self.presented().normal_form

    def apply(self, avec, x):
        """Act by the algebra element with coordinates avec on the module
        element with generator coordinates x."""
        b = self.base
        out = [b.zero] * self.gens
        for i, c in enumerate(avec):
            if c == b.zero:
                continue
            img = self.action[i].mul_vec(x)
            out = [b.add(o, b.mul(c, v)) for o, v in zip(out, img)]
        return out

    def action_matrix(self, avec):
        """Matrix of acting by the algebra element with coordinates avec."""
        b = self.base
        acc = Matrix.zeros(b, self.gens, self.gens)
        for i, c in enumerate(avec):
            if c != b.zero:
                acc = acc.add(self.action[i].scale(c))
        return acc

    def unit_matrix(self):
        b = self.base
        acc = Matrix.zeros(b, self.gens, self.gens)
        for i, c in enumerate(self.algebra.unit):
            if c != b.zero:
                acc = acc.add(self.action[i].scale(c))
        return acc

    def generator_vector(self, j):
        v = [self.base.zero] * self.gens
        v[j] = self.base.one
        return v

    def free_generator_vector(self, j):
        """Coordinates of the j-th module generator of a free module
        (the unit of A sitting in copy j)."""
        if self.free_rank is None:
            raise ModuleError("not constructed as a free module")
        n = self.algebra.rank
        b = self.base
        v = [b.zero] * self.gens
        for t, u in enumerate(self.algebra.unit):
            v[j * n + t] = u
        return v

    def check(self):
        """Structural validation; raises ModuleError on the first failure."""
        rel = self.relations
        n = self.algebra.rank
        if not _eq_mod(self.unit_matrix().sub(Matrix.identity(self.base, self.gens)), rel):
            raise ModuleError("unit does not act as the identity on %s" % self.name)
        for i in range(n):
            if rel.ncols and solve_matrix(rel, self.action[i].mul(rel)) is None:
                raise ModuleError(
                    "action of basis element %d does not preserve relations" % i
                )
        c = self.algebra.mult
        b = self.base
        for i in range(n):
            for j in range(n):
                if self.side == "left":
                    prod = self.action[i].mul(self.action[j])
                else:
                    prod = self.action[j].mul(self.action[i])
                expect = Matrix.zeros(b, self.gens, self.gens)
                for k, ck in enumerate(c[i][j]):
                    if ck != b.zero:
                        expect = expect.add(self.action[k].scale(ck))
                if not _eq_mod(prod.sub(expect), rel):
                    raise ModuleError(
                        "action incompatible with structure constants at (%d, %d)"
                        % (i, j)
                    )
        return self


class ModuleMap:
    """A homomorphism, stored as its matrix on generator coordinates."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        if matrix.nrows != target.gens or matrix.ncols != source.gens:
            raise ModuleError(
                "map matrix is %dx%d but needs %dx%d"
                % (matrix.nrows, matrix.ncols, target.gens, source.gens)
            )
        self.source = source
        self.target = target
        self.matrix = matrix

    def __repr__(self):
        return "ModuleMap(%s -> %s)" % (self.source.name, self.target.name)

    def compose(self, other):
        """self after other."""
        if other.target is not self.source:
            if other.target.gens != self.source.gens:
                raise ModuleError("composition shape mismatch")
        return ModuleMap(other.source, self.target, self.matrix.mul(other.matrix))

    def add(self, other):
        return ModuleMap(self.source, self.target, self.matrix.add(other.matrix))

    def sub(self, other):
        return ModuleMap(self.source, self.target, self.matrix.sub(other.matrix))

    def scale(self, c):
        return ModuleMap(self.source, self.target, self.matrix.scale(c))

    def is_zero(self):
        return _eq_mod(self.matrix, self.target.relations)

    def equals(self, other):
        return _eq_mod(self.matrix.sub(other.matrix), self.target.relations)

    def check_linear(self):
        rel_t = self.target.relations
        if self.source.relations.ncols:
            img = self.matrix.mul(self.source.relations)
            if not _eq_mod(img, rel_t):
                raise ModuleError("map does not kill source relations")
        for i in range(self.source.algebra.rank):
            diff = self.target.action[i].mul(self.matrix).sub(
                self.matrix.mul(self.source.action[i])
            )
            if not _eq_mod(diff, rel_t):
                raise ModuleError("map is not linear for basis element %d" % i)
        return self

    def is_surjective(self):
        free, factors = cokernel_data(self.matrix.hstack(self.target.relations))
        return free == 0 and not factors


def identity_map(m):
    return ModuleMap(m, m, Matrix.identity(m.base, m.gens))


def zero_map(source, target):
    return ModuleMap(source, target, Matrix.zeros(source.base, target.gens, source.gens))


def free_module_map(source, target, images):
    """A-linear map out of a free module, from images of its module
    generators.  images[j] is a coordinate vector in the target."""
    if source.free_rank is None:
        raise ModuleError("source must be a free module")
    n = source.algebra.rank
    cols = []
    for j in range(source.free_rank):
        for t in range(n):
            cols.append(target.action[t].mul_vec(images[j]))
    return ModuleMap(source, target, Matrix.from_cols(target.base, cols, target.gens))


# ---------------------------------------------------------------------
# sub, quotient, sum


def normalize_module(m):
    """An isomorphic module with unit relations squeezed out, plus the
    projection and a section.

    Over a field the result has no relations at all; over Z the result
    keeps one diagonal relation per invariant factor >= 2.  Returns
    (N, proj: M -> N, sect: N -> M).
    """
    b = m.base
    rel = m.relations
    if rel.ncols == 0:
        return m, identity_map(m), identity_map(m)
    if b.is_field:
        from .matrix import rref

        sub = column_space_basis(rel)
        chosen = []
        cur = sub
        for i in range(m.gens):
            cand = cur.hstack(Matrix.from_cols(b, [m.generator_vector(i)], m.gens))
            if len(rref(cand)[1]) > cur.ncols:
                chosen.append(i)
                cur = cand
        sect_m = Matrix.from_cols(b, [m.generator_vector(i) for i in chosen], m.gens)
        full = sub.hstack(sect_m)
        inv = solve_matrix(full, Matrix.identity(b, m.gens))
        proj_m = inv.take_rows(range(sub.ncols, m.gens))
        new_rel = None
        keep = len(chosen)
    else:
        from .matrix import smith_normal_form

        snf = smith_normal_form(rel)
        keep_idx = [
            i
            for i in range(m.gens)
            if i >= snf.rank or snf.d.rows[i][i] not in (1, -1)
        ]
        keep = len(keep_idx)
        proj_m = snf.u.take_rows(keep_idx)
        sect_m = snf.uinv.take_cols(keep_idx)
        rel_cols = []
        for pos, i in enumerate(keep_idx):
            if i < snf.rank:
                col = [0] * keep
                col[pos] = snf.d.rows[i][i]
                rel_cols.append(col)
        new_rel = Matrix.from_cols(b, rel_cols, keep)
    action = [proj_m.mul(a.mul(sect_m)) for a in m.action]
    nm = AlgebraModule(
        m.algebra, m.side, keep, new_rel, action, name=m.name,
    )
    proj = ModuleMap(m, nm, proj_m)
    sect = ModuleMap(nm, m, sect_m)
    return nm, proj, sect


def submodule(m, cols, name=None):
    """The submodule of m generated by the given coordinate columns.

    The span must be action-closed mod relations (it is for kernels and
    images, the only callers).  Returns (S, inclusion).
    """
    b = m.base
    pool = cols.hstack(m.relations)
    lat = column_space_basis(pool)
    rel_coords = solve_matrix(lat, m.relations) if m.relations.ncols else None
    action = []
    helper = lat.hstack(m.relations)
    for a in m.action:
        img = a.mul(lat)
        sol = solve_matrix(helper, img)
        if sol is None:
            raise ModuleError("submodule span is not action-closed")
        action.append(sol.take_rows(range(lat.ncols)))
    s = AlgebraModule(
        m.algebra, m.side, lat.ncols, rel_coords, action,
        name=name or ("sub of %s" % m.name),
    )
    return s, ModuleMap(s, m, lat)


def quotient_module(m, cols, name=None):
    """m modulo the submodule generated by the columns.  Returns
    (Q, projection), with Q normalized."""
    rel = m.relations.hstack(cols)
    raw = AlgebraModule(
        m.algebra, m.side, m.gens, rel, m.action,
        name=name or ("quotient of %s" % m.name),
    )
    q, proj, _ = normalize_module(raw)
    q.name = name or ("quotient of %s" % m.name)
    return q, ModuleMap(m, q, proj.matrix)


def kernel_module(f, name=None):
    """Kernel of a module map, as a submodule of the source."""
    m, t = f.source, f.target
    if t.relations.ncols:
        big = kernel(f.matrix.hstack(t.relations))
        cols = big.take_rows(range(m.gens))
    else:
        cols = kernel(f.matrix)
    return submodule(m, cols, name=name or ("ker into %s" % t.name))


def image_in_coords(f):
    """Columns spanning the image of f inside the target coordinates."""
    return f.matrix


def homology_module(d_in, d_out, name=None):
    """ker(d_out)/im(d_in) with its inherited action.

    Either differential may be None (treated as the zero map at that
    end).  When both are given they must compose to zero mod relations.
    """
    mid = d_out.source if d_out is not None else d_in.target
    if d_out is not None:
        k, incl = kernel_module(d_out)
    else:
        k, incl = mid, identity_map(mid)
    if d_in is None:
        return k
    helper = incl.matrix.hstack(mid.relations)
    sol = solve_matrix(helper, d_in.matrix)
    if sol is None:
        raise ModuleError("image does not land in the kernel (d^2 != 0?)")
    img_coords = sol.take_rows(range(k.gens))
    h, _ = quotient_module(k, img_coords, name=name or "homology")
    return h


def direct_sum(mods, name=None):
    """Direct sum with injection and projection maps:
    (S, injections, projections)."""
    if not mods:
        raise ModuleError("empty direct sum")
    alg = mods[0].algebra
    side = mods[0].side
    b = mods[0].base
    gens = sum(m.gens for m in mods)
    offs = []
    o = 0
    for m in mods:
        offs.append(o)
        o += m.gens
    rel_cols = []
    for off, m in zip(offs, mods):
        for c in m.relations.cols():
            v = [b.zero] * gens
            v[off:off + m.gens] = c
            rel_cols.append(v)
    rel = Matrix.from_cols(b, rel_cols, gens)
    action = []
    for i in range(alg.rank):
        big = Matrix.zeros(b, gens, gens)
        rows = [list(r) for r in big.rows]
        for off, m in zip(offs, mods):
            a = m.action[i]
            for u in range(m.gens):
                for v in range(m.gens):
                    rows[off + u][off + v] = a.rows[u][v]
        action.append(Matrix(b, rows, gens))
    s = AlgebraModule(alg, side, gens, rel, action,
                      name=name or " + ".join(m.name for m in mods))
    injections = []
    projections = []
    eye = Matrix.identity(b, gens)
    for off, m in zip(offs, mods):
        injections.append(ModuleMap(m, s, eye.take_cols(range(off, off + m.gens))))
        projections.append(ModuleMap(s, m, eye.take_rows(range(off, off + m.gens))))
    return s, injections, projections


# ---------------------------------------------------------------------
# Hom


class HomSpace:
    """Hom_A(M, N) as an R-module with explicit generating maps.

    ``gens`` are representative ModuleMaps whose classes generate;
    ``presentation`` records the relations among them (including maps
    that are zero because they land in the relations of N).
    """

    def __init__(self, source, target, gens, presentation):
        self.source = source
        self.target = target
        self.gens = gens
        self.presentation = presentation

    @property
    def invariants(self):
        return self.presentation.normal_form

    def element(self, coeffs):
        b = self.source.base
        acc = Matrix.zeros(b, self.target.gens, self.source.gens)
        for c, g in zip(coeffs, self.gens):
            if c != b.zero:
                acc = acc.add(g.matrix.scale(c))
        return ModuleMap(self.source, self.target, acc)

    def coords(self, f):
        """Coordinates of a hom in terms of the generators (exact, not
        just mod relations).  Raises if f is not in the span."""
        mat = self._gen_matrix()
        vec = _vec(f.matrix)
        sol = solve_matrix(mat, Matrix.from_cols(self.source.base, [vec], len(vec)))
        if sol is None:
            raise ModuleError("map is not in the computed Hom span")
        return sol.col(0)

    def _gen_matrix(self):
        cols = [_vec(g.matrix) for g in self.gens]
        return Matrix.from_cols(
            self.source.base, cols, self.target.gens * self.source.gens
        )

    def __repr__(self):
        return "HomSpace(%s -> %s; %s)" % (
            self.source.name, self.target.name, self.invariants,
        )


def _vec(mat):
    out = []
    for r in mat.rows:
        out.extend(r)
    return out


def _unvec(base, flat, nrows, ncols):
    rows = [flat[i * ncols:(i + 1) * ncols] for i in range(nrows)]
    return Matrix(base, rows, ncols)


def hom_module(m, n):
    """Hom over the algebra between two modules on the same side.

    Both are converted to left modules first; mixing sides is an error.
    """
    if m.side != n.side:
        raise ModuleError("hom between modules on different sides")
    ml, nl = m.as_left(), n.as_left()
    if ml.algebra is not nl.algebra:
        raise ModuleError("hom between modules over different algebras")
    return _hom_left(ml, nl)


def _hom_left(m, n):
    b = m.base
    gm, gn = m.gens, n.gens
    nvars = gn * gm
    rel_n = n.relations
    slack_width = rel_n.ncols
    rows = []

    def emit(coeff_map, slack_block):
        # one scalar equation: sum coeff_map[var] * x_var + rel_n-slack = 0
        row = [b.zero] * nvars
        for var, c in coeff_map.items():
            row[var] = b.add(row[var], c)
        rows.append((row, slack_block))

    blocks = []

    def new_block():
        blocks.append(len(blocks))
        return len(blocks) - 1

    # F * rel_m lands in im(rel_n)
    for c_idx in range(m.relations.ncols):
        col = m.relations.col(c_idx)
        blk = new_block() if slack_width else None
        for u in range(gn):
            cm = {}
            for v in range(gm):
                if col[v] != b.zero:
                    cm[u * gm + v] = col[v]
            emit(cm, (blk, u))
    # A-linearity: act_n[i] F - F act_m[i] lands in im(rel_n), columnwise
    for i in range(m.algebra.rank):
        an = n.action[i]
        am = m.action[i]
        for v in range(gm):
            blk = new_block() if slack_width else None
            for u in range(gn):
                cm = {}
                for up in range(gn):
                    c = an.rows[u][up]
                    if c != b.zero:
                        key = up * gm + v
                        cm[key] = b.add(cm.get(key, b.zero), c)
                for vp in range(gm):
                    c = am.rows[vp][v]
                    if c != b.zero:
                        key = u * gm + vp
                        cm[key] = b.sub(cm.get(key, b.zero), c)
                emit(cm, (blk, u))

    nblocks = len(blocks)
    total = nvars + nblocks * slack_width
    big_rows = []
    for row, slack in rows:
        full = list(row) + [b.zero] * (nblocks * slack_width)
        if slack is not None and slack_width:
            blk, u = slack
            base_off = nvars + blk * slack_width
            for w in range(slack_width):
                full[base_off + w] = rel_n.rows[u][w]
        big_rows.append(full)
    if big_rows:
        big = Matrix(b, big_rows, total)
        ker = kernel(big)
        f_part = ker.take_rows(range(nvars))
    else:
        f_part = Matrix.identity(b, nvars)
    span = column_space_basis(f_part)

    # quotient by maps whose image lies in the relations of n
    triv_cols = []
    for w in range(rel_n.ncols):
        col = rel_n.col(w)
        for v in range(gm):
            mat = Matrix.zeros(b, gn, gm)
            rows2 = [list(r) for r in mat.rows]
            for u in range(gn):
                rows2[u][v] = col[u]
            triv_cols.append(_vec(Matrix(b, rows2, gm)))
    gens = [
        ModuleMap(m, n, _unvec(b, span.col(j), gn, gm))
        for j in range(span.ncols)
    ]
    if triv_cols:
        triv = Matrix.from_cols(b, triv_cols, nvars)
        coords = solve_matrix(span, triv)
        if coords is None:
            raise ModuleError("trivial homs escaped the computed span")
        pres = PresentedRModule(b, span.ncols, coords)
    else:
        pres = PresentedRModule(b, span.ncols)
    return HomSpace(m, n, gens, pres)


def module_from_homs(algebra, side, hom_space, operators, name=None, check=False):
    """Endow a Hom space with an algebra action.

    ``operators(i, f)`` must return the ModuleMap obtained by acting with
    basis element i on f; its coordinates in the generating maps define
    the action matrix.
    """
    cols_per = []
    for i in range(algebra.rank):
        cols = []
        for g in hom_space.gens:
            cols.append(hom_space.coords(operators(i, g)))
        cols_per.append(
            Matrix.from_cols(algebra.base, cols, len(hom_space.gens))
        )
    mod = AlgebraModule(
        algebra, side, len(hom_space.gens),
        hom_space.presentation.relations, cols_per, name=name,
    )
    if check:
        mod.check()
    return mod


# ---------------------------------------------------------------------
# tensor


def tensor_over_algebra(right_mod, left_mod, name=None):
    """(right A-module) tensor_A (left A-module) as an R-module.

    Returns (T, None) for a plain right module.  If ``right_mod`` is a
    Bimodule the result carries the leftover left action and the second
    component is the resulting AlgebraModule; see ``Bimodule.tensor``.
    """
    r = right_mod
    m = left_mod.as_left()
    if r.side != "right":
        raise ModuleError("first tensor factor must be a right module")
    b = m.base
    gr, gm = r.gens, m.gens
    gens = gr * gm

    def slot(u, v):
        return u * gm + v

    cols = []
    for c_idx in range(r.relations.ncols):
        col = r.relations.col(c_idx)
        for v in range(gm):
            vec = [b.zero] * gens
            for u in range(gr):
                vec[slot(u, v)] = col[u]
            cols.append(vec)
    for c_idx in range(m.relations.ncols):
        col = m.relations.col(c_idx)
        for u in range(gr):
            vec = [b.zero] * gens
            for v in range(gm):
                vec[slot(u, v)] = col[v]
            cols.append(vec)
    n = r.algebra.rank
    for i in range(n):
        rho = r.action[i]
        lam = m.action[i]
        for u in range(gr):
            for v in range(gm):
                vec = [b.zero] * gens
                for up in range(gr):
                    c = rho.rows[up][u]
                    if c != b.zero:
                        vec[slot(up, v)] = b.add(vec[slot(up, v)], c)
                for vp in range(gm):
                    c = lam.rows[vp][v]
                    if c != b.zero:
                        vec[slot(u, vp)] = b.sub(vec[slot(u, vp)], c)
                cols.append(vec)
    rel = Matrix.from_cols(b, cols, gens)
    return PresentedRModule(b, gens, rel), rel


# ---------------------------------------------------------------------
# bimodules


class Bimodule:
    """An (A, A)-bimodule: one presentation, two commuting actions."""

    def __init__(self, algebra, gens, relations, left_action, right_action,
                 name=None):
        self.algebra = algebra
        self.gens = gens
        base = algebra.base
        self.relations = relations if relations is not None else Matrix.zeros(base, gens, 0)
        self.left_action = list(left_action)
        self.right_action = list(right_action)
        self.name = name or "bimodule(%d gens)" % gens

    @property
    def base(self):
        return self.algebra.base

    def __repr__(self):
        inv = PresentedRModule(self.base, self.gens, self.relations).normal_form
        return "Bimodule(%s; %s)" % (self.name, inv)

    def as_left_module(self):
        return AlgebraModule(
            self.algebra, "left", self.gens, self.relations, self.left_action,
            name="%s as left" % self.name,
        )

    def as_right_module(self):
        return AlgebraModule(
            self.algebra, "right", self.gens, self.relations, self.right_action,
            name="%s as right" % self.name,
        )

    def as_enveloping_module(self):
        """The same data as a left module over A (x) A^op."""
        env = self.algebra.enveloping()
        n = self.algebra.rank
        action = []
        for i in range(n):
            li = self.left_action[i]
            for j in range(n):
                action.append(li.mul(self.right_action[j]))
        return AlgebraModule(
            env, "left", self.gens, self.relations, action,
            name="%s over enveloping" % self.name,
        )

    @classmethod
    def from_enveloping_module(cls, algebra, menv, name=None):
        n = algebra.rank
        b = algebra.base
        left = []
        right = []
        for i in range(n):
            acc = Matrix.zeros(b, menv.gens, menv.gens)
            for j, uj in enumerate(algebra.unit):
                if uj != b.zero:
                    acc = acc.add(menv.action[i * n + j].scale(uj))
            left.append(acc)
        for j in range(n):
            acc = Matrix.zeros(b, menv.gens, menv.gens)
            for i, ui in enumerate(algebra.unit):
                if ui != b.zero:
                    acc = acc.add(menv.action[i * n + j].scale(ui))
            right.append(acc)
        return cls(algebra, menv.gens, menv.relations, left, right, name=name)

    def check(self):
        self.as_left_module().check()
        self.as_right_module().check()
        rel = self.relations
        for i in range(self.algebra.rank):
            for j in range(self.algebra.rank):
                diff = self.left_action[i].mul(self.right_action[j]).sub(
                    self.right_action[j].mul(self.left_action[i])
                )
                if not _eq_mod(diff, rel):
                    raise ModuleError("left and right actions do not commute")
        return self

    def tensor(self, left_mod, name=None):
        """self tensor_A M for a left module M; the result is a left
        module via the leftover left action."""
        m = left_mod.as_left()
        pres, _ = tensor_over_algebra(self.as_right_module(), m)
        b = self.base
        gm = m.gens
        eye = Matrix.identity(b, gm)
        action = [la.kron(eye) for la in self.left_action]
        raw = AlgebraModule(
            self.algebra, "left", pres.generators, pres.relations, action,
            name=name or ("%s (x) %s" % (self.name, m.name)),
        )
        out, _, _ = normalize_module(raw)
        out.name = raw.name
        return out


# ---------------------------------------------------------------------
# base-ring dual


def dual_over_base(m):
    """Hom_R(M, R) with the side swapped.

    Over Z the module must be a lattice; torsion is rejected explicitly
    since Hom_Z(Z/d, Z) = 0 would silently lose information.  Over a
    field the module is normalized first, and the dual of the dual is
    the identity on the nose in the normalized coordinates.
    """
    base = m.base
    if not base.is_field:
        inv = m.r_invariants()
        if inv.factors:
            raise ModuleError(
                "dual_over_base over Z needs a lattice; torsion %s rejected" % inv
            )
        mm = m
        if m.relations.ncols:
            mm, _, _ = normalize_module(m)
    else:
        mm, _, _ = normalize_module(m)
    action = [a.transpose() for a in mm.action]
    side = "right" if m.side == "left" else "left"
    return AlgebraModule(
        m.algebra, side, mm.gens, None, action, name="D(%s)" % m.name,
    )


# ---------------------------------------------------------------------
# isomorphism testing


class IsoResult:
    """Outcome of a module isomorphism search.

    status is "isomorphic" (with forward/backward witnesses, verified
    both ways), "distinct" (certified, either by an invariant mismatch
    or by an exhaustive sweep of the Hom space; the certificate is named
    in detail) or "inconclusive" (search exhausted its budget).
    """

    def __init__(self, status, forward=None, backward=None, detail=""):
        self.status = status
        self.forward = forward
        self.backward = backward
        self.detail = detail

    def __bool__(self):
        return self.status == "isomorphic"

    def __repr__(self):
        return "IsoResult(%s%s)" % (
            self.status, ": %s" % self.detail if self.detail else ""
        )


def _try_invert(f):
    """Invert a module map if possible: solve for a right inverse, then
    verify it is a two-sided inverse mod relations."""
    m, n = f.source, f.target
    b = m.base
    helper = f.matrix.hstack(n.relations)
    targets = Matrix.identity(b, n.gens)
    sol = solve_matrix(helper, targets)
    if sol is None:
        return None
    g = ModuleMap(n, m, sol.take_rows(range(m.gens)))
    gf = g.compose(f)
    if not _eq_mod(gf.matrix.sub(Matrix.identity(b, m.gens)), m.relations):
        return None
    fg = f.compose(g)
    if not _eq_mod(fg.matrix.sub(Matrix.identity(b, n.gens)), n.relations):
        return None
    try:
        g.check_linear()
    except ModuleError:
        return None
    return g

def module_iso(m, n, seed=0, trials=64):
    """Search for an A-module isomorphism m -> n.

    Normal forms are compared first: a mismatch of the underlying
    R-module invariants certifies the modules distinct.  Otherwise the
    Hom space is searched for an invertible element: single generators
    and pairwise (+/-) combinations deterministically, then an
    exhaustive sweep over a prime field when the Hom space is small
    enough (at most 2^16 elements), then seeded random combinations.
    Witnesses are verified in both directions before being returned.
    """
    if m.side != n.side:
        raise ModuleError("cannot compare modules on different sides")
    im_, in_ = m.r_invariants(), n.r_invariants()
    if im_ != in_:
        return IsoResult(
            "distinct", detail="underlying R-modules differ: %s vs %s" % (im_, in_)
        )
    if m.gens == 0 and n.gens == 0:
        return IsoResult("isomorphic",
                         forward=zero_map(m, n), backward=zero_map(n, m))
    hom = hom_module(m, n)
    b = m.base
    k = len(hom.gens)
    if k == 0:
        return IsoResult("distinct", detail="Hom space is zero")

    def attempt(f):
        g = _try_invert(f)
        if g is None:
            return None
        return IsoResult("isomorphic", forward=f, backward=g)

    for g0 in hom.gens:
        r = attempt(g0)
        if r:
            return r
    for i in range(k):
        for j in range(i):
            fsum = hom.gens[i].add(hom.gens[j])
            r = attempt(fsum)
            if r:
                return r
            fdiff = hom.gens[i].sub(hom.gens[j])
            r = attempt(fdiff)
            if r:
                return r
    from .rings import PrimeField

    if isinstance(b, PrimeField) and b.p ** k <= 2**16:
        for code in range(b.p ** k):
            coeffs = []
            c = code
            for _ in range(k):
                coeffs.append(c % b.p)
                c //= b.p
            r = attempt(hom.element(coeffs))
            if r:
                return r
        # the sweep covered every homomorphism, so this is a certificate
        return IsoResult(
            "distinct",
            detail="all %d^%d homomorphisms checked, none invertible" % (b.p, k),
        )
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [b.from_int(rng.randint(-4, 4)) for _ in range(k)]
        r = attempt(hom.element(coeffs))
        if r:
            return r
    return IsoResult(
        "inconclusive", detail="no invertible hom found in %d trials" % trials
    )


# ---------------------------------------------------------------------
# free summand cancellation


def cancel_free_summands(m, seed=0, trials=64, max_cancel=None):
    """Split off free rank-one summands until none is found.

    Returns (core, count).  A summand is found through a surjection onto
    A (split automatically since A is projective); the core is the
    kernel, which stays a direct complement.  Used before stable
    comparisons, where answers are only defined up to free summands.
    """
    cur = m
    count = 0
    while max_cancel is None or count < max_cancel:
        free1 = AlgebraModule.free(cur.algebra, 1, cur.side)
        if cur.gens == 0:
            break
        hom = hom_module(cur, free1)
        phi = _find_surjection(hom, seed=seed + count, trials=trials)
        if phi is None:
            break
        ker, _ = kernel_module(phi)
        nk, _, _ = normalize_module(ker)
        nk.name = "%s minus free" % m.name
        cur = nk
        count += 1
    return cur, count


def _find_surjection(hom, seed=0, trials=64):
    b = hom.source.base
    k = len(hom.gens)
    for g in hom.gens:
        if g.is_surjective():
            return g
    for i in range(k):
        for j in range(i):
            f = hom.gens[i].add(hom.gens[j])
            if f.is_surjective():
                return f
            f = hom.gens[i].sub(hom.gens[j])
            if f.is_surjective():
                return f
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [b.from_int(rng.randint(-3, 3)) for _ in range(k)]
        f = hom.element(coeffs)
        if f.is_surjective():
            return f
    return None


# ---------------------------------------------------------------------
# miscellany used across the homological layers


def left_ideal_module(algebra, e, name=None):
    """A e as a left module, with the inclusion into A and the
    coordinates of the generator e."""
    free1 = AlgebraModule.free(algebra, 1, "left")
    cols = algebra.right_mult_matrix(e)
    p, incl = submodule(free1, cols, name=name or "Ae")
    sol = solve_matrix(incl.matrix, Matrix.from_cols(algebra.base, [list(e)], algebra.rank))
    if sol is None:
        raise ModuleError("idempotent does not lie in its own ideal")
    return p, incl, sol.col(0)


def simple_modules(algebra):
    """One simple left module per isomorphism class, each paired with
    the primitive idempotent it came from: [(e, S)].  Field base only."""
    if not algebra.base.is_field:
        raise ModuleError("simple_modules needs a field base")
    idems = algebra.primitive_idempotents()
    rad = algebra.radical_basis()
    abar, proj, _ = algebra.semisimple_quotient()
    out = []
    seen = []
    for e in idems:
        # compare blocks through ebar Abar fbar
        ebar = proj.mul_vec(e)
        dup = False
        for fbar in seen:
            cols = []
            for t in range(abar.rank):
                v = abar.multiply(ebar, abar.multiply(abar.basis_vector(t), fbar))
                cols.append(v)
            if not Matrix.from_cols(abar.base, cols, abar.rank).is_zero():
                dup = True
                break
        if dup:
            continue
        seen.append(ebar)
        p, incl, _ = left_ideal_module(algebra, e)
        if rad.ncols:
            prod_cols = []
            for t in range(rad.ncols):
                for j in range(p.gens):
                    prod_cols.append(
                        algebra.multiply(rad.col(t), incl.matrix.col(j))
                    )
            coords = solve_matrix(
                incl.matrix,
                Matrix.from_cols(algebra.base, prod_cols, algebra.rank),
            )
            s, _ = quotient_module(p, coords, name="top(Ae)")
        else:
            s = p
        out.append((e, s))
    return out


def change_base_module(m, new_base):
    """Reduce an integral module mod p (left modules over A, producing a
    module over A mod p)."""
    alg_p = m.algebra.change_base(new_base)
    conv = new_base.from_int
    rel = m.relations.map_base(new_base, conv)
    action = [a.map_base(new_base, conv) for a in m.action]
    raw = AlgebraModule(alg_p, m.side, m.gens, rel, action,
                        name="%s mod %s" % (m.name, new_base))
    out, _, _ = normalize_module(raw)
    out.name = raw.name
    return out


def lift_simple_to_torsion(algebra_z, simple_p, p):
    """View a simple module of A/pA as a p-torsion module over the
    integral algebra A."""
    b = algebra_z.base
    s = simple_p
    gens = s.gens
    rel = Matrix.identity(b, gens).scale(b.from_int(p))
    extra = s.relations.map_base(b, lambda x: int(x))
    rel = rel.hstack(extra)
    action = [a.map_base(b, lambda x: int(x)) for a in s.action]
    return AlgebraModule(
        algebra_z, s.side, gens, rel, action,
        name="%s lifted to %s" % (s.name, algebra_z.name),
    )
