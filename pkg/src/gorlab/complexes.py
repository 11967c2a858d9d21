"""Cochain complexes of modules over a finite algebra.

Differentials raise degree by one.  A complex lives on a finite window
[lo, hi]; degrees outside the window are implicitly zero.
"""

from .modules import AlgebraModule, ModuleMap, homology_module, zero_map
from .rmodules import GradedGroups


class ChainComplex:
    def __init__(self, modules, diffs, lo, hi, name=None):
        """modules: dict degree -> AlgebraModule for lo <= i <= hi;
        diffs: dict degree -> ModuleMap C^i -> C^{i+1} (entries for
        degrees where both ends are in the window)."""
        self.modules = dict(modules)
        self.diffs = dict(diffs)
        self.lo = lo
        self.hi = hi
        self.name = name or "complex[%d..%d]" % (lo, hi)
        sample = None
        for m in self.modules.values():
            sample = m
            break
        if sample is None:
            raise ValueError("empty complex window")
        self._algebra = sample.algebra
        self._side = sample.side

    def module(self, i):
        if i in self.modules:
            return self.modules[i]
        return AlgebraModule.zero(self._algebra, self._side)

    def diff(self, i):
        if i in self.diffs:
            return self.diffs[i]
        return zero_map(self.module(i), self.module(i + 1))

    def check(self):
        for i in range(self.lo, self.hi - 1):
            d0 = self.diff(i)
            d1 = self.diff(i + 1)
            if not d1.compose(d0).is_zero():
                raise ValueError("d o d != 0 at degree %d of %s" % (i, self.name))
        for i, d in self.diffs.items():
            d.check_linear()
        return self

    def homology(self, i):
        """H^i = ker(d^i)/im(d^{i-1}); differentials beyond the window
        count as zero, so edge homology is only meaningful when the
        complex genuinely stops there."""
        d_out = self.diffs.get(i)
        d_in = self.diffs.get(i - 1)
        if d_out is None and d_in is None:
            return self.module(i)
        return homology_module(d_in, d_out)

    def homology_invariants(self, i):
        return self.homology(i).r_invariants()

    def homology_table(self, lo=None, hi=None):
        lo = self.lo if lo is None else lo
        hi = self.hi if hi is None else hi
        return GradedGroups(
            lo, hi, {i: self.homology_invariants(i) for i in range(lo, hi + 1)}
        )

    def __repr__(self):
        return "ChainComplex(%s)" % self.name


def total_complex(grid, diffs_h, diffs_v, name=None):
    """Total complex of a finite double complex.

    grid: dict (p, q) -> AlgebraModule, placed at total degree p + q.
    diffs_h: dict (p, q) -> ModuleMap to (p+1, q).
    diffs_v: dict (p, q) -> ModuleMap to (p, q+1).
    The vertical differential is twisted by (-1)^p so squares commuting
    in the given data anticommute in the total differential.
    """
    from .modules import direct_sum
    from .matrix import Matrix

    by_degree = {}
    for (p, q), m in grid.items():
        by_degree.setdefault(p + q, []).append(((p, q), m))
    for n in by_degree:
        by_degree[n].sort(key=lambda t: t[0])

    totals = {}
    offsets = {}
    for n, cells in by_degree.items():
        mods = [m for _, m in cells]
        if len(mods) == 1:
            totals[n] = mods[0]
            offsets[n] = {cells[0][0]: 0}
        else:
            s, _, _ = direct_sum(mods, name="Tot^%d" % n)
            totals[n] = s
            offs = {}
            o = 0
            for (pq, m) in cells:
                offs[pq] = o
                o += m.gens
            offsets[n] = offs

    diffs = {}
    for n in sorted(totals):
        if n + 1 not in totals:
            continue
        src = totals[n]
        tgt = totals[n + 1]
        b = src.base
        rows = [[b.zero] * src.gens for _ in range(tgt.gens)]

        def place(mat, roff, coff):
            for u in range(mat.nrows):
                for v in range(mat.ncols):
                    if mat.rows[u][v] != b.zero:
                        rows[roff + u][coff + v] = b.add(
                            rows[roff + u][coff + v], mat.rows[u][v]
                        )

        for (p, q), coff in offsets[n].items():
            if (p, q) in diffs_h and (p + 1, q) in offsets[n + 1]:
                place(diffs_h[(p, q)].matrix, offsets[n + 1][(p + 1, q)], coff)
            if (p, q) in diffs_v and (p, q + 1) in offsets[n + 1]:
                m = diffs_v[(p, q)].matrix
                if p % 2:
                    m = m.neg()
                place(m, offsets[n + 1][(p, q + 1)], coff)
        diffs[n] = ModuleMap(src, tgt, Matrix(b, rows, src.gens))

    degs = sorted(totals)
    return ChainComplex(totals, diffs, degs[0], degs[-1], name=name or "total complex")
