"""Finitely generated modules over the base ring, by presentation.

A ``PresentedRModule`` is coker(relations : R^r -> R^gens).  Its normal
form is the data that classifies it up to isomorphism: a dimension over
a field, or free rank plus invariant factor chain over Z.  The normal
form is what Ext/Tor/Tate values are reported as, so it carries its own
small algebra (direct sums, p-parts, order) and a stable string form.
"""

from .matrix import Matrix, cokernel_data, solve_matrix
from .rings import ZZ

from sympy import factorint


class ModuleInvariants:
    """Isomorphism class of a f.g. module over the base.

    ``factors`` is the invariant factor chain (d_1 | d_2 | ..., each >= 2)
    and is always empty over a field.
    """

    __slots__ = ("base", "free_rank", "factors")

    def __init__(self, base, free_rank, factors=()):
        self.base = base
        self.free_rank = free_rank
        self.factors = tuple(factors)
        if base.is_field and self.factors:
            raise ValueError("field modules have no torsion")

    def __eq__(self, other):
        return (
            isinstance(other, ModuleInvariants)
            and self.base is other.base
            and self.free_rank == other.free_rank
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.base, self.free_rank, self.factors))

    def is_zero(self):
        return self.free_rank == 0 and not self.factors

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        """Cardinality when finite, else None.  Over a field, finite means
        zero (order 1)."""
        if self.base.is_field:
            return 1 if self.free_rank == 0 else None
        if self.free_rank:
            return None
        n = 1
        for d in self.factors:
            n *= d
        return n

    def direct_sum(self, other):
        if other.base is not self.base:
            raise ValueError("mixed bases in direct sum")
        if self.base.is_field:
            return ModuleInvariants(self.base, self.free_rank + other.free_rank)
        # merge two invariant factor chains through the primary decomposition
        primary = {}
        for factors in (self.factors, other.factors):
            for d in factors:
                for p, e in factorint(d).items():
                    primary.setdefault(p, []).append(e)
        return _from_primary(
            self.base, self.free_rank + other.free_rank, primary
        )

    def p_part(self, p):
        """Invariants of the p-primary torsion part (free rank dropped)."""
        if self.base.is_field:
            raise ValueError("p-parts only make sense over Z")
        out = []
        for d in self.factors:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                out.append(p**e)
        return ModuleInvariants(ZZ, 0, out)

    def localize(self, p):
        """Invariants after inverting every prime except p: free rank is
        kept, torsion away from p dies."""
        pp = self.p_part(p)
        return ModuleInvariants(ZZ, self.free_rank, pp.factors)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        if self.base.is_field:
            name = self.base.name
            parts.append(name if self.free_rank == 1 else "%s^%d" % (name, self.free_rank))
        else:
            if self.free_rank:
                parts.append("Z" if self.free_rank == 1 else "Z^%d" % self.free_rank)
            parts.extend("Z/%d" % d for d in self.factors)
        return " + ".join(parts)


def _from_primary(base, free_rank, primary):
    """Rebuild an invariant factor chain from prime-power exponent lists."""
    for p in primary:
        primary[p].sort(reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    chain = []
    for i in range(width):
        d = 1
        for p, exps in primary.items():
            if i < len(exps):
                d *= p ** exps[i]
        chain.append(d)
    chain.reverse()
    return ModuleInvariants(base, free_rank, chain)


class PresentedRModule:
    """coker(relations) with the normal form computed on demand."""

    __slots__ = ("base", "generators", "relations", "_normal_form")

    def __init__(self, base, generators, relations=None):
        self.base = base
        self.generators = generators
        if relations is None:
            relations = Matrix.zeros(base, generators, 0)
        if relations.nrows != generators:
            raise ValueError(
                "relations have %d rows for %d generators"
                % (relations.nrows, generators)
            )
        self.relations = relations
        self._normal_form = None

    @property
    def normal_form(self):
        if self._normal_form is None:
            free, factors = cokernel_data(self.relations)
            self._normal_form = ModuleInvariants(self.base, free, factors)
        return self._normal_form

    def __repr__(self):
        return "PresentedRModule(%s, gens=%d, rels=%d; %s)" % (
            self.base,
            self.generators,
            self.relations.ncols,
            self.normal_form,
        )


def subquotient(numerator, denominator):
    """Normal form of span(numerator)/span(denominator) inside R^n.

    ``numerator`` must be a basis matrix (columns independent); every
    denominator column must lie in its span.  This is the workhorse
    behind homology groups.
    """
    coords = solve_matrix(numerator, denominator)
    if coords is None:
        raise ValueError("denominator does not lie in the numerator span")
    return PresentedRModule(numerator.base, numerator.ncols, coords)


class GradedGroups:
    """Values of a graded invariant over an explicit degree window.

    Degrees outside the window were never computed; asking for them is
    an error rather than a zero, so truncation can't masquerade as
    vanishing.
    """

    __slots__ = ("lo", "hi", "_groups")

    def __init__(self, lo, hi, groups):
        self.lo = lo
        self.hi = hi
        self._groups = dict(groups)
        for i in range(lo, hi + 1):
            if i not in self._groups:
                raise ValueError("missing degree %d in window [%d, %d]" % (i, lo, hi))

    def __getitem__(self, i):
        if not self.lo <= i <= self.hi:
            raise KeyError(
                "degree %d outside computed window [%d, %d]" % (i, self.lo, self.hi)
            )
        return self._groups[i]

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def items(self):
        return [(i, self._groups[i]) for i in self.degrees()]

    def to_json(self):
        return {
            "range": [self.lo, self.hi],
            "groups": {str(i): repr(self._groups[i]) for i in self.degrees()},
        }

    def __repr__(self):
        body = ", ".join("%d: %s" % (i, g) for i, g in self.items())
        return "GradedGroups{%s}" % body
