"""Prime sites, localization, torsion functors and the singular locus.

Over the integers a module decomposes into a free part and p-primary
torsion parts, and every functor implemented here acts through that
decomposition: localize keeps the free part and the p-part,
torsion_submodule keeps only the p-part, and the Matlis dual of a finite
group is the p-part again (self-dual).  The singular locus is decided by
projective dimensions of the simple modules living over each site.
"""

from sympy import factorint, isprime

from .matrix import Matrix, cokernel_data
from .modules import (
    ModuleError,
    change_base_module,
    lift_simple_to_torsion,
    normalize_module,
    quotient_module,
    simple_modules,
    submodule,
)
from .resolutions import proj_dim
from .rings import GF, ZZ, ring_to_json
from .rmodules import GradedGroups, ModuleInvariants


class PrimeSite:
    """A point of the base ring relevant to the algebra at hand.

    Over a field there is a single site with ``p`` set to None; over the
    integers ``p`` is a prime number.  ``note`` carries a short human
    hint about why the site was selected.
    """

    __slots__ = ("base", "p", "note")

    def __init__(self, base, p=None, note=""):
        if p is not None and not isprime(p):
            raise ValueError("%r is not prime" % (p,))
        self.base = base
        self.p = p
        self.note = note

    def __eq__(self, other):
        return (
            isinstance(other, PrimeSite)
            and self.base is other.base
            and self.p == other.p
        )

    def __hash__(self):
        return hash((id(self.base), self.p))

    def to_json(self):
        out = {"base": ring_to_json(self.base), "p": self.p}
        if self.note:
            out["note"] = self.note
        return out

    def __repr__(self):
        if self.p is None:
            return "PrimeSite(%s)" % self.base.name
        return "PrimeSite(p=%d)" % self.p


def _int_primes(n):
    n = abs(n)
    if n <= 1:
        return set()
    return set(factorint(n).keys())


def prime_sites(algebra):
    """The finite list of base primes that can matter for the algebra.

    Over a field this is the single zero site.  Over the integers the
    candidates are the primes dividing the torsion of the cokernel of
    the trace Gram matrix (the discriminant data of the order), widened
    by the primes dividing the rank; a candidate is kept when it divides
    that torsion or the reduction A/pA has a nonzero radical.
    """
    if algebra.base.is_field:
        return [PrimeSite(algebra.base, None, "unique site of a field base")]
    gram_cols = []
    for i in range(algebra.rank):
        li = algebra.left_mult_matrix(algebra.basis_vector(i))
        col = []
        for j in range(algebra.rank):
            lj = algebra.left_mult_matrix(algebra.basis_vector(j))
            prod = li.mul(lj)
            col.append(sum(prod.rows[t][t] for t in range(algebra.rank)))
        gram_cols.append(col)
    gram = Matrix.from_cols(ZZ, gram_cols, algebra.rank)
    _, factors = cokernel_data(gram)
    torsion_primes = set()
    for d in factors:
        torsion_primes |= _int_primes(d)
    pool = sorted(torsion_primes | _int_primes(algebra.rank))
    sites = []
    for p in pool:
        rad = algebra.change_base(GF(p)).radical_basis()
        if p in torsion_primes or rad.ncols:
            note = "radical of A mod %d has dimension %d" % (p, rad.ncols)
            sites.append(PrimeSite(ZZ, p, note))
    return sites


def _p_part_split(d, p):
    """Split d as (p-power part, prime-to-p part)."""
    q = 1
    while d % p == 0:
        d //= p
        q *= p
    return q, d


def torsion_submodule(m, p):
    """The p-power-torsion submodule with its inherited action."""
    if isinstance(p, PrimeSite):
        p = p.p
    if m.base.is_field:
        raise ModuleError("torsion submodules need an integer base")
    nrm, _, sect = normalize_module(m)
    inv = nrm.r_invariants()
    cols = []
    for t, d in enumerate(inv.factors):
        q, away = _p_part_split(d, p)
        if q > 1:
            # torsion generators sit first in the normalized coordinates
            vec = [0] * nrm.gens
            vec[t] = away
            cols.append(sect.matrix.mul_vec(vec))
    col_m = Matrix.from_cols(ZZ, cols, m.gens)
    sub, _ = submodule(m, col_m, name="%s[%d-power]" % (m.name, p))
    return sub


def localize(m, site):
    """The module at one site: free part plus p-primary torsion.

    Over a field this is the identity.  Over the integers the
    prime-to-p torsion is deleted by passing to the quotient, which is
    the finitely generated model of the localized module.
    """
    if m.base.is_field:
        return m
    p = site.p if isinstance(site, PrimeSite) else site
    nrm, _, sect = normalize_module(m)
    inv = nrm.r_invariants()
    cols = []
    for t, d in enumerate(inv.factors):
        q, away = _p_part_split(d, p)
        if away > 1:
            vec = [0] * nrm.gens
            vec[t] = q
            cols.append(sect.matrix.mul_vec(vec))
    col_m = Matrix.from_cols(ZZ, cols, m.gens)
    out, _ = quotient_module(m, col_m, name="%s@%d" % (m.name, p))
    return out


class GradedWithNotes(GradedGroups):
    """Graded groups plus free-text notes about what was discarded."""

    __slots__ = ("notes",)

    def __init__(self, lo, hi, groups, notes=()):
        GradedGroups.__init__(self, lo, hi, groups)
        self.notes = list(notes)

    def to_json(self):
        out = GradedGroups.to_json(self)
        out["notes"] = list(self.notes)
        return out


def local_cohomology_graded(g, p):
    """Degreewise p-primary part of a graded invariant.

    Free parts vanish under the torsion functor; each drop is recorded
    in the notes so the report shows what was thrown away.
    """
    if isinstance(p, PrimeSite):
        p = p.p
    groups = {}
    notes = []
    for i, inv in g.items():
        if inv.base.is_field:
            raise ModuleError("local cohomology needs integer graded groups")
        groups[i] = inv.p_part(p)
        if inv.free_rank:
            notes.append(
                "degree %d: free rank %d dropped by the torsion functor"
                % (i, inv.free_rank)
            )
    return GradedWithNotes(g.lo, g.hi, groups, notes)


def matlis_dual_finite(inv, p):
    """Matlis dual of a finite group at p: the p-part, self-dual.

    Over a field the dual space has the same dimension, so the
    invariants come back unchanged.  Infinite input is rejected; duals
    of nonfinite modules are not finite data at this level.
    """
    if inv.base.is_field:
        return inv
    if not inv.is_finite():
        raise ModuleError(
            "matlis_dual_finite needs a finite group, got %r" % (inv,)
        )
    if isinstance(p, PrimeSite):
        p = p.p
    return inv.p_part(p)


class GradedWithSupport:
    """A graded invariant together with its per-prime primary pieces."""

    __slots__ = ("graded", "primes", "parts")

    def __init__(self, graded, primes):
        self.graded = graded
        self.primes = sorted(primes)
        self.parts = {}
        for p in self.primes:
            self.parts[p] = {i: inv.p_part(p) for i, inv in graded.items()}

    def check_reassembly(self):
        """The p-parts over all recorded primes recover each torsion part."""
        for i, inv in self.graded.items():
            merged = ModuleInvariants(ZZ, 0, ())
            for p in self.primes:
                merged = merged.direct_sum(self.parts[p][i])
            torsion = ModuleInvariants(ZZ, 0, inv.factors)
            if merged != torsion:
                return False
        return True

    def to_json(self):
        return {
            "groups": self.graded.to_json(),
            "primary": {
                str(p): {str(i): repr(g) for i, g in sorted(self.parts[p].items())}
                for p in self.primes
            },
        }


def support_primes(g):
    """All primes appearing in the torsion of a graded invariant."""
    primes = set()
    for _, inv in g.items():
        for d in inv.factors:
            primes |= _int_primes(d)
    return sorted(primes)


class SingularSite:
    """A site where the algebra fails (or probably fails) to be regular."""

    __slots__ = ("site", "status", "simples")

    def __init__(self, site, status, simples):
        self.site = site
        self.status = status
        self.simples = simples

    @property
    def certified(self):
        return self.status == "singular"

    def to_json(self):
        return {
            "site": self.site.to_json(),
            "status": self.status,
            "simples": [
                {"name": name, "dim": dim, "proj_dim": verdict.to_json()}
                for name, dim, verdict in self.simples
            ],
        }

    def __repr__(self):
        return "SingularSite(%r, %s)" % (self.site, self.status)


def _site_simple_verdicts(algebra, site, depth):
    """Projective dimensions over A of the simples living at one site."""
    if algebra.base.is_field:
        sims = [s for _, s in simple_modules(algebra)]
    else:
        alg_p = algebra.change_base(GF(site.p))
        sims = [
            lift_simple_to_torsion(algebra, s, site.p)
            for _, s in simple_modules(alg_p)
        ]
    out = []
    for s in sims:
        verdict = proj_dim(s, depth=depth)
        out.append((s.name, s.gens, verdict))
    return out


def singular_locus(algebra, depth=12):
    """Sites where some simple has infinite projective dimension.

    Certified infinite dimensions give status "singular"; depth
    exhaustion alone gives "probably singular".  Regular sites are
    omitted from the result.
    """
    out = []
    for site in prime_sites(algebra):
        reports = _site_simple_verdicts(algebra, site, depth)
        kinds = [v.kind for _, _, v in reports]
        if "InfiniteCertified" in kinds:
            out.append(SingularSite(site, "singular", reports))
        elif "AtLeast" in kinds:
            out.append(SingularSite(site, "probably singular", reports))
    return out
