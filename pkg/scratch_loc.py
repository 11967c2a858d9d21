import time
from gorlab.rings import QQ, ZZ, GF
from gorlab.matrix import Matrix
from gorlab.modules import AlgebraModule, simple_modules
from gorlab.presets import group_algebra, truncated_poly, upper_triangular
from gorlab.localization import (
    prime_sites, localize, torsion_submodule, local_cohomology_graded,
    matlis_dual_finite, singular_locus, GradedWithSupport, support_primes)
from gorlab.rmodules import GradedGroups, ModuleInvariants

t0 = time.time()

# prime_sites
zc6 = group_algebra("cyclic", 6, ZZ)
sites = prime_sites(zc6)
print("sites ZC6:", [(s.p, s.note) for s in sites])
assert [s.p for s in sites] == [2, 3]

rank1 = group_algebra("cyclic", 1, ZZ)
assert prime_sites(rank1) == []
print("sites Z: []")

tp2 = truncated_poly(2)
fs = prime_sites(tp2)
assert len(fs) == 1 and fs[0].p is None
print("field site ok")

# trivial module Z with C6 acting trivially, and Z/12 with trivial action
def triv(alg, rel=None):
    rels = None
    if rel is not None:
        rels = Matrix.from_int_rows(ZZ, [[rel]])
    return AlgebraModule(alg, "left", 1, rels,
                         [Matrix.from_int_rows(ZZ, [[1]]) for _ in range(alg.rank)],
                         name="triv%s" % (rel or ""))

z12 = triv(zc6, 12)
loc2 = localize(z12, 2)
print("Z/12 @2:", loc2.r_invariants())
assert repr(loc2.r_invariants()) == "Z/4"
t2 = torsion_submodule(z12, 2)
print("Gamma_2 Z/12:", t2.r_invariants())
assert repr(t2.r_invariants()) == "Z/4"
t3 = torsion_submodule(z12, 3)
assert repr(t3.r_invariants()) == "Z/3"
# lattice
zz = triv(zc6)
assert torsion_submodule(zz, 2).r_invariants().is_zero()
assert localize(zz, 5).r_invariants().free_rank == 1
# Z/3 at p=2 -> 0
z3 = triv(group_algebra("cyclic", 3, ZZ), 3)
assert localize(z3, 2).r_invariants().is_zero()
# Z/2 + Z/9 at 2 -> Z/2: build two-generator module
m29 = AlgebraModule(zc6, "left", 2, Matrix.from_int_rows(ZZ, [[2,0],[0,9]]),
                    [Matrix.identity(ZZ,2) for _ in range(6)], name="m29")
g2 = torsion_submodule(m29, 2)
assert repr(g2.r_invariants()) == "Z/2"
# idempotence
gg = torsion_submodule(t2, 2)
assert gg.r_invariants() == t2.r_invariants()
# localize/torsion commute on fixture
a = torsion_submodule(localize(m29, 2), 2)
b = localize(torsion_submodule(m29, 2), 2)
assert a.r_invariants() == b.r_invariants() == ModuleInvariants(ZZ, 0, (2,))
print("torsion/localize laws ok")

# graded
g = GradedGroups(0, 1, {0: ModuleInvariants(ZZ, 0, (6,)), 1: ModuleInvariants(ZZ, 1, (4,))})
lc = local_cohomology_graded(g, 2)
print("lc:", lc, "notes:", lc.notes)
assert repr(lc[0]) == "Z/2" and repr(lc[1]) == "Z/4"
assert len(lc.notes) == 1 and "degree 1" in lc.notes[0]
lc5 = local_cohomology_graded(g, 5)
assert lc5[0].is_zero() and lc5[1].is_zero()

# matlis
assert repr(matlis_dual_finite(ModuleInvariants(ZZ, 0, (8,)), 2)) == "Z/8"
assert repr(matlis_dual_finite(ModuleInvariants(ZZ, 0, (2, 4)), 2)) == "Z/2 + Z/4"
assert repr(matlis_dual_finite(ModuleInvariants(ZZ, 0, (6,)), 2)) == "Z/2"
try:
    matlis_dual_finite(ModuleInvariants(ZZ, 1, (2,)), 2)
    raise SystemExit("should reject infinite")
except Exception as e:
    print("matlis reject:", e)
# involution
mm = ModuleInvariants(ZZ, 0, (2, 4, 8))
assert matlis_dual_finite(matlis_dual_finite(mm, 2), 2) == mm

gs = GradedWithSupport(g, support_primes(g))
assert gs.check_reassembly()
print("support primes:", support_primes(g), "reassembly ok")

# singular locus, field
print("--- singular locus")
t1 = time.time()
assert singular_locus(upper_triangular(2), depth=6) == []
print("UT2 regular ok", round(time.time()-t1, 2))
t1 = time.time()
sl = singular_locus(tp2, depth=6)
assert len(sl) == 1 and sl[0].certified
print("tp2 singular:", sl[0].to_json()["simples"][0]["proj_dim"]["kind"], round(time.time()-t1, 2))

t1 = time.time()
sl6 = singular_locus(zc6, depth=12)
print("ZC6 locus:", [(s.site.p, s.status) for s in sl6], round(time.time()-t1, 2))
for s in sl6:
    for name, dim, v in s.simples:
        print("   p=%d %s dim %d -> %s" % (s.site.p, name, dim, v.kind), v.to_json())
assert [s.site.p for s in sl6] == [2, 3]
assert all(s.certified for s in sl6)
print("total", round(time.time()-t0, 2), "s")
