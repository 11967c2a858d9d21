import time
from gorlab.rings import QQ, ZZ
from gorlab.matrix import Matrix
from gorlab.modules import (AlgebraModule, module_iso, simple_modules,
                            dual_over_base, submodule, left_ideal_module,
                            quotient_module)
from gorlab.presets import group_algebra, truncated_poly, upper_triangular
from gorlab.gorenstein import (dualizing_bimodule, nakayama, conakayama,
                               verify_adjunction)

t0 = time.time()
tp2 = truncated_poly(2)
ut2 = upper_triangular(2)

# symmetric algebra: nakayama M ~ M, conakayama M ~ M
free_tp = AlgebraModule.free(tp2, 1, "left")
k_tp, _ = quotient_module(free_tp, Matrix.from_int_rows(QQ, [[0],[1]]), name="k")
for m in (free_tp, k_tp):
    nk = nakayama(m)
    ck = conakayama(m)
    i1 = module_iso(nk, m)
    i2 = module_iso(ck, m)
    print("tp2 %s: nakayama %s, conakayama %s" % (m.name, i1.status, i2.status))
    assert i1.status == "isomorphic" and i2.status == "isomorphic"

# nakayama(omega) ~ A when Gorenstein
om2 = dualizing_bimodule(tp2)
nk_om = nakayama(om2.bimodule.as_left_module())
print("tp2 nakayama(omega) ~ A:", module_iso(nk_om, free_tp).status)
assert module_iso(nk_om, free_tp).status == "isomorphic"

omu = dualizing_bimodule(ut2)
free_ut = AlgebraModule.free(ut2, 1, "left")
nk_omu = nakayama(omu.bimodule.as_left_module())
st = module_iso(nk_omu, free_ut).status
print("UT2 nakayama(omega) ~ A:", st)
assert st == "isomorphic"

# UT2: conakayama of each indecomposable projective = matching injective
idems = ut2.primitive_idempotents()
print("UT2 idempotents:", idems)
for e in idems:
    P, incl, _ = left_ideal_module(ut2, e, name="P(%s)" % e)
    # injective D(eA): eA as right module
    free_r = AlgebraModule.free(ut2, 1, "right")
    eA, _ = submodule(free_r, ut2.left_mult_matrix(e), name="eA")
    I = dual_over_base(eA)  # left module
    ck = conakayama(P)
    st = module_iso(ck, I.as_left()).status
    print("UT2 conakayama(P) dims %d -> I dims %d: %s" % (P.gens, I.gens, st))
    assert st == "isomorphic"

# adjunction reports
sims = [s for _, s in simple_modules(ut2)]
for m in [free_ut] + sims:
    for n in [free_ut] + sims:
        rep = verify_adjunction(m, n)
        assert rep["pass"], (m.name, n.name, rep)
print("UT2 adjunction grid ok")
rep = verify_adjunction(k_tp, free_tp)
print("tp2 adjunction:", rep)
assert rep["pass"]

# over Z too
zc2 = group_algebra("cyclic", 2, ZZ)
triv = AlgebraModule(zc2, "left", 1, None,
                     [Matrix.from_int_rows(ZZ, [[1]]), Matrix.from_int_rows(ZZ, [[1]])],
                     name="Z-triv")
rep = verify_adjunction(triv, triv)
print("ZC2 adjunction (Z,Z):", rep["pass"], rep["hom_from_tensor"])
assert rep["pass"]
print("total %.2f" % (time.time()-t0))
