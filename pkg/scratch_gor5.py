import time
from gorlab.rings import QQ, ZZ
from gorlab.matrix import Matrix
from gorlab.modules import AlgebraModule, simple_modules, quotient_module
from gorlab.presets import group_algebra, truncated_poly, upper_triangular
from gorlab.gorenstein import verify_tilting

t0 = time.time()
ut2 = upper_triangular(2)
sims = [s for _, s in simple_modules(ut2)]
for i, s in enumerate(sims):
    t1 = time.time()
    rep = verify_tilting(ut2, s, window=(-3, 3))
    print("UT2 S%d tilting: pass=%s counit=%s unit=%s h0=(%s,%s)  %.2fs" % (
        i, rep.passed,
        {d: repr(v) for d, v in rep.counit.items()},
        {d: repr(v) for d, v in rep.unit.items()},
        rep.counit_h0, rep.unit_h0, time.time()-t1))
    assert rep.passed, rep.to_json()

tp3 = truncated_poly(3)
free3 = AlgebraModule.free(tp3, 1, "left")
ax2, _ = quotient_module(free3, Matrix.from_int_rows(QQ, [[0],[0],[1]]), name="A/(x^2)")
t1 = time.time()
rep = verify_tilting(tp3, ax2, window=(-3, 3))
print("tp3 A/(x^2) tilting: pass=%s length=%d  %.2fs" % (rep.passed, rep.length, time.time()-t1))
assert rep.passed, rep.to_json()

# regular module too, and over Z
rep = verify_tilting(ut2, AlgebraModule.free(ut2, 1, "left"), window=(-3, 3))
print("UT2 A tilting:", rep.passed)
assert rep.passed
zc2 = group_algebra("cyclic", 2, ZZ)
triv = AlgebraModule(zc2, "left", 1, None,
                     [Matrix.from_int_rows(ZZ, [[1]])]*2, name="Z-triv")
t1 = time.time()
rep = verify_tilting(zc2, triv, window=(-2, 2))
print("ZC2 Z-triv tilting: pass=%s counit=%s  %.2fs" % (
    rep.passed, {d: repr(v) for d, v in rep.counit.items()}, time.time()-t1))
assert rep.passed
print("total %.2f" % (time.time()-t0))
