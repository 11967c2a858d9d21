import time
from gorlab.rings import QQ, ZZ, GF
from gorlab.matrix import Matrix
from gorlab.modules import AlgebraModule, module_iso
from gorlab.presets import group_algebra, truncated_poly, upper_triangular, quantum_exterior
from gorlab.gorenstein import dualizing_bimodule, omega_hat

t0 = time.time()
# tp(3): symmetric, length 0
oh = omega_hat(truncated_poly(3), depth=8)
print("tp3 omega-hat length:", oh.length)
assert oh.length == 0
rep = oh.verify(depth=6)
print("tp3 verify:", rep["pass"], rep["terms"][0]["projective_both_sides"], rep["h0_status"])
assert rep["pass"]

# group algebra over Z: length 0
ohz = omega_hat(group_algebra("cyclic", 4, ZZ), depth=8)
print("ZC4 omega-hat length:", ohz.length)
assert ohz.length == 0
repz = ohz.verify(depth=6)
print("ZC4 verify:", repz["pass"])
assert repz["pass"]

# UT2: length 1
t1 = time.time()
ohu = omega_hat(upper_triangular(2), depth=8)
print("UT2 omega-hat length:", ohu.length, "terms gens:",
      [ohu.term(p).gens for p in range(ohu.length + 1)], "%.2fs" % (time.time()-t1))
assert ohu.length == 1
t1 = time.time()
repu = ohu.verify(depth=6)
print("UT2 verify:", repu, "%.2fs" % (time.time()-t1))
assert repu["pass"]

# quantum exterior: symmetric-ish? pd omega = 0? check length
t1 = time.time()
ohq = omega_hat(quantum_exterior(2), depth=8)
print("qe omega-hat length:", ohq.length, "%.2fs" % (time.time()-t1))
repq = ohq.verify(depth=6)
assert repq["pass"]
print("total %.2f" % (time.time()-t0))
