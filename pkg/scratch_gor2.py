import time
from gorlab.rings import QQ, ZZ, GF
from gorlab.matrix import Matrix
from gorlab.modules import AlgebraModule, module_iso
from gorlab.presets import group_algebra, truncated_poly, upper_triangular
from gorlab.gorenstein import (dualizing_bimodule, omega_hat, gorenstein_check)

t0 = time.time()
# --- gorenstein_check over Z: group algebras C_n, n <= 6
for n in range(1, 7):
    t1 = time.time()
    zc = group_algebra("cyclic", n, ZZ)
    v = gorenstein_check(zc, depth=12)
    print("ZC%d -> %s d_left=%r d_right=%r  %.2fs" % (n, v.status, v.d_left, v.d_right, time.time()-t1))
    assert v.status == "Gorenstein"
    for p, d in v.d_left.items():
        assert d == 1, (p, d)
    for p, d in v.d_right.items():
        assert d == 1, (p, d)
print("expected sites: C2->{2} C3->{3} C4->{2} C5->{5} C6->{2,3}")

# symmetric group S3 over Z
t1 = time.time()
zs3 = group_algebra("symmetric", 3, ZZ)
v = gorenstein_check(zs3, depth=12)
print("ZS3 -> %s d_left=%r  %.2fs" % (v.status, v.d_left, time.time()-t1))

print("total %.2f" % (time.time()-t0))
