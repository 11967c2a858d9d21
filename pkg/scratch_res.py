import time

from gorlab.rings import QQ, ZZ
from gorlab.matrix import Matrix
from gorlab.presets import (
    truncated_poly, group_algebra, upper_triangular, quantum_exterior,
    commutative_fat_point,
)
from gorlab.modules import AlgebraModule, simple_modules, quotient_module
from gorlab.resolutions import (
    resolution_of, ext, tor, proj_dim, injective_resolution_artin,
)


def simple_of_local(alg):
    return simple_modules(alg)[0][1]


def trivial_module(alg_z, side="left"):
    one = Matrix.from_int_rows(ZZ, [[1]])
    return AlgebraModule(alg_z, side, 1, None, [one] * alg_z.rank, name="Z triv")


t0 = time.time()

print("== tp(2) ==")
A2 = truncated_poly(2)
k2 = simple_of_local(A2)
r2 = resolution_of(k2)
print("cover dims:", [r2.term(i).gens for i in range(4)])
print("syzygies:", [str(r2.syzygy(i).r_invariants()) for i in range(4)])
print("ext(k,k):", ext(k2, k2, 4))
print("pd k:", proj_dim(k2, 6))
print("pd A:", proj_dim(AlgebraModule.free(A2, 1), 6))
print("ext(A,k):", ext(AlgebraModule.free(A2, 1), k2, 2))
print("t", round(time.time() - t0, 2))

print("== tp(3) ==")
A3 = truncated_poly(3)
k3 = simple_of_local(A3)
free3 = AlgebraModule.free(A3, 1)
Ax2, _ = quotient_module(free3, Matrix.from_int_rows(QQ, [[0], [0], [1]]),
                         name="A/(x^2)")
r3 = resolution_of(k3)
print("k syzygy dims:", [r3.syzygy(i).gens for i in range(5)])
ra = resolution_of(Ax2)
print("A/(x^2) syzygy dims:", [ra.syzygy(i).gens for i in range(4)])
print("ext(k,k):", ext(k3, k3, 4))
print("ext(A/x2, k):", ext(Ax2, k3, 4))
print("pd A/x2:", proj_dim(Ax2, 6))
print("t", round(time.time() - t0, 2))

print("== UT2 ==")
U = upper_triangular(2)
sims = [s for _, s in simple_modules(U)]
print("simple dims:", [s.gens for s in sims])
for i, si in enumerate(sims):
    print("pd S%d:" % (i + 1), proj_dim(si, 6))
for i, si in enumerate(sims):
    for j, sj in enumerate(sims):
        print("ext(S%d,S%d):" % (i + 1, j + 1), ext(si, sj, 2))
print("t", round(time.time() - t0, 2))

print("== fat point ==")
F = commutative_fat_point()
kf = simple_of_local(F)
rf = resolution_of(kf)
print("cover dims:", [rf.term(i).gens // 3 for i in range(4)])
print("pd k:", proj_dim(kf, 6))
print("t", round(time.time() - t0, 2))

print("== quantum exterior q=2 ==")
Q2 = quantum_exterior(2)
kq = simple_of_local(Q2)
rq = resolution_of(kq)
print("betti:", [rq.term(i).gens // 4 for i in range(5)])
print("ext(k,k):", ext(kq, kq, 3))
print("pd k (depth 4):", proj_dim(kq, 4))
print("t", round(time.time() - t0, 2))

print("== Z[C2] ==")
ZC2 = group_algebra("cyclic", 2, ZZ)
z2 = trivial_module(ZC2)
rz = resolution_of(z2)
print("term ranks:", [rz.term(i).gens // 2 for i in range(6)])
print("syzygy invs:", [str(rz.syzygy(i).r_invariants()) for i in range(5)])
print("ext(Z,Z):", ext(z2, z2, 4))
z2r = trivial_module(ZC2, "right")
print("tor(Z,Z):", tor(z2r, z2, 4))
print("pd Z:", proj_dim(z2, 8))
print("pd A:", proj_dim(AlgebraModule.free(ZC2, 1), 6))
two = Matrix.from_int_rows(ZZ, [[2]])
one = Matrix.from_int_rows(ZZ, [[1]])
m2 = AlgebraModule(ZC2, "left", 1, two, [one, one], name="Z/2 triv")
print("pd Z/2:", proj_dim(m2, 8))
print("ext(Z/2, Z):", ext(m2, z2, 3))
print("t", round(time.time() - t0, 2))

print("== Z[C6] ==")
ZC6 = group_algebra("cyclic", 6, ZZ)
z6 = trivial_module(ZC6)
r6 = resolution_of(z6)
r6.ensure(6)
print("term ranks:", [r6.term(i).gens // 6 for i in range(7)])
print("syzygy ranks:", [r6.syzygy(i).r_invariants().free_rank for i in range(7)])
print("ext(Z,Z):", ext(z6, z6, 4))
print("pd Z:", proj_dim(z6, 8))
print("t", round(time.time() - t0, 2))

print("== injective resolutions ==")
ic = injective_resolution_artin(k2, 3)
ic.check()
print("tp2 k inj res homology:", [str(ic.homology_invariants(i)) for i in range(-1, 3)])
iu = injective_resolution_artin(sims[1], 2)
iu.check()
print("UT2 S2 inj res homology:", [str(iu.homology_invariants(i)) for i in range(-1, 2)])
print("UT2 S2 inj term dims:", [iu.module(i).gens for i in range(0, 3)])
print("t", round(time.time() - t0, 2))
