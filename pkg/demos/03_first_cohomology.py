"""H^1 by two independent routes, and the explicit cocycles."""
from sl21 import HighestWeight, PChar, build_kac, build_simple, build_sl21, make_prime_field
from sl21.cohomology import (build_psi, h1_full, h1_weight_reduced, is_cocycle, is_inner,
                             psi_instance, rank_modulo_inner)

p = 5
F = make_prime_field(p)
alg = build_sl21(F)
chi = PChar.zero(F)


def module(lam, kind):
    build = build_kac if kind == "kac" else build_simple
    return build(alg, chi, HighestWeight(F.from_int(lam[0]), F.from_int(lam[1])))


# full parity-graded system vs weight-zero reduction
for lam, kind in [((4, 3), "kac"), ((3, 0), "kac"), ((4, 4), "kac"), ((4, 0), "simple"), ((4, 1), "simple")]:
    rep = module(lam, kind)
    full, red = h1_full(alg, rep), h1_weight_reduced(alg, rep)
    print(f"{kind:6} lam={lam}: dim H^1 = {full.dim_total} (even {full.dim_even}, odd {full.dim_odd});"
          f" reduced route agrees: {full.dims() == red.dims()}")

# psi_1 .. psi_8 on the modules they live on
for k in range(1, 9):
    lam, kind = psi_instance(k, p)
    rep = module(lam, kind)
    psi = build_psi(k, rep)
    print(f"psi_{k} on {kind} {lam}: parity {psi.parity}, cocycle {is_cocycle(alg, psi)}, inner {is_inner(psi)}")

# psi_2 alone does not exhaust H^1 at (p-2, 0): a second even class exists
rep = module((p - 2, 0), "kac")
print("rank of psi_2 modulo inner:", rank_modulo_inner([build_psi(2, rep)]),
      "  dim H^1:", h1_full(alg, rep).dim_total)
