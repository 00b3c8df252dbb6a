"""chi-reduced Kac modules, their radicals and simple quotients."""
from sl21 import HighestWeight, PChar, build_kac, build_sl21, make_artin_schreier, make_prime_field
from sl21.modules import radical, simple_module_shape, validate_rep

p = 5
F = make_prime_field(p)
alg = build_sl21(F)
chi = PChar.zero(F)

for a, b in [(3, 1), (4, 0), (4, 4), (1, 0)]:
    lam = HighestWeight(F.from_int(a), F.from_int(b))
    kac = build_kac(alg, chi, lam)
    assert validate_rep(alg, kac)  # bracket identities and the p-character
    rad = radical(alg, kac)
    shape = simple_module_shape(chi, lam, p)
    print(f"lam=({a},{b}): dim Z = {kac.dim}, radical {rad.dim}, dim S = {kac.dim - rad.dim}, case {shape.case}")

# the top weight (p-1, 0): <1,0,p-1> is killed by g_1, so it dies in the quotient
lam = HighestWeight(F.from_int(p - 1), F.zero)
kac = build_kac(alg, chi, lam)
v = kac.label_vector(1, 0, p - 1)
print("g_1 kills <1,0,p-1>:", all(not F.matmul(kac.action[x], v).any() for x in ("e13", "e23")))

# a semisimple p-character needs the extension field for its weights
K = make_artin_schreier(p)
algK = build_sl21(K)
chi = PChar.semisimple(K.one, K.zero)
lam = HighestWeight(K.parse("t+2"), K.from_int(3))
kac = build_kac(algK, chi, lam)
print(f"chi = {chi.describe()}, lam = {lam}: dim {kac.dim}, radical {radical(algK, kac).dim}")
