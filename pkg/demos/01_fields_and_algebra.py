"""Finite fields and the structure constants of sl(2,1)."""
import numpy as np

from sl21 import LABELS, bracket, build_sl21, make_artin_schreier, make_prime_field

# prime field and its degree-p Artin-Schreier extension
F5 = make_prime_field(5)
K5 = make_artin_schreier(5)
print(F5, "and", K5)

t = K5.gen
print("t^5 - t =", t ** 5 - t)  # 1: t solves x^p - x = 1
x = K5.parse("2+3*t")
print("x =", x, " x^-1 =", x.inv(), " x * x^-1 =", x * x.inv())

# the algebra: 8 basis vectors, structure constants from 3x3 supermatrices
alg = build_sl21(F5)  # raises if any self-test fails
for a, b in [("e12", "e21"), ("e13", "e31"), ("e13", "e32"), ("e31", "e32")]:
    coords = alg.bracket_of(a, b)[:, 0]
    terms = [f"{c}*{LABELS[i]}" for i, c in enumerate(coords) if c]
    print(f"[{a}, {b}] =", " + ".join(terms) or "0")

print("roots:", {x: alg.roots[x] for x in LABELS})

# arbitrary elements: brackets are bilinear
rng = np.random.default_rng(1)
u, v = (F5.asarray(rng.integers(0, 5, 8)) for _ in range(2))
print("[u, v] =", bracket(alg, u, v)[:, 0])
