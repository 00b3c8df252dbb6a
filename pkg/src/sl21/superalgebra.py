"""The Lie superalgebra sl(2,1) in its standard basis.

Structure constants are not typed in by hand: they are computed from the
3x3 supermatrices with ``[x, y] = xy - (-1)^{|x||y|} yx`` and then checked
(super-antisymmetry, super-Jacobi, supertrace, roots, restriction).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

import numpy as np

from sl21.field import Field, FieldElement

LABELS = ("h1", "h2", "e12", "e21", "e13", "e23", "e31", "e32")
INDEX = {name: i for i, name in enumerate(LABELS)}
EVEN = ("h1", "h2", "e12", "e21")
ODD = ("e13", "e23", "e31", "e32")
CARTAN = ("h1", "h2")


class Weight(NamedTuple):
    w1: FieldElement
    w2: FieldElement

    def __add__(self, other):
        return Weight(self.w1 + other.w1, self.w2 + other.w2)

    def __repr__(self):
        return f"({self.w1!r}, {self.w2!r})"


def supermatrix(label: str) -> np.ndarray:
    """Integer 3x3 matrix of a basis element; index 3 is the odd coordinate."""
    m = np.zeros((3, 3), dtype=np.int64)
    if label == "h1":
        m[0, 0] = m[2, 2] = 1
    elif label == "h2":
        m[1, 1] = m[2, 2] = 1
    else:
        m[int(label[1]) - 1, int(label[2]) - 1] = 1
    return m


def parity(label: str) -> int:
    return int(label in ODD)


def zdegree(label: str) -> int:
    if label in ("e13", "e23"):
        return 1
    if label in ("e31", "e32"):
        return -1
    return 0


def supertrace(m: np.ndarray) -> int:
    return int(m[0, 0] + m[1, 1] - m[2, 2])


def matrix_coords(m: np.ndarray) -> np.ndarray:
    """Coordinates of a supertraceless 3x3 integer matrix in the basis LABELS."""
    if supertrace(m) != 0:
        raise ValueError("matrix is not supertraceless")
    v = np.zeros(8, dtype=np.int64)
    v[INDEX["h1"]] = m[0, 0]
    v[INDEX["h2"]] = m[1, 1]
    for name in LABELS[2:]:
        v[INDEX[name]] = m[int(name[1]) - 1, int(name[2]) - 1]
    return v


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    """sl(2,1) over ``field``.

    ``structure[a, b]`` holds the coordinates of ``[a, b]`` as a field vector
    of length 8, so ``structure`` has shape ``(8, 8, 8, degree)``.
    """

    field: Field
    structure: np.ndarray
    roots: dict
    p_power: dict

    labels = LABELS

    def parity(self, label: str) -> int:
        return parity(label)

    def zdegree(self, label: str) -> int:
        return zdegree(label)

    def basis_vector(self, label: str) -> np.ndarray:
        v = self.field.zeros(8)
        v[INDEX[label], 0] = 1
        return v

    def bracket_of(self, a: str, b: str) -> np.ndarray:
        return self.structure[INDEX[a], INDEX[b]]

    def ad(self, x: np.ndarray) -> np.ndarray:
        """8x8 matrix of y -> [x, y] for an element x given by coordinates."""
        return np.stack([bracket(self, x, self.basis_vector(b)) for b in LABELS], axis=1)


def bracket(alg: SuperAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear extension of the structure constants to coordinate vectors."""
    f = alg.field
    coef = f.mul(x[:, None, :], y[None, :, :])
    return f.mul(coef[:, :, None, :], alg.structure).sum(axis=(0, 1)) % f.p


def root(alg: SuperAlgebra, label: str) -> Weight:
    """Eigenvalues (c1, c2) with [h_i, x] = c_i x."""
    f = alg.field
    values = []
    for h in CARTAN:
        image = alg.structure[INDEX[h], INDEX[label]]
        others = [i for i in range(8) if i != INDEX[label]]
        if image[others].any():
            raise RuntimeError(f"{label} is not an eigenvector of ad {h}")
        values.append(f.element(image[INDEX[label]]))
    return Weight(*values)


def build_sl21(field: Field) -> SuperAlgebra:
    structure = field.zeros((8, 8, 8))
    for a, b in product(LABELS, repeat=2):
        ma, mb = supermatrix(a), supermatrix(b)
        sign = (-1) ** (parity(a) * parity(b))
        structure[INDEX[a], INDEX[b]] = field.asarray(matrix_coords(ma @ mb - sign * mb @ ma))
    structure.setflags(write=False)
    proto = SuperAlgebra(field, structure, {}, {})
    roots = {label: root(proto, label) for label in LABELS}
    zero = field.zeros(8)
    p_power = {"h1": proto.basis_vector("h1"), "h2": proto.basis_vector("h2"),
               "e12": zero, "e21": zero}
    alg = SuperAlgebra(field, structure, roots, p_power)
    problems = (check_supertrace() + check_antisymmetry(alg) + check_super_jacobi(alg)
                + check_roots(alg) + check_restriction(alg))
    if problems:
        raise RuntimeError("sl(2,1) self-test failed: " + "; ".join(problems[:5]))
    return alg


# -- self-tests; each returns a list of human-readable violations --

def check_supertrace() -> list[str]:
    return [f"str({x}) != 0" for x in LABELS if supertrace(supermatrix(x)) != 0]


def check_antisymmetry(alg: SuperAlgebra) -> list[str]:
    f = alg.field
    bad = []
    for a, b in product(LABELS, repeat=2):
        sign = (-1) ** (parity(a) * parity(b))
        lhs = alg.bracket_of(a, b)
        rhs = f.mul(f.from_int(-sign).array(), alg.bracket_of(b, a))
        if not (lhs == rhs).all():
            bad.append(f"antisymmetry fails for ({a}, {b})")
    return bad


def check_super_jacobi(alg: SuperAlgebra) -> list[str]:
    """[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]] on all 8^3 basis triples."""
    f = alg.field
    bad = []
    vec = {x: alg.basis_vector(x) for x in LABELS}
    for x, y, z in product(LABELS, repeat=3):
        lhs = bracket(alg, vec[x], alg.bracket_of(y, z))
        t1 = bracket(alg, alg.bracket_of(x, y), vec[z])
        t2 = bracket(alg, vec[y], alg.bracket_of(x, z))
        sign = f.from_int((-1) ** (parity(x) * parity(y))).array()
        if not (lhs == f.add(t1, f.mul(sign, t2))).all():
            bad.append(f"super-Jacobi fails for ({x}, {y}, {z})")
    return bad


def check_roots(alg: SuperAlgebra) -> list[str]:
    allowed = {alg.field.from_int(c) for c in (-1, 0, 1)}
    bad = []
    for label, (w1, w2) in alg.roots.items():
        if not {w1, w2, w1 + w2} <= allowed:
            bad.append(f"root of {label} out of range: {(w1, w2)}")
    return bad


def check_restriction(alg: SuperAlgebra) -> list[str]:
    """ad(x^[p]) = ad(x)^p, with x^[p] also matching the p-th matrix power."""
    f = alg.field
    p = f.p
    bad = []
    for x in EVEN:
        target = alg.p_power[x]
        if not (f.mat_pow(alg.ad(alg.basis_vector(x)), p) == alg.ad(target)).all():
            bad.append(f"ad({x})^p != ad({x}^[p])")
        mp = np.linalg.matrix_power(supermatrix(x), p)
        if not (f.asarray(matrix_coords(mp)) == target).all():
            bad.append(f"{x}^p as a matrix differs from {x}^[p]")
    return bad


def zdegree_violations(alg: SuperAlgebra) -> list[str]:
    """[g_i, g_j] must lie in g_{i+j}, with g_{+-2} = 0."""
    bad = []
    for a, b in product(LABELS, repeat=2):
        target = zdegree(a) + zdegree(b)
        br = alg.bracket_of(a, b)
        for c in LABELS:
            if br[INDEX[c]].any() and zdegree(c) != target:
                bad.append(f"[{a}, {b}] has a component {c} of the wrong degree")
    return bad
