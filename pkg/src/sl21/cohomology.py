"""First cohomology H^1(g, M) = Der(g, M) / Ider(g, M) by exact linear algebra.

A cochain phi: g -> M is stored through its flattened coordinates: the value
on generator ``LABELS[g]`` occupies positions ``g*dim .. g*dim + dim - 1``.
A cochain of parity f is a derivation when, for all basis pairs x, y,

    phi([x, y]) = (-1)^{f|x|} x.phi(y) - (-1)^{|y|(f + |x|)} y.phi(x),

and the inner derivation of a homogeneous m is D_m(x) = (-1)^{|x||m|} x.m.

H^1 is computed twice: once on all parity-f cochains, and once on weight-zero
cochains only (phi(g_alpha) inside M_alpha), where the quotient is taken by
{D_m : m of weight zero}.  The two answers must agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from sl21.linalg import Subspace, nullspace, solve, subspace_intersect, subspace_sum
from sl21.modules import ModuleRep, weight_spaces
from sl21.superalgebra import INDEX, LABELS, SuperAlgebra, Weight, parity


@dataclass(frozen=True, eq=False)
class Cochain:
    rep: ModuleRep
    parity: int
    values: np.ndarray  # (8, dim, degree)

    @classmethod
    def from_flat(cls, rep: ModuleRep, par: int, flat: np.ndarray) -> "Cochain":
        return cls(rep, par, np.asarray(flat).reshape(8, rep.dim, rep.field.degree))

    @classmethod
    def from_values(cls, rep: ModuleRep, par: int, values: dict) -> "Cochain":
        arr = rep.field.zeros((8, rep.dim))
        for label, vec in values.items():
            arr[INDEX[label]] = vec
        return cls(rep, par, arr)

    def value(self, label: str) -> np.ndarray:
        return self.values[INDEX[label]]

    def flat(self) -> np.ndarray:
        return self.values.reshape(8 * self.rep.dim, self.rep.field.degree)

    def is_zero(self) -> bool:
        return not self.values.any()

    def to_dict(self) -> dict:
        f = self.rep.field
        return {"parity": self.parity,
                "values": {x: f.vector_literals(self.value(x)) for x in LABELS}}


@dataclass
class CochainSpace:
    rep: ModuleRep
    parity: int
    subspace: Subspace
    tag: str

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def cochains(self) -> list[Cochain]:
        return [Cochain.from_flat(self.rep, self.parity, v) for v in self.subspace.basis]


@dataclass
class H1Result:
    dim_even: int
    dim_odd: int
    representatives: list
    instance: dict = dc_field(default_factory=dict)
    details: dict = dc_field(default_factory=dict)

    @property
    def dim_total(self) -> int:
        return self.dim_even + self.dim_odd

    def dims(self) -> tuple[int, int, int]:
        return self.dim_total, self.dim_even, self.dim_odd


def _instance(rep: ModuleRep) -> dict:
    return {"p": rep.field.p, "chi": rep.chi.describe(), "lambda": rep.lam, "module": rep.kind}


def _sign(f, e: int) -> np.ndarray:
    return f.from_int(-1 if e % 2 else 1).array()


def derivation_system(alg: SuperAlgebra, rep: ModuleRep, par: int) -> np.ndarray:
    """Matrix (64*dim) x (8*dim) whose kernel is the parity-``par`` derivation identity."""
    f = rep.field
    n = rep.dim
    eye = f.eye(n)
    system = f.zeros((64 * n, 8 * n))
    for row, (x, y) in enumerate(product(LABELS, repeat=2)):
        block = system[row * n:(row + 1) * n]
        coeffs = alg.bracket_of(x, y)
        for z in LABELS:
            c = coeffs[INDEX[z]]
            if c.any():
                cols = slice(INDEX[z] * n, (INDEX[z] + 1) * n)
                block[:, cols] = f.add(block[:, cols], f.mul(c, eye))
        sx = _sign(f, par * parity(x))
        sy = _sign(f, parity(y) * (par + parity(x)))
        cy = slice(INDEX[y] * n, (INDEX[y] + 1) * n)
        cx = slice(INDEX[x] * n, (INDEX[x] + 1) * n)
        block[:, cy] = f.sub(block[:, cy], f.mul(sx, rep.action[x]))
        block[:, cx] = f.add(block[:, cx], f.mul(sy, rep.action[y]))
    return system


def coboundary_matrix(rep: ModuleRep, par: int) -> np.ndarray:
    """(8*dim) x dim matrix sending m (of parity ``par``) to the flattened D_m."""
    f = rep.field
    blocks = [f.mul(_sign(f, parity(x) * par), rep.action[x]) for x in LABELS]
    return np.concatenate(blocks, axis=0)


def _cochain_domain(alg: SuperAlgebra, rep: ModuleRep, par: int, weight_zero: bool,
                    spaces=None) -> Subspace:
    """Flattened coordinates allowed for a parity-``par`` cochain (optionally of weight zero)."""
    f = rep.field
    n = rep.dim
    rows = []
    for g, x in enumerate(LABELS):
        target = rep.parity_subspace((parity(x) + par) % 2)
        if weight_zero:
            ws = spaces.get(alg.roots[x])
            target = subspace_intersect(target, ws) if ws is not None else Subspace.zero(f, n)
        for v in target.basis:
            row = f.zeros(8 * n)
            row[g * n:(g + 1) * n] = v
            rows.append(row)
    return Subspace.span(f, np.array(rows) if rows else f.zeros((0, 8 * n)), 8 * n)


def _restricted_kernel(f, system: np.ndarray, domain: Subspace) -> Subspace:
    if domain.dim == 0:
        return Subspace.zero(f, domain.ambient_dim)
    restricted = f.matmul(system, np.swapaxes(domain.basis, 0, 1))
    ker = nullspace(f, restricted)
    if ker.dim == 0:
        return Subspace.zero(f, domain.ambient_dim)
    return Subspace.span(f, f.matmul(ker.basis, domain.basis), domain.ambient_dim)


def cocycle_space(alg: SuperAlgebra, rep: ModuleRep, par: int) -> CochainSpace:
    f = rep.field
    z = _restricted_kernel(f, derivation_system(alg, rep, par), _cochain_domain(alg, rep, par, False))
    space = CochainSpace(rep, par, z, "cocycles")
    for c in space.cochains():
        if not is_cocycle(alg, c):
            raise RuntimeError("solver returned a cochain that fails the derivation identity")
    return space


def _inner_span(rep: ModuleRep, par: int, source: Subspace) -> Subspace:
    f = rep.field
    if source.dim == 0:
        return Subspace.zero(f, 8 * rep.dim)
    images = np.swapaxes(f.matmul(coboundary_matrix(rep, par), np.swapaxes(source.basis, 0, 1)), 0, 1)
    return Subspace.span(f, images, 8 * rep.dim)


def coboundary_space(rep: ModuleRep, par: int) -> CochainSpace:
    return CochainSpace(rep, par, _inner_span(rep, par, rep.parity_subspace(par)), "coboundaries")


def invariant_vectors(rep: ModuleRep) -> Subspace:
    """M^g: common kernel of all eight action matrices."""
    f = rep.field
    if rep.dim == 0:
        return Subspace.zero(f, 0)
    return nullspace(f, np.concatenate([rep.action[x] for x in LABELS]))


def coboundary(rep: ModuleRep, m: np.ndarray) -> Cochain:
    """D_m for a parity-homogeneous module vector m."""
    f = rep.field
    support = {rep.parity[i] for i in np.flatnonzero(np.asarray(m).any(axis=-1))}
    if len(support) > 1:
        raise ValueError("m is not parity-homogeneous")
    par = support.pop() if support else 0
    return Cochain.from_flat(rep, par, f.matmul(coboundary_matrix(rep, par), m))


def _complement(f, big: Subspace, small: Subspace) -> Subspace:
    """Canonical complement of ``small`` inside ``big``: big's basis reduced modulo small."""
    if big.dim == 0:
        return big
    reduced = np.stack([small.reduce(v) for v in big.basis])
    return Subspace.span(f, reduced, big.ambient_dim)


def h1_full(alg: SuperAlgebra, rep: ModuleRep) -> H1Result:
    f = rep.field
    dims, reps, details = {}, [], {}
    for par in (0, 1):
        z = cocycle_space(alg, rep, par).subspace
        b = coboundary_space(rep, par).subspace
        zb = subspace_intersect(z, b)
        if zb.dim != b.dim:
            raise RuntimeError("an inner derivation failed to be a cocycle")
        dims[par] = z.dim - zb.dim
        reps += [Cochain.from_flat(rep, par, v) for v in _complement(f, z, zb).basis]
        details[par] = {"cocycles": z.dim, "coboundaries": b.dim}
    return H1Result(dims[0], dims[1], reps, _instance(rep), details)


def weight_zero_cochains(alg: SuperAlgebra, rep: ModuleRep, par: int) -> Subspace:
    """All parity-``par`` weight maps: phi(g_alpha) inside M_alpha for every root alpha."""
    return _cochain_domain(alg, rep, par, True, weight_spaces(rep))


def _zero_weight_vectors(rep: ModuleRep, par: int, spaces: dict) -> Subspace:
    f = rep.field
    zero = spaces.get(Weight(f.zero, f.zero))
    if zero is None:
        return Subspace.zero(f, rep.dim)
    return subspace_intersect(rep.parity_subspace(par), zero)


def weight_zero_cocycle_space(alg: SuperAlgebra, rep: ModuleRep, par: int,
                              spaces: dict | None = None) -> CochainSpace:
    """Der_0: derivations that are weight maps."""
    domain = _cochain_domain(alg, rep, par, True, spaces or weight_spaces(rep))
    space = _restricted_kernel(rep.field, derivation_system(alg, rep, par), domain)
    return CochainSpace(rep, par, space, "weight-zero-cocycles")


def weight_zero_coboundary_space(rep: ModuleRep, par: int, spaces: dict | None = None) -> CochainSpace:
    """Der_0 cap Ider, spanned by D_m for m of weight zero."""
    m0 = _zero_weight_vectors(rep, par, spaces or weight_spaces(rep))
    return CochainSpace(rep, par, _inner_span(rep, par, m0), "weight-zero-coboundaries")


def h1_weight_reduced(alg: SuperAlgebra, rep: ModuleRep) -> H1Result:
    """H^1 as Der_0 / (Der_0 cap Ider)."""
    f = rep.field
    spaces = weight_spaces(rep)
    invariants = invariant_vectors(rep)
    dims, reps, details = {}, [], {}
    for par in (0, 1):
        der0 = weight_zero_cocycle_space(alg, rep, par, spaces).subspace
        m0 = _zero_weight_vectors(rep, par, spaces)
        inner0 = weight_zero_coboundary_space(rep, par, spaces).subspace
        if inner0.dim != m0.dim - subspace_intersect(m0, invariants).dim:
            raise RuntimeError("weight-zero inner derivations have the wrong dimension")
        if subspace_sum(der0, inner0).dim != der0.dim:
            raise RuntimeError("a weight-zero inner derivation is missing from Der_0")
        dims[par] = der0.dim - inner0.dim
        reps += [Cochain.from_flat(rep, par, v) for v in _complement(f, der0, inner0).basis]
        details[par] = {"weight_derivations": der0.dim, "inner": inner0.dim}
    return H1Result(dims[0], dims[1], reps, _instance(rep), details)


def is_cocycle(alg: SuperAlgebra, cochain: Cochain) -> bool:
    """Direct substitution of the derivation identity on all 64 basis pairs."""
    rep = cochain.rep
    f = rep.field
    par = cochain.parity
    values = cochain.values
    for g, x in enumerate(LABELS):
        wrong = np.asarray(rep.parity) != (parity(x) + par) % 2
        if values[g][wrong].any():
            return False
    pars = np.array([parity(x) for x in LABELS])
    # lhs[x, y] = phi([x, y]);  acted[x, y] = x . phi(y)
    lhs = f.mul(alg.structure[..., None, :], values[None, None]).sum(axis=2) % f.p
    by_column = np.moveaxis(values, 0, 1)  # (dim, 8, degree)
    acted = np.stack([f.matmul(rep.action[x], by_column) for x in LABELS])  # (x, dim, y)
    acted = np.moveaxis(acted, 2, 1)  # (x, y, dim)
    sx = np.where((par * pars) % 2, f.p - 1, 1)[:, None]
    sy = np.where((pars[None, :] * (par + pars[:, None])) % 2, f.p - 1, 1)
    first = f.mul(sx[..., None, None] * np.eye(1, f.degree, dtype=np.int64), acted)
    second = f.mul(sy[..., None, None] * np.eye(1, f.degree, dtype=np.int64), np.swapaxes(acted, 0, 1))
    return bool((lhs == f.sub(first, second)).all())


def inner_witness(cochain: Cochain) -> np.ndarray | None:
    """Some m of the cochain's parity with D_m equal to the cochain, else None."""
    rep = cochain.rep
    f = rep.field
    cols = [m for m in range(rep.dim) if rep.parity[m] == cochain.parity]
    full = coboundary_matrix(rep, cochain.parity)
    if not cols:
        return f.zeros(rep.dim) if cochain.is_zero() else None
    sol = solve(f, full[:, cols], cochain.flat())
    if sol is None:
        return None
    m = f.zeros(rep.dim)
    m[cols] = sol
    return m


def is_inner(cochain: Cochain) -> bool:
    return inner_witness(cochain) is not None


def rank_modulo_inner(cochains: list) -> int:
    """Dimension of the span of the given cochains' classes modulo inner derivations."""
    if not cochains:
        return 0
    rep = cochains[0].rep
    f = rep.field
    total = 0
    for par in (0, 1):
        group = [c.flat() for c in cochains if c.parity == par]
        if not group:
            continue
        b = coboundary_space(rep, par).subspace
        with_group = subspace_sum(b, Subspace.span(f, np.stack(group), 8 * rep.dim))
        total += with_group.dim - b.dim
    return total


# -- the explicit cocycles psi_1 .. psi_8 --

def _psi_instance(k: int, p: int) -> tuple[tuple[int, int], str]:
    return {
        1: ((p - 1, p - 2), "kac"),
        2: ((p - 2, 0), "kac"),
        3: ((p - 1, p - 1), "simple"),
        4: ((p - 1, 0), "simple"),
        5: ((p - 1, 0), "simple"),
        6: ((p - 1, 1), "simple"),
        7: ((p - 1, 1), "simple"),
        8: ((1, 0), "simple"),
    }[k]


def _psi_terms(k: int, p: int) -> dict:
    """generator -> (coefficient, <i,j,k>) for the nonzero values of psi_k."""
    return {
        1: {"e13": (1, (1, 1, 0)), "e23": (1, (1, 1, 1))},
        2: {"e23": (1, (0, 1, 0)), "e21": (1, (1, 1, 0))},
        3: {"e13": (-1, (0, 1, 0)), "e23": (1, (1, 0, 0))},
        4: {"h1": (-1, (1, 0, p - 1)), "e12": (1, (1, 0, p - 2)), "e13": (1, (0, 0, p - 1))},
        5: {"e23": (1, (0, 0, 0)), "e21": (-1, (1, 0, 0))},
        6: {"e12": (1, (0, 0, p - 2)), "e32": (1, (1, 0, p - 2))},
        7: {"e21": (1, (0, 0, 0)), "e31": (1, (0, 1, 0))},
        8: {"e32": (1, (0, 0, 0)), "e31": (-1, (0, 0, 1))},
    }[k]


def psi_instance(k: int, p: int) -> tuple[tuple[int, int], str]:
    """(lambda, module kind) on which psi_k is defined, with chi = 0."""
    if k not in range(1, 9):
        raise ValueError("psi index must be between 1 and 8")
    return _psi_instance(k, p)


def build_psi(k: int, rep: ModuleRep) -> Cochain:
    f = rep.field
    p = f.p
    lam, kind = psi_instance(k, p)
    if rep.chi.kind != "zero" or rep.kind != kind or \
            (rep.lam.l1, rep.lam.l2) != (f.from_int(lam[0]), f.from_int(lam[1])):
        raise ValueError(f"psi_{k} lives on the {kind} module with chi = 0, lambda = {lam}")
    values = {}
    par = None
    for gen, (coef, label) in _psi_terms(k, p).items():
        values[gen] = f.mul(f.from_int(coef).array(), rep.label_vector(*label))
        par = (parity(gen) + sum(label[:2])) % 2
    return Cochain.from_values(rep, par, values)


# -- the shapes of weight maps when chi = 0, by lambda1 + lambda2 --

def weight_map_forms(lam1: int, lam2: int, p: int) -> dict:
    """generator -> list of <i,j,k> spanning the allowed values of a weight map.

    Empty dict means every weight map vanishes.
    """
    s = (lam1 + lam2) % p
    l = lam1
    if s == 1:
        return {"e31": [(0, 0, l)], "e32": [(0, 0, l - 1)]}
    if s == p - 1:
        return {"h1": [(1, 0, l), (0, 1, l + 1)], "h2": [(1, 0, l), (0, 1, l + 1)],
                "e12": [(1, 0, l - 1), (0, 1, l)], "e21": [(1, 0, l + 1), (0, 1, l + 2)],
                "e13": [(0, 0, l)], "e23": [(0, 0, l + 1)],
                "e31": [(1, 1, l + 1)], "e32": [(1, 1, l)]}
    if s == 0:
        return {"e31": [(1, 0, l), (0, 1, l + 1)], "e32": [(0, 1, l), (1, 0, l - 1)],
                "e12": [(0, 0, l - 1)], "e21": [(0, 0, l + 1)],
                "h1": [(0, 0, l)], "h2": [(0, 0, l)]}
    if s == p - 2:
        return {"e23": [(1, 0, l + 1), (0, 1, l + 2)], "e21": [(1, 1, l + 2)],
                "h1": [(1, 1, l + 1)], "h2": [(1, 1, l + 1)],
                "e13": [(1, 0, l), (0, 1, l + 1)], "e12": [(1, 1, l)]}
    if s == p - 3:
        return {"e13": [(1, 1, l + 1)], "e23": [(1, 1, l + 2)]}
    return {}
