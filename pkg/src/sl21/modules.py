"""chi-reduced Kac modules Z^chi(lam) of sl(2,1) and their simple quotients.

A Kac module has the basis <i,j,k> = e31^i e32^j e21^k v0 with i, j in {0, 1}
and 0 <= k <= K.  The action matrices are filled in term by term from the
explicit action formulas; ``validate_rep`` then checks them against the
bracket, the p-character and the weight grading, so a transcription slip
cannot survive silently.

Two conventions are fixed here:

* v0 is even, so <i,j,k> has parity (i + j) mod 2.
* In the truncated semisimple case the first term of the e23 action is
  ``+((-1)^i (lam2 + k) - i) <i,0,k>``, the same sign as in the nilpotent
  case.  With the opposite sign the [e12, e23] and [e21, e13] identities fail
  for every weight.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import NamedTuple

import numpy as np

from sl21.field import Field, FieldElement
from sl21.linalg import Subspace, largest_invariant_subspace, simultaneous_eigenspace, solve, subspace_sum
from sl21.superalgebra import EVEN, INDEX, LABELS, SuperAlgebra, Weight, parity

KacLabel = tuple  # (i, j, k)


@dataclass(frozen=True)
class PChar:
    """A p-character in one of the two orbit normal forms.

    semisimple: chi(h1)=r, chi(h2)=s, chi(e12)=chi(e21)=0
    nilpotent:  chi(h1)=chi(h2)=r, chi(e12)=0, chi(e21)=1
    The zero character is stored with kind ``"zero"``.
    """

    kind: str
    r: FieldElement
    s: FieldElement

    def __post_init__(self):
        if self.kind not in ("zero", "semisimple", "nilpotent"):
            raise ValueError(f"unknown p-character kind {self.kind!r}")
        if self.r.field != self.s.field:
            raise ValueError("r and s live in different fields")
        if self.kind == "nilpotent" and self.r != self.s:
            raise ValueError("a nilpotent p-character has chi(h1) = chi(h2)")

    @classmethod
    def zero(cls, field: Field) -> "PChar":
        return cls("zero", field.zero, field.zero)

    @classmethod
    def semisimple(cls, r: FieldElement, s: FieldElement) -> "PChar":
        kind = "zero" if r.is_zero() and s.is_zero() else "semisimple"
        return cls(kind, r, s)

    @classmethod
    def nilpotent(cls, r: FieldElement) -> "PChar":
        return cls("nilpotent", r, r)

    @property
    def field(self) -> Field:
        return self.r.field

    @property
    def is_semisimple(self) -> bool:
        return self.kind != "nilpotent"

    def value(self, label: str) -> FieldElement:
        f = self.field
        if label == "h1":
            return self.r
        if label == "h2":
            return self.s
        if label == "e21" and self.kind == "nilpotent":
            return f.one
        return f.zero

    def describe(self) -> str:
        if self.kind == "zero":
            return "zero"
        if self.kind == "semisimple":
            return f"ss:{self.r!r},{self.s!r}"
        return f"nilp:{self.r!r}"


class HighestWeight(NamedTuple):
    l1: FieldElement
    l2: FieldElement

    def __repr__(self):
        return f"({self.l1!r}, {self.l2!r})"


def is_admissible(chi: PChar, lam: HighestWeight) -> bool:
    p = chi.field.p
    return all(l ** p - l == chi.value(h) ** p for l, h in zip(lam, ("h1", "h2")))


def artin_schreier_roots(field: Field, c: FieldElement) -> list[FieldElement]:
    """All x in ``field`` with x^p - x = c.

    x -> x^p - x is F_p-linear on coefficient vectors; solve that system and
    add its kernel (the prime subfield).
    """
    p, n = field.p, field.degree
    fp = Field(p)
    cols = []
    for j in range(n):
        basis = field.element([0] * j + [1])
        cols.append((basis ** p - basis).coeffs)
    system = fp.asarray(np.array(cols, dtype=np.int64).T)
    x0 = solve(fp, system, fp.asarray(c.coeffs))
    if x0 is None:
        return []
    x0 = field.element(x0[:, 0].tolist())
    return sorted((x0 + a for a in range(p)), key=lambda x: x.coeffs)


def admissible_weights(field: Field, chi: PChar) -> list[HighestWeight]:
    """All (lam1, lam2) with lam_i^p - lam_i = chi(h_i)^p, in coefficient-lex order."""
    p = field.p
    roots1 = artin_schreier_roots(field, chi.value("h1") ** p)
    roots2 = artin_schreier_roots(field, chi.value("h2") ** p)
    if not roots1 or not roots2:
        raise ValueError(f"{field} does not contain the weights for chi = {chi.describe()}")
    return [HighestWeight(a, b) for a in roots1 for b in roots2]


def kac_top(chi: PChar, lam: HighestWeight) -> int:
    """Largest k in the Kac basis."""
    p = chi.field.p
    if chi.is_semisimple and chi.r == chi.s:
        d = (lam.l1 - lam.l2).lift_to_int()
        if d != p - 1:
            return d
    return p - 1


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A finite-dimensional sl(2,1)-module given by its eight action matrices.

    ``projection`` maps Kac-module coordinates onto this module's coordinates;
    it is the identity for a Kac module and the quotient map for a simple one.
    """

    field: Field
    action: dict
    parity: tuple
    weights: tuple
    v0_index: int
    provenance: str
    chi: PChar
    lam: HighestWeight
    kac_labels: tuple
    projection: np.ndarray
    basis_labels: tuple = dc_field(default=())

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def kind(self) -> str:
        return "kac" if self.provenance == "kac" else "simple"

    def label_vector(self, i: int, j: int, k: int) -> np.ndarray:
        """Image of <i,j,k> in this module; k is read modulo p and <i,j,k> = 0 past the top."""
        k %= self.field.p
        try:
            col = self.kac_labels.index((i, j, k))
        except ValueError:
            return self.field.zeros(self.dim)
        return self.projection[:, col].copy()

    def parity_subspace(self, par: int) -> Subspace:
        f = self.field
        rows = [f.eye(self.dim)[m] for m in range(self.dim) if self.parity[m] == par]
        return Subspace.span(f, np.array(rows) if rows else f.zeros((0, self.dim)), self.dim)


def build_kac(alg: SuperAlgebra, chi: PChar, lam: HighestWeight) -> ModuleRep:
    f = alg.field
    if chi.field != f:
        raise ValueError("p-character and algebra are over different fields")
    lam = HighestWeight(f.element(lam[0]), f.element(lam[1]))
    if not is_admissible(chi, lam):
        raise ValueError(f"weight {lam} is not admissible for chi = {chi.describe()}")
    p = f.p
    top = kac_top(chi, lam)
    wrap = top == p - 1
    labels = [(i, j, k) for i in (0, 1) for j in (0, 1) for k in range(top + 1)]
    index = {lab: n for n, lab in enumerate(labels)}
    dim = len(labels)
    action = {x: f.zeros((dim, dim)) for x in LABELS}
    l1, l2 = lam
    diff = l1 - l2
    nilpotent = not chi.is_semisimple

    def put(x, src, coef, i, j, k):
        coef = f.element(coef) if not isinstance(coef, FieldElement) else coef
        if coef.is_zero():
            return
        if wrap:
            k %= p
        elif not 0 <= k <= top:
            raise RuntimeError(f"{x}<{src}> reaches <{i},{j},{k}> outside the Kac basis")
        t = index[(i, j, k)]
        s = index[src]
        action[x][t, s] = f.add(action[x][t, s], coef.array())

    def steps(k):
        # delta_{k != p-1} delta_{k != lam1 - lam2}
        return k != p - 1 and f.from_int(k) != diff

    for (i, j, k) in labels:
        src = (i, j, k)
        sgn = (-1) ** i
        lower = k * (diff - k + 1)
        put("h1", src, l1 + j - k, i, j, k)
        put("h2", src, l2 + i + k, i, j, k)
        if i == 0:
            put("e31", src, 1, 1, j, k)
        if j == 0:
            put("e32", src, sgn, i, 1, k)
        put("e12", src, lower, i, j, k - 1)
        if (i, j) == (1, 0):
            put("e12", src, -1, 0, 1, k)
        if j == 1:
            put("e13", src, sgn * lower, i, 0, k - 1)
        if i == 1:
            put("e13", src, l1 + j - k, 0, j, k)
        if (i, j) == (0, 1):
            put("e21", src, -1, 1, 0, k)
        if j == 1:
            put("e23", src, sgn * (l2 + k) - i, i, 0, k)
        if nilpotent or steps(k):
            put("e21", src, 1, i, j, k + 1)
            if i == 1:
                put("e23", src, 1, 0, j, k + 1)

    for m in action.values():
        m.setflags(write=False)
    weights = tuple(Weight(l1 + j - k, l2 + i + k) for (i, j, k) in labels)
    return ModuleRep(
        field=f, action=action, parity=tuple((i + j) % 2 for (i, j, _) in labels),
        weights=weights, v0_index=0, provenance="kac", chi=chi, lam=lam,
        kac_labels=tuple(labels), projection=f.eye(dim), basis_labels=tuple(labels),
    )


@dataclass
class ValidationReport:
    ok: bool
    failures: list

    @property
    def first(self) -> str | None:
        return self.failures[0] if self.failures else None

    def __bool__(self):
        return self.ok


def validate_rep(alg: SuperAlgebra, rep: ModuleRep, stop_early: bool = False) -> ValidationReport:
    """Check bracket compatibility (64 pairs), the p-character on the even
    generators, parity of every action matrix and the weight grading."""
    f = rep.field
    p = f.p
    rho = rep.action
    failures = []
    n = rep.dim

    for x, y in product(LABELS, repeat=2):
        sign = f.from_int((-1) ** (parity(x) * parity(y))).array()
        coeffs = alg.bracket_of(x, y)
        lhs = f.zeros((n, n))
        for z in LABELS:
            c = coeffs[INDEX[z]]
            if c.any():
                lhs = f.add(lhs, f.mul(c, rho[z]))
        rhs = f.sub(f.matmul(rho[x], rho[y]), f.mul(sign, f.matmul(rho[y], rho[x])))
        if not (lhs == rhs).all():
            failures.append(f"bracket identity fails for ({x}, {y})")
            if stop_early:
                return ValidationReport(False, failures)

    for x in EVEN:
        px = alg.p_power[x]
        image = f.zeros((n, n))
        for z in LABELS:
            if px[INDEX[z]].any():
                image = f.add(image, f.mul(px[INDEX[z]], rho[z]))
        lhs = f.sub(f.mat_pow(rho[x], p), image)
        rhs = f.mul(f.eye(n), (rep.chi.value(x) ** p).array())
        if not (lhs == rhs).all():
            failures.append(f"p-character identity fails for {x}")

    par = np.array(rep.parity)
    for x in LABELS:
        nz = rho[x].any(axis=-1)
        rows, cols = np.nonzero(nz)
        if ((par[rows] + par[cols] + parity(x)) % 2).any():
            failures.append(f"{x} does not have parity {parity(x)}")

    for h in ("h1", "h2"):
        diag = np.stack([w[0 if h == "h1" else 1].array() for w in rep.weights]) if n else f.zeros(0)
        expected = f.zeros((n, n))
        expected[np.arange(n), np.arange(n)] = diag
        if not (rho[h] == expected).all():
            failures.append(f"{h} does not act diagonally with the recorded weights")

    for x in LABELS:
        r = alg.roots[x]
        rows, cols = np.nonzero(rho[x].any(axis=-1))
        for a, b in zip(rows, cols):
            if rep.weights[a] != rep.weights[b] + r:
                failures.append(f"{x} maps weight {rep.weights[b]} outside weight {rep.weights[b] + r}")
                break

    return ValidationReport(not failures, failures)


def weight_spaces(rep: ModuleRep) -> dict:
    """Simultaneous eigenspaces of h1, h2, keyed by weight."""
    f = rep.field
    out = {}
    for w in dict.fromkeys(rep.weights):
        out[w] = simultaneous_eigenspace(f, [rep.action["h1"], rep.action["h2"]], list(w))
    if sum(s.dim for s in out.values()) != rep.dim:
        raise RuntimeError("weight spaces do not add up to the whole module")
    return out


def radical(alg: SuperAlgebra, rep: ModuleRep) -> Subspace:
    """Unique maximal submodule: the largest invariant subspace with no weight-lam component."""
    spaces = weight_spaces(rep)
    top = rep.weights[rep.v0_index]
    if spaces[top].dim != 1:
        raise ValueError(f"highest weight space has dimension {spaces[top].dim}, expected 1")
    within = Subspace.zero(rep.field, rep.dim)
    for w, s in spaces.items():
        if w != top:
            within = subspace_sum(within, s)
    return largest_invariant_subspace(rep.field, [rep.action[x] for x in LABELS], within)


def is_invariant(rep: ModuleRep, sub: Subspace) -> bool:
    f = rep.field
    if sub.dim == 0:
        return True
    ann = sub.annihilator()
    if ann.shape[0] == 0:
        return True
    basis_t = np.swapaxes(sub.basis, 0, 1)
    return all(f.is_zero(f.matmul(ann, f.matmul(rep.action[x], basis_t))).all() for x in LABELS)


def quotient(rep: ModuleRep, sub: Subspace, provenance: str = "simple-quotient") -> ModuleRep:
    """rep / sub on the coordinates that are not pivots of ``sub``."""
    f = rep.field
    if sub.ambient_dim != rep.dim:
        raise ValueError("subspace does not live in this module")
    if not is_invariant(rep, sub):
        raise ValueError("subspace is not a submodule")
    pivots = sub.pivots
    keep = [c for c in range(rep.dim) if c not in set(pivots)]
    if sub.dim and rep.v0_index not in keep:
        raise ValueError("submodule contains the highest weight vector")
    q = len(keep)
    proj = f.zeros((q, rep.dim))
    for t, c in enumerate(keep):
        proj[t, c] = f.one.array()
    for row, c in zip(sub.basis, pivots):
        proj[:, c] = f.neg(row[keep])
    embed = f.zeros((rep.dim, q))
    for t, c in enumerate(keep):
        embed[c, t] = f.one.array()
    action = {}
    for x in LABELS:
        m = f.matmul(proj, f.matmul(rep.action[x], embed)) if q else f.zeros((0, 0))
        m.setflags(write=False)
        action[x] = m
    return ModuleRep(
        field=f, action=action, parity=tuple(rep.parity[c] for c in keep),
        weights=tuple(rep.weights[c] for c in keep),
        v0_index=keep.index(rep.v0_index) if q else 0, provenance=provenance,
        chi=rep.chi, lam=rep.lam, kac_labels=rep.kac_labels,
        projection=f.matmul(proj, rep.projection) if q else f.zeros((0, len(rep.kac_labels))),
        basis_labels=tuple(rep.basis_labels[c] for c in keep) if rep.basis_labels else (),
    )


def build_simple(alg: SuperAlgebra, chi: PChar, lam: HighestWeight) -> ModuleRep:
    kac = build_kac(alg, chi, lam)
    return quotient(kac, radical(alg, kac))


# -- closed-form description of the simple modules, used as an oracle --

class Relation(NamedTuple):
    """``lhs = sum(coef * label for coef, label in rhs)`` in the simple module."""

    lhs: tuple
    rhs: tuple


@dataclass
class SimpleModuleShape:
    case: int
    dim: int
    relations: list


def simple_module_shape(chi: PChar, lam: HighestWeight, p: int) -> SimpleModuleShape:
    """Dimension and label relations of S^chi(lam) for chi = 0 or nilpotent
    chi with chi(h1) = 0, split into six cases.

    Cases: 1 lam1 != p-1 and lam2 != 0; 2 lam1 = p-1, lam2 not in {0, p-1};
    3 lam = (p-1, 0); 4 lam = (p-1, p-1); 5 lam2 = 0, lam1 != p-1; 6 nilpotent
    chi outside case 1.  The dimensions are the ones the radical computation
    produces; in case 3 the top vector <1,0,p-1> is killed by g_1 and falls
    into the radical, which leaves 2p - 1 rather than 2p.
    """
    if chi.kind == "semisimple" or not chi.r.is_zero():
        raise ValueError("only chi = 0 or nilpotent chi with chi(h1) = 0 are described")
    l1, l2 = (x.lift_to_int() for x in lam)
    rel = []

    def zero(i, j, k):
        rel.append(Relation((i, j, k), ()))

    if l1 != p - 1 and l2 != 0:
        top = kac_top(chi, HighestWeight(*lam))
        return SimpleModuleShape(1, 4 * (top + 1), [])

    if chi.kind == "nilpotent":
        for k in range(p):
            rel.append(Relation((0, 1, k), (((l2 + k) % p, (1, 0, k - 1)),)))
            zero(1, 1, k)
        return SimpleModuleShape(6, 2 * p, rel)

    if l1 == p - 1 and l2 not in (0, p - 1):
        for k in range(p - l2):
            zero(1, 1, k)
            rel.append(Relation((0, 1, k + 1), (((l2 + k + 1) % p, (1, 0, k)),)))
        return SimpleModuleShape(2, 2 * (p - l2) + 1, rel)
    if (l1, l2) == (p - 1, 0):
        for k in range(p):
            zero(1, 1, k)
            rel.append(Relation((0, 1, k), ((k, (1, 0, k - 1)),)))
        return SimpleModuleShape(3, 2 * p - 1, rel)
    if (l1, l2) == (p - 1, p - 1):
        zero(1, 1, 0)
        for i, j, k in product((0, 1), (0, 1), range(1, p)):
            zero(i, j, k)
        return SimpleModuleShape(4, 3, rel)
    # l2 == 0, l1 != p - 1
    for k in range(l1):
        rel.append(Relation((0, 1, k), ((k, (1, 0, k - 1)),)))
        zero(1, 1, k)
    rel.append(Relation((0, 1, l1), ((l1, (1, 0, l1 - 1)),)))
    zero(1, 1, l1)
    zero(1, 0, l1)
    return SimpleModuleShape(5, 2 * l1 + 1, rel)


def relation_holds(rep: ModuleRep, relation: Relation) -> bool:
    f = rep.field
    total = rep.label_vector(*relation.lhs)
    for coef, label in relation.rhs:
        total = f.sub(total, f.mul(f.from_int(coef).array(), rep.label_vector(*label)))
    return bool(f.is_zero(total).all())


def to_json(rep: ModuleRep) -> str:
    """Stable JSON export (sorted keys) of a module and its action matrices."""
    f = rep.field
    doc = {
        "field": {"p": f.p, "modulus": list(f.modulus) if f.modulus else None},
        "chi": rep.chi.describe(),
        "lambda": [repr(rep.lam.l1), repr(rep.lam.l2)],
        "provenance": rep.provenance,
        "dim": rep.dim,
        "basis": [list(b) for b in rep.basis_labels],
        "parity": list(rep.parity),
        "action": {x: f.vector_literals(rep.action[x]) for x in LABELS},
    }
    return json.dumps(doc, sort_keys=True)

