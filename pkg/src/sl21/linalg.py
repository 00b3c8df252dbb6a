"""Dense exact linear algebra over a :class:`~sl21.field.Field`.

Matrices are field arrays of shape ``(rows, cols, degree)``; vectors are
``(n, degree)``.  A :class:`Subspace` stores its basis as the nonzero rows of
a reduced row-echelon form, so two subspaces are equal iff their bases are.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from sl21.field import Field, FieldElement


def rref(field: Field, m: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Gauss-Jordan elimination; pivots are the first nonzero entry in column order.

    Returns the reduced matrix (same shape, zero rows last), its rank and the
    pivot columns.
    """
    a = np.array(m, dtype=np.int64) % field.p
    rows, cols = a.shape[:2]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c].any(axis=-1))
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = field.inv_coeffs(a[r, c])
        a[r] = field.mul(a[r], inv)
        others = np.flatnonzero(a[:, c].any(axis=-1))
        others = others[others != r]
        if others.size:
            factors = a[others, c]
            a[others] = field.sub(a[others], field.mul(factors[:, None, :], a[r][None, :, :]))
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(field: Field, m: np.ndarray) -> int:
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return rref(field, m)[1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^ambient_dim, canonicalized to RREF row basis."""

    field: Field
    ambient_dim: int
    basis: np.ndarray

    @classmethod
    def span(cls, field: Field, vectors, ambient_dim: int | None = None) -> "Subspace":
        vectors = np.asarray(vectors, dtype=np.int64)
        if ambient_dim is None:
            ambient_dim = vectors.shape[1]
        if vectors.size == 0:
            return cls.zero(field, ambient_dim)
        if vectors.shape[1] != ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        red, r, _ = rref(field, vectors)
        return cls(field, ambient_dim, red[:r])

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.zeros((0, ambient_dim)))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.eye(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row.any(axis=-1))[0]) for row in self.basis]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool((self.basis == other.basis).all()))

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, over {self.field})"

    def annihilator(self) -> np.ndarray:
        """Rows c with c . w = 0 for all w here; their common kernel is this subspace."""
        return nullspace(self.field, self.basis).basis if self.dim else self.field.eye(self.ambient_dim)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Remainder of v after eliminating the pivot coordinates of the basis."""
        out = np.array(v, dtype=np.int64)
        for row, c in zip(self.basis, self.pivots):
            coef = out[c].copy()
            if coef.any():
                out = self.field.sub(out, self.field.mul(coef[None, :], row))
        return out


def nullspace(field: Field, m: np.ndarray) -> Subspace:
    """Right kernel {v : m v = 0}."""
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.full(field, cols)
    red, r, pivots = rref(field, m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = field.zeros((len(free), cols))
    for t, f in enumerate(free):
        basis[t, f] = field.one.array()
        for row, pc in enumerate(pivots):
            basis[t, pc] = field.neg(red[row, f])
    return Subspace.span(field, basis, cols)


def solve(field: Field, m: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    rows, cols = m.shape[:2]
    if b.shape[0] != rows:
        raise ValueError("right-hand side length does not match matrix rows")
    aug = np.concatenate([m, b[:, None, :]], axis=1)
    red, r, pivots = rref(field, aug)
    if pivots and pivots[-1] == cols:
        return None
    x = field.zeros(cols)
    for row, pc in enumerate(pivots):
        x[pc] = red[row, cols]
    return x


def _check_same(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise ValueError("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return Subspace.span(a.field, np.concatenate([a.basis, b.basis]), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Vectors x.A = y.B, from the kernel of the stacked system [A^T | -B^T]."""
    _check_same(a, b)
    field = a.field
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(field, a.ambient_dim)
    stacked = np.concatenate([np.swapaxes(a.basis, 0, 1), field.neg(np.swapaxes(b.basis, 0, 1))], axis=1)
    ker = nullspace(field, stacked)
    if ker.dim == 0:
        return Subspace.zero(field, a.ambient_dim)
    coeffs = ker.basis[:, : a.dim]
    return Subspace.span(field, field.matmul(coeffs, a.basis), a.ambient_dim)


def contains(s: Subspace, v: np.ndarray) -> bool:
    if v.shape[0] != s.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    return bool(s.field.is_zero(s.reduce(v)).all())


def largest_invariant_subspace(field: Field, ops: Sequence[np.ndarray], within: Subspace) -> Subspace:
    """Largest W inside ``within`` with op(W) in W for every op.

    Iterates W <- {w in W : op w in W for all ops}; the dimension strictly
    drops until the iteration is stable.
    """
    w = within
    while w.dim:
        ann = w.annihilator()
        if ann.shape[0] == 0:
            return w
        basis_t = np.swapaxes(w.basis, 0, 1)
        constraints = np.concatenate([field.matmul(ann, field.matmul(op, basis_t)) for op in ops])
        ker = nullspace(field, constraints)
        if ker.dim == w.dim:
            return w
        w = Subspace.span(field, field.matmul(ker.basis, w.basis), w.ambient_dim) if ker.dim else \
            Subspace.zero(field, w.ambient_dim)
    return w


def simultaneous_eigenspace(field: Field, ops: Sequence[np.ndarray], eigvals: Sequence[FieldElement]) -> Subspace:
    """Intersection over i of ker(op_i - eigval_i * I)."""
    n = ops[0].shape[0]
    shifted = [field.sub(op, field.mul(field.eye(n), lam.array())) for op, lam in zip(ops, eigvals)]
    return nullspace(field, np.concatenate(shifted))
