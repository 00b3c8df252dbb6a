"""Exact arithmetic in F_p and in extensions F_p[t]/(f).

Scalars are :class:`FieldElement` objects.  Vectors and matrices are plain
``int64`` numpy arrays whose *last* axis holds the ``degree`` coefficients of
each entry (constant term first), so a ``rows x cols`` matrix over a degree-n
field has shape ``(rows, cols, n)``.  Every array returned by a :class:`Field`
method is fully reduced: coefficients live in ``{0, ..., p-1}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_PRIME = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- dense polynomials over F_p, coefficient lists with constant term first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return _trim(q), a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), mod, p)[1]
        base = poly_divmod(poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin-style test: f has no factor of degree k <= deg(f)/2.

    gcd(f, x^(p^k) - x) collects every irreducible factor whose degree
    divides k, so it is enough to check that each gcd is a unit.
    """
    f = _trim([c % p for c in f])
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    power = x
    for _ in range(1, n // 2 + 1):
        power = poly_powmod(power, p, f, p)
        if len(poly_gcd(f, poly_sub(power, x, p), p)) > 1:
            return False
    return True


def _exact_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Integer product of reduced matrices; goes through float64 BLAS while exact."""
    if a.shape[1] * (p - 1) ** 2 < 2 ** 53:
        return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return a @ b


@dataclass(frozen=True)
class Field:
    """A finite field F_p (``modulus is None``) or F_p[t]/(modulus).

    ``modulus`` lists the coefficients of a monic polynomial, constant term
    first, so ``(p-1, p-1, 0, ..., 0, 1)`` is ``t^p - t - 1``.
    """

    p: int
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.p == 2:
            raise ValueError("characteristic 2 is not supported; p must be odd")
        if self.p >= MAX_PRIME:
            raise ValueError(f"p must be below {MAX_PRIME}")
        if self.modulus is not None:
            mod = tuple(int(c) % self.p for c in self.modulus)
            if len(mod) < 3 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree >= 2")
            if not is_irreducible(mod, self.p):
                raise ValueError(f"modulus {mod} is reducible over F_{self.p}")
            object.__setattr__(self, "modulus", mod)

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is None

    def __repr__(self):
        if self.modulus is None:
            return f"F_{self.p}"
        return f"F_{self.p}[t]/({_format_poly(self.modulus, 't')})"

    # -- multiplication table: (x*y)_c = sum_ab x_a y_b T[a, b, c] --

    @cached_property
    def _mul_table(self) -> np.ndarray:
        n = self.degree
        table = np.zeros((n * n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                mono = [0] * (a + b) + [1]
                rem = poly_divmod(mono, self.modulus or [0, 1], self.p)[1]
                table[a * n + b, : len(rem)] = rem
        return table

    # -- array-level arithmetic --

    def asarray(self, values) -> np.ndarray:
        """Integer array (no trailing coefficient axis) -> reduced field array."""
        arr = np.asarray(values, dtype=np.int64) % self.p
        out = np.zeros(arr.shape + (self.degree,), dtype=np.int64)
        out[..., 0] = arr
        return out

    def zeros(self, shape) -> np.ndarray:
        if isinstance(shape, int):
            shape = (shape,)
        return np.zeros(tuple(shape) + (self.degree,), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return self.asarray(np.eye(n, dtype=np.int64))

    def add(self, a, b) -> np.ndarray:
        return (a + b) % self.p

    def sub(self, a, b) -> np.ndarray:
        return (a - b) % self.p

    def neg(self, a) -> np.ndarray:
        return (-a) % self.p

    def mul(self, a, b) -> np.ndarray:
        """Entrywise product with numpy broadcasting over leading axes."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.degree == 1:
            return a * b % self.p
        n = self.degree
        outer = a[..., :, None] * b[..., None, :]
        flat = outer.reshape(outer.shape[:-2] + (n * n,))
        return flat @ self._mul_table % self.p

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product; ``b`` may be a matrix ``(k, m, n)`` or vector ``(k, n)``."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        vector = b.ndim == 2
        if vector:
            b = b[:, None, :]
        rows, inner = a.shape[:2]
        cols = b.shape[1]
        n = self.degree
        # all coefficient products in one 2-D product: (rows*n, inner) @ (inner, cols*n)
        left = np.moveaxis(a, 2, 1).reshape(rows * n, inner)
        right = b.reshape(inner, cols * n)
        outer = _exact_matmul(left, right, self.p).reshape(rows, n, cols, n) % self.p
        if n == 1:
            out = outer.reshape(rows, cols, 1)
        else:
            outer = outer.transpose(0, 2, 1, 3).reshape(rows, cols, n * n)
            out = outer @ self._mul_table % self.p
        return out[:, 0, :] if vector else out

    def is_zero(self, a) -> np.ndarray:
        return ~np.asarray(a).any(axis=-1)

    def mat_pow(self, a, e: int) -> np.ndarray:
        result = self.eye(a.shape[0])
        base = a
        while e:
            if e & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            e >>= 1
        return result

    # -- scalars --

    def element(self, value) -> "FieldElement":
        """Coerce an int, coefficient sequence, literal string or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, np.integer)):
            return self.from_int(int(value))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.degree:
            coeffs = poly_divmod(coeffs, self.modulus or [0, 1], self.p)[1]
        coeffs = coeffs + [0] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, k: int) -> "FieldElement":
        return FieldElement(self, (k % self.p,) + (0,) * (self.degree - 1))

    @property
    def zero(self) -> "FieldElement":
        return self.from_int(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_int(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of t; prime fields have none."""
        if self.degree == 1:
            raise ValueError("a prime field has no generator t")
        return self.element([0, 1])

    def elements(self) -> Iterable["FieldElement"]:
        """All field elements in coefficient-lexicographic order."""
        for idx in np.ndindex(*(self.p,) * self.degree):
            yield FieldElement(self, tuple(int(c) for c in idx))

    def parse(self, text: str) -> "FieldElement":
        """Parse literals such as ``"3"``, ``"-1"``, ``"t"``, ``"2+3*t"``, ``"t^2-1"``."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ValueError("empty field literal")
        s = re.sub(r"(?<=[^+^*])-", "+-", s)
        coeffs = [0] * self.degree
        for term in s.split("+"):
            if not term:
                raise ValueError(f"malformed field literal {text!r}")
            m = re.fullmatch(r"(-?)(\d*)\*?(t(?:\^(\d+))?)?", term)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ValueError(f"malformed field literal {text!r}")
            sign = -1 if m.group(1) else 1
            c = int(m.group(2)) if m.group(2) else 1
            e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
            if e and self.degree == 1:
                raise ValueError(f"literal {text!r} uses t but {self} is a prime field")
            x = self.element([0] * e + [sign * c])
            coeffs = [(u + v) % self.p for u, v in zip(coeffs, x.coeffs)]
        return FieldElement(self, tuple(coeffs))

    def inv_coeffs(self, coeffs: Sequence[int]) -> np.ndarray:
        return np.array(self.element(coeffs).inv().coeffs, dtype=np.int64)

    def vector_literals(self, arr: np.ndarray) -> list:
        """JSON-friendly form: ints for prime fields, coefficient lists otherwise."""
        if self.degree == 1:
            return arr[..., 0].tolist()
        return arr.tolist()


def _format_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if mono and c == 1:
            terms.append(mono)
        elif mono:
            terms.append(f"{c}*{mono}")
        else:
            terms.append(str(c))
    return "+".join(reversed(terms)) if terms else "0"


@dataclass(frozen=True)
class FieldElement:
    field: Field
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = self.field.mul(np.array(self.coeffs), np.array(other.coeffs))
        return FieldElement(self.field, tuple(int(c) for c in prod))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        p = self.field.p
        if self.field.degree == 1:
            return self.field.from_int(pow(self.coeffs[0], -1, p))
        # extended Euclid on representatives: s*a + u*f = 1
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        # r0 is a nonzero constant because the modulus is irreducible
        c = pow(r0[0], -1, p)
        return self.field.element([x * c for x in s0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.field.from_int(int(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return _format_poly(self.coeffs, "t")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_prime_subfield(self) -> bool:
        return self ** self.field.p == self

    def lift_to_int(self) -> int:
        """Canonical representative in {0, ..., p-1} of a prime-subfield element."""
        if not self.in_prime_subfield():
            raise ValueError(f"{self} is not in the prime subfield")
        return self.coeffs[0]

    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)


def make_prime_field(p: int) -> Field:
    return Field(p)


def make_artin_schreier(p: int) -> Field:
    """F_p[t]/(t^p - t - 1); every equation x^p - x = c with c in F_p is solvable here."""
    modulus = [0] * (p + 1)
    modulus[0] = p - 1
    modulus[1] = p - 1
    modulus[p] = 1
    return Field(p, tuple(modulus))
