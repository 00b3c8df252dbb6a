import numpy as np
import pytest

from sl21.field import make_artin_schreier, make_prime_field
from sl21.superalgebra import (LABELS, bracket, build_sl21, check_antisymmetry, check_restriction,
                               check_super_jacobi, matrix_coords, parity, supermatrix,
                               zdegree_violations)

from conftest import algebra


@pytest.mark.parametrize("p,ext", [(3, False), (5, False), (7, False), (5, True)])
def test_self_tests_clean(p, ext):
    alg = algebra(p, ext)
    assert check_antisymmetry(alg) == []
    assert check_super_jacobi(alg) == []
    assert check_restriction(alg) == []
    assert zdegree_violations(alg) == []


def test_known_brackets(alg5):
    f = alg5.field
    vec = alg5.basis_vector
    # [e12, e21] = h1 - h2 and [e13, e31] = h1 (odd-odd brackets are anticommutators)
    assert (alg5.bracket_of("e12", "e21") == f.sub(vec("h1"), vec("h2"))).all()
    assert (alg5.bracket_of("e13", "e31") == vec("h1")).all()
    assert (alg5.bracket_of("e23", "e32") == vec("h2")).all()
    assert (alg5.bracket_of("e13", "e32") == vec("e12")).all()
    assert not alg5.bracket_of("e31", "e32").any()


def test_roots(alg5):
    f = alg5.field
    expected = {"h1": (0, 0), "h2": (0, 0), "e12": (1, -1), "e21": (-1, 1),
                "e13": (0, -1), "e23": (-1, 0), "e31": (0, 1), "e32": (1, 0)}
    for x, (a, b) in expected.items():
        assert alg5.roots[x] == (f.from_int(a), f.from_int(b))


def test_parities():
    assert [parity(x) for x in LABELS] == [0, 0, 0, 0, 1, 1, 1, 1]


def test_matrix_round_trip():
    for x in LABELS:
        assert list(matrix_coords(supermatrix(x))) == [int(y == x) for y in LABELS]
    with pytest.raises(ValueError):
        matrix_coords(np.eye(3, dtype=np.int64))


def test_bracket_is_bilinear(alg5):
    f = alg5.field
    rng = np.random.default_rng(0)
    for _ in range(10):
        x, y, z = (f.asarray(rng.integers(0, 5, size=8)) for _ in range(3))
        lhs = bracket(alg5, f.add(x, y), z)
        assert (lhs == f.add(bracket(alg5, x, z), bracket(alg5, y, z))).all()


def test_extension_field_structure_constants_are_prime():
    alg = algebra(5, True)
    assert not alg.structure[..., 1:].any()
    base = algebra(5)
    assert (alg.structure[..., 0] == base.structure[..., 0]).all()
