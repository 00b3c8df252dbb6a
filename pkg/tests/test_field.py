import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sl21.field import Field, FieldElement, is_irreducible, make_artin_schreier, make_prime_field

FIELDS = [make_prime_field(3), make_prime_field(5), make_prime_field(7),
          make_artin_schreier(3), make_artin_schreier(5)]


def elements(f):
    return st.lists(st.integers(0, f.p - 1), min_size=f.degree, max_size=f.degree).map(f.element)


@pytest.mark.parametrize("f", FIELDS, ids=repr)
def test_ring_axioms(f):
    @settings(max_examples=60, deadline=None)
    @given(elements(f), elements(f), elements(f))
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + f.zero == a and a * f.one == a
        assert a - a == f.zero
    check()


@pytest.mark.parametrize("f", FIELDS, ids=repr)
def test_inverses_and_frobenius(f):
    @settings(max_examples=60, deadline=None)
    @given(elements(f))
    def check(a):
        if not a.is_zero():
            assert a * a.inv() == f.one
            assert a / a == f.one
        # x^(q) = x for every element of a field of order q
        assert a ** f.order == a
        assert a.in_prime_subfield() == (a ** f.p == a)
    check()


def test_element_counts():
    assert len(list(make_prime_field(5).elements())) == 5
    assert len(list(make_artin_schreier(3).elements())) == 27


def test_artin_schreier_generator():
    for p in (3, 5, 7):
        f = make_artin_schreier(p)
        t = f.gen
        assert t ** p - t == f.one
        assert not t.in_prime_subfield()


def test_irreducibility_checks():
    assert is_irreducible((1, 0, 1), 3)  # t^2 + 1 over F_3
    assert not is_irreducible((1, 0, 1), 5)  # t^2 + 1 = (t - 2)(t + 2) over F_5
    with pytest.raises(ValueError):
        Field(5, (1, 0, 1))


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_rejects_bad_characteristic(p):
    with pytest.raises(ValueError):
        Field(p)


def test_parse_and_repr_roundtrip():
    f = make_artin_schreier(5)
    for text in ("0", "3", "t", "2*t+1", "t^2-1", "-1"):
        x = f.parse(text)
        assert f.parse(repr(x)) == x
    assert f.parse("-1") == f.from_int(4)
    assert f.parse("2+3*t") == f.element([2, 3])
    with pytest.raises(ValueError):
        make_prime_field(5).parse("t")


def test_lift_to_int():
    f = make_artin_schreier(3)
    assert f.from_int(-1).lift_to_int() == 2
    with pytest.raises(ValueError):
        f.gen.lift_to_int()


def test_division_by_zero():
    f = make_prime_field(5)
    with pytest.raises(ZeroDivisionError):
        f.one / f.zero


def test_array_mul_matches_scalar_mul():
    f = make_artin_schreier(3)
    rng = np.random.default_rng(0)
    a = rng.integers(0, 3, size=(4, 3))
    b = rng.integers(0, 3, size=(4, 3))
    out = f.mul(a, b)
    for i in range(4):
        assert f.element(out[i]) == f.element(a[i]) * f.element(b[i])


def test_matmul_matches_elementwise_sum():
    f = make_artin_schreier(3)
    rng = np.random.default_rng(1)
    a = rng.integers(0, 3, size=(3, 4, 3))
    b = rng.integers(0, 3, size=(4, 2, 3))
    out = f.matmul(a, b)
    for i in range(3):
        for k in range(2):
            total = f.zero
            for j in range(4):
                total = total + f.element(a[i, j]) * f.element(b[j, k])
            assert f.element(out[i, k]) == total


def test_field_element_hash_and_eq():
    f = make_prime_field(7)
    assert len({f.from_int(3), f.from_int(10), f.from_int(-4)}) == 1
    assert f.from_int(2) == 2
    assert isinstance(f.element(5), FieldElement)
