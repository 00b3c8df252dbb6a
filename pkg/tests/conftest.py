from __future__ import annotations

from functools import lru_cache

import pytest

from sl21.field import make_artin_schreier, make_prime_field
from sl21.modules import HighestWeight, PChar, build_kac, build_simple
from sl21.superalgebra import build_sl21

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def algebra(p: int, extension: bool = False):
    f = make_artin_schreier(p) if extension else make_prime_field(p)
    return build_sl21(f)


def weight(f, a, b) -> HighestWeight:
    return HighestWeight(f.element(a), f.element(b))


@lru_cache(maxsize=None)
def zero_module(p: int, a: int, b: int, kind: str):
    """Kac or simple module with chi = 0 and integer lambda over F_p."""
    alg = algebra(p)
    f = alg.field
    build = build_kac if kind == "kac" else build_simple
    return build(alg, PChar.zero(f), weight(f, a, b))


@pytest.fixture(scope="session")
def alg5():
    return algebra(5)


@pytest.fixture(scope="session")
def alg_as5():
    return algebra(5, True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
