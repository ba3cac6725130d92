import random

import numpy as np
import pytest
from hypothesis import strategies as st
from sympy import Poly, symbols

from qcsd.gf2poly import Gf2Poly

X = symbols("x")


def sympy_poly(p: Gf2Poly) -> Poly:
    return Poly(sum(X**i for i in range(p.degree + 1) if p.coeff(i)) or 0, X, modulus=2)


def from_sympy(poly: Poly) -> Gf2Poly:
    bits = 0
    for (exp,), c in poly.terms():
        if int(c) % 2:
            bits |= 1 << exp
    return Gf2Poly(bits)


def random_tap(rng: random.Random, k: int) -> Gf2Poly:
    """Random polynomial with constant term 1 and degree < k."""
    K = rng.randint(1, k)
    bits = 1 | (1 << (K - 1))
    for i in range(1, K - 1):
        if rng.random() < 0.5:
            bits |= 1 << i
    return Gf2Poly(bits)


def matrix_rank_oracle(rows, n: int) -> int:
    """Plain list-of-lists Gaussian elimination, independent of the package."""
    m = [[(r >> j) & 1 for j in range(n)] for r in rows]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [a ^ b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def bit_array(rows, n: int) -> np.ndarray:
    return np.array([[(r >> j) & 1 for j in range(n)] for r in rows], dtype=np.int64)


def polys(max_degree: int = 40):
    return st.integers(min_value=0, max_value=(1 << (max_degree + 1)) - 1).map(Gf2Poly)


def taps(k: int):
    """Hypothesis strategy for valid tap polynomials of a size-k circulant."""
    return st.integers(min_value=0, max_value=(1 << (k - 1)) - 1).map(lambda b: Gf2Poly((b << 1) | 1))


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
