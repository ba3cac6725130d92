"""Polynomials over GF(2) stored as Python int bitsets.

Bit ``i`` of :attr:`Gf2Poly.bits` is the coefficient of ``x**i``. The text
form used throughout the package writes the coefficient of ``x**0`` first,
so ``"0001"`` is ``x**3``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

#: Largest supported bit width; comfortably covers 2k bits for k <= 64.
CAPACITY = 128


@dataclass(frozen=True, order=True)
class Gf2Poly:
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise InputError("polynomial bits must be non-negative")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_one(self) -> bool:
        return self.bits == 1

    def coeff(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_string(self, length: int | None = None) -> str:
        """Render as '0'/'1' text, x**0 first, padded to ``length``."""
        n = self.degree + 1 if length is None else length
        if n < self.degree + 1:
            raise InputError(f"length {n} too short for degree {self.degree}")
        if n == 0:
            return "0"
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(n))

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)


def poly_from_string(s: str) -> Gf2Poly:
    """Parse '0'/'1' text with the leftmost character as the x**0 term."""
    if not s:
        raise InputError("empty polynomial string")
    bits = 0
    for i, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise InputError(f"invalid character {ch!r} at position {i}")
    return Gf2Poly(bits)


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(a.bits ^ b.bits)


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def mul_mod(a: Gf2Poly, b: Gf2Poly, k: int) -> Gf2Poly:
    """Product of ``a`` and ``b`` in GF(2)[x] / (x^k + 1)."""
    if k < 1:
        raise InputError(f"ring size k must be >= 1, got {k}")
    if a.degree >= k or b.degree >= k:
        raise InputError(f"operand degree must be < k={k}")
    prod = _clmul(a.bits, b.bits)
    mask = (1 << k) - 1
    out = 0
    while prod:
        out ^= prod & mask
        prod >>= k
    return Gf2Poly(out)


def divmod_poly(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Long division in GF(2)[x]; returns (quotient, remainder)."""
    if b.is_zero():
        raise InputError("division by the zero polynomial")
    r = a.bits
    db = b.degree
    q = 0
    while r and r.bit_length() - 1 >= db:
        shift = r.bit_length() - 1 - db
        q |= 1 << shift
        r ^= b.bits << shift
    return Gf2Poly(q), Gf2Poly(r)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    if a.is_zero() and b.is_zero():
        raise InputError("gcd(0, 0) is undefined")
    x, y = a, b
    while not y.is_zero():
        x, y = y, divmod_poly(x, y)[1]
    return x


def gcd_many(*polys: Gf2Poly) -> Gf2Poly:
    out = ZERO
    for p in polys:
        out = p if out.is_zero() else (out if p.is_zero() else gcd(out, p))
    if out.is_zero():
        raise InputError("gcd of all-zero polynomials is undefined")
    return out


def inverse_mod(a: Gf2Poly, k: int) -> Gf2Poly | None:
    """Inverse of ``a`` modulo x^k + 1, or None when gcd(a, x^k + 1) != 1."""
    modulus = x_pow_k_minus_1(k)
    # extended Euclid tracking only the coefficient of a
    r0, r1 = modulus, divmod_poly(a, modulus)[1]
    s0, s1 = ZERO, ONE
    while not r1.is_zero():
        quo, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, add(s0, Gf2Poly(_clmul(quo.bits, s1.bits)))
    if not r0.is_one():
        return None
    return divmod_poly(s0, modulus)[1]


def reverse_window(p: Gf2Poly, K: int) -> Gf2Poly:
    """Mirror the coefficients of ``p`` inside a window of ``K`` terms."""
    if K <= p.degree or K < 1:
        raise InputError(f"window K={K} would truncate degree {p.degree}")
    out = 0
    bits = p.bits
    for i in range(K):
        if (bits >> (K - 1 - i)) & 1:
            out |= 1 << i
    return Gf2Poly(out)


def x_pow_k_minus_1(k: int) -> Gf2Poly:
    """x^k + 1 (equal to x^k - 1 in characteristic 2)."""
    if not 1 <= k <= CAPACITY - 1:
        raise InputError(f"k must be in 1..{CAPACITY - 1}, got {k}")
    return Gf2Poly((1 << k) | 1)
