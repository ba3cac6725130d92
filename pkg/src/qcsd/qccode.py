"""Circulant-pair codes [P|Q] built from one tap polynomial and its reversal."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import gf2poly as gp
from .errors import InputError
from .gf2poly import Gf2Poly


class Layout(str, enum.Enum):
    SEPARATED = "separated"
    INTERLEAVED = "interleaved"


@dataclass(frozen=True)
class QcCode:
    """Code generated by [P|Q] where Q's first row is P's reversed within K terms."""

    k: int
    p: Gf2Poly
    q: Gf2Poly
    K: int

    @property
    def length(self) -> int:
        return 2 * self.k

    def describe(self) -> str:
        return f"QcCode(k={self.k}, p={self.p.to_string(self.K)}, q={self.q.to_string(self.K)})"


@dataclass(frozen=True)
class GeneratorMatrix:
    k: int
    rows: tuple[int, ...]
    layout: Layout

    @property
    def n(self) -> int:
        return 2 * self.k

    def row_string(self, i: int) -> str:
        r = self.rows[i]
        return "".join("1" if (r >> j) & 1 else "0" for j in range(self.n))


def build_code(p: Gf2Poly, k: int) -> QcCode:
    if p.is_zero():
        raise InputError("tap polynomial must be nonzero")
    if not p.coeff(0):
        raise InputError("tap polynomial must have constant term 1")
    if k < 1 or p.degree >= k:
        raise InputError(f"degree {p.degree} does not fit circulant size k={k}")
    K = p.degree + 1
    return QcCode(k=k, p=p, q=gp.reverse_window(p, K), K=K)


def _rotate(bits: int, shift: int, k: int) -> int:
    shift %= k
    mask = (1 << k) - 1
    return ((bits << shift) | (bits >> (k - shift))) & mask


def _interleave(row: int, k: int) -> int:
    out = 0
    for j in range(k):
        if (row >> j) & 1:
            out |= 1 << (2 * j)
        if (row >> (k + j)) & 1:
            out |= 1 << (2 * j + 1)
    return out


def generator_matrix(code: QcCode, layout: Layout = Layout.SEPARATED) -> GeneratorMatrix:
    """Row i is the right cyclic shift by i of both circulant first rows.

    Column j of the separated layout maps to 2j (P side) or 2j+1 (Q side)
    in the interleaved, mixed-polynomial-string layout.
    """
    k = code.k
    rows = [
        _rotate(code.p.bits, i, k) | (_rotate(code.q.bits, i, k) << k)
        for i in range(k)
    ]
    if Layout(layout) is Layout.INTERLEAVED:
        rows = [_interleave(r, k) for r in rows]
    return GeneratorMatrix(k=k, rows=tuple(rows), layout=Layout(layout))


def gram_is_zero(code: QcCode) -> bool:
    """True iff every pair of generator rows has even overlap (G G^T = 0)."""
    rows = generator_matrix(code).rows
    for i, ri in enumerate(rows):
        for rj in rows[i:]:
            if bin(ri & rj).count("1") & 1:
                return False
    return True


def rank_of_rows(rows) -> int:
    """GF(2) rank of int-bitset row vectors."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


def rank_gaussian(matrix: GeneratorMatrix) -> int:
    return rank_of_rows(matrix.rows)


def rank_theorem(code: QcCode) -> int:
    """k - deg gcd(p, q, x^k + 1)."""
    g = gp.gcd_many(code.p, code.q, gp.x_pow_k_minus_1(code.k))
    return code.k - g.degree


def is_self_dual(code: QcCode) -> bool:
    return gram_is_zero(code) and rank_theorem(code) == code.k


def try_systematic(code: QcCode) -> Gf2Poly | None:
    """Return f with p*f = q mod x^k + 1 when [P|Q] is equivalent to [I|F]."""
    inv = gp.inverse_mod(code.p, code.k)
    if inv is None:
        return None
    return gp.mul_mod(inv, code.q, code.k)
