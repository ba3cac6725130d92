"""Embedded reference data: the published length-70 tap polynomials and the
(family, gamma, beta) parameters already reported for [70,35,12] codes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .weights import Family


class EntryStatus(str, enum.Enum):
    OK = "OK"
    DATA_SUSPECT = "DATA_SUSPECT"


@dataclass(frozen=True)
class TableEntry:
    beta: int
    poly: str
    K: int
    ones: int

    @property
    def status(self) -> EntryStatus:
        if len(self.poly) != self.K or self.poly.count("1") != self.ones:
            return EntryStatus.DATA_SUSPECT
        return EntryStatus.OK

    @property
    def valid(self) -> bool:
        return self.status is EntryStatus.OK


# (beta, polynomials, K, number of ones), x^0 coefficient first.
# The K=14 row for beta=350 carries two 15-character strings; they are kept
# verbatim and come out DATA_SUSPECT.
_TABLE_ROWS = [
    (140, "11111101101", 11, 9),
    (350, "111011000101", 12, 7),
    (420, "111010000111", 12, 7),
    (140, "1110100011001 1100000111101", 13, 7),
    (280, "1110010001101", 13, 7),
    (350, "1100111010001", 13, 7),
    (420, "1100011101001", 13, 7),
    (140, "1110111010011", 13, 9),
    (280, "1110110010111", 13, 9),
    (350, "1111011100101 1111011010101", 13, 9),
    (140, "11110001001001", 14, 7),
    (280, "11001110100001", 14, 7),
    (350, "11110010010001 11101011000001 11100101010001 11100010101001 "
          "11011010000101 11001011001001 10110101010001", 14, 7),
    (420, "11010010110001 10110111000001", 14, 7),
    (280, "11110101011001 11101111100001", 14, 9),
    (350, "11110011100011 111000111101011 111000011110111 11011111000011", 14, 9),
    (420, "10111111001001", 14, 9),
    (140, "110011100001001 110011010001001", 15, 7),
    (280, "110101000010011", 15, 7),
    (350, "110101000001101 110100011100001 110010111000001 110000111100001 "
          "101110000001101 101100100100101 101100001101001", 15, 7),
    (420, "111010001000101 111000100100101 110100101000101", 15, 7),
    (140, "111100101100101 111010011100011 111000111101001 111000111010011", 15, 9),
    (280, "111001011000111 110111010011001", 15, 9),
    (350, "111011001011001 110111010001101 110110011010101 110101011011001", 15, 9),
    (420, "111110010101001 111100011010011 111100001100111 111001011101001 "
          "110110010011101 110101100110101", 15, 9),
    (140, "1110000000101011 1101000110010001 1101000001100101", 16, 7),
    (280, "1110010100010001 1101010010001001", 16, 7),
]

TABLE_ENTRIES: tuple[TableEntry, ...] = tuple(
    TableEntry(beta, poly, K, ones)
    for beta, polys, K, ones in _TABLE_ROWS
    for poly in polys.split()
)


@dataclass(frozen=True)
class KnownParams:
    """A previously reported parameter set.

    ``family`` and ``gamma`` are None when the source lists only beta; such
    an entry matches any code with that beta.
    """

    family: Family | None
    gamma: int | None
    beta: int
    source: str

    def matches(self, family: Family, gamma: int | None, beta: int | None) -> bool:
        if beta != self.beta:
            return False
        if self.family is None:
            return True
        return family == self.family and gamma == self.gamma


def _known() -> tuple[KnownParams, ...]:
    w1, w2 = Family.W70_1, Family.W70_2
    out: dict[tuple, KnownParams] = {}

    def add(family, gamma, betas, source):
        for b in betas:
            out.setdefault((family, gamma, b), KnownParams(family, gamma, b, source))

    add(w1, 1, [416], "[10]")
    add(w1, 0, [1012, 460, 414, 368, 322, 276, 230, 184, 138], "[12]")
    add(None, None, range(230, 541, 10), "[13]")
    add(w1, 0, range(112, 619, 22), "[11]")
    add(w1, 11, [618, 640, 662, 684, 706], "[11]")
    add(w1, 22, [684, 750, 772, 794], "[11]")
    add(w2, None, range(88, 529, 22), "[11]")
    add(w2, None, [204, 226, 226, 248, 270, 270, 292, 314, 314, 336, 358, 358, 380,
                   402, 402, 424, 446, 468, 490, 490, 512, 534, 534, 556, 578, 600,
                   622, 644, 666, 798, 842], "[11]")
    add(w1, 0, range(102, 613, 34), "[8]")
    return tuple(out.values())


KNOWN_PARAMS: tuple[KnownParams, ...] = _known()


def is_novel(family: Family, gamma: int | None, beta: int | None) -> bool | None:
    """True when no embedded parameter set matches; None for unclassified codes."""
    if beta is None or family is Family.UNKNOWN:
        return None
    return not any(kp.matches(family, gamma, beta) for kp in KNOWN_PARAMS)
