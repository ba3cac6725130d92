"""Exact weight distributions, a low-weight prescreen, and enumerator classification."""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import CapacityError, InputError, MalformedDistributionError
from .qccode import QcCode, generator_matrix, rank_theorem

MAX_ENUM_K = 40
MAX_BRUTEFORCE_K = 20
TABLE_BITS = 11


class Family(str, enum.Enum):
    W70_1 = "W70_1"
    W70_2 = "W70_2"
    UNKNOWN = "UNKNOWN"


class Parity(str, enum.Enum):
    SINGLY_EVEN = "SINGLY_EVEN"
    DOUBLY_EVEN = "DOUBLY_EVEN"
    NOT_SELF_DUAL_PATTERN = "NOT_SELF_DUAL_PATTERN"


@dataclass(frozen=True)
class WeightDistribution:
    """counts[w] = number of information vectors whose codeword has weight w.

    Summed over all 2**k messages, so a rank-deficient code has
    counts[0] = 2**(k - rank) and every codeword counted that many times.
    """

    k: int
    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * self.k

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w < len(self.counts) else 0

    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int | None:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        return None

    def nonzero(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}


@dataclass
class CodeReport:
    d: int | None
    beta: int | None
    gamma: int | None
    family: Family
    parity: Parity
    a12: int
    a14: int
    a16: int
    novel: bool | None = None
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)


def _split_rows(rows: tuple[int, ...], k: int) -> tuple[np.ndarray, np.ndarray]:
    mask = (1 << k) - 1
    lo = np.array([r & mask for r in rows], dtype=np.uint64)
    hi = np.array([r >> k for r in rows], dtype=np.uint64)
    return lo, hi


def split_bits(workers: int) -> int:
    """Number of fixed top information bits: ceil(log2 workers) + 3."""
    return math.ceil(math.log2(max(1, workers))) + 3


def weight_distribution(code: QcCode, workers: int = 1) -> WeightDistribution:
    """Exact weight counts over all 2**k messages.

    The message space is cut into 2**b blocks by the top b information
    bits. Inside a block the next rows are walked in Gray-code order while
    the lowest TABLE_BITS rows come from a shared subset-XOR table. Block
    histograms are private and summed in block order, so the result does
    not depend on ``workers``.
    """
    k = code.k
    if k > MAX_ENUM_K:
        raise CapacityError(f"k={k} exceeds enumeration limit {MAX_ENUM_K}")
    if workers < 1:
        raise InputError("workers must be >= 1")
    lo, hi = _split_rows(generator_matrix(code).rows, k)

    b = min(split_bits(workers), k)
    L = min(TABLE_BITS, k - b)
    t0, t1 = _kernels.subset_table(lo[:L], hi[:L])
    mid0, mid1 = lo[L : k - b], hi[L : k - b]
    top0, top1 = lo[k - b :], hi[k - b :]
    nw = 2 * k + 1

    def run_block(block: int) -> np.ndarray:
        base0 = np.uint64(0)
        base1 = np.uint64(0)
        for j in range(b):
            if (block >> j) & 1:
                base0 ^= top0[j]
                base1 ^= top1[j]
        return _kernels.gray_block_histogram(t0, t1, mid0, mid1, base0, base1, nw)

    blocks = range(1 << b)
    if workers == 1:
        parts = [run_block(i) for i in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run_block, blocks))
    total = np.zeros(nw, dtype=np.uint64)
    for part in parts:
        total += part
    return WeightDistribution(k=k, counts=tuple(int(c) for c in total))


def weight_distribution_bruteforce(code: QcCode) -> WeightDistribution:
    """Reference count: encode every message directly, in counting order."""
    k = code.k
    if k > MAX_BRUTEFORCE_K:
        raise CapacityError(f"k={k} exceeds brute-force limit {MAX_BRUTEFORCE_K}")
    rows = generator_matrix(code).rows
    counts = [0] * (2 * k + 1)
    for m in range(1 << k):
        c = 0
        for j in range(k):
            if (m >> j) & 1:
                c ^= rows[j]
        counts[bin(c).count("1")] += 1
    return WeightDistribution(k=k, counts=tuple(counts))


def prescreen_min_weight(code: QcCode, max_info_weight: int = 4, threshold: int = 12) -> int | None:
    """Lightest codeword below ``threshold`` among low-weight messages, if any.

    Only messages containing information bit 0 are tried: a cyclic shift of
    the message shifts both circulant halves and keeps the weight. A rank
    deficient code returns 0 straight away. ``None`` does not prove that
    the minimum distance reaches ``threshold``.
    """
    if not 1 <= max_info_weight <= 5:
        raise InputError("max_info_weight must be in 1..5")
    if rank_theorem(code) < code.k:
        return 0
    rows = generator_matrix(code).rows
    k = code.k
    best: int | None = None
    for r in rows:
        w = bin(r).count("1")
        if w < threshold and (best is None or w < best):
            best = w
    first = rows[0]
    for extra in range(1, max_info_weight):
        for combo in itertools.combinations(range(1, k), extra):
            c = first
            for j in combo:
                c ^= rows[j]
            w = bin(c).count("1")
            if w < threshold and (best is None or w < best):
                best = w
                if w == 0:
                    return 0
    return best


def _bit_matrix(rows: tuple[int, ...], n: int) -> np.ndarray:
    return np.array([[(r >> j) & 1 for j in range(n)] for r in rows], dtype=np.uint8)


def information_set_screen(
    code: QcCode, threshold: int = 12, iterations: int = 300, seed: int = 0
) -> int | None:
    """Randomized search for a codeword lighter than ``threshold``.

    Each round permutes the columns, row-reduces the generator, and checks
    every reduced row and every pair of reduced rows. Returns the first
    weight below ``threshold`` it meets, or None. Like the prescreen this
    only ever reports weights of codewords it actually formed, so a hit is
    proof that d < threshold and a miss proves nothing.
    """
    rows = generator_matrix(code).rows
    n = code.length
    base = _bit_matrix(rows, n)
    rng = np.random.default_rng(seed)
    for _ in range(iterations):
        perm = rng.permutation(n)
        a = base[:, perm].copy()
        r = 0
        for c in range(n):
            piv = np.flatnonzero(a[r:, c])
            if piv.size == 0:
                continue
            p = r + piv[0]
            if p != r:
                a[[r, p]] = a[[p, r]]
            hit = a[:, c].astype(bool)
            hit[r] = False
            a[hit] ^= a[r]
            r += 1
            if r == a.shape[0]:
                break
        red = a[:r]
        light = int(red.sum(axis=1).min())
        if r > 1:
            iu = np.triu_indices(r, 1)
            pair = (red[:, None, :] ^ red[None, :, :]).sum(axis=2, dtype=np.int32)[iu]
            light = min(light, int(pair.min()))
        if light < threshold:
            return light
    return None


def _parity(dist: WeightDistribution) -> Parity:
    weights = [w for w, c in enumerate(dist.counts) if c and w]
    if any(w % 2 for w in weights):
        return Parity.NOT_SELF_DUAL_PATTERN
    if all(w % 4 == 0 for w in weights):
        return Parity.DOUBLY_EVEN
    return Parity.SINGLY_EVEN


def classify_enumerator(dist: WeightDistribution) -> CodeReport:
    """Read off d, beta, gamma and the enumerator family of a length-70 code.

    W70_2 needs a14 = 9682 - 2b and a16 = 173063 - 22b. W70_1 needs
    11730 - 2b - a14 = 128g with g >= 0 and a16 = 150535 - 22b + 896g.
    Both coefficients must agree before a family is assigned.
    """
    if dist.total() != 1 << dist.k:
        raise MalformedDistributionError(
            f"counts sum to {dist.total()}, expected 2**{dist.k}"
        )
    a12, a14, a16 = dist[12], dist[14], dist[16]
    report = CodeReport(
        d=dist.min_distance(),
        beta=None,
        gamma=None,
        family=Family.UNKNOWN,
        parity=_parity(dist),
        a12=a12,
        a14=a14,
        a16=a16,
    )
    if dist.n != 70:
        return report
    if a12 % 2:
        raise MalformedDistributionError(f"A_12={a12} is odd")
    beta = a12 // 2
    report.beta = beta
    if a14 == 9682 - 2 * beta and a16 == 173063 - 22 * beta:
        report.family = Family.W70_2
        return report
    slack = 11730 - 2 * beta - a14
    if slack >= 0 and slack % 128 == 0:
        gamma = slack // 128
        if a16 == 150535 - 22 * beta + 896 * gamma:
            report.gamma = gamma
            report.family = Family.W70_1
    return report


def extremal_bound(n: int) -> int:
    """Upper bound on d for a self-dual code of length n."""
    if n < 2 or n % 2:
        raise InputError(f"n must be a positive even integer, got {n}")
    if n % 24 == 22:
        return 4 * (n // 24) + 6
    return 4 * (n // 24) + 4
