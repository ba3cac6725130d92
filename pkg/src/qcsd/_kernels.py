"""Numba kernels for the codeword weight histogram.

Codewords of a [2k, k] code with k <= 40 are held as two uint64 halves
(columns 0..k-1 and k..2k-1), so a weight is two hardware popcounts.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def popcount64(typingctx, x):
    def codegen(context, builder, sig, args):
        return builder.ctpop(args[0])

    return types.uint64(types.uint64), codegen


@intrinsic
def ctz64(typingctx, x):
    def codegen(context, builder, sig, args):
        return builder.cttz(args[0], context.get_constant(types.boolean, False))

    return types.uint64(types.uint64), codegen


@njit(nogil=True, cache=True)
def subset_table(rows0, rows1):
    """XOR of every subset of the given rows, indexed by subset bitmask."""
    n = rows0.shape[0]
    size = 1 << n
    t0 = np.zeros(size, np.uint64)
    t1 = np.zeros(size, np.uint64)
    for i in range(1, size):
        j = ctz64(np.uint64(i))
        prev = i & (i - 1)
        t0[i] = t0[prev] ^ rows0[j]
        t1[i] = t1[prev] ^ rows1[j]
    return t0, t1


# Sub-histograms use uint32 cells; a flush every FLUSH Gray steps keeps
# each cell below FLUSH * 2**11 / 8 = 2**20 for tables of up to 2**11 rows.
_LANES = 8
_FLUSH = 4096


@njit(nogil=True, cache=True)
def gray_block_histogram(t0, t1, mid0, mid1, base0, base1, nw):
    """Histogram of weights over ``base ^ (Gray walk of mid rows) ^ table``.

    The outer loop walks the middle rows in Gray-code order: step ``t``
    flips the row at the lowest set bit of ``t``. Each visited codeword is
    combined with every entry of the low-row subset table.
    """
    n = t0.shape[0]
    full = n - (n % _LANES)
    steps = 1 << mid0.shape[0]
    lanes = np.zeros((_LANES, nw), np.uint32)
    out = np.zeros(nw, np.uint64)
    b0 = base0
    b1 = base1
    for t in range(steps):
        if t:
            j = ctz64(np.uint64(t))
            b0 ^= mid0[j]
            b1 ^= mid1[j]
        for i in range(0, full, _LANES):
            for u in range(_LANES):
                lanes[u, popcount64(b0 ^ t0[i + u]) + popcount64(b1 ^ t1[i + u])] += 1
        for i in range(full, n):
            out[popcount64(b0 ^ t0[i]) + popcount64(b1 ^ t1[i])] += 1
        if (t + 1) % _FLUSH == 0:
            for u in range(_LANES):
                for w in range(nw):
                    out[w] += lanes[u, w]
                    lanes[u, w] = 0
    for u in range(_LANES):
        for w in range(nw):
            out[w] += lanes[u, w]
    return out
