"""Compiled inner loops for the subset dynamic programs.

``ends[v]`` after :func:`end_codes` is a bitset over orientation codes: bit
``c`` is set iff some Hamiltonian path with orientation code ``c`` ends at
``v``. Bitsets are little-endian arrays of ``uint64`` words.
"""

import numpy as np
from numba import njit

MAX_KERNEL_ORDER = 16


def words_for(n: int) -> int:
    return max(1, (1 << (n - 1)) // 64)


@njit(cache=True)
def _end_codes_into(out, inn, n, table, ends):
    nw = table.shape[2]
    full = (1 << n) - 1
    table[:] = 0
    for v in range(n):
        table[1 << v, v, 0] = 1
    for mask in range(1, full):
        k = 0
        m = mask
        while m:
            k += m & 1
            m >>= 1
        sh = 1 << (k - 1)
        word_sh = sh // 64
        for u in range(n):
            if not (mask >> u) & 1:
                continue
            live = False
            for q in range(nw):
                if table[mask, u, q]:
                    live = True
                    break
            if not live:
                continue
            fwd = out[u] & ~mask
            bwd = inn[u] & ~mask
            for w in range(n):
                bit = 1 << w
                if fwd & bit:
                    nm = mask | bit
                    for q in range(nw):
                        table[nm, w, q] |= table[mask, u, q]
                elif bwd & bit:
                    nm = mask | bit
                    if word_sh == 0:
                        # occupied bits lie below sh <= 32, so the shift stays in word 0
                        table[nm, w, 0] |= table[mask, u, 0] << np.uint64(sh)
                    else:
                        for q in range(word_sh):
                            table[nm, w, q + word_sh] |= table[mask, u, q]
    for v in range(n):
        for q in range(nw):
            ends[v, q] = table[full, v, q]


@njit(cache=True)
def end_codes(out, inn, n, nw):
    table = np.zeros((1 << n, n, nw), dtype=np.uint64)
    ends = np.zeros((n, nw), dtype=np.uint64)
    if n == 1:
        ends[0, 0] = 1
        return ends
    _end_codes_into(out, inn, n, table, ends)
    return ends


@njit(cache=True)
def batch_end_codes(outs, inns, n, nw):
    """``end_codes`` for a stack of digraphs; returns shape (B, n, nw)."""
    b = outs.shape[0]
    table = np.zeros((1 << n, n, nw), dtype=np.uint64)
    res = np.zeros((b, n, nw), dtype=np.uint64)
    ends = np.zeros((n, nw), dtype=np.uint64)
    for i in range(b):
        _end_codes_into(outs[i], inns[i], n, table, ends)
        res[i] = ends
    return res


@njit(cache=True)
def count_directed_paths(out, n):
    """Number of Hamiltonian directed paths, counted as vertex sequences."""
    full = (1 << n) - 1
    cnt = np.zeros((1 << n, n), dtype=np.int64)
    for v in range(n):
        cnt[1 << v, v] = 1
    for mask in range(1, full):
        for u in range(n):
            c = cnt[mask, u]
            if c == 0:
                continue
            nxt = out[u] & ~mask
            for w in range(n):
                if (nxt >> w) & 1:
                    cnt[mask | (1 << w), w] += c
    total = 0
    for v in range(n):
        total += cnt[full, v]
    return total


def as_int(words) -> int:
    """Collapse a little-endian uint64 word array into a Python int."""
    value = 0
    for q in range(len(words) - 1, -1, -1):
        value = value << 64 | int(words[q])
    return value


def mask_arrays(d) -> tuple[np.ndarray, np.ndarray]:
    return np.array(d.out, dtype=np.int64), np.array(d.inn, dtype=np.int64)
