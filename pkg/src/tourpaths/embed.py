"""Hamiltonian embedding of oriented path types.

Two engines answer the same questions:

* a per-type subset DP (:func:`contains_path`, :func:`origins`) that also
  recovers the lexicographically least witness, and
* a compiled all-types DP (:func:`end_code_sets`, :func:`realizable_codes`)
  that decides every type of a digraph in a single pass.

:func:`brute_force_contains` is a pruning-free permutation scan kept only as
an independent oracle for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

import numpy as np

from . import _kernels
from .core import Digraph, InvalidArgumentError, Tournament, members
from .pathtype import OrientedPathType, reverse_type

Witness = tuple[int, ...]

BRUTE_FORCE_MAX_ORDER = 9


@dataclass(frozen=True)
class EmbedRequest:
    digraph: Digraph
    path_type: OrientedPathType
    required_origin: Optional[int] = None
    forbidden_origins: int = 0

    def run(self) -> Optional[Witness]:
        return contains_path(
            self.digraph,
            self.path_type,
            required_origin=self.required_origin,
            forbidden_origins=self.forbidden_origins,
        )


def _check_order(d: Digraph, p: OrientedPathType) -> None:
    if p.order != d.n:
        raise InvalidArgumentError(
            f"path type {p} has order {p.order}, digraph has order {d.n}; only Hamiltonian embeddings are supported"
        )


def _completion_table(d: Digraph, p: OrientedPathType) -> list[int]:
    """``ok[mask]`` = vertices v in mask from which a path that has used exactly
    ``mask`` and stands at v can be completed to a path of type ``p``."""
    n = d.n
    full = (1 << n) - 1
    fwd = p.arcs_forward()
    ok = [0] * (1 << n)
    ok[full] = full
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, full):
        by_size[bin(mask).count("1")].append(mask)
    for k in range(n - 1, 0, -1):
        nbrs = d.out if fwd[k - 1] else d.inn
        for mask in by_size[k]:
            # vertices w outside mask that can be the next stop
            nxt = 0
            rest = full & ~mask
            while rest:
                low = rest & -rest
                if ok[mask | low] & low:
                    nxt |= low
                rest ^= low
            if not nxt:
                continue
            good = 0
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                if nbrs[v] & nxt:
                    good |= low
                m ^= low
            ok[mask] = good
    return ok


def origins(d: Digraph, p: OrientedPathType) -> int:
    """Bitmask of vertices that start some Hamiltonian path of type ``p``."""
    _check_order(d, p)
    ok = _completion_table(d, p)
    return sum(1 << v for v in range(d.n) if ok[1 << v] >> v & 1)


def contains_path(
    d: Digraph,
    p: OrientedPathType,
    required_origin: Optional[int] = None,
    forbidden_origins: int = 0,
) -> Optional[Witness]:
    """Lexicographically least Hamiltonian witness of type ``p``, or None."""
    _check_order(d, p)
    n = d.n
    seeds = (1 << n) - 1
    if required_origin is not None:
        if not 0 <= required_origin < n:
            raise InvalidArgumentError(f"required origin {required_origin} out of range")
        seeds = 1 << required_origin
    seeds &= ~forbidden_origins
    ok = _completion_table(d, p)
    start = next((v for v in range(n) if seeds >> v & 1 and ok[1 << v] >> v & 1), None)
    if start is None:
        return None
    fwd = p.arcs_forward()
    path = [start]
    used = 1 << start
    for k in range(1, n):
        nbrs = d.out if fwd[k - 1] else d.inn
        cand = nbrs[path[-1]] & ~used
        for w in members(cand):
            nm = used | 1 << w
            if ok[nm] >> w & 1:
                path.append(w)
                used = nm
                break
        else:  # pragma: no cover - the completion table guarantees a successor
            raise AssertionError("completion table inconsistent")
    return tuple(path)


def brute_force_contains(d: Digraph, p: OrientedPathType) -> Optional[Witness]:
    """Scan all vertex orders lexicographically; first match is the least witness."""
    _check_order(d, p)
    if d.n > BRUTE_FORCE_MAX_ORDER:
        raise InvalidArgumentError(f"brute force limited to order {BRUTE_FORCE_MAX_ORDER}")
    fwd = p.arcs_forward()
    out = d.out
    for perm in permutations(range(d.n)):
        good = True
        for i, f in enumerate(fwd):
            u, v = perm[i], perm[i + 1]
            if f:
                if not out[u] >> v & 1:
                    good = False
                    break
            elif not out[v] >> u & 1:
                good = False
                break
        if good:
            return perm
    return None


def brute_force_origins(d: Digraph, p: OrientedPathType) -> int:
    _check_order(d, p)
    if d.n > BRUTE_FORCE_MAX_ORDER:
        raise InvalidArgumentError(f"brute force limited to order {BRUTE_FORCE_MAX_ORDER}")
    fwd = p.arcs_forward()
    out = d.out
    found = 0
    for perm in permutations(range(d.n)):
        if found >> perm[0] & 1:
            continue
        if all(
            (out[perm[i]] >> perm[i + 1] & 1) if f else (out[perm[i + 1]] >> perm[i] & 1)
            for i, f in enumerate(fwd)
        ):
            found |= 1 << perm[0]
    return found


def _kernel_order_check(n: int) -> None:
    if not 2 <= n <= _kernels.MAX_KERNEL_ORDER:
        raise InvalidArgumentError(f"all-types engine supports orders 2..{_kernels.MAX_KERNEL_ORDER}")


def end_code_sets(d: Digraph) -> list[int]:
    """Per end vertex, the bitset of orientation codes of Hamiltonian paths ending there."""
    n = d.n
    _kernel_order_check(n)
    out, inn = _kernels.mask_arrays(d)
    ends = _kernels.end_codes(out, inn, n, _kernels.words_for(n))
    return [_kernels.as_int(ends[v]) for v in range(n)]


def realizable_codes(d: Digraph) -> int:
    """Bitset over orientation codes of every type ``d`` contains."""
    acc = 0
    for s in end_code_sets(d):
        acc |= s
    return acc


def origin_table(d: Digraph) -> list[int]:
    """``table[code]`` = origin bitmask O_D(P) for the type with that code.

    Origins of P are the ends of paths of the reversed type.
    """
    n = d.n
    ends = end_code_sets(d)
    size = 1 << (n - 1)
    rev = [reverse_type(OrientedPathType.from_code(n, c)).code for c in range(size)]
    table = [0] * size
    for c in range(size):
        rc = rev[c]
        m = 0
        for v in range(n):
            if ends[v] >> rc & 1:
                m |= 1 << v
        table[c] = m
    return table


def batch_realizable(digraphs: list[Digraph]) -> list[int]:
    """:func:`realizable_codes` for many digraphs of one order in a single compiled call."""
    if not digraphs:
        return []
    n = digraphs[0].n
    _kernel_order_check(n)
    outs = np.array([d.out for d in digraphs], dtype=np.int64)
    inns = np.array([d.inn for d in digraphs], dtype=np.int64)
    res = _kernels.batch_end_codes(outs, inns, n, _kernels.words_for(n))
    acc = np.bitwise_or.reduce(res, axis=1)
    return [_kernels.as_int(row) for row in acc]


def count_hamiltonian_directed_paths(t: Tournament) -> int:
    if t.n == 1:
        return 1
    out = np.array(t.out, dtype=np.int64)
    return int(_kernels.count_directed_paths(out, t.n))
