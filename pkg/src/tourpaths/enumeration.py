"""Canonical forms and isomorph-free generation of tournaments.

The canonical key of a labelled tournament lists its pair bits in
*column-major* order, ``(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...``, most
significant first, with bit 1 meaning ``i -> j``. The canonical form is the
minimum key over all ``n!`` relabelings. Column-major order makes the key of
the first ``k`` vertices a prefix of the whole key; consequently

* the minimum can be found by a breadth-first search that keeps only the
  partial labelings with the least prefix, and
* deleting the last vertex of a self-canonical tournament leaves a
  self-canonical tournament, which is what makes generation by "append a
  vertex, keep iff self-canonical" exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .core import InvalidArgumentError, Tournament

MAX_ENUM_ORDER = 9
MAX_CANON_ORDER = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    key: int

    def tournament(self) -> Tournament:
        return tournament_from_key(self.order, self.key)


def colmajor_key(t: Tournament) -> int:
    n, out = t.n, t.out
    key = 0
    for j in range(1, n):
        for i in range(j):
            key = key << 1 | (out[i] >> j & 1)
    return key


def tournament_from_key(n: int, key: int) -> Tournament:
    m = n * (n - 1) // 2
    out = [0] * n
    k = m - 1
    for j in range(1, n):
        for i in range(j):
            if key >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
            k -= 1
    return Tournament(n, tuple(out))


def _search(out: Sequence[int], n: int, target: Optional[Sequence[int]] = None):
    """Breadth-first minimisation of the column-major key.

    Returns ``(columns, labelings)``: the minimal column values and every full
    labeling achieving them (these differ by automorphisms). With ``target``
    given, returns ``None`` as soon as some prefix beats the target columns.
    """
    rng = range(n)
    # a partial labeling carries, for every vertex w, the column w would get next
    frontier = [((v,), 1 << v, [out[v] >> w & 1 for w in rng]) for v in rng]
    columns = []
    for k in range(1, n):
        best = None
        bound = target[k] if target is not None else -1
        chosen = []
        for perm, used, cols in frontier:
            for w in rng:
                if used >> w & 1:
                    continue
                col = cols[w]
                if best is None or col < best:
                    if col < bound:
                        return None
                    best = col
                    chosen = [(perm, used, cols, w)]
                elif col == best:
                    chosen.append((perm, used, cols, w))
        columns.append(best)
        if k == n - 1:
            return columns, [perm + (w,) for perm, _, _, w in chosen]
        frontier = []
        for perm, used, cols, w in chosen:
            ow = out[w]
            frontier.append((perm + (w,), used | 1 << w, [c << 1 | (ow >> z & 1) for z, c in enumerate(cols)]))
    return columns, [perm for perm, _, _ in frontier]


def canonical_labeling(t: Tournament) -> tuple[int, ...]:
    """A permutation ``perm`` with ``t.relabel(perm)`` canonical."""
    if t.n > MAX_CANON_ORDER:
        raise InvalidArgumentError(f"canonical forms supported up to order {MAX_CANON_ORDER}")
    if t.n == 1:
        return (0,)
    _, perms = _search(t.out, t.n)
    return perms[0]


def canonical_form(t: Tournament) -> CanonicalForm:
    return CanonicalForm(t.n, colmajor_key(t.relabel(canonical_labeling(t))))


def canonical_tournament(t: Tournament) -> Tournament:
    return t.relabel(canonical_labeling(t))


def automorphism_count(t: Tournament) -> int:
    """|Aut(t)|, read off the number of minimising labelings."""
    if t.n == 1:
        return 1
    _, perms = _search(t.out, t.n)
    return len(perms)


def is_self_canonical(t: Tournament) -> bool:
    return _self_canonical(t.out, t.n)


def _self_canonical(out: Sequence[int], n: int) -> bool:
    if n <= 1:
        return True
    target = [0] * n
    for j in range(1, n):
        col = 0
        for i in range(j):
            col = col << 1 | (out[i] >> j & 1)
        target[j] = col
    res = _search(out, n, target)
    return res is not None and res[0] == target[1:]


def are_isomorphic(a: Tournament, b: Tournament) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_ORDER:
        raise InvalidArgumentError(f"enumeration supports orders 1..{MAX_ENUM_ORDER}, got {n!r}")


def children(parent: Tournament) -> Iterator[Tournament]:
    """Self-canonical one-vertex extensions of a self-canonical parent, in key order.

    The new vertex's column ``pattern`` bit ``i`` (MSB = vertex 0) set means
    ``i -> new``; patterns run in ascending order, so children come out in
    ascending key order.
    """
    n = parent.n
    for pattern in range(1 << n):
        out = list(parent.out)
        new_out = 0
        for i in range(n):
            if pattern >> (n - 1 - i) & 1:
                out[i] |= 1 << n
            else:
                new_out |= 1 << i
        out.append(new_out)
        if _self_canonical(out, n + 1):
            yield Tournament(n + 1, tuple(out))


@lru_cache(maxsize=None)
def _all_tournaments(n: int) -> tuple[Tournament, ...]:
    if n == 1:
        return (Tournament(1, (0,)),)
    result = []
    for parent in _all_tournaments(n - 1):
        result.extend(children(parent))
    return tuple(result)


def all_tournaments(n: int, shard: tuple[int, int] = (0, 1)) -> list[Tournament]:
    """One self-canonical representative per isomorphism class, ascending by key.

    ``shard=(i, k)`` selects the ``i``-th of ``k`` contiguous blocks of parent
    representatives; concatenating shards ``0..k-1`` gives the full list.
    """
    _check_order(n)
    i, k = shard
    if not (k >= 1 and 0 <= i < k):
        raise InvalidArgumentError(f"bad shard {i}/{k}")
    if k == 1:
        return list(_all_tournaments(n))
    if n == 1:
        return list(_all_tournaments(1)) if i == 0 else []
    parents = _all_tournaments(n - 1)
    lo, hi = shard_bounds(len(parents), i, k)
    out: list[Tournament] = []
    for parent in parents[lo:hi]:
        out.extend(children(parent))
    return out


def shard_bounds(total: int, i: int, k: int) -> tuple[int, int]:
    return total * i // k, total * (i + 1) // k


CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880}
