"""Tournaments, arc-deleted tournaments and their structural predicates.

Vertices are ``0..n-1``. Vertex sets are plain ``int`` bitmasks (bit ``v`` set
iff ``v`` is a member). Both digraph kinds expose ``n``, ``out`` and ``inn``
(tuples of neighbour bitmasks), which is all the search code relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

MAX_ORDER = 32


class InvalidArgumentError(ValueError):
    """Raised for out-of-range vertices, empty sets and malformed inputs."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def pair_index(n: int, i: int, j: int) -> int:
    """Bit index of the unordered pair {i, j} (i < j) in the row-major layout."""
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise InvalidArgumentError(f"vertex {v!r} out of range for order {n}")


@dataclass(frozen=True)
class Tournament:
    """A tournament stored by out-neighbourhood bitmasks.

    Construct through :meth:`from_bits`, :meth:`from_arcs` or
    :meth:`from_out_masks`; the constructor validates completeness and
    antisymmetry.
    """

    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_ORDER:
            raise InvalidArgumentError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.out) != n:
            raise InvalidArgumentError("need one out-mask per vertex")
        full = (1 << n) - 1
        for v, m in enumerate(self.out):
            if m & ~full or m >> v & 1:
                raise InvalidArgumentError(f"bad out-mask for vertex {v}")
        for i in range(n):
            for j in range(i + 1, n):
                a = self.out[i] >> j & 1
                b = self.out[j] >> i & 1
                if a == b:
                    raise InvalidArgumentError(f"pair {{{i},{j}}} must carry exactly one arc")

    @classmethod
    def from_out_masks(cls, out: Sequence[int]) -> "Tournament":
        return cls(len(out), tuple(out))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        out = [0] * n
        for u, v in arcs:
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Tournament":
        """Decode the row-major pair bits (bit k set iff arc i->j for pair k)."""
        out = [0] * n
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if bits >> k & 1:
                    out[i] |= 1 << j
                else:
                    out[j] |= 1 << i
                k += 1
        return cls(n, tuple(out))

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        """Transitive tournament with i -> j for all i < j (0 is the source)."""
        return cls.from_bits(n, (1 << (n * (n - 1) // 2)) - 1)

    @classmethod
    def circulant(cls, n: int, steps: Iterable[int]) -> "Tournament":
        steps = {s % n for s in steps}
        return cls.from_arcs(n, [(i, (i + s) % n) for i in range(n) for s in steps])

    @cached_property
    def inn(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.out))

    @cached_property
    def bits(self) -> int:
        n, out = self.n, self.out
        b = 0
        k = 0
        for i in range(n):
            row = out[i]
            for j in range(i + 1, n):
                if row >> j & 1:
                    b |= 1 << k
                k += 1
        return b

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Relabel so that old vertex ``perm[i]`` becomes new vertex ``i``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise InvalidArgumentError(f"{tuple(perm)} is not a permutation of 0..{n - 1}")
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        out = [0] * n
        for i, v in enumerate(perm):
            m = 0
            for w in members(self.out[v]):
                m |= 1 << pos[w]
            out[i] = m
        return Tournament(n, tuple(out))

    def __repr__(self) -> str:
        return f"Tournament({to_trn(self)!r})"


@dataclass(frozen=True)
class ArcDeletedDigraph:
    """``base`` with the arc between ``x`` and ``y`` removed (stored with x < y)."""

    base: Tournament
    x: int
    y: int
    out: tuple[int, ...] = field(init=False, repr=False, compare=False)
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.base.n
        _check_vertex(n, self.x)
        _check_vertex(n, self.y)
        if self.x == self.y:
            raise InvalidArgumentError("deleted pair needs two distinct vertices")
        if self.x > self.y:
            x, y = self.y, self.x
            object.__setattr__(self, "x", x)
            object.__setattr__(self, "y", y)
        x, y = self.x, self.y
        drop = {x: ~(1 << y), y: ~(1 << x)}
        out = tuple(m & drop.get(v, -1) for v, m in enumerate(self.base.out))
        inn = tuple(m & drop.get(v, -1) for v, m in enumerate(self.base.inn))
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", inn)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def missing_pair(self) -> tuple[int, int]:
        return (self.x, self.y)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def completions(self) -> tuple[Tournament, Tournament]:
        """The two tournaments obtained by orienting the missing pair either way."""
        x, y = self.x, self.y
        fwd = list(self.out)
        fwd[x] |= 1 << y
        bwd = list(self.out)
        bwd[y] |= 1 << x
        return Tournament.from_out_masks(fwd), Tournament.from_out_masks(bwd)

    def __repr__(self) -> str:
        return f"ArcDeletedDigraph({to_trn(self)!r})"


Digraph = Union[Tournament, ArcDeletedDigraph]


def delete_arc(t: Tournament, x: int, y: int) -> ArcDeletedDigraph:
    return ArcDeletedDigraph(t, x, y)


def out_neighbors(d: Digraph, v: int) -> int:
    _check_vertex(d.n, v)
    return d.out[v]


def in_neighbors(d: Digraph, v: int) -> int:
    _check_vertex(d.n, v)
    return d.inn[v]


def _closure(nbrs: Sequence[int], n: int, xs: int) -> int:
    if xs == 0:
        raise InvalidArgumentError("vertex set must be nonempty")
    if xs >> n:
        raise InvalidArgumentError("vertex set not contained in the digraph")
    seen = xs
    frontier = xs
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= nbrs[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def outsection(d: Digraph, xs: int) -> int:
    """Vertices reachable from ``xs`` by directed paths, ``xs`` included."""
    return _closure(d.out, d.n, xs)


def insection(d: Digraph, xs: int) -> int:
    return _closure(d.inn, d.n, xs)


def is_outgenerator(d: Digraph, v: int) -> bool:
    _check_vertex(d.n, v)
    return outsection(d, 1 << v) == (1 << d.n) - 1


def is_ingenerator(d: Digraph, v: int) -> bool:
    _check_vertex(d.n, v)
    return insection(d, 1 << v) == (1 << d.n) - 1


def strong_components(d: Digraph) -> list[int]:
    """Strong components as bitmasks, in condensation order.

    Each component is ``outsection(v) & insection(v)``; components are emitted
    so that every arc between two components goes from the earlier to the
    later one.
    """
    n = d.n
    remaining = (1 << n) - 1
    comps = []
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        comps.append(outsection(d, 1 << v) & insection(d, 1 << v))
        remaining &= ~comps[-1]
    reach = {c: outsection(d, c) for c in comps}
    # c precedes c' iff c' is reachable from c; sort by size of the reachable set
    comps.sort(key=lambda c: -popcount(reach[c]))
    return comps


def is_strong(d: Digraph) -> bool:
    return outsection(d, 1) == (1 << d.n) - 1 and insection(d, 1) == (1 << d.n) - 1


def dual(d: Digraph) -> Digraph:
    """Reverse every arc; the missing pair of an arc-deleted digraph is kept."""
    if isinstance(d, ArcDeletedDigraph):
        return ArcDeletedDigraph(dual(d.base), d.x, d.y)
    return Tournament(d.n, d.inn)


def induced(d: Digraph, xs: int) -> Digraph:
    """Sub-digraph on ``xs``, relabelled ``0..|xs|-1`` in ascending order."""
    if xs == 0:
        raise InvalidArgumentError("vertex set must be nonempty")
    if xs >> d.n:
        raise InvalidArgumentError("vertex set not contained in the digraph")
    keep = members(xs)
    if isinstance(d, ArcDeletedDigraph):
        base = induced(d.base, xs)
        if xs >> d.x & 1 and xs >> d.y & 1:
            return ArcDeletedDigraph(base, keep.index(d.x), keep.index(d.y))
        return base
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        m = 0
        for w in members(d.out[v] & xs):
            m |= 1 << pos[w]
        out.append(m)
    return Tournament(len(keep), tuple(out))


def score_sequence(d: Digraph) -> list[int]:
    return [popcount(m) for m in d.out]


def dominates(d: Digraph, xs: int, ys: int) -> bool:
    """True iff every vertex of ``xs`` has an arc to every vertex of ``ys``."""
    return all(d.out[v] & ys == ys for v in members(xs))


# --- TRN v1 text format -----------------------------------------------------


def _hex_width(n: int) -> int:
    m = n * (n - 1) // 2
    return max(1, (m + 7) // 8) * 2


def _bits_to_hex(n: int, bits: int) -> str:
    m = n * (n - 1) // 2
    width = _hex_width(n)
    msb_first = 0
    for k in range(m):
        msb_first = msb_first << 1 | (bits >> k & 1)
    msb_first <<= width * 4 - m
    return format(msb_first, f"0{width}x")


def _hex_to_bits(n: int, text: str) -> int:
    m = n * (n - 1) // 2
    width = _hex_width(n)
    if len(text) != width:
        raise InvalidArgumentError(f"order {n} needs {width} hex digits, got {len(text)}")
    try:
        value = int(text, 16)
    except ValueError as exc:
        raise InvalidArgumentError(f"bad hex payload {text!r}") from exc
    pad = width * 4 - m
    if value & ((1 << pad) - 1):
        raise InvalidArgumentError("nonzero padding bits")
    value >>= pad
    bits = 0
    for k in range(m):
        bits |= (value >> (m - 1 - k) & 1) << k
    return bits


def to_trn(d: Digraph) -> str:
    if isinstance(d, ArcDeletedDigraph):
        return f"trnd {d.n} {_bits_to_hex(d.n, d.base.bits)} {d.x} {d.y}"
    return f"trn {d.n} {_bits_to_hex(d.n, d.bits)}"


def from_trn(line: str) -> Digraph:
    parts = line.split()
    if not parts or parts[0] not in ("trn", "trnd"):
        raise InvalidArgumentError(f"not a TRN v1 line: {line!r}")
    try:
        n = int(parts[1])
    except (IndexError, ValueError) as exc:
        raise InvalidArgumentError(f"missing order in {line!r}") from exc
    if not 1 <= n <= MAX_ORDER:
        raise InvalidArgumentError(f"order must be in 1..{MAX_ORDER}")
    if parts[0] == "trn":
        if len(parts) != 3:
            raise InvalidArgumentError(f"expected 'trn <n> <hex>', got {line!r}")
        return Tournament.from_bits(n, _hex_to_bits(n, parts[2]))
    if len(parts) != 5:
        raise InvalidArgumentError(f"expected 'trnd <n> <hex> <x> <y>', got {line!r}")
    t = Tournament.from_bits(n, _hex_to_bits(n, parts[2]))
    try:
        x, y = int(parts[3]), int(parts[4])
    except ValueError as exc:
        raise InvalidArgumentError(f"bad deleted pair in {line!r}") from exc
    return ArcDeletedDigraph(t, x, y)
