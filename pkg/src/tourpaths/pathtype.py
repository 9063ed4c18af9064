"""Oriented path types ``±(b1, ..., bs)`` and their algebra.

A type of order ``n`` is in bijection with its *orientation code*: an
``(n-1)``-bit integer whose bit ``i`` is set iff arc ``i`` (between ``v_{i+1}``
and ``v_{i+2}``, 0-based ``v_i``/``v_{i+1}``) is traversed backwards. Code 0 is
the directed outpath ``+(n-1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import Digraph, InvalidArgumentError

OUT = 1
IN = -1


class NotAPathError(ValueError):
    """A consecutive pair of the witness carries no arc in the host digraph."""


class InvalidWitnessError(ValueError):
    """The witness repeats a vertex or names one outside the digraph."""


@dataclass(frozen=True)
class OrientedPathType:
    sign: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (OUT, IN):
            raise InvalidArgumentError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.blocks or any(not isinstance(b, int) or b < 1 for b in self.blocks):
            raise InvalidArgumentError(f"blocks must be positive integers, got {self.blocks!r}")

    @property
    def order(self) -> int:
        return 1 + sum(self.blocks)

    @property
    def length(self) -> int:
        return sum(self.blocks)

    @property
    def b1(self) -> int:
        return self.blocks[0]

    @property
    def is_outpath(self) -> bool:
        return self.sign == OUT

    @cached_property
    def code(self) -> int:
        code = 0
        pos = 0
        backward = self.sign == IN
        for b in self.blocks:
            if backward:
                code |= ((1 << b) - 1) << pos
            pos += b
            backward = not backward
        return code

    @classmethod
    def from_code(cls, order: int, code: int) -> "OrientedPathType":
        if order < 2:
            raise InvalidArgumentError("path types need order >= 2")
        length = order - 1
        if not 0 <= code < 1 << length:
            raise InvalidArgumentError(f"code {code} out of range for order {order}")
        blocks = []
        prev = code & 1
        run = 0
        for i in range(length):
            bit = code >> i & 1
            if bit == prev:
                run += 1
            else:
                blocks.append(run)
                run = 1
                prev = bit
        blocks.append(run)
        return cls(IN if code & 1 else OUT, tuple(blocks))

    def arcs_forward(self) -> list[bool]:
        """Per-arc direction: True where ``v_i -> v_{i+1}``."""
        return [not (self.code >> i & 1) for i in range(self.length)]

    def __str__(self) -> str:
        return ("+" if self.sign == OUT else "-") + "(" + ",".join(map(str, self.blocks)) + ")"


_LITERAL = re.compile(r"^([+-])?\(([\d,]+)\)$")


def parse_type(text: str) -> OrientedPathType:
    """Parse ``+(1,2)`` / ``-(2,1,1)``; whitespace is ignored, a missing sign means ``+``."""
    s = re.sub(r"\s+", "", text)
    m = _LITERAL.match(s)
    if not m:
        raise InvalidArgumentError(f"not a path type literal: {text!r}")
    parts = m.group(2).split(",")
    if any(p == "" for p in parts):
        raise InvalidArgumentError(f"empty block in {text!r}")
    return OrientedPathType(IN if m.group(1) == "-" else OUT, tuple(int(p) for p in parts))


def reverse_type(p: OrientedPathType) -> OrientedPathType:
    """Type of the reversed path ``v_n ... v_1``."""
    sign = -p.sign if len(p.blocks) % 2 else p.sign
    return OrientedPathType(sign, p.blocks[::-1])


def strip_origin(p: OrientedPathType) -> OrientedPathType:
    """Type of the path with its origin removed.

    Order-2 types have no arc left to carry a sign, so they are rejected.
    """
    if p.order <= 2:
        raise InvalidArgumentError(f"cannot strip the origin of {p}: no arc would remain")
    if p.blocks[0] >= 2:
        return OrientedPathType(p.sign, (p.blocks[0] - 1,) + p.blocks[1:])
    return OrientedPathType(-p.sign, p.blocks[1:])


def flip_sign(p: OrientedPathType) -> OrientedPathType:
    """The same block sequence with the opposite sign (the type in the dual digraph)."""
    return OrientedPathType(-p.sign, p.blocks)


def prepend_forward(p: OrientedPathType) -> OrientedPathType:
    """Type of ``v_0 P`` where ``v_0`` dominates the origin of ``P``."""
    if p.sign == OUT:
        return OrientedPathType(OUT, (p.blocks[0] + 1,) + p.blocks[1:])
    return OrientedPathType(OUT, (1,) + p.blocks)


def drop_end(p: OrientedPathType) -> OrientedPathType:
    """Type of the path with its last vertex removed."""
    if p.order <= 2:
        raise InvalidArgumentError(f"cannot drop the end of {p}: no arc would remain")
    if p.blocks[-1] >= 2:
        return OrientedPathType(p.sign, p.blocks[:-1] + (p.blocks[-1] - 1,))
    return OrientedPathType(p.sign, p.blocks[:-1])


def all_path_types(n: int) -> list[OrientedPathType]:
    """All ``2^(n-1)`` types of order ``n``, ordered by orientation code."""
    if n < 2:
        raise InvalidArgumentError("path types need order >= 2")
    return [OrientedPathType.from_code(n, c) for c in range(1 << (n - 1))]


def directed(n: int, sign: int = OUT) -> OrientedPathType:
    return OrientedPathType(sign, (n - 1,))


def antidirected(n: int, sign: int = OUT) -> OrientedPathType:
    return OrientedPathType(sign, (1,) * (n - 1))


def is_directed(p: OrientedPathType) -> bool:
    return len(p.blocks) == 1


def is_antidirected(p: OrientedPathType) -> bool:
    return all(b == 1 for b in p.blocks)


def block_count(p: OrientedPathType) -> int:
    return len(p.blocks)


def type_of_witness(d: Digraph, w: Sequence[int]) -> OrientedPathType:
    """Type realized by the vertex sequence ``w`` in ``d``."""
    if len(w) < 2:
        raise InvalidWitnessError("a witness needs at least two vertices")
    if len(set(w)) != len(w):
        raise InvalidWitnessError(f"repeated vertex in {tuple(w)}")
    if any(not 0 <= v < d.n for v in w):
        raise InvalidWitnessError(f"vertex out of range in {tuple(w)}")
    code = 0
    for i in range(len(w) - 1):
        u, v = w[i], w[i + 1]
        if d.out[u] >> v & 1:
            continue
        if d.out[v] >> u & 1:
            code |= 1 << i
            continue
        raise NotAPathError(f"no arc between {u} and {v}")
    return OrientedPathType.from_code(len(w), code)
