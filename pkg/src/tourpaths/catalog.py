"""The exception catalog: finite records, infinite families, duals and matching.

An exception is a pair ``(T, P)`` with ``T`` a tournament and ``P`` an
outpath type of order ``|T|`` for which ``S = V(T) \\ O_T(P)`` is larger than
the general bound allows. Records carry 0-based vertices internally; the
figures and the printed list use 1-based labels, converted on parse and on
export.

Duals are never stored. ``dual_record(r)`` reverses every arc of the
tournament and flips the sign of the type; ``S`` and the witness sequences
carry over unchanged.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterator, Optional

from .catalog_data import FIGURE_AMBIGUITIES, FIGURES, FINITE_EXCEPTIONS
from .core import (
    ArcDeletedDigraph,
    InvalidArgumentError,
    Tournament,
    delete_arc,
    dual,
    induced,
    is_ingenerator,
    mask_of,
    members,
    popcount,
    to_trn,
)
from .embed import contains_path, origins
from .enumeration import all_tournaments, canonical_form, MAX_ENUM_ORDER
from .pathtype import (
    IN,
    OUT,
    NotAPathError,
    InvalidWitnessError,
    OrientedPathType,
    directed,
    flip_sign,
    type_of_witness,
)

CATALOG_VERSION = "tourpaths-catalog/1"
MAX_CATALOG_ORDER = 8

Witness = tuple[int, ...]


class ConditionViolation(ValueError):
    """A family constructor does not meet the family's side conditions."""


# --- building tournaments from arc specs ------------------------------------


class _Builder:
    """Collects arcs, rejecting conflicts; ``done()`` rejects unset pairs."""

    def __init__(self, n: int, name: str = "") -> None:
        self.n = n
        self.name = name
        self.out = [0] * n

    def arc(self, u: int, v: int) -> None:
        if u == v:
            raise InvalidArgumentError(f"{self.name}: loop at {u}")
        if self.out[v] >> u & 1:
            raise InvalidArgumentError(f"{self.name}: conflicting arcs between {u} and {v}")
        self.out[u] |= 1 << v

    def dom(self, xs, ys) -> None:
        for u in xs:
            for v in ys:
                self.arc(u, v)

    def embed(self, t: Tournament, slots: list[int]) -> None:
        for u, v in t.arcs():
            self.arc(slots[u], slots[v])

    def done(self) -> Tournament:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not (self.out[i] >> j & 1 or self.out[j] >> i & 1):
                    raise InvalidArgumentError(f"{self.name}: pair {{{i},{j}}} left unoriented")
        return Tournament(self.n, tuple(self.out))


def tournament_from_spec(n: int, spec: str, name: str = "") -> Tournament:
    """``"12>3 3>1 ..."`` with 1-based single-digit labels; groups dominate groups."""
    b = _Builder(n, name)
    for token in spec.split():
        left, right = token.split(">")
        b.dom([int(c) - 1 for c in left], [int(c) - 1 for c in right])
    return b.done()


@lru_cache(maxsize=None)
def figure(name: str) -> Tournament:
    try:
        n, spec = FIGURES[name.upper()]
    except KeyError:
        raise InvalidArgumentError(f"unknown figure tournament {name!r}") from None
    return tournament_from_spec(n, spec, name)


def figure_names() -> list[str]:
    return list(FIGURES)


# --- records ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilyConstructor:
    """Free parameters of a family instance.

    ``x`` and ``y`` are the tournaments induced on the blocks X and Y of the
    drawing; ``pivot`` is the vertex of ``x`` that plays the named vertex
    lying inside X (families E3 to E6).
    """

    x: Optional[Tournament] = None
    y: Optional[Tournament] = None
    pivot: Optional[int] = None


@dataclass(frozen=True)
class ExceptionRecord:
    id: str
    tournament: Tournament
    path_type: OrientedPathType
    non_origins: int
    witnesses: tuple[Witness, ...]
    figure: Optional[str] = None
    family: Optional[str] = None
    constructor: Optional[FamilyConstructor] = None
    flags: tuple[str, ...] = ()
    is_dual: bool = False
    rejected_witnesses: tuple[Witness, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return self.tournament.n

    @property
    def origins(self) -> int:
        return ((1 << self.order) - 1) & ~self.non_origins

    def to_json(self) -> dict:
        d = {
            "id": self.id,
            "trn": to_trn(self.tournament),
            "type": str(self.path_type),
            "non_origins": [v + 1 for v in members(self.non_origins)],
            "witnesses": [[v + 1 for v in w] for w in self.witnesses],
            "dual": self.is_dual,
        }
        if self.figure:
            d["figure"] = self.figure
        if self.family:
            d["family"] = self.family
        if self.flags:
            d["flags"] = list(self.flags)
        return d


FiniteExceptionRecord = ExceptionRecord


def dual_record(r: ExceptionRecord) -> ExceptionRecord:
    return replace(
        r,
        id=r.id[4:] if r.is_dual else "Dual" + r.id,
        tournament=dual(r.tournament),
        path_type=flip_sign(r.path_type),
        is_dual=not r.is_dual,
    )


_LINE = re.compile(r"^Exc\s*(\d+):\s*\[(.*)\]$")


def _parse_line(line: str) -> ExceptionRecord:
    m = _LINE.match(line.strip())
    if not m:
        raise InvalidArgumentError(f"unparseable exception line {line!r}")
    num = int(m.group(1))
    fields = [f.strip() for f in m.group(2).split(";")]
    name, blocks_txt, s_txt, *paths = fields
    t = figure(name)
    n = t.n
    blocks = tuple(int(b) for b in blocks_txt.strip("() ").replace(" ", "").split(","))
    p = OrientedPathType(OUT, blocks)
    if p.order != n:
        raise InvalidArgumentError(f"Exc{num}: type {p} does not fit order {n}")
    witnesses = tuple(tuple(int(c) - 1 for c in w.replace(" ", "")) for w in paths if w)
    flags: list[str] = []
    labels = [tok for tok in s_txt.strip("{} ").split(",") if tok.strip()]
    if s_txt.rstrip("} ").endswith(","):
        flags.append(f"non-origin set printed with a trailing comma as {s_txt}")
    if all(tok.isdigit() and 1 <= int(tok) <= n for tok in labels):
        non_orig = mask_of(int(tok) - 1 for tok in labels)
    else:
        # a label outside 1..n is a typesetting slip; rebuild S from the oracle
        non_orig = ((1 << n) - 1) & ~origins(t, p)
        fixed = "{" + ",".join(str(v + 1) for v in members(non_orig)) + "}"
        flags.append(f"non-origin set printed as {s_txt}, reconciled to {fixed}")
    return ExceptionRecord(
        id=f"Exc{num}",
        tournament=t,
        path_type=p,
        non_origins=non_orig,
        witnesses=witnesses,
        figure=name,
        flags=tuple(flags),
    )


@lru_cache(maxsize=None)
def finite_records() -> tuple[ExceptionRecord, ...]:
    """The printed finite exceptions, one record per id, repeated lines merged."""
    by_id: dict[str, ExceptionRecord] = {}
    for line in FINITE_EXCEPTIONS.strip().splitlines():
        rec = _parse_line(line)
        if rec.id in by_id:
            if by_id[rec.id] != rec:
                raise InvalidArgumentError(f"{rec.id} printed twice with different content")
            continue
        by_id[rec.id] = rec
    recs = sorted(by_id.values(), key=lambda r: int(r.id[3:]))
    return tuple(_repair_witnesses(r) for r in recs)


def finite_catalog() -> list[ExceptionRecord]:
    return list(finite_records())


def _repair_witnesses(r: ExceptionRecord) -> ExceptionRecord:
    """Swap printed witnesses that miss the type for search witnesses from the same origin."""
    kept, rejected, flags = [], [], list(r.flags)
    for w in r.witnesses:
        try:
            ok = len(w) == r.order and type_of_witness(r.tournament, w) == r.path_type
        except (NotAPathError, InvalidWitnessError):
            ok = False
        if ok:
            kept.append(w)
            continue
        fix = contains_path(r.tournament, r.path_type, required_origin=w[0])
        rejected.append(w)
        if fix is None:
            flags.append(f"printed witness {''.join(str(v + 1) for v in w)} fails the type; no path from {w[0] + 1}")
        else:
            kept.append(fix)
            flags.append(
                f"printed witness {''.join(str(v + 1) for v in w)} fails the type; "
                f"replaced by {''.join(str(v + 1) for v in fix)}"
            )
    if not rejected:
        return r
    return replace(r, witnesses=tuple(kept), flags=tuple(flags), rejected_witnesses=tuple(rejected))


@lru_cache(maxsize=None)
def figure_variants(name: str) -> tuple[Tournament, ...]:
    """Completions of an ambiguous drawing consistent with every record on it.

    The transcription in :data:`FIGURES` comes first; variants isomorphic to
    an earlier one are dropped. Unambiguous figures give a single entry.
    """
    name = name.upper()
    primary = figure(name)
    if name not in FIGURE_AMBIGUITIES:
        return (primary,)
    base, open_pairs = FIGURE_AMBIGUITIES[name]
    recs = [r for r in finite_records() if r.figure == name]
    found = [primary]
    keys = {canonical_form(primary).key}
    for bits in product((0, 1), repeat=len(open_pairs)):
        arcs = " ".join(f"{a}>{b}" if s else f"{b}>{a}" for (a, b), s in zip(open_pairs, bits))
        t = tournament_from_spec(primary.n, f"{base} {arcs}", name)
        key = canonical_form(t).key
        if key in keys:
            continue
        if all(validate_record(replace(r, tournament=t)).passed for r in recs):
            found.append(t)
            keys.add(key)
    return tuple(found)


@lru_cache(maxsize=None)
def variant_records() -> tuple[ExceptionRecord, ...]:
    """Records of the finite list re-drawn on the non-primary variants of their figure."""
    out = []
    for r in finite_records():
        variants = figure_variants(r.figure)
        for k, t in enumerate(variants[1:], start=2):
            note = f"drawing {r.figure} is ambiguous: variant {k} of {len(variants)}"
            out.append(replace(r, tournament=t, flags=r.flags + (note,)))
    return tuple(out)


def finite_record(rid: str) -> ExceptionRecord:
    dual_ = rid.startswith("Dual")
    base = rid[4:] if dual_ else rid
    for r in finite_records():
        if r.id == base:
            return dual_record(r) if dual_ else r
    raise InvalidArgumentError(f"no finite exception {rid!r}")


# --- infinite families ------------------------------------------------------


@dataclass(frozen=True)
class _Family:
    base: str  # drawing F1..F14 shared by E_i and E_i'
    named: int  # named vertices 1..named
    pivot_label: Optional[int]  # named vertex that belongs to X
    has_x: bool
    has_y: bool
    path_type: Callable[[int], tuple[int, ...]]
    non_origins: Callable[[dict], list[int]]
    conditions: tuple[tuple[str, Callable[[dict], bool]], ...]
    schemata: tuple[str, ...] = ()
    per_x: tuple[str, ...] = ()  # schemata instantiated once per u in X (or X minus pivot)
    per_y: tuple[str, ...] = ()
    per_pair: tuple[str, ...] = ()
    pivot_in_per_x: bool = False


def _named(*labels):
    return lambda ctx: [lab - 1 for lab in labels]


def _x_set(ctx):
    return list(ctx["X"])


_X_AT_LEAST_2 = (("|X| >= 2", lambda c: len(c["X"]) >= 2),)
_PIVOT_CONDS = (
    ("pivot has an outneighbour inside X", lambda c: c["xt"].out[c["pivot"]] != 0),
    ("pivot is an ingenerator of T(X)", lambda c: is_ingenerator(c["xt"], c["pivot"])),
)

FAMILIES: dict[str, _Family] = {
    "E1": _Family("F1", 3, None, True, False, lambda n: (1, n - 2), _named(1, 2, 3),
                  (("|X| >= 1", lambda c: len(c["X"]) >= 1),), per_x=("u 1 3 2 I(X-u)",)),
    # the third printed schema of E2 does not realize the type; the oracle covers X
    "E2": _Family("F2", 4, None, True, False, lambda n: (2, n - 3), _named(3, 4),
                  (("|X| >= 1", lambda c: len(c["X"]) >= 1),), schemata=("1 2 3 4 I(X)", "2 3 1 4 I(X)")),
    "E3": _Family("F3", 3, 3, True, False, lambda n: (1, n - 2), _named(1, 3), _PIVOT_CONDS),
    "E4": _Family("F4", 4, 3, True, False, lambda n: (2, n - 3), _named(1, 4), _PIVOT_CONDS),
    "E5": _Family("F5", 2, 2, True, True, lambda n: (1, n - 2), _named(1, 2),
                  (("n >= 5", lambda c: c["n"] >= 5), ("|Y| >= 2", lambda c: len(c["Y"]) >= 2),
                   _PIVOT_CONDS[1]),
                  per_x=("u 1 I(Y) I(X-u)",), per_y=("y 1 I(Y-y) I(X)",)),
    "E6": _Family("F6", 3, 2, True, True, lambda n: (2, n - 3), _named(1, 3),
                  (("|Y| >= 2", lambda c: len(c["Y"]) >= 2), _PIVOT_CONDS[1]),
                  per_x=("u z 1 3 I(Y-z) I(X-u)",), per_y=("y 3 1 I(Y-y) I(X)",), pivot_in_per_x=True),
    "E7": _Family("F7", 3, None, False, True, lambda n: (1, 1, n - 3), _named(2, 3),
                  (("|Y| >= 3", lambda c: len(c["Y"]) >= 3),
                   ("T(Y) is not a 3-cycle", lambda c: not (len(c["Y"]) == 3 and all(popcount(m) == 1 for m in c["yt"].out)))),
                  per_y=("y 2 3 1 O(Y-y)",)),
    "E8": _Family("F8", 3, None, True, False, lambda n: (n - 4, 1, 1, 1), _x_set, _X_AT_LEAST_2,
                  schemata=("1 O(X-u) 2 u 3", "2 O(X-u) 1 u 3", "3 O(X-u) 2 u 1")),
    "E8'": _Family("F8", 3, None, True, False, lambda n: (n - 4, 2, 1), _x_set, _X_AT_LEAST_2,
                   schemata=("1 O(X-u) 3 2 u", "2 O(X-u) 1 3 u", "3 O(X-u) 2 1 u")),
    "E9": _Family("F9", 5, None, True, False, lambda n: (n - 6, 1, 1, 1, 1, 1), _x_set, _X_AT_LEAST_2,
                  schemata=("1 O(X-u) 2 u 4 5 3", "2 O(X-u) 3 u 5 1 4", "3 O(X-u) 4 u 1 2 5",
                            "4 O(X-u) 5 u 2 3 1", "5 O(X-u) 1 u 3 4 2")),
    "E9'": _Family("F9", 5, None, True, False, lambda n: (n - 6, 2, 1, 1, 1), _x_set, _X_AT_LEAST_2,
                   schemata=("1 O(X-u) 3 2 u 4 5", "2 O(X-u) 4 3 u 5 1", "3 O(X-u) 5 4 u 1 2",
                             "4 O(X-u) 1 5 u 2 3", "5 O(X-u) 2 1 u 3 4")),
    "E10": _Family("F10", 7, None, True, False, lambda n: (n - 8, 1, 1, 1, 1, 1, 1, 1), _x_set, _X_AT_LEAST_2,
                   schemata=("1 O(X-u) 2 u 4 5 3 7 6", "2 O(X-u) 3 u 5 6 4 1 7", "3 O(X-u) 4 u 6 7 5 2 1",
                             "4 O(X-u) 5 u 7 1 6 3 2", "5 O(X-u) 6 u 1 2 7 4 3", "6 O(X-u) 7 u 2 3 1 5 4",
                             "7 O(X-u) 1 u 3 4 2 6 5")),
    "E10'": _Family("F10", 7, None, True, False, lambda n: (n - 8, 2, 1, 1, 1, 1, 1), _x_set, _X_AT_LEAST_2,
                    schemata=("1 O(X-u) 3 2 u 4 6 5 7", "2 O(X-u) 4 3 u 5 7 6 1", "3 O(X-u) 5 4 u 6 1 7 2",
                              "4 O(X-u) 6 5 u 7 2 1 3", "5 O(X-u) 7 6 u 1 3 2 4", "6 O(X-u) 1 7 u 2 4 3 5",
                              "7 O(X-u) 2 1 u 3 5 4 6")),
    "E11": _Family("F11", 3, None, True, False, lambda n: (1, 1, n - 3), _named(1, 2), _X_AT_LEAST_2,
                   schemata=("3 1 O(X) 2",), per_x=("u 1 O(X-u) 2 3",)),
    "E12": _Family("F12", 4, None, True, False, lambda n: (2, 1, n - 4), _named(1, 4), _X_AT_LEAST_2,
                   schemata=("2 3 1 O(X) 4",), per_x=("u 4 1 O(X-u) 2 3",)),
    "E13": _Family("F13", 5, None, True, False, lambda n: (1, 1, n - 3), _named(1, 2), _X_AT_LEAST_2,
                   schemata=("3 4 2 5 O(X) 1", "4 5 2 3 O(X) 1", "5 3 2 4 O(X) 1"),
                   per_pair=("u 1 v 2 3 4 5 O(X-uv)",)),
    "E14": _Family("F14", 6, None, True, False, lambda n: (2, 1, n - 4), _named(1, 6), _X_AT_LEAST_2,
                   per_x=("2 4 u 5 3 O(X-u) 6 1", "3 u 1 6 2 4 5 O(X-u)", "4 u 1 6 2 5 3 O(X-u)",
                          "5 u 1 6 2 3 4 O(X-u)", "u 6 1 3 4 5 O(X-u) 2")),
}

FAMILY_IDS = tuple(FAMILIES)


def _cycle3(b: _Builder, a: int, c: int, d: int) -> None:
    b.arc(a, c)
    b.arc(c, d)
    b.arc(d, a)


def _draw(base: str, b: _Builder, ctx: dict) -> None:
    """Arcs of the drawing ``base``; named label ``k`` sits at vertex ``k-1``."""
    X, Y = ctx["X"], ctx["Y"]
    piv = ctx.get("pivot_vertex")
    Xr = [v for v in X if v != piv]
    if base == "F1":
        _cycle3(b, 0, 1, 2)
        b.dom(X, [0, 1, 2])
    elif base == "F2":
        b.arc(0, 1)
        b.dom([1], [2, 3])
        b.dom([2, 3], [0])
        b.arc(3, 2)
        b.dom(X, [0, 1, 2, 3])
    elif base == "F3":
        b.arc(1, 0)
        b.dom(X, [1])
        b.dom(Xr, [0])
        b.arc(0, 2)
    elif base == "F4":
        b.dom([1], [0, 3])
        b.dom(Xr, [0, 3])
        b.dom([0, 3], [2])
        b.dom(X, [1])
        b.arc(0, 3)
    elif base == "F5":
        b.dom(X, Y)
        b.dom(Xr, [0])
        b.arc(0, 1)
        b.dom(Y, [0])
    elif base == "F6":
        b.arc(2, 0)
        b.dom(Xr, [0, 2])
        b.dom(Y, [0, 2])
        b.dom([0, 2], [1])
        b.dom(X, Y)
    elif base == "F7":
        b.dom([0], Y)
        b.dom(Y, [1, 2])
        b.dom([1, 2], [0])
        b.arc(2, 1)
    elif base in ("F8", "F9", "F10"):
        k = {"F8": 3, "F9": 5, "F10": 7}[base]
        b.embed(figure(f"{k}A"), list(range(k)))
        b.dom(range(k), X)
    elif base == "F11":
        b.dom(X, [0])
        b.arc(1, 2)
        b.dom([2], [0] + X)
        b.dom([0] + X, [1])
    elif base == "F12":
        b.dom(X, [3, 0])
        b.arc(3, 0)
        b.arc(1, 2)
        b.dom([2], [0, 3] + X)
        b.dom([0, 3] + X, [1])
    elif base == "F13":
        b.dom(X, [0])
        b.dom([1], [2, 3, 4])
        _cycle3(b, 2, 3, 4)
        b.dom([2, 3, 4], [0] + X)
        b.dom([0] + X, [1])
    elif base == "F14":
        b.dom(X, [5, 0])
        b.arc(5, 0)
        b.dom([1], [2, 3, 4])
        _cycle3(b, 2, 3, 4)
        b.dom([2, 3, 4], [0, 5] + X)
        b.dom([0, 5] + X, [1])
    else:  # pragma: no cover
        raise AssertionError(base)


def _sizes(fam: _Family, n: int, c: FamilyConstructor) -> None:
    k_x = c.x.n if c.x is not None else 0
    k_y = c.y.n if c.y is not None else 0
    extra = 1 if fam.pivot_label is not None else 0
    if fam.has_x != (c.x is not None) or fam.has_y != (c.y is not None):
        raise InvalidArgumentError("constructor blocks do not match the family")
    if fam.named + k_x - extra + k_y != n:
        raise InvalidArgumentError(f"constructor sizes give order {fam.named + k_x - extra + k_y}, expected {n}")
    if (fam.pivot_label is None) != (c.pivot is None):
        raise InvalidArgumentError("pivot is required exactly for families with a named vertex inside X")
    if c.pivot is not None and not 0 <= c.pivot < k_x:
        raise InvalidArgumentError("pivot out of range")


def _layout(fam: _Family, n: int, c: FamilyConstructor) -> dict:
    """Vertex slots: named labels first, then X minus the pivot, then Y."""
    x_slots: list[int] = []
    nxt = fam.named
    if c.x is not None:
        for i in range(c.x.n):
            if c.pivot is not None and i == c.pivot:
                x_slots.append(fam.pivot_label - 1)
            else:
                x_slots.append(nxt)
                nxt += 1
    y_slots = list(range(nxt, nxt + (c.y.n if c.y is not None else 0)))
    return {
        "n": n,
        "X": x_slots,
        "Y": y_slots,
        "xt": c.x,
        "yt": c.y,
        "pivot": c.pivot,
        "pivot_vertex": fam.pivot_label - 1 if fam.pivot_label is not None else None,
    }


def family_tournament(fid: str, n: int, c: FamilyConstructor) -> tuple[Tournament, dict]:
    fam = _family(fid)
    _sizes(fam, n, c)
    ctx = _layout(fam, n, c)
    failed = [name for name, pred in fam.conditions if not pred(ctx)]
    if failed:
        raise ConditionViolation(f"{fid}({n}): " + "; ".join(failed))
    b = _Builder(n, f"{fid}({n})")
    if c.x is not None:
        b.embed(c.x, ctx["X"])
    if c.y is not None:
        b.embed(c.y, ctx["Y"])
    _draw(fam.base, b, ctx)
    return b.done(), ctx


def _family(fid: str) -> _Family:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise InvalidArgumentError(f"unknown family {fid!r}") from None


def _directed_order(t: Tournament, vs: list[int], sign: int) -> list[int]:
    """Hamiltonian directed out- (sign +1) or inpath of T(vs), as vertices of t."""
    if len(vs) <= 1:
        return list(vs)
    sub = induced(t, mask_of(vs))
    w = contains_path(sub, directed(len(vs), sign))
    order = sorted(vs)
    return [order[i] for i in w]


def _expand(schema: str, t: Tournament, env: dict) -> Witness:
    seq: list[int] = []
    for tok in schema.split():
        if tok.isdigit():
            seq.append(int(tok) - 1)
        elif tok in env:
            seq.append(env[tok])
        else:
            m = re.fullmatch(r"([OI])\(([XY])(?:-(\w+))?\)", tok)
            if not m:
                raise AssertionError(f"bad schema token {tok}")
            base = env[m.group(2)]
            drop = {env[ch] for ch in (m.group(3) or "")}
            seq.extend(_directed_order(t, [v for v in base if v not in drop], OUT if m.group(1) == "O" else IN))
    return tuple(seq)


def _schema_witnesses(fam: _Family, t: Tournament, ctx: dict) -> list[Witness]:
    X, Y = ctx["X"], ctx["Y"]
    piv = ctx["pivot_vertex"]
    free_x = [v for v in X if v != piv]
    env = {"X": X, "Y": Y}
    if X:
        env["u"] = free_x[0] if free_x else X[0]
    if Y:
        env["z"] = Y[0]
    out = [_expand(s, t, env) for s in fam.schemata]
    for u in X if fam.pivot_in_per_x else free_x:
        out += [_expand(s, t, {**env, "u": u}) for s in fam.per_x]
    for y in Y:
        out += [_expand(s, t, {**env, "y": y}) for s in fam.per_y]
    for u, v in combinations(free_x, 2):
        out += [_expand(s, t, {**env, "u": u, "v": v}) for s in fam.per_pair]
    return out


def build_family(fid: str, n: int, constructor: Optional[FamilyConstructor] = None) -> ExceptionRecord:
    """The instance of family ``fid`` on ``n`` vertices.

    Witnesses come from the family's path schemata where these realize the
    type; origins the schemata miss are filled by the exact search. Schema
    outputs that fail the type are kept in ``rejected_witnesses``.
    """
    if constructor is None:
        constructor = default_constructor(fid, n)
    fam = _family(fid)
    t, ctx = family_tournament(fid, n, constructor)
    p = OrientedPathType(OUT, fam.path_type(n))
    non_orig = mask_of(fam.non_origins(ctx))
    by_origin: dict[int, Witness] = {}
    failures = []
    for w in _schema_witnesses(fam, t, ctx):
        try:
            ok = type_of_witness(t, w) == p
        except (NotAPathError, InvalidWitnessError):
            ok = False
        if ok and len(w) == n:
            by_origin.setdefault(w[0], w)
        else:
            failures.append(w)
    for v in range(n):
        if v not in by_origin and not non_orig >> v & 1:
            w = contains_path(t, p, required_origin=v)
            if w is not None:
                by_origin[v] = w
    return ExceptionRecord(
        id=f"{fid}({n})",
        tournament=t,
        path_type=p,
        non_origins=non_orig,
        witnesses=tuple(by_origin[v] for v in sorted(by_origin)),
        family=fid,
        constructor=constructor,
        rejected_witnesses=tuple(failures),
    )


def _block_sizes(fid: str, n: int) -> list[tuple[int, int]]:
    """Admissible ``(|X|, |Y|)`` for order ``n`` (0 where the block is absent)."""
    fam = _family(fid)
    extra = 1 if fam.pivot_label is not None else 0
    free = n - fam.named
    if fam.has_x and fam.has_y:
        return [(free - ky + extra, ky) for ky in range(1, free + 1) if free - ky + extra >= 1]
    if fam.has_x:
        return [(free + extra, 0)] if free + extra >= 1 else []
    return [(0, free)] if free >= 1 else []


def family_constructors(fid: str, n: int, max_block: Optional[int] = None) -> Iterator[FamilyConstructor]:
    """Every constructor of order ``n`` meeting the conditions.

    Blocks range over one representative per isomorphism class and the pivot
    over every vertex, so each isomorphism class of instance appears at least
    once. ``max_block`` skips block sizes above it.
    """
    fam = _family(fid)
    for kx, ky in _block_sizes(fid, n):
        if max_block is not None and max(kx, ky) > max_block:
            continue
        if max(kx, ky) > MAX_ENUM_ORDER:
            raise InvalidArgumentError(f"fillers of order {max(kx, ky)} are beyond enumeration range")
        xs = all_tournaments(kx) if kx else [None]
        ys = all_tournaments(ky) if ky else [None]
        for x in xs:
            pivots = range(x.n) if fam.pivot_label is not None else [None]
            for piv in pivots:
                for y in ys:
                    c = FamilyConstructor(x, y, piv)
                    try:
                        family_tournament(fid, n, c)
                    except ConditionViolation:
                        continue
                    yield c


def default_constructor(fid: str, n: int) -> FamilyConstructor:
    """Transitive blocks where the conditions allow it, the first valid choice otherwise.

    Families with both blocks use ``|Y| = 2``.
    """
    fam = _family(fid)
    sizes = _block_sizes(fid, n)
    if fam.has_x and fam.has_y:
        sizes = sorted(sizes, key=lambda s: (s[1] != 2, s[1]))
    for kx, ky in sizes:
        x = Tournament.transitive(kx) if kx else None
        y = Tournament.transitive(ky) if ky else None
        cands = []
        if fam.pivot_label is not None:
            cands = [FamilyConstructor(x, y, kx - 1)]
        else:
            cands = [FamilyConstructor(x, y, None)]
        for c in cands:
            try:
                family_tournament(fid, n, c)
                return c
            except ConditionViolation:
                pass
    for c in family_constructors(fid, n):
        return c
    raise ConditionViolation(f"{fid} has no instance on {n} vertices")


def family_orders(fid: str, max_order: int = MAX_CATALOG_ORDER) -> list[int]:
    out = []
    for n in range(2, max_order + 1):
        if next(family_constructors(fid, n), None) is not None:
            out.append(n)
    return out


# --- validation -------------------------------------------------------------


@dataclass(frozen=True)
class RecordCheck:
    id: str
    passed: bool
    problems: tuple[str, ...]
    flags: tuple[str, ...]
    observed_non_origins: int


def validate_record(r: ExceptionRecord) -> RecordCheck:
    """Check each witness and compare ``S`` with the oracle's non-origin set."""
    n = r.order
    problems = []
    if not r.path_type.is_outpath and not r.is_dual:
        problems.append("type of a primal record must be an outpath")
    seen = 0
    for w in r.witnesses:
        try:
            got = type_of_witness(r.tournament, w)
        except (NotAPathError, InvalidWitnessError) as exc:
            problems.append(f"witness {_labels(w)} invalid: {exc}")
            continue
        if len(w) != n:
            problems.append(f"witness {_labels(w)} is not Hamiltonian")
        elif got != r.path_type:
            problems.append(f"witness {_labels(w)} has type {got}, expected {r.path_type}")
        if seen >> w[0] & 1:
            problems.append(f"two witnesses start at {w[0] + 1}")
        seen |= 1 << w[0]
    if seen != r.origins:
        problems.append(
            f"witness origins {_labels(members(seen))} differ from V minus S {_labels(members(r.origins))}"
        )
    observed = ((1 << n) - 1) & ~origins(r.tournament, r.path_type)
    if observed != r.non_origins:
        problems.append(f"S = {_labels(members(r.non_origins))} but the oracle finds {_labels(members(observed))}")
    return RecordCheck(r.id, not problems, tuple(problems), r.flags, observed)


def _labels(vs) -> str:
    return "{" + ",".join(str(v + 1) for v in vs) + "}"


# --- catalog and matching ---------------------------------------------------


def catalog_records(
    max_order: int = MAX_CATALOG_ORDER, include_duals: bool = True, all_fillers: bool = False
) -> list[ExceptionRecord]:
    """Finite records plus family instances up to ``max_order``.

    With ``all_fillers`` every constructor of every family is instantiated,
    otherwise the default constructor only.
    """
    recs = [r for r in finite_records() + variant_records() if r.order <= max_order]
    for fid in FAMILY_IDS:
        for n in range(2, max_order + 1):
            if all_fillers:
                recs.extend(build_family(fid, n, c) for c in family_constructors(fid, n))
            else:
                try:
                    recs.append(build_family(fid, n))
                except ConditionViolation:
                    pass
    if include_duals:
        recs += [dual_record(r) for r in recs]
    return recs


def _instance_pairs(n: int) -> Iterator[tuple[str, Tournament, OrientedPathType]]:
    for r in finite_records() + variant_records():
        if r.order == n:
            yield r.id, r.tournament, r.path_type
    for fid in FAMILY_IDS:
        fam = FAMILIES[fid]
        for c in family_constructors(fid, n):
            t, _ = family_tournament(fid, n, c)
            yield f"{fid}({n})", t, OrientedPathType(OUT, fam.path_type(n))


@lru_cache(maxsize=None)
def exception_index(n: int) -> dict[tuple[int, int], tuple[str, ...]]:
    """``(canonical key, type code) -> ids`` for every exception of order ``n``, duals included."""
    if not 1 <= n <= MAX_ENUM_ORDER + 1:
        raise InvalidArgumentError(f"exception index supports orders up to {MAX_ENUM_ORDER + 1}")
    index: dict[tuple[int, int], list[str]] = {}
    for rid, t, p in _instance_pairs(n):
        for name, tt, pp in ((rid, t, p), ("Dual" + rid, dual(t), flip_sign(p))):
            key = (canonical_form(tt).key, pp.code)
            ids = index.setdefault(key, [])
            if name not in ids:
                ids.append(name)
    return {k: tuple(v) for k, v in index.items()}


def matching_exceptions(t: Tournament, p: OrientedPathType) -> tuple[str, ...]:
    if not isinstance(t, Tournament):
        raise InvalidArgumentError("exceptions are defined for tournaments only")
    if p.order != t.n:
        raise InvalidArgumentError(f"type {p} has order {p.order}, tournament has order {t.n}")
    return exception_index(t.n).get((canonical_form(t).key, p.code), ())


def match_exception(t: Tournament, p: OrientedPathType) -> Optional[str]:
    """Id of a catalog exception isomorphic to ``(t, p)``, or None."""
    ids = matching_exceptions(t, p)
    return ids[0] if ids else None


def grunbaum_exceptions() -> list[Tournament]:
    """Tournaments with no antidirected Hamiltonian path of either sign."""
    return [figure("3A"), figure("5A"), figure("7A")]


GRUNBAUM_IDS = ("Exc0", "Exc4", "Exc33")


def is_grunbaum_id(rid: str) -> bool:
    return rid.removeprefix("Dual") in GRUNBAUM_IDS


# --- special exceptions of the arc-deleted theorem ---------------------------


class SpecialExceptionKind(enum.Enum):
    DIRECTED_TWINS = "DirectedTwins"
    TWO_BLOCK_SINKS = "TwoBlockSinks"
    NONE = "None"


def _twins(d: ArcDeletedDigraph) -> bool:
    x, y = d.x, d.y
    if d.inn[x] != d.inn[y] or d.out[x] != d.out[y]:
        return False
    ins, outs = d.inn[x], d.out[x]
    return all(d.out[v] & outs == outs for v in members(ins))


def special_kind(t: Tournament, p: OrientedPathType, x: int, y: int) -> SpecialExceptionKind:
    """Which special exception ``(T - xy, P)`` is, if any.

    For outpaths: ``P`` directed with x, y twins whose common inneighbourhood
    dominates their common outneighbourhood, or ``P`` with two blocks and x, y
    both sinks. Inpaths take the reversed conditions, which for directed
    types coincide with the outpath ones and for two blocks ask for sources.
    """
    d = delete_arc(t, x, y)
    if p.order != d.n:
        raise InvalidArgumentError(f"type {p} has order {p.order}, digraph has order {d.n}")
    nb = len(p.blocks)
    if nb == 1 and _twins(d):
        return SpecialExceptionKind.DIRECTED_TWINS
    if nb == 2:
        side = d.out if p.sign == OUT else d.inn
        if side[d.x] == 0 and side[d.y] == 0:
            return SpecialExceptionKind.TWO_BLOCK_SINKS
    return SpecialExceptionKind.NONE


def is_special_exception(t: Tournament, p: OrientedPathType, x: int, y: int) -> bool:
    return special_kind(t, p, x, y) is not SpecialExceptionKind.NONE


# --- export -----------------------------------------------------------------


def catalog_json(max_order: int = MAX_CATALOG_ORDER, include_duals: bool = False) -> str:
    recs = catalog_records(max_order, include_duals=include_duals)
    doc = {
        "version": CATALOG_VERSION,
        "labels": "1-based",
        "figures": {k: to_trn(figure(k)) for k in FIGURES},
        "records": [r.to_json() for r in recs],
    }
    return json.dumps(doc, indent=1)


def record_by_id(rid: str) -> ExceptionRecord:
    """Finite ids ``Exc12`` / ``DualExc12`` or default family instances ``E7(8)``."""
    m = re.fullmatch(r"(Dual)?(E\d+'?)\((\d+)\)", rid)
    if m:
        r = build_family(m.group(2), int(m.group(3)))
        return dual_record(r) if m.group(1) else r
    return finite_record(rid)
