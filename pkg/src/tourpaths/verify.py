"""Exhaustive verification suites.

Each suite returns a :class:`VerificationReport`. A violation stores the
instance as TRN text plus the pair and type literal, so it can be replayed
with :func:`replay` without any other state.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .catalog import (
    FAMILY_IDS,
    ConditionViolation,
    build_family,
    default_constructor,
    dual_record,
    family_constructors,
    figure,
    finite_records,
    is_grunbaum_id,
    matching_exceptions,
    record_by_id,
    validate_record,
    variant_records,
)
from .core import (
    InvalidArgumentError,
    Tournament,
    delete_arc,
    from_trn,
    insection,
    is_strong,
    members,
    outsection,
    popcount,
    to_trn,
)
from .embed import contains_path, count_hamiltonian_directed_paths, origin_table, origins
from .enumeration import all_tournaments, canonical_form
from .pathtype import (
    IN,
    OUT,
    OrientedPathType,
    all_path_types,
    antidirected,
    drop_end,
    parse_type,
    prepend_forward,
    reverse_type,
)

REPORT_VERSION = "tourpaths-report/1"
SUITES = ("main", "ht", "corollaries", "redei", "grunbaum", "observations", "catalog")


@dataclass
class Violation:
    rule: str
    trn: str
    path_type: Optional[str] = None
    pair: Optional[tuple[int, int]] = None
    expected: str = ""
    observed: str = ""
    witness: Optional[list[int]] = None


@dataclass
class VerificationReport:
    suite: str
    order: Optional[int]
    shard: str
    instances: int
    violations: list[Violation]
    wall_time: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["version"] = REPORT_VERSION
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        viol = []
        for v in d["violations"]:
            v = dict(v)
            if v.get("pair") is not None:
                v["pair"] = tuple(v["pair"])
            viol.append(Violation(**v))
        return cls(d["suite"], d["order"], d["shard"], d["instances"], viol, d["wall_time"], d.get("details", {}))

    def to_text(self) -> str:
        head = f"{self.suite} order={self.order} shard={self.shard}: {self.instances} instances, " \
               f"{len(self.violations)} violations, {self.wall_time:.2f}s -> {'PASS' if self.passed else 'FAIL'}"
        lines = [head]
        for k, v in sorted(self.details.items()):
            lines.append(f"  {k}: {v}")
        for v in self.violations[:50]:
            lines.append(f"  VIOLATION {v.rule}: {v.trn} type={v.path_type} pair={v.pair} "
                         f"expected={v.expected} observed={v.observed} witness={v.witness}")
        if len(self.violations) > 50:
            lines.append(f"  ... {len(self.violations) - 50} more")
        return "\n".join(lines)


def merge_reports(parts: list[VerificationReport]) -> VerificationReport:
    """Concatenate shard reports in shard order; counters in ``details`` are summed."""
    first = parts[0]
    details: dict = {}
    for p in parts:
        for k, v in p.details.items():
            if isinstance(v, (int, float)) and not isinstance(v, bool):
                details[k] = details.get(k, 0) + v
            elif isinstance(v, dict):
                acc = details.setdefault(k, {})
                for kk, vv in v.items():
                    acc[kk] = acc.get(kk, 0) + vv
            else:
                details.setdefault(k, v)
    return VerificationReport(
        first.suite,
        first.order,
        f"0/1 (merged {len(parts)})",
        sum(p.instances for p in parts),
        [v for p in parts for v in p.violations],
        sum(p.wall_time for p in parts),
        details,
    )


def _shard_text(shard: tuple[int, int]) -> str:
    return f"{shard[0]}/{shard[1]}"


def _lab(p: tuple[int, int]) -> tuple[int, int]:
    return (p[0], p[1])


# --- origin guarantee and the origin-count corollaries -----------------------


def _pair_sections(t: Tournament) -> tuple[dict, dict]:
    n = t.n
    splus, sminus = {}, {}
    for x in range(n):
        for y in range(x + 1, n):
            m = 1 << x | 1 << y
            splus[(x, y)] = popcount(outsection(t, m))
            sminus[(x, y)] = popcount(insection(t, m))
    return splus, sminus


def _check_ht_tournament(t: Tournament, types: list[OrientedPathType], viol: list, stats: dict) -> None:
    table = origin_table(t)
    splus, sminus = _pair_sections(t)
    for p in types:
        o = table[p.code]
        sec = splus if p.is_outpath else sminus
        bad = [pr for pr, s in sec.items() if s >= p.b1 + 1 and not (o >> pr[0] & 1 or o >> pr[1] & 1)]
        if not bad:
            continue
        ids = matching_exceptions(t, p)
        stats["exception_hits"] += 1
        if ids:
            stats["hit_ids"][ids[0]] = stats["hit_ids"].get(ids[0], 0) + 1
        else:
            viol.append(Violation("HT", to_trn(t), str(p), _lab(bad[0]),
                                  "x or y is an origin, or a catalog exception",
                                  f"origins {members(o)}, no catalog match"))


def verify_ht(n: int, shard: tuple[int, int] = (0, 1)) -> VerificationReport:
    if not 3 <= n <= 8:
        raise InvalidArgumentError("the HT suite runs at orders 3..8")
    t0 = time.perf_counter()
    types = all_path_types(n)
    viol: list[Violation] = []
    stats = {"exception_hits": 0, "hit_ids": {}}
    ts = all_tournaments(n, shard)
    for t in ts:
        _check_ht_tournament(t, types, viol, stats)
    return VerificationReport("ht", n, _shard_text(shard), len(ts) * len(types), viol,
                              time.perf_counter() - t0, stats)


def _origin_corollaries(n: int, shard: tuple[int, int]) -> VerificationReport:
    """At most one non-origin (strong T or b1 = 1) and the |O| >= n - b1 bound."""
    t0 = time.perf_counter()
    types = all_path_types(n)
    viol: list[Violation] = []
    checked = {"corollary1_pairs": 0, "corollary2_pairs": 0}
    ts = all_tournaments(n, shard)
    full = (1 << n) - 1
    for t in ts:
        table = origin_table(t)
        strong = is_strong(t)
        for p in types:
            if matching_exceptions(t, p):
                continue
            o = table[p.code]
            checked["corollary2_pairs"] += 1
            if popcount(o) < n - p.b1:
                viol.append(Violation("corollary2", to_trn(t), str(p), None, f">= {n - p.b1} origins",
                                      f"{popcount(o)} origins"))
            if strong or p.b1 == 1:
                checked["corollary1_pairs"] += 1
                if popcount(full & ~o) > 1:
                    viol.append(Violation("corollary1", to_trn(t), str(p), None, "at most one non-origin",
                                          f"non-origins {members(full & ~o)}"))
    return VerificationReport("corollaries", n, _shard_text(shard), len(ts) * len(types), viol,
                              time.perf_counter() - t0, checked)


# --- arc-deletion theorem ----------------------------------------------------


def _code_classes(n: int) -> dict[str, int]:
    size = 1 << (n - 1)
    full = size - 1
    directed_ = 1 | 1 << full
    two_out = 0
    two_in = 0
    for a in range(1, n - 1):
        b = n - 1 - a
        two_out |= 1 << (((1 << b) - 1) << a)
        two_in |= 1 << ((1 << a) - 1)
    nondirected = ((1 << size) - 1) & ~directed_
    three_plus = 0
    for c in range(size):
        if len(OrientedPathType.from_code(n, c).blocks) >= 3:
            three_plus |= 1 << c
    return {"all": (1 << size) - 1, "directed": directed_, "two_out": two_out, "two_in": two_in,
            "nondirected": nondirected, "three_plus": three_plus}


def _special_codes(t: Tournament, x: int, y: int, classes: dict) -> int:
    d = delete_arc(t, x, y)
    bits = 0
    if d.inn[x] == d.inn[y] and d.out[x] == d.out[y]:
        ins, outs = d.inn[x], d.out[x]
        if all(d.out[v] & outs == outs for v in members(ins)):
            bits |= classes["directed"]
    if d.out[x] == 0 and d.out[y] == 0:
        bits |= classes["two_out"]
    if d.inn[x] == 0 and d.inn[y] == 0:
        bits |= classes["two_in"]
    return bits


def deletion_table(ts: list[Tournament]) -> np.ndarray:
    """Realizable-code bitsets of ``T - xy`` for every T and pair, shape (len(ts), pairs, words)."""
    n = ts[0].n
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    outs = np.array([t.out for t in ts], dtype=np.int64)
    inns = np.array([t.inn for t in ts], dtype=np.int64)
    b = len(ts) * len(pairs)
    douts = np.repeat(outs, len(pairs), axis=0).reshape(len(ts), len(pairs), n)
    dinns = np.repeat(inns, len(pairs), axis=0).reshape(len(ts), len(pairs), n)
    for k, (x, y) in enumerate(pairs):
        douts[:, k, x] &= ~(1 << y)
        douts[:, k, y] &= ~(1 << x)
        dinns[:, k, x] &= ~(1 << y)
        dinns[:, k, y] &= ~(1 << x)
    res = _kernels.batch_end_codes(douts.reshape(b, n), dinns.reshape(b, n), n, _kernels.words_for(n))
    acc = np.bitwise_or.reduce(res, axis=1)
    return acc.reshape(len(ts), len(pairs), -1)


def _main_shard(n: int, shard: tuple[int, int], with_corollaries: bool) -> VerificationReport:
    t0 = time.perf_counter()
    ts = all_tournaments(n, shard)
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    classes = _code_classes(n)
    allc = classes["all"]
    viol: list[Violation] = []
    stats = {"special_triples": 0, "contained_triples": 0, "missing_triples": 0,
             "corollary_strong_tournaments": 0, "corollary_mindeg_tournaments": 0}
    table = deletion_table(ts) if ts else None
    for i, t in enumerate(ts):
        if with_corollaries:
            strong = is_strong(t)
            mindeg = min(min(popcount(m) for m in t.out), min(popcount(m) for m in t.inn))
            stats["corollary_strong_tournaments"] += strong
            stats["corollary_mindeg_tournaments"] += mindeg >= 1
        for k, (x, y) in enumerate(pairs):
            real = _kernels.as_int(table[i, k])
            special = _special_codes(t, x, y, classes)
            stats["special_triples"] += popcount(special)
            stats["contained_triples"] += popcount(real)
            stats["missing_triples"] += popcount(allc & ~real)
            bad = allc & ~(real ^ special)
            for c in _bits(bad):
                p = OrientedPathType.from_code(n, c)
                d = delete_arc(t, x, y)
                w = contains_path(d, p)
                viol.append(Violation("main", to_trn(d), str(p), (x, y),
                                      "contained" if not special >> c & 1 else "not contained (special)",
                                      "contained" if w is not None else "not contained",
                                      list(w) if w is not None else None))
            if with_corollaries:
                checks = [("corollary3_three_blocks", classes["three_plus"])]
                if strong:
                    checks.append(("corollary1_strong", allc))
                if mindeg >= 1:
                    checks.append(("corollary2_nondirected", classes["nondirected"]))
                for rule, want in checks:
                    for c in _bits(want & ~real):
                        p = OrientedPathType.from_code(n, c)
                        viol.append(Violation(rule, to_trn(delete_arc(t, x, y)), str(p), (x, y),
                                              "contained", "not contained"))
    suite = "corollaries" if with_corollaries else "main"
    return VerificationReport(suite, n, _shard_text(shard), len(ts) * len(pairs) * (1 << (n - 1)), viol,
                              time.perf_counter() - t0, stats)


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _run_sharded(fn: Callable, n: int, shard: tuple[int, int], workers: int, *args) -> VerificationReport:
    if workers <= 1:
        return fn(n, shard, *args)
    i, k = shard
    if k != 1:
        return fn(n, shard, *args)
    shards = [(j, workers) for j in range(workers)]
    with ProcessPoolExecutor(workers) as ex:
        parts = list(ex.map(fn, [n] * workers, shards, *[[a] * workers for a in args]))
    return merge_reports(parts)


def verify_main_theorem(n: int = 8, shard: tuple[int, int] = (0, 1), workers: int = 1,
                        with_corollaries: bool = False) -> VerificationReport:
    """Containment of every type in every ``T - xy`` versus the special-exception rule.

    The special rule is evaluated on the whole code class at once: directed
    codes for twin pairs, two-block out/in codes for sink/source pairs.
    ``with_corollaries`` also checks the three closing corollaries on the same table.
    """
    if not 4 <= n <= 9:
        raise InvalidArgumentError("the main-theorem suite runs at orders 4..9 (the theorem is stated for n >= 8)")
    return _run_sharded(_main_shard, n, shard, workers, with_corollaries)


def verify_corollaries(n: int, shard: tuple[int, int] = (0, 1), workers: int = 1) -> VerificationReport:
    """Origin corollaries at ``n <= 7``; the closing arc-deletion corollaries at ``n >= 8``."""
    if n >= 8:
        return verify_main_theorem(n, shard, workers, with_corollaries=True)
    if n < 3:
        raise InvalidArgumentError("corollaries need order >= 3")
    return _run_sharded(_origin_corollaries, n, shard, workers)


# --- classical results --------------------------------------------------------


def verify_redei(n: int) -> VerificationReport:
    """Every tournament of order <= n has an odd number of Hamiltonian directed paths."""
    t0 = time.perf_counter()
    viol = []
    count = 0
    for k in range(1, n + 1):
        for t in all_tournaments(k):
            count += 1
            c = count_hamiltonian_directed_paths(t)
            if c % 2 == 0:
                viol.append(Violation("redei", to_trn(t), f"+({k - 1})" if k > 1 else None, None, "odd", str(c)))
    return VerificationReport("redei", n, "0/1", count, viol, time.perf_counter() - t0)


def verify_grunbaum(max_order: int = 7) -> VerificationReport:
    """The tournaments lacking both antidirected types are exactly 3A, 5A and 7A."""
    t0 = time.perf_counter()
    viol = []
    count = 0
    expected = {t.n: canonical_form(t) for t in (figure("3A"), figure("5A"), figure("7A"))}
    failures: dict[int, int] = {}
    for n in range(3, max_order + 1):
        for t in all_tournaments(n):
            count += 1
            lacks = all(contains_path(t, antidirected(n, s)) is None for s in (OUT, IN))
            known = expected.get(n) == canonical_form(t)
            if lacks:
                failures[n] = failures.get(n, 0) + 1
            if lacks != known:
                viol.append(Violation("grunbaum", to_trn(t), str(antidirected(n)), None,
                                      "no antidirected path" if known else "contains an antidirected path",
                                      "no antidirected path" if lacks else "contains an antidirected path"))
    return VerificationReport("grunbaum", max_order, "0/1", count, viol, time.perf_counter() - t0,
                              {"failures_by_order": {str(k): v for k, v in failures.items()}})


# --- catalog audit and observations -------------------------------------------


def verify_catalog() -> VerificationReport:
    t0 = time.perf_counter()
    viol = []
    flagged = {}
    recs = finite_records()
    for r in recs:
        chk = validate_record(r)
        if chk.flags:
            flagged[r.id] = "; ".join(chk.flags)
        for prob in chk.problems:
            viol.append(Violation("catalog", to_trn(r.tournament), str(r.path_type), None, r.id, prob))
    return VerificationReport("catalog", None, "0/1", len(recs), viol, time.perf_counter() - t0,
                              {"flagged": flagged})


@dataclass
class CatalogPair:
    tournament: Tournament
    path_type: OrientedPathType
    ids: list[str]
    origins: int


def catalog_pairs(max_order: int = 9, max_filler: int = 4) -> list[CatalogPair]:
    """Distinct (tournament class, type) pairs of the catalog and their duals.

    Families use every filler class when all blocks have at most
    ``max_filler`` vertices, and the default constructor otherwise.
    """
    recs = [r for r in finite_records() + variant_records() if r.order <= max_order]
    for fid in FAMILY_IDS:
        for n in range(2, max_order + 1):
            recs.extend(build_family(fid, n, c) for c in _filler_constructors(fid, n, max_filler))
    recs += [dual_record(r) for r in recs]
    by_key: dict[tuple[int, int, int], CatalogPair] = {}
    for r in recs:
        key = (r.order, canonical_form(r.tournament).key, r.path_type.code)
        if key in by_key:
            if r.id not in by_key[key].ids:
                by_key[key].ids.append(r.id)
            continue
        by_key[key] = CatalogPair(r.tournament, r.path_type, [r.id], origins(r.tournament, r.path_type))
    return list(by_key.values())


def _filler_constructors(fid: str, n: int, max_filler: int):
    try:
        yield default_constructor(fid, n)
    except ConditionViolation:
        return
    yield from family_constructors(fid, n, max_block=max_filler)


def _family_of(rid: str) -> Optional[str]:
    base = rid.removeprefix("Dual")
    return base.split("(")[0] if "(" in base else None


OBS1_EXCLUDED = {"Exc1", "Exc7", "E1(4)"}
OBS1_TIER2_EXCLUDED = {"Exc15", "Exc24"}
OBS2_FAMILIES = {"E1", "E2", "E3", "E4", "E5", "E6", "E8", "E9", "E10", "E8'", "E9'", "E10'"}
OBS3_EXCLUDED = {"Exc33", "DualExc33", "DualExc37", "Exc39", "DualExc49", "E12(7)"}
OBS3_EXCLUDED_FAMILIES = {"E8'", "DualE8'"} | {f"{d}E{i}" for d in ("", "Dual") for i in range(1, 7)}


def _obs3_excluded(rid: str) -> bool:
    if rid in OBS3_EXCLUDED:
        return True
    fam = rid.split("(")[0]
    return fam in OBS3_EXCLUDED_FAMILIES


def verify_observations(max_order: int = 9, max_filler: int = 4, min_obs3_order: int = 7) -> VerificationReport:
    """Origin counts, non-strong members and the reversal property over the catalog.

    The reversal property is only asked of exceptions ``T_x`` arising from a
    tournament of order at least 8, that is of order ``min_obs3_order`` and up.
    """
    t0 = time.perf_counter()
    pairs = catalog_pairs(max_order, max_filler)
    viol: list[Violation] = []
    stats = {"pairs": len(pairs), "obs1_checked": 0, "obs2_nonstrong": 0, "obs3_checked": 0,
             "obs2_strong_family_members": 0}
    for cp in pairs:
        t, p, ids = cp.tournament, cp.path_type, cp.ids
        n = t.n
        no = popcount(cp.origins)
        label = "/".join(ids)
        trn = to_trn(t)
        # origin counts by order
        if not any(is_grunbaum_id(i) or i.removeprefix("Dual") in OBS1_EXCLUDED for i in ids):
            stats["obs1_checked"] += 1
            need = 2
            if n >= 6 and not any(i.removeprefix("Dual") in OBS1_TIER2_EXCLUDED for i in ids):
                need = 3
            if n >= 7:
                need = 4
            if no < need:
                viol.append(Violation("observation1", trn, str(p), None, f"{label}: >= {need} origins",
                                      f"{no} origins"))
        # non-strong pairs lie in the listed families
        strong = is_strong(t)
        fams = {_family_of(i) for i in ids}
        if not strong:
            stats["obs2_nonstrong"] += 1
            if not fams & OBS2_FAMILIES:
                viol.append(Violation("observation2", trn, str(p), None,
                                      f"{label}: non-strong only in the listed families", "not strong"))
        elif fams & OBS2_FAMILIES:
            stats["obs2_strong_family_members"] += 1
        # the reversed companion type of the one-vertex extension
        if n >= min_obs3_order and not any(_obs3_excluded(i) for i in ids):
            stats["obs3_checked"] += 1
            big = prepend_forward(p)
            r = reverse_type(drop_end(big))
            hit = matching_exceptions(t, r)
            if hit:
                viol.append(Violation("observation3", trn, str(p), None,
                                      f"{label}: reversed type {r} not an exception", f"matches {hit[0]}"))
            if no < 2:
                viol.append(Violation("observation3", trn, str(p), None, f"{label}: >= 2 origins",
                                      f"{no} origins"))
            if not strong and r.b1 != 1:
                viol.append(Violation("observation3", trn, str(p), None,
                                      f"{label}: strong or b1({r}) = 1", "neither"))
    return VerificationReport("observations", max_order, "0/1", len(pairs), viol,
                              time.perf_counter() - t0, stats)


# --- replay -------------------------------------------------------------------


_DELETION_RULES = ("main", "corollary1_strong", "corollary2_nondirected", "corollary3_three_blocks")


def replay(v: Violation) -> str:
    """Recompute the ``observed`` field of a violation from its other fields alone."""
    d = from_trn(v.trn)
    if v.rule == "catalog":
        return "; ".join(validate_record(record_by_id(v.expected)).problems)
    if v.rule == "redei":
        return str(count_hamiltonian_directed_paths(d))
    p = parse_type(v.path_type)
    if v.rule in _DELETION_RULES:
        return "contained" if contains_path(d, p) is not None else "not contained"
    if v.rule == "grunbaum":
        lacks = all(contains_path(d, antidirected(d.n, s)) is None for s in (OUT, IN))
        return "no antidirected path" if lacks else "contains an antidirected path"
    o = origins(d, p)
    if v.rule == "HT":
        ids = matching_exceptions(d, p)
        return f"matches {ids[0]}" if ids else f"origins {members(o)}, no catalog match"
    if v.rule == "corollary1":
        return f"non-origins {members(((1 << d.n) - 1) & ~o)}"
    if v.rule in ("corollary2", "observation1"):
        return f"{popcount(o)} origins"
    if v.rule == "observation2":
        return "not strong" if not is_strong(d) else "strong"
    if v.rule == "observation3":
        r = reverse_type(drop_end(prepend_forward(p)))
        if v.observed.startswith("matches"):
            ids = matching_exceptions(d, r)
            return f"matches {ids[0]}" if ids else "no match"
        if v.observed == "neither":
            return "neither" if not is_strong(d) and r.b1 != 1 else "holds"
        return f"{popcount(o)} origins"
    raise InvalidArgumentError(f"no replay rule for {v.rule!r}")


def run_suite(suite: str, order: Optional[int] = None, shard: tuple[int, int] = (0, 1),
              workers: int = 1) -> VerificationReport:
    if suite == "main":
        return verify_main_theorem(order or 8, shard, workers)
    if suite == "ht":
        if order is None:
            parts = [verify_ht(k, shard) for k in (5, 6, 7)]
            rep = merge_reports(parts)
            rep.order = 7
            return rep
        return verify_ht(order, shard)
    if suite == "corollaries":
        return verify_corollaries(order or 7, shard, workers)
    if suite == "redei":
        return verify_redei(order or 7)
    if suite == "grunbaum":
        return verify_grunbaum(order or 7)
    if suite == "observations":
        return verify_observations(order or 9)
    if suite == "catalog":
        return verify_catalog()
    raise InvalidArgumentError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
