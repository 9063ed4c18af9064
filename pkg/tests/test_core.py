import itertools

import numpy as np
import pytest
from hypothesis import given

from tourpaths.catalog import figure
from tourpaths.core import (
    ArcDeletedDigraph,
    InvalidArgumentError,
    Tournament,
    delete_arc,
    dominates,
    dual,
    from_trn,
    in_neighbors,
    induced,
    insection,
    is_ingenerator,
    is_outgenerator,
    is_strong,
    mask_of,
    members,
    out_neighbors,
    outsection,
    pair_index,
    popcount,
    score_sequence,
    strong_components,
    to_trn,
)

from conftest import all_labeled, cycle3, digraphs, tournaments


def reach_matrix(d) -> np.ndarray:
    """Reachability by repeated boolean matrix products (independent of the bitmask closure)."""
    n = d.n
    a = np.array([[d.out[i] >> j & 1 for j in range(n)] for i in range(n)], dtype=np.int64)
    r = np.eye(n, dtype=np.int64) | a
    for _ in range(n):
        r = ((r @ r) > 0).astype(np.int64)
    return r


def bfs(nbrs, start: int) -> int:
    seen, todo = start, list(members(start))
    while todo:
        v = todo.pop()
        new = nbrs[v] & ~seen
        seen |= new
        todo.extend(members(new))
    return seen


def test_pair_index_layout():
    n = 5
    ks = [pair_index(n, i, j) for i, j in itertools.combinations(range(n), 2)]
    assert ks == list(range(10))


def test_delete_arc_on_cycle(c3):
    d = delete_arc(c3, 0, 1)
    assert sorted(
        (u, v) for u in range(3) for v in range(3) if d.has_arc(u, v)
    ) == [(1, 2), (2, 0)]
    assert not d.has_arc(0, 1) and not d.has_arc(1, 0)


@given(tournaments(2, 8))
def test_delete_arc_hides_pair(t):
    x, y = 0, t.n - 1
    d = delete_arc(t, x, y)
    assert not out_neighbors(d, x) >> y & 1
    assert not in_neighbors(d, x) >> y & 1
    assert t in d.completions()
    assert all(isinstance(c, Tournament) for c in d.completions())


def test_delete_arc_on_4A():
    t = figure("4A")
    d = delete_arc(t, 0, 1)
    assert d.missing_pair == (0, 1)
    for u, v in itertools.permutations(range(4), 2):
        if {u, v} != {0, 1}:
            assert d.has_arc(u, v) == t.has_arc(u, v)


@pytest.mark.parametrize("x,y", [(0, 0), (-1, 2), (0, 3)])
def test_delete_arc_rejects_bad_pair(c3, x, y):
    with pytest.raises(InvalidArgumentError):
        delete_arc(c3, x, y)


def test_neighbourhoods_small():
    tt = Tournament.transitive(3)
    assert out_neighbors(tt, 0) == mask_of([1, 2])
    assert in_neighbors(cycle3(), 0) == mask_of([2])
    assert out_neighbors(figure("3A"), 0) == mask_of([1])
    with pytest.raises(InvalidArgumentError):
        out_neighbors(tt, 3)


def test_sections_small(c3):
    assert outsection(c3, 1) == 0b111
    tt = Tournament.transitive(3)
    assert outsection(tt, 1 << 2) == 1 << 2
    with pytest.raises(InvalidArgumentError):
        outsection(tt, 0)


def test_insection_5E_against_bfs():
    t = figure("5E")
    for v in range(5):
        assert insection(t, 1 << v) == bfs(t.inn, 1 << v)
    assert insection(t, 0b1) <= insection(t, 0b11) | insection(t, 0b1)
    assert insection(t, 0b1) & ~insection(t, 0b11) == 0


def test_strongness_examples(c3):
    assert is_strong(c3)
    tt = Tournament.transitive(4)
    assert strong_components(tt) == [1, 2, 4, 8]
    assert is_strong(figure("5A"))
    assert score_sequence(figure("5A")) == [2] * 5


def test_generators(c3):
    assert all(is_outgenerator(c3, v) and is_ingenerator(c3, v) for v in range(3))
    tt = Tournament.transitive(4)
    assert is_outgenerator(tt, 0) and not is_ingenerator(tt, 0)


def test_dual_examples(c3):
    assert score_sequence(dual(c3)) == [1, 1, 1]
    tt = Tournament.transitive(4)
    assert dual(tt) == tt.relabel([3, 2, 1, 0])
    t = figure("4A")
    for v in range(4):
        assert out_neighbors(dual(t), v) == in_neighbors(t, v)


def test_induced_examples():
    t = figure("5A")
    assert induced(t, (1 << 5) - 1) == t
    sub = induced(t, 0b111)
    expected = Tournament.from_arcs(3, [(u, v) for u, v in t.arcs() if u < 3 and v < 3])
    assert sub == expected
    tu = induced(t, 0b11110)
    assert tu.n == 4 and tu.has_arc(0, 1) == t.has_arc(1, 2)
    with pytest.raises(InvalidArgumentError):
        induced(t, 0)


def test_induced_arc_deleted():
    t = Tournament.transitive(5)
    d = delete_arc(t, 1, 3)
    assert isinstance(induced(d, 0b01011), ArcDeletedDigraph)
    assert isinstance(induced(d, 0b00111), Tournament)


def test_trn_round_trip_examples(c3):
    assert to_trn(c3) == "trn 3 a0"
    d = delete_arc(c3, 2, 0)
    assert to_trn(d) == "trnd 3 a0 0 2"
    assert from_trn(to_trn(d)) == d
    for bad in ["trn 3", "trn 3 ff", "trn x a0", "foo 3 a0", "trnd 3 a0 1 1"]:
        with pytest.raises(InvalidArgumentError):
            from_trn(bad)


@given(digraphs(1, 12))
def test_trn_round_trip(d):
    assert from_trn(to_trn(d)) == d


def test_tournament_validation():
    with pytest.raises(InvalidArgumentError):
        Tournament(2, (0, 0))
    with pytest.raises(InvalidArgumentError):
        Tournament(2, (2, 1))
    with pytest.raises(InvalidArgumentError):
        Tournament.from_arcs(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidArgumentError):
        Tournament.transitive(3).relabel([0, 0, 1])


@given(digraphs(2, 9))
def test_degree_sums(d):
    for v in range(d.n):
        deg = popcount(d.out[v]) + popcount(d.inn[v])
        missing = isinstance(d, ArcDeletedDigraph) and v in d.missing_pair
        assert deg == d.n - 1 - missing
    if isinstance(d, Tournament):
        assert sum(score_sequence(d)) == d.n * (d.n - 1) // 2


@given(digraphs(2, 9))
def test_outsection_closure(d):
    full = (1 << d.n) - 1
    for xs in (1, 0b101 & full, full):
        s = outsection(d, xs)
        assert s & xs == xs
        assert outsection(d, s) == s
        assert outsection(d, xs | 1) & s == s
        assert outsection(dual(d), xs) == insection(d, xs)


@given(digraphs(2, 9))
def test_dual_involution(d):
    assert dual(dual(d)) == d


@given(tournaments(2, 9))
def test_components_form_dominance_order(t):
    comps = strong_components(t)
    assert sum(popcount(c) for c in comps) == t.n
    for a, b in itertools.combinations(comps, 2):
        assert dominates(t, a, b)
    assert is_strong(t) == (len(comps) == 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_strong_matches_matrix_oracle(n):
    for t in all_labeled(n):
        assert is_strong(t) == bool(reach_matrix(t).all())
        for v in range(n):
            row = 0
            r = reach_matrix(t)
            for j in range(n):
                row |= int(r[v, j]) << j
            assert outsection(t, 1 << v) == row
