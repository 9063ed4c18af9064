import itertools

import pytest
from hypothesis import given

from tourpaths.catalog import figure
from tourpaths.core import InvalidArgumentError, Tournament, delete_arc, dual, mask_of, members
from tourpaths.embed import (
    EmbedRequest,
    brute_force_contains,
    brute_force_origins,
    contains_path,
    count_hamiltonian_directed_paths,
    origin_table,
    origins,
    realizable_codes,
)
from tourpaths.enumeration import all_tournaments
from tourpaths.pathtype import all_path_types, antidirected, directed, flip_sign, parse_type, reverse_type, type_of_witness

from conftest import all_digraphs, digraph_with_type, tournaments


def lab(*vs: int) -> int:
    return mask_of(v - 1 for v in vs)


def test_contains_examples():
    assert contains_path(Tournament.transitive(8), directed(8)) == tuple(range(8))
    assert contains_path(figure("3A"), parse_type("+(1,1)")) is None
    assert contains_path(figure("7A"), antidirected(7)) is None
    assert contains_path(figure("3A"), parse_type("+(2)")) is not None


def test_origins_examples():
    assert origins(figure("4A"), parse_type("+(1,2)")) == lab(1, 2)
    assert origins(figure("5E"), parse_type("+(2,2)")) == lab(3, 4, 5)
    assert origins(Tournament.transitive(5), directed(5)) == 1


def test_order_mismatch():
    with pytest.raises(InvalidArgumentError):
        contains_path(figure("4A"), parse_type("+(1,1)"))
    with pytest.raises(InvalidArgumentError):
        origins(figure("4A"), parse_type("+(1,1,1,1)"))


def test_brute_force_guard():
    t = Tournament.transitive(10)
    with pytest.raises(InvalidArgumentError):
        brute_force_contains(t, directed(10))
    assert contains_path(t, directed(10)) == tuple(range(10))


def test_request_options():
    t = figure("4A")
    p = parse_type("+(1,2)")
    assert EmbedRequest(t, p).run() == contains_path(t, p)
    assert EmbedRequest(t, p, required_origin=1).run()[0] == 1
    assert EmbedRequest(t, p, required_origin=2).run() is None
    w = EmbedRequest(t, p, forbidden_origins=1).run()
    assert w is not None and w[0] == 1
    assert EmbedRequest(t, p, forbidden_origins=0b11).run() is None


def test_counting_examples():
    assert count_hamiltonian_directed_paths(Tournament.transitive(7)) == 1
    assert count_hamiltonian_directed_paths(figure("3A")) == 3
    for t in all_tournaments(6):
        assert count_hamiltonian_directed_paths(t) % 2 == 1


def test_counting_matches_brute_force():
    for t in all_tournaments(5):
        fwd = directed(5)
        n = sum(
            1 for perm in itertools.permutations(range(5))
            if all(t.has_arc(perm[i], perm[i + 1]) for i in range(4))
        )
        assert count_hamiltonian_directed_paths(t) == n
        assert brute_force_contains(t, fwd) is not None


def test_4A_minus_type_cross_check():
    t = figure("4A")
    p = parse_type("-(1,2)")
    assert (brute_force_contains(t, p) is not None) == bool(origins(t, p))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_engine_matches_brute_force(n):
    """Witness and origin sets agree with plain permutation search, deletions included."""
    source = all_digraphs(n) if n <= 4 else _canonical_with_deletions(n)
    types = all_path_types(n)
    for d in source:
        codes = realizable_codes(d)
        table = origin_table(d)
        for p in types:
            w = contains_path(d, p)
            assert w == brute_force_contains(d, p)
            assert origins(d, p) == brute_force_origins(d, p) == table[p.code]
            assert (w is not None) == bool(codes >> p.code & 1)


def _canonical_with_deletions(n):
    for t in all_tournaments(n):
        yield t
        for x, y in itertools.combinations(range(n), 2):
            yield delete_arc(t, x, y)


@given(digraph_with_type(2, 8))
def test_witness_is_valid_and_least(dp):
    d, p = dp
    w = contains_path(d, p)
    if w is None:
        assert origins(d, p) == 0
        return
    assert sorted(w) == list(range(d.n))
    assert type_of_witness(d, w) == p
    assert w[0] == members(origins(d, p))[0]


@given(digraph_with_type(2, 8))
def test_required_origin(dp):
    d, p = dp
    org = origins(d, p)
    for v in range(d.n):
        w = contains_path(d, p, required_origin=v)
        assert (w is not None) == bool(org >> v & 1)
        if w is not None:
            assert w[0] == v and type_of_witness(d, w) == p


@pytest.mark.parametrize("n", range(2, 7))
def test_reversal_containment_symmetry(n):
    for t in all_tournaments(n):
        for d in [t] + [delete_arc(t, x, y) for x, y in itertools.combinations(range(n), 2)]:
            codes = realizable_codes(d)
            for p in all_path_types(n):
                assert bool(codes >> p.code & 1) == bool(codes >> reverse_type(p).code & 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_dual_origin_symmetry(n):
    for d in all_digraphs(n):
        table, dtable = origin_table(d), origin_table(dual(d))
        for p in all_path_types(n):
            assert dtable[flip_sign(p).code] == table[p.code]


@given(tournaments(2, 9))
def test_redei_parity(t):
    assert count_hamiltonian_directed_paths(t) % 2 == 1
