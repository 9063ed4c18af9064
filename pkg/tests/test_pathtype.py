import pytest
from hypothesis import given, strategies as st

from tourpaths.catalog import figure
from tourpaths.core import InvalidArgumentError, Tournament, delete_arc
from tourpaths.embed import contains_path
from tourpaths.pathtype import (
    IN,
    OUT,
    InvalidWitnessError,
    NotAPathError,
    OrientedPathType,
    all_path_types,
    antidirected,
    block_count,
    directed,
    drop_end,
    flip_sign,
    is_antidirected,
    is_directed,
    parse_type,
    prepend_forward,
    reverse_type,
    strip_origin,
    type_of_witness,
)

from conftest import digraph_with_type, path_types


def P(text: str) -> OrientedPathType:
    return parse_type(text)


def lab(word: str) -> list[int]:
    return [int(c) - 1 for c in word]


def test_type_of_catalog_witnesses():
    assert type_of_witness(figure("4A"), lab("1324")) == P("+(1,2)")
    assert type_of_witness(figure("5E"), lab("34215")) == P("+(2,2)")


@pytest.mark.parametrize("n", [2, 5, 9])
def test_transitive_chain_is_directed(n):
    assert type_of_witness(Tournament.transitive(n), list(range(n))) == directed(n)


def test_type_of_witness_errors():
    d = delete_arc(Tournament.transitive(4), 1, 2)
    with pytest.raises(NotAPathError):
        type_of_witness(d, [0, 1, 2, 3])
    with pytest.raises(InvalidWitnessError):
        type_of_witness(d, [0, 1, 0])


def test_parse_and_format():
    assert str(P(" - ( 2, 1 ,1 ) ")) == "-(2,1,1)"
    assert P("(3)") == P("+(3)")
    for bad in ["+()", "+(0,1)", "+(1,,2)", "x(1)", "+1,2"]:
        with pytest.raises(InvalidArgumentError):
            parse_type(bad)


def test_reverse_examples():
    assert reverse_type(directed(6)) == directed(6, IN)
    assert reverse_type(P("+(1,2)")) == P("+(2,1)")
    assert all(reverse_type(reverse_type(p)) == p for p in all_path_types(8))


def test_strip_origin_examples():
    assert strip_origin(P("+(3,1)")) == P("+(2,1)")
    assert strip_origin(P("+(1,2)")) == P("-(2)")
    with pytest.raises(InvalidArgumentError):
        strip_origin(P("+(1)"))
    assert all(strip_origin(p).order == 7 for p in all_path_types(8))


def test_all_path_types():
    assert all_path_types(2) == [P("+(1)"), P("-(1)")]
    types = all_path_types(8)
    assert len(types) == 128 == len(set(types))
    assert all(OrientedPathType.from_code(8, p.code) == p for p in types)
    with pytest.raises(InvalidArgumentError):
        all_path_types(1)


def test_predicates():
    assert is_directed(P("+(7)")) and block_count(P("+(7)")) == 1
    assert is_antidirected(antidirected(8)) and block_count(antidirected(8)) == 7
    p = P("+(1,2)")
    assert not is_directed(p) and not is_antidirected(p) and block_count(p) == 2


def test_helpers():
    assert prepend_forward(P("+(2,1)")) == P("+(3,1)")
    assert prepend_forward(P("-(2,1)")) == P("+(1,2,1)")
    assert drop_end(P("+(2,1)")) == P("+(2)")
    assert drop_end(P("+(2,2)")) == P("+(2,1)")
    assert flip_sign(P("+(1,2)")) == P("-(1,2)")


@given(path_types(2, 12))
def test_reverse_involution(p):
    assert reverse_type(reverse_type(p)) == p
    assert reverse_type(p).order == p.order


@given(path_types(3, 12))
def test_strip_origin_order(p):
    assert strip_origin(p).order == p.order - 1


@given(path_types(2, 12))
def test_code_round_trip(p):
    assert OrientedPathType.from_code(p.order, p.code) == p
    assert parse_type(str(p)) == p
    assert p.order == 1 + sum(p.blocks)
    assert (p.sign == OUT) == p.is_outpath


@given(digraph_with_type(3, 7))
def test_witness_transforms(dp):
    d, p = dp
    w = contains_path(d, p)
    if w is None:
        return
    assert type_of_witness(d, w) == p
    assert type_of_witness(d, w[::-1]) == reverse_type(p)
    if p.order > 2:
        assert type_of_witness(d, w[1:]) == strip_origin(p)
        assert type_of_witness(d, w[:-1]) == drop_end(p)


@given(st.integers(2, 9), st.data())
def test_arc_string_bijection(n, data):
    code = data.draw(st.integers(0, (1 << (n - 1)) - 1))
    p = OrientedPathType.from_code(n, code)
    fwd = p.arcs_forward()
    assert len(fwd) == n - 1
    assert sum(1 << i for i, f in enumerate(fwd) if not f) == code
