from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from gnclab.dsl import GroupExpr, RingExpr, evaluate, parse_ring_expr
from gnclab.errors import CapacityError, ParseError, RingInputError


def test_parse_examples():
    assert parse_ring_expr("M(2,Zn(2))") == RingExpr("M", (2, RingExpr("Zn", (2,))))
    node = parse_ring_expr("RG(Zn(3),C(2))")
    assert node.ctor == "RG" and node.args[1] == GroupExpr((2,))
    node = parse_ring_expr("Ms(2,Zn(4),2)")
    assert node.ctor == "Ms" and node.args[0] == 2 and node.args[2] == 2


def test_whitespace_insensitive_and_canonical():
    node = parse_ring_expr("  TT( Zn(4) ,Zn( 2 ), reduce ) ")
    assert str(node) == "TT(Zn(4),Zn(2),reduce)"
    assert str(parse_ring_expr("RG(Zn(2), C(2) x C(2))")) == "RG(Zn(2),C(2)xC(2))"


@pytest.mark.parametrize("text, pos", [
    ("M(2,Zn(2)", 9), ("Zn(2))", 5), ("Foo(2)", 0), ("", 0), ("Zn(2)x", 5), ("RG(Zn(2),D(2))", 9),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.position == pos


@pytest.mark.parametrize("text, ctor", [
    ("M(2)", "M"), ("Zn()", "Zn"), ("Zn(2,3)", "Zn"), ("Triv(3)", "Triv"), ("M(Zn(2),2)", "M"),
    ("TT(Zn(2),Zn(2),left)", "TT"), ("Anm(Zn(2),2)", "Anm"),
])
def test_arity_and_type_errors_name_the_constructor(text, ctor):
    with pytest.raises(RingInputError) as info:
        parse_ring_expr(text)
    assert str(info.value).startswith(ctor)


def test_semantic_errors_deferred_to_construction():
    parse_ring_expr("Ks(Zn(4),9)")
    with pytest.raises(RingInputError):
        evaluate("Ks(Zn(4),9)")
    with pytest.raises(RingInputError):
        evaluate("TT(Zn(2),Zn(3),regular)")
    with pytest.raises(CapacityError):
        evaluate("M(4,Zn(9))")


def test_evaluate_labels_with_canonical_text():
    ring = evaluate(" Prod( Zn(2) , Zn(4) ) ")
    assert ring.label == "Prod(Zn(2),Zn(4))" and ring.size == 8


def test_memo_shares_subrings():
    memo = {}
    a = evaluate("M(2,Zn(3))", memo=memo)
    assert evaluate("Zn(3)", memo=memo) is a.parts["base"]


_leaf = st.builds(lambda n: f"Zn({n})", st.integers(1, 9))
_group = st.lists(st.integers(1, 5), min_size=1, max_size=3).map(lambda os: "x".join(f"C({o})" for o in os))


def _extend(inner):
    ints = st.integers(1, 4)
    return st.one_of(
        st.lists(inner, min_size=1, max_size=3).map(lambda xs: f"Prod({','.join(xs)})"),
        st.tuples(ints, inner).map(lambda t: f"M({t[0]},{t[1]})"),
        st.tuples(ints, inner).map(lambda t: f"S({t[0]},{t[1]})"),
        inner.map(lambda e: f"Triv({e})"),
        st.tuples(inner, ints, ints).map(lambda t: f"Anm({t[0]},{t[1]},{t[2]})"),
        st.tuples(ints, inner, ints).map(lambda t: f"Ms({t[0]},{t[1]},{t[2]})"),
        st.tuples(inner, inner, st.sampled_from(["regular", "zero", "reduce"])).map(
            lambda t: f"TT({t[0]},{t[1]},{t[2]})"),
        st.tuples(inner, _group).map(lambda t: f"RG({t[0]},{t[1]})"),
    )


expressions = st.recursive(_leaf, _extend, max_leaves=6)


@settings(max_examples=200)
@given(expressions)
def test_print_parse_round_trip(text):
    node = parse_ring_expr(text)
    assert str(node) == text
    assert parse_ring_expr(str(node)) == node
