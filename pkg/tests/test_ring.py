from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gnclab.constructions import build_zn, element_index
from gnclab.dsl import evaluate
from gnclab.errors import CapacityError, RingInputError, ValidationError
from gnclab.ring import (
    FiniteRing,
    element_sets,
    from_cayley,
    is_two_sided_ideal,
    jacobson_mask,
    load,
    nilpotency_index,
    power,
    profile,
    quotient,
    require_valid,
    save,
    tables_match,
    to_cayley,
    unit_check,
    validate,
)
from oracle import Naive

SMALL_RINGS = [
    "Zn(1)", "Zn(2)", "Zn(6)", "Zn(8)", "Zn(12)", "Prod(Zn(2),Zn(4))", "M(2,Zn(2))", "T(2,Zn(3))",
    "S(3,Zn(2))", "Triv(Zn(3))", "Rn(Zn(2),3)", "Anm(Zn(3),2,2)", "Bnm(Zn(2),2,2)", "Ks(Zn(2),0)",
    "Ms(2,Zn(2),1)", "TT(Zn(4),Zn(2),reduce)", "RG(Zn(3),C(2))", "RG(Zn(2),C(3))", "M(2,Zn(3))",
]


def idx(ring, text):
    return element_index(ring, text)


@pytest.mark.parametrize("expr", SMALL_RINGS)
def test_element_sets_match_brute_force(expr):
    ring = evaluate(expr)
    naive = Naive(ring)
    sets = element_sets(ring)
    assert sets.units == naive.units()
    assert sets.idempotents == naive.idempotents()
    assert sets.nilpotents == naive.nilpotents()
    assert sets.jacobson == naive.jacobson()
    assert sets.center == naive.center()


@pytest.mark.parametrize("expr", SMALL_RINGS)
def test_radical_is_nil_two_sided_ideal(expr):
    ring = evaluate(expr)
    sets = element_sets(ring)
    assert sets.jacobson <= sets.nilpotents
    assert is_two_sided_ideal(ring, jacobson_mask(ring))
    assert ring.zero in sets.idempotents and ring.one in sets.idempotents
    assert ring.zero in sets.nilpotents and ring.one in sets.units


def test_power_examples():
    z4, z8 = build_zn(4), build_zn(8)
    assert power(z4, 2, 2) == 0
    assert power(z8, 2, 3) == 0 and power(z8, 2, 2) == 4
    assert power(z8, 5, 0) == z8.one
    with pytest.raises(RingInputError):
        power(z4, 4, 1)
    with pytest.raises(RingInputError):
        power(z4, 1, -1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["Zn(12)", "M(2,Zn(2))", "RG(Zn(3),C(2))", "T(2,Zn(4))"]),
       st.integers(0, 200), st.integers(0, 16))
def test_power_matches_repeated_multiplication(expr, x, k):
    ring = evaluate(expr)
    x %= ring.size
    assert power(ring, x, k) == Naive(ring).pow(x, k)


def test_unit_check_examples():
    z6 = build_zn(6)
    assert unit_check(z6, 5) == 5
    assert unit_check(z6, 2) is None
    m = evaluate("M(2,Zn(2))")
    x = idx(m, "[[1,1],[0,1]]")
    assert unit_check(m, x) == x


def test_nilpotency_index_examples():
    assert nilpotency_index(build_zn(8), 2) == 3
    assert nilpotency_index(build_zn(6), 2) is None
    for n in (1, 2, 7):
        assert nilpotency_index(build_zn(n), 0) == 1


def test_element_sets_examples():
    s = element_sets(build_zn(6))
    assert (s.units, s.idempotents, s.nilpotents, s.jacobson) == ({1, 5}, {0, 1, 3, 4}, {0}, {0})
    assert element_sets(build_zn(12)).jacobson == {0, 6}
    rg = evaluate("RG(Zn(3),C(2))")
    s = element_sets(rg)
    assert {rg.format(i) for i in s.idempotents} == {"0", "1", "2+g", "2+2g"}
    assert s.nilpotents == {rg.zero}


def test_profile_examples():
    z4 = build_zn(4)
    p = profile(z4, 2)
    assert (p.is_unit, p.is_idempotent, p.nilpotency_index, p.in_jacobson, p.is_central) == (
        False, False, 2, True, True)
    p = profile(z4, 3)
    assert p.is_unit and p.inverse == 3 and not p.is_idempotent and p.nilpotency_index is None
    for expr in ("Zn(5)", "M(2,Zn(3))"):
        ring = evaluate(expr)
        p = profile(ring, ring.one)
        assert p.is_unit and p.inverse == ring.one and p.is_idempotent


def test_zero_ring_element_is_unit_and_nilpotent():
    z1 = build_zn(1)
    p = profile(z1, 0)
    assert p.is_unit and p.nilpotency_index == 1


def test_validate_examples():
    rep = validate(build_zn(7))
    assert rep.valid and rep.mode == "exhaustive"
    rep = validate(evaluate("M(2,Zn(4))"))
    assert rep.valid and rep.mode == "exhaustive"


def test_validate_flags_broken_identity():
    data = to_cayley(build_zn(3))
    data["mul"][1][1] = 0
    rep = validate(from_cayley(data))
    assert not rep.valid
    assert rep.axiom == "multiplicative identity"
    with pytest.raises(ValidationError):
        require_valid(from_cayley(data))


def test_validate_flags_non_distributive_table():
    # Z3 with multiplication replaced by max: identity fails first at zero
    data = to_cayley(build_zn(3))
    data["mul"] = [[max(a, b) for b in range(3)] for a in range(3)]
    rep = validate(from_cayley(data))
    assert not rep.valid and rep.witness is not None


def test_sampled_mode_above_bound():
    ring = evaluate("M(2,Zn(3))")
    rep = validate(ring, bound=16, seed=5)
    assert rep.valid and rep.mode == "sampled" and rep.checks >= 10 * ring.size
    assert validate(ring, bound=16, seed=5).to_dict() == rep.to_dict()


def test_complete_mode_agrees_with_exhaustive():
    for expr in ("T(2,Zn(4))", "RG(Zn(2),C(4))", "Bnm(Zn(2),2,2)"):
        ring = evaluate(expr)
        assert validate(ring, method="complete").valid
        assert validate(ring, method="exhaustive").valid


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_any_single_table_corruption_is_detected(a, b, c):
    base = to_cayley(evaluate("M(2,Zn(2))"))
    data = json.loads(json.dumps(base))
    if data["mul"][a][b] == c:
        c = (c + 1) % 16
    data["mul"][a][b] = c
    assert not validate(from_cayley(data), method="exhaustive").valid
    assert not validate(from_cayley(data), method="complete").valid


def test_cayley_round_trip(tmp_path):
    ring = evaluate("RG(Zn(2),C(2)xC(2))")
    path = tmp_path / "r.json"
    save(ring, path)
    back = load(path)
    assert back.label == ring.label and tables_match(ring, back)
    assert path.read_text().endswith("\n")


def test_cayley_errors(tmp_path):
    with pytest.raises(RingInputError):
        from_cayley({"size": 2})
    with pytest.raises(CapacityError):
        from_cayley(to_cayley(build_zn(5)), cap=4)
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(RingInputError):
        load(bad)


def test_lazy_ring_matches_materialized():
    dense = evaluate("M(2,Zn(3))")
    lazy = FiniteRing(dense.size, dense.zero, dense.one, dense.add, dense.mul, dense.negation,
                      materialize_bound=10)
    assert not lazy.is_materialized
    assert element_sets(lazy) == element_sets(dense)


def test_quotient_by_radical_of_z4_is_z2():
    z4 = build_zn(4)
    q = quotient(z4, jacobson_mask(z4))
    assert q.ring.size == 2
    assert tables_match(q.ring, build_zn(2))
    assert list(q.reps) == [0, 1]
    assert np.array_equal(q.projection, [0, 1, 0, 1])


def test_quotient_rejects_non_ideal():
    z6 = build_zn(6)
    mask = np.zeros(6, dtype=bool)
    mask[[0, 1]] = True
    with pytest.raises(RingInputError):
        quotient(z6, mask, check=True)
