"""Acceptance criteria, one test each.  A summary line per criterion is printed
at the end of the pytest run (see conftest.py)."""

from __future__ import annotations

import json
import time

import pytest

from gnclab import classify as K
from gnclab import harness as H
from gnclab.constructions import augmentation_mask, base_projection, build_matrix, build_zn, element_index
from gnclab.dsl import evaluate
from gnclab.ring import (
    element_sets,
    from_cayley,
    quotient,
    tables_match,
    unit_mask,
    validate,
    VALIDATE_BOUND,
)

criterion = pytest.mark.criterion


def fresh(text):
    # evaluate without a shared memo, so no cached verdicts leak between timings
    return evaluate(text, memo={})


@criterion(1, "Zn scan: gnc(Z_n) <=> n is a prime power for 1 <= n <= 64, under 1 s")
def test_criterion_01_zn_scan():
    start = time.perf_counter()
    rows = H.scan_zn(64)
    elapsed = time.perf_counter() - start
    assert [r.n for r in rows] == list(range(1, 65))
    assert all(r.gnc == H.is_prime_power(r.n) for r in rows)
    assert elapsed < 1.0, elapsed


@criterion(2, "gnc(Z3) and not nil_clean(Z3); clean(Z6) and not gnc(Z6), failing element 2")
def test_criterion_02_separating_examples():
    z3, z6 = build_zn(3), build_zn(6)
    assert K.holds(z3, "gnc") is True and K.holds(z3, "nil_clean") is False
    assert K.holds(z6, "clean") is True
    v = K.is_gnc(z6)
    assert v.holds is False and v.witness.elements == [2]


@criterion(3, "gnc(M2(F2)); not gnc(M2(F3)) refuted at diag(2,0) in under 1 s; not gnc(M2(F4)) from fixture")
def test_criterion_03_matrices_over_fields(fixtures):
    assert K.holds(fresh("M(2,Zn(2))"), "gnc")

    start = time.perf_counter()
    m3 = fresh("M(2,Zn(3))")
    v = K.is_gnc(m3)
    elapsed = time.perf_counter() - start
    assert m3.size == 81 and v.holds is False
    x = v.witness.elements[0]
    assert x == element_index(m3, "[[2,0],[0,0]]")
    idems = sorted(element_sets(m3).idempotents)
    assert [e for e, _, _ in v.witness.rows] == idems
    assert all(why != "ok" for _, _, why in v.witness.rows)
    assert elapsed < 1.0, elapsed

    f4 = from_cayley(json.loads((fixtures / "f4.json").read_text()))
    assert validate(f4).valid and K.holds(f4, "field")
    assert K.holds(build_matrix(f4, 2), "gnc") is False


@criterion(4, "Z3C2: Id = {0, 1, 2+g, 2+2g}, Nil = {0}, 1+g a non-unit with a nil-clean refutation")
def test_criterion_04_z3c2():
    rg = fresh("RG(Zn(3),C(2))")
    sets = element_sets(rg)
    assert {rg.format(i) for i in sets.idempotents} == {"0", "1", "2+g", "2+2g"}
    assert {rg.format(i) for i in sets.nilpotents} == {"0"}
    x = element_index(rg, "1+g")
    assert not unit_mask(rg)[x]
    cert = K.decompose(rg, x, "nil_clean")
    assert isinstance(cert, K.Certificate)
    assert {rg.format(e) for e, _, _ in cert.rows} == {"0", "1", "2+g", "2+2g"}
    assert all(why == "difference is not nilpotent" for _, _, why in cert.rows)


@criterion(5, "gnc(T_n(Z2)) for n in {2,3}; not gnc(T2(Z3)); gnc(T_n(R)) <=> nil_clean(R) on catalog bases")
def test_criterion_05_triangular():
    assert K.holds(fresh("T(2,Zn(2))"), "gnc") and K.holds(fresh("T(3,Zn(2))"), "gnc")
    assert K.holds(fresh("T(2,Zn(3))"), "gnc") is False
    seen = set()
    for text in H.default_catalog():
        ring = evaluate(text)
        if ring.kind == "matrix" and ring.parts["shape"] == "upper":
            base_nc = K.holds(ring.parts["base"], "nil_clean")
            assert K.holds(ring, "gnc") == base_nc, text
            seen.add(base_nc)
    assert seen == {True, False}


@criterion(6, "gnc(Z2 x Z4); not gnc(Z2 x Z3); gnc(product) <=> both factors nil-clean on catalog pairs")
def test_criterion_06_products():
    assert K.holds(fresh("Prod(Zn(2),Zn(4))"), "gnc")
    assert K.holds(fresh("Prod(Zn(2),Zn(3))"), "gnc") is False
    pairs = [t for t in H.default_catalog() if t.startswith("Prod(")]
    assert len(pairs) == 15
    seen = set()
    for text in pairs:
        ring = evaluate(text)
        both = all(K.holds(f, "nil_clean") for f in ring.parts["factors"])
        assert K.holds(ring, "gnc") == both, text
        seen.add(both)
    assert seen == {True, False}


@criterion(7, "gnc(K0(Z2)); not gnc(K0(Z3)); Ms(2,Z4,2) tables equal K0(Z4); gnc(Ms(2,Z4,2))")
def test_criterion_07_twisted_matrices():
    assert K.holds(fresh("Ks(Zn(2),0)"), "gnc")
    assert K.holds(fresh("Ks(Zn(3),0)"), "gnc") is False
    ms = fresh("Ms(2,Zn(4),2)")
    assert tables_match(ms, fresh("Ks(Zn(4),0)"))
    assert K.holds(ms, "gnc")


STRUCTURE_CHECKS = ["C1", "C2", "C3", "C5", "C9", "C11", "C13", "C14", "C15"]


@criterion(8, "run_all on the default catalog: 25 checks, 0 failures, structural checks examined, under 60 s")
def test_criterion_08_full_suite():
    start = time.perf_counter()
    rep = H.run_all()
    elapsed = time.perf_counter() - start
    assert len(rep.results) == 25
    assert rep.summary["fail"] == 0 and rep.summary["skipped"] == 0
    by = {r.id: r for r in rep.results}
    for cid in STRUCTURE_CHECKS:
        assert by[cid].status == "pass" and by[cid].rings_examined > 0, cid
    # every GNC catalog ring is assigned a branch
    assert by["C11"].rings_examined == len(H.default_catalog())
    assert elapsed < 60.0, elapsed


@criterion(9, "gnc(M2(Z4)) with Z4/J Boolean and J nil; not gnc(M2(Z9)) with Z9/J not Boolean, under 30 s")
def test_criterion_09_matrices_over_local_rings():
    z4 = build_zn(4)
    assert K.holds(K.jacobson_quotient(z4), "boolean") and K.j_is_nil(z4)
    assert K.holds(fresh("M(2,Zn(4))"), "gnc")

    start = time.perf_counter()
    m9 = fresh("M(2,Zn(9))")
    assert m9.size == 6561 and not m9.is_materialized
    verdict = K.holds(m9, "gnc")
    elapsed = time.perf_counter() - start
    assert verdict is False
    z9 = build_zn(9)
    q = K.jacobson_quotient(z9)
    assert q.size == 3 and tables_match(q, build_zn(3)) and not K.holds(q, "boolean")
    assert elapsed < 30.0, elapsed


@criterion(10, "Z2C2, Z4C2, Z2C4, Z2(C2xC2) are GNC; Z2C3 is not (3*1 a unit); RG/Delta = R on catalog group rings")
def test_criterion_10_group_rings():
    for text in ("RG(Zn(2),C(2))", "RG(Zn(4),C(2))", "RG(Zn(2),C(4))", "RG(Zn(2),C(2)xC(2))"):
        assert K.holds(fresh(text), "gnc"), text
    z2c3 = fresh("RG(Zn(2),C(3))")
    assert K.holds(z2c3, "gnc") is False
    z2 = z2c3.parts["base"]
    assert unit_mask(z2)[z2.times_int(3)] and not H.group_prime_condition(z2c3)
    group_rings = [t for t in H.default_catalog() if t.startswith("RG(")]
    assert len(group_rings) == 12
    for text in group_rings:
        ring = evaluate(text)
        q = quotient(ring, augmentation_mask(ring), check=True)
        assert tables_match(q.ring, ring.parts["base"], base_projection(ring)[q.reps]), text


@criterion(11, "S2(R) = Triv(R) = Rn(R,2) and Ks(R,1) = M2(R) for R in Z2, Z3, Z4; every catalog ring validates")
def test_criterion_11_cross_validation():
    for base in ("Zn(2)", "Zn(3)", "Zn(4)"):
        s2, tr, rn = fresh(f"S(2,{base})"), fresh(f"Triv({base})"), fresh(f"Rn({base},2)")
        # the canonical bijection is (a, b) <-> a + b*t on the shared coordinate order
        assert tables_match(s2, tr) and tables_match(tr, rn) and tables_match(s2, rn)
        assert tables_match(fresh(f"Ks({base},1)"), fresh(f"M(2,{base})"))
    rings, dropped = H.build_catalog(H.default_catalog())
    assert not dropped
    for ring in rings:
        method = "exhaustive" if ring.size <= VALIDATE_BOUND else "complete"
        rep = validate(ring, method=method)
        assert rep.valid, (ring.label, rep.to_dict())
