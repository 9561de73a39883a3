"""Executable checks of structural results about GNC rings over a ring catalog.

A check is a filter (``applies``), an observation (a dict of facts computed on
one ring) and a ``claim`` over that observation.  A failing ring produces a
counterexample holding the ring label and the observation, so replaying the
observation on the same ring reproduces the violation.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import prod
from typing import Callable, Optional

import numpy as np

from . import classify as K
from .constructions import augmentation_mask, base_projection, build_matrix, build_zn, field_f4
from .dsl import RingExpr, evaluate, parse_ring_expr
from .errors import CapacityError
from .ring import (
    DEFAULT_CAP,
    FiniteRing,
    idempotent_mask,
    is_central,
    is_two_sided_ideal,
    jacobson_mask,
    nilpotent_mask,
    quotient,
    tables_match,
    unit_mask,
)

SMALL = ("Zn(2)", "Zn(3)", "Zn(4)")


# -- catalog --------------------------------------------------------------------


def expr_size(expr) -> int:
    """Carrier size of a ring expression, computed without building it."""
    e = parse_ring_expr(expr) if isinstance(expr, str) else expr
    a = e.args
    size = lambda x: expr_size(x)  # noqa: E731
    if e.ctor == "Zn":
        return a[0]
    if e.ctor == "Prod":
        return prod(size(x) for x in a)
    if e.ctor == "M":
        return size(a[1]) ** (a[0] * a[0])
    if e.ctor == "T":
        return size(a[1]) ** (a[0] * (a[0] + 1) // 2)
    if e.ctor == "S":
        return size(a[1]) ** (1 + a[0] * (a[0] - 1) // 2)
    if e.ctor == "Triv":
        return size(a[0]) ** 2
    if e.ctor == "Rn":
        return size(a[0]) ** a[1]
    if e.ctor == "Anm":
        return size(a[0]) ** (a[1] + a[2] - 1)
    if e.ctor == "Bnm":
        return size(a[0]) ** (a[1] * a[2])
    if e.ctor == "Ks":
        return size(a[0]) ** 4
    if e.ctor == "Ms":
        return size(a[1]) ** (a[0] * a[0])
    if e.ctor == "TT":
        r, s = size(a[0]), size(a[1])
        return r * s * {"regular": r, "zero": 1, "reduce": s}[a[2]]
    if e.ctor == "RG":
        return size(a[0]) ** prod(a[1].orders)
    raise ValueError(e.ctor)


def _twist_parameters(base_expr: str) -> list[int]:
    """Central elements of the base that are nilpotent or units."""
    base = evaluate(base_expr)
    keep = nilpotent_mask(base) | unit_mask(base)
    return [int(s) for s in np.flatnonzero(keep) if is_central(base, int(s))]


def default_catalog(cap: int = DEFAULT_CAP) -> list[str]:
    out = [f"Zn({n})" for n in range(1, 65)]
    out += [f"Prod(Zn({a}),Zn({b}))" for a, b in combinations_with_replacement((2, 3, 4, 8, 9), 2)]
    out += [f"M(2,Zn({k}))" for k in (2, 3, 4, 9)]
    out += [f"{t}({n},{b})" for t in "TS" for n in (2, 3) for b in SMALL]
    for b in SMALL:
        out += [f"Triv({b})", f"Rn({b},2)", f"Rn({b},3)", f"Anm({b},2,2)", f"Bnm({b},2,2)"]
    for b in ("Zn(2)", "Zn(4)"):
        for s in _twist_parameters(b):
            out += [f"Ks({b},{s})", f"Ms(2,{b},{s})"]
    for b in SMALL:
        for g in ("C(2)", "C(3)", "C(4)", "C(2)xC(2)"):
            out.append(f"RG({b},{g})")
    seen, result = set(), []
    for e in out:
        if e not in seen and expr_size(e) <= cap:
            seen.add(e)
            result.append(e)
    return result


# -- observations shared by several checks -----------------------------------------


def _pred(ring, prop) -> bool:
    return K.holds(ring, prop)


def _integer_images_ok(ring: FiniteRing) -> bool:
    units, nil = unit_mask(ring), nilpotent_mask(ring)
    acc = ring.zero
    for _ in range(2 * ring.size + 1):
        if not (units[acc] or nil[acc]):
            return False
        acc = int(ring.add(acc, ring.one))
    return True


def _sum_nil(ring: FiniteRing) -> bool:
    nil = nilpotent_mask(ring)
    qs, js = np.flatnonzero(nil), np.flatnonzero(jacobson_mask(ring))
    for blk in ring.blocks(qs):
        if not nil[np.asarray(ring.add(blk[:, None], js[None, :]))].all():
            return False
    return True


def _quotient_matches_base(ring: FiniteRing, kernel: np.ndarray) -> bool:
    """R/I equals the base tables under coset -> projection of its least representative."""
    base = ring.parts["base"]
    proj = base_projection(ring)
    q = quotient(ring, kernel)
    return tables_match(q.ring, base, proj[q.reps])


def _kernel(ring: FiniteRing) -> np.ndarray:
    return base_projection(ring) == ring.parts["base"].zero


def _nil_quotient_obs(ring):
    kernel = _kernel(ring)
    nil = nilpotent_mask(ring)
    q = quotient(ring, kernel)
    return {
        "ideal_is_nil": bool(nil[kernel].all()),
        "ideal_two_sided": is_two_sided_ideal(ring, kernel),
        "quotient_matches_base": _quotient_matches_base(ring, kernel),
        "gnc": _pred(ring, "gnc"),
        "quotient_gnc": _pred(q.ring, "gnc"),
    }


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _additive_order(ring: FiniteRing, x: int) -> int:
    k, acc = 1, x
    while acc != ring.zero:
        acc = int(ring.add(acc, x))
        k += 1
    return k


def group_prime_condition(ring: FiniteRing) -> bool:
    """Some prime p has G a p-group and p*1 nilpotent in the base ring."""
    base, g = ring.parts["base"], ring.parts["group"]
    if g.size > 1:
        candidates = _primes(g.size)
    else:
        candidates = _primes(_additive_order(base, base.one)) or [2]
    nil = nilpotent_mask(base)
    return any(g.is_p_group(p) and nil[base.times_int(p)] for p in candidates)


def is_prime_power(n: int) -> bool:
    """n = p**k for a prime p and k >= 0 (so 1 counts, as in OEIS A000961)."""
    return n >= 1 and len(_primes(n)) <= 1


# -- checks ---------------------------------------------------------------------------


@dataclass
class Check:
    id: str
    anchor: str
    statement: str
    observe: Callable[[FiniteRing], dict]
    claim: Callable[[dict], bool]
    applies: Callable[[FiniteRing], bool] = lambda ring: True
    own_family: Optional[Callable[[int], list]] = None


@dataclass
class Counterexample:
    check: str
    ring: str
    observed: dict
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "observed": self.observed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckResult:
    id: str
    anchor: str
    status: str                       # pass | fail | skipped
    rings_examined: int
    counterexample: Optional[Counterexample] = None
    reason: str = ""
    runtime_ms: float = 0.0

    def to_dict(self, timing: bool = True) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status,
               "rings_examined": self.rings_examined}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        if self.reason:
            out["reason"] = self.reason
        out["runtime_ms"] = round(self.runtime_ms, 1) if timing else 0
        return out


def _kind(*kinds):
    return lambda ring: ring.kind in kinds


def _shape(shape, min_n=1):
    return lambda ring: ring.kind == "matrix" and ring.parts["shape"] == shape and ring.parts["n"] >= min_n


def _twist_nilpotent(kind):
    def applies(ring):
        if ring.kind != kind:
            return False
        base, s = ring.parts["base"], ring.parts["s"]
        return bool(nilpotent_mask(base)[s]) and is_central(base, s)
    return applies


def _build(text, cap, make=None):
    try:
        return make() if make else evaluate(text, cap)
    except CapacityError as exc:
        exc.expression = text
        raise


def _exprs(*texts):
    return lambda cap: [_build(t, cap) for t in texts]


def _f2_f3_f4_matrices(cap):
    out = [_build(t, cap) for t in ("M(2,Zn(2))", "M(3,Zn(2))", "M(2,Zn(3))")]
    out.append(_build("M(2,F4)", cap, lambda: build_matrix(field_f4(), 2, cap=cap)))
    return out


def _tt_family(cap):
    texts = [f"TT(Zn({a}),Zn({b}),zero)" for a in (2, 3, 4) for b in (2, 3, 4)]
    texts += [f"TT(Zn({k}),Zn({k}),regular)" for k in (2, 3, 4)]
    texts += ["TT(Zn(4),Zn(2),reduce)", "TT(Zn(8),Zn(4),reduce)", "TT(Zn(9),Zn(3),reduce)",
              "TT(Zn(6),Zn(3),reduce)"]
    return [_build(t, cap) for t in texts]


def _z3c2_obs(ring):
    from .classify import decompose
    from .constructions import element_index

    ids = {ring.format(i) for i in np.flatnonzero(idempotent_mask(ring))}
    nils = {ring.format(i) for i in np.flatnonzero(nilpotent_mask(ring))}
    x = element_index(ring, "1+g")
    d = decompose(ring, x, "nil_clean")
    refuted = isinstance(d, K.Certificate) and len(d.rows) == len(ids) and all(
        why != "ok" for _, _, why in d.rows)
    return {
        "idempotents_exact": ids == {"0", "1", "2+g", "2+2g"},
        "nilpotents_exact": nils == {"0"},
        "one_plus_g_nonunit": not bool(unit_mask(ring)[x]),
        "one_plus_g_refuted": refuted,
    }


def _scan_family(cap):
    return [_build(f"Zn({n})", cap) for n in range(1, 65)]


def _implies(a, b):
    return (not a) or b


CHECKS: list[Check] = [
    Check("C1", "GNC rings are clean", "gnc => clean",
          lambda r: {"gnc": _pred(r, "gnc"), "clean": _pred(r, "clean")},
          lambda o: _implies(o["gnc"], o["clean"])),
    Check("C2", "the Jacobson radical of a GNC ring is nil", "gnc => J(R) nil",
          lambda r: {"gnc": _pred(r, "gnc"), "j_nil": K.j_is_nil(r)},
          lambda o: _implies(o["gnc"], o["j_nil"])),
    Check("C3", "in a GNC ring every integer image is nilpotent or a unit",
          "gnc => n*1 in Nil(R) or U(R) for 0 <= n <= 2|R|",
          lambda r: {"gnc": _pred(r, "gnc"), "integer_images_ok": _integer_images_ok(r)},
          lambda o: _implies(o["gnc"], o["integer_images_ok"])),
    Check("C4", "GNC ring with 2 a unit and u^2 = 1 for all units is a field",
          "gnc and 2 in U(R) and u^2 = 1 for all units => field (nonzero rings)",
          lambda r: {"gnc": _pred(r, "gnc"),
                     "two_is_unit": bool(unit_mask(r)[r.times_int(2)]),
                     "units_square_to_one": bool((np.asarray(r.mul(np.flatnonzero(unit_mask(r)),
                                                                    np.flatnonzero(unit_mask(r)))) == r.one).all()),
                     "field": _pred(r, "field")},
          lambda o: _implies(o["gnc"] and o["two_is_unit"] and o["units_square_to_one"], o["field"]),
          applies=lambda r: r.size > 1),
    Check("C5", "Nil(R) + J(R) = Nil(R) in GNC rings", "gnc => Nil + J within Nil",
          lambda r: {"gnc": _pred(r, "gnc"), "sum_nil": _sum_nil(r)},
          lambda o: _implies(o["gnc"], o["sum_nil"])),
    Check("C6", "R is GNC iff R/I is GNC for a nil ideal I",
          "for the augmentation-free ideal I of Triv/Rn/Anm/Bnm: I nil ideal, R/I = base, gnc(R) <=> gnc(R/I)",
          _nil_quotient_obs,
          lambda o: o["ideal_is_nil"] and o["ideal_two_sided"] and o["quotient_matches_base"]
          and o["gnc"] == o["quotient_gnc"],
          applies=_kind("triv", "rn", "anm", "bnm")),
    Check("C7", "a product of n >= 2 rings is GNC iff every factor is nil-clean",
          "gnc(prod R_i) <=> all R_i nil-clean",
          lambda r: {"gnc": _pred(r, "gnc"),
                     "factors_nil_clean": all(_pred(f, "nil_clean") for f in r.parts["factors"])},
          lambda o: o["gnc"] == o["factors_nil_clean"],
          applies=lambda r: r.kind == "product" and len(r.parts["factors"]) >= 2),
    Check("C8", "trivial extensions, S_n, R_n, A_nm, B_nm are GNC iff the base is",
          "gnc(construction) <=> gnc(base)",
          lambda r: {"gnc": _pred(r, "gnc"), "base_gnc": _pred(r.parts["base"], "gnc")},
          lambda o: o["gnc"] == o["base_gnc"],
          applies=lambda r: _kind("triv", "rn", "anm", "bnm")(r) or _shape("upper_const_diag", 2)(r)),
    Check("C9", "with only trivial idempotents, GNC iff local with nil J(R)",
          "Id(R) = {0,1} => (gnc <=> local and J nil)",
          lambda r: {"gnc": _pred(r, "gnc"), "local": _pred(r, "local"), "j_nil": K.j_is_nil(r)},
          lambda o: o["gnc"] == (o["local"] and o["j_nil"]),
          applies=K.only_trivial_idempotents),
    Check("C10", "M_n(D) over a finite field D is GNC iff D = F2",
          "gnc(M_n(D)) <=> |D| = 2 for D in F2, F3, F4",
          lambda r: {"gnc": _pred(r, "gnc"), "base_is_f2": r.parts["base"].size == 2},
          lambda o: o["gnc"] == o["base_is_f2"],
          own_family=_f2_f3_f4_matrices),
    Check("C11", "finite GNC rings are local with nil J, nil-clean, or have R/J = M_n(F2)",
          "gnc <=> semilocal branch assigned",
          lambda r: {"gnc": _pred(r, "gnc"), "branch": K.semilocal_branch(r)},
          lambda o: o["gnc"] == (o["branch"] != "none")),
    Check("C12", "Z_n is GNC iff n is a prime power", "gnc(Z_n) <=> n prime power, 1 <= n <= 64",
          lambda r: {"gnc": _pred(r, "gnc"), "prime_power": is_prime_power(r.size)},
          lambda o: o["gnc"] == o["prime_power"],
          own_family=_scan_family),
    Check("C13", "an abelian ring is GNC iff local with nil J or strongly nil-clean",
          "abelian => (gnc <=> local-nil-J or strongly nil-clean)",
          lambda r: {"gnc": _pred(r, "gnc"), "local_nil_j": K.local_nil_j(r),
                     "strongly_nil_clean": _pred(r, "strongly_nil_clean")},
          lambda o: o["gnc"] == (o["local_nil_j"] or o["strongly_nil_clean"]),
          applies=lambda r: _pred(r, "abelian")),
    Check("C14", "an NR ring is GNC iff local with nil J or strongly nil-clean; GNC rings are NR iff NI",
          "nr => (gnc <=> local-nil-J or sNC); gnc => (nr <=> ni); gnc and nr => J = Nil",
          lambda r: {"gnc": _pred(r, "gnc"), "nr": _pred(r, "nr"), "ni": _pred(r, "ni"),
                     "local_nil_j": K.local_nil_j(r), "strongly_nil_clean": _pred(r, "strongly_nil_clean"),
                     "j_equals_nil": _pred(r, "two_primal_finite")},
          lambda o: _implies(o["nr"], o["gnc"] == (o["local_nil_j"] or o["strongly_nil_clean"]))
          and _implies(o["gnc"], o["nr"] == o["ni"])
          and _implies(o["gnc"] and o["nr"], o["j_equals_nil"])),
    Check("C15", "strongly nil-clean iff UU and GNC", "uu and gnc <=> strongly nil-clean",
          lambda r: {"uu": _pred(r, "uu"), "gnc": _pred(r, "gnc"),
                     "strongly_nil_clean": _pred(r, "strongly_nil_clean")},
          lambda o: (o["uu"] and o["gnc"]) == o["strongly_nil_clean"]),
    Check("C16", "M_n(R) over a commutative ring is GNC iff R/J(R) is Boolean and J(R) nil",
          "commutative R, n >= 2: gnc(M_n(R)) <=> boolean(R/J) and J(R) nil",
          lambda r: {"gnc": _pred(r, "gnc"),
                     "base_quotient_boolean": _pred(K.jacobson_quotient(r.parts["base"]), "boolean"),
                     "base_j_nil": K.j_is_nil(r.parts["base"])},
          lambda o: o["gnc"] == (o["base_quotient_boolean"] and o["base_j_nil"]),
          applies=lambda r: _shape("full", 2)(r) and _pred(r.parts["base"], "commutative")),
    Check("C17", "T_n(R) is GNC iff R is nil-clean", "n >= 2: gnc(T_n(R)) <=> nil_clean(R)",
          lambda r: {"gnc": _pred(r, "gnc"), "base_nil_clean": _pred(r.parts["base"], "nil_clean")},
          lambda o: o["gnc"] == o["base_nil_clean"],
          applies=_shape("upper", 2)),
    Check("C18", "K_s(R) with s central nilpotent is GNC iff R is nil-clean",
          "s in Z(R) and Nil(R): gnc(K_s(R)) <=> nil_clean(R)",
          lambda r: {"gnc": _pred(r, "gnc"), "base_nil_clean": _pred(r.parts["base"], "nil_clean")},
          lambda o: o["gnc"] == o["base_nil_clean"],
          applies=_twist_nilpotent("ks")),
    Check("C19", "M_n(R;s) with s central nilpotent is GNC iff R is nil-clean",
          "s in Z(R) and Nil(R): gnc(M_n(R;s)) <=> nil_clean(R)",
          lambda r: {"gnc": _pred(r, "gnc"), "base_nil_clean": _pred(r.parts["base"], "nil_clean")},
          lambda o: o["gnc"] == o["base_nil_clean"],
          applies=_twist_nilpotent("ms")),
    Check("C20", "the formal triangular ring T(R,S,M) is GNC iff R and S are nil-clean",
          "gnc(T(R,S,M)) <=> nil_clean(R) and nil_clean(S)",
          lambda r: {"gnc": _pred(r, "gnc"), "r_nil_clean": _pred(r.parts["r"], "nil_clean"),
                     "s_nil_clean": _pred(r.parts["s"], "nil_clean")},
          lambda o: o["gnc"] == (o["r_nil_clean"] and o["s_nil_clean"]),
          own_family=_tt_family),
    Check("C21", "RG is GNC when R is GNC, p in Nil(R) and G a p-group",
          "gnc(R) and G a p-group with p*1 nilpotent => gnc(RG)",
          lambda r: {"base_gnc": _pred(r.parts["base"], "gnc"), "p_condition": group_prime_condition(r),
                     "gnc": _pred(r, "gnc")},
          lambda o: _implies(o["base_gnc"] and o["p_condition"], o["gnc"]),
          applies=_kind("group_ring")),
    Check("C22", "if RG is GNC then R is GNC", "gnc(RG) => gnc(R)",
          lambda r: {"gnc": _pred(r, "gnc"), "base_gnc": _pred(r.parts["base"], "gnc")},
          lambda o: _implies(o["gnc"], o["base_gnc"]),
          applies=_kind("group_ring")),
    Check("C23", "Z3C2: Id = {0, 1, 2+g, 2+2g}, Nil = {0}, 1+g a non-nil-clean non-unit",
          "exact element sets of Z3C2", _z3c2_obs, lambda o: all(o.values()),
          own_family=_exprs("RG(Zn(3),C(2))")),
    Check("C24", "for abelian G, RG GNC forces G to be a p-group with p nilpotent in R",
          "G abelian and gnc(RG) => G p-group with p*1 in Nil(R)",
          lambda r: {"gnc": _pred(r, "gnc"), "p_condition": group_prime_condition(r)},
          lambda o: _implies(o["gnc"], o["p_condition"]),
          applies=lambda r: r.kind == "group_ring" and r.parts["group"].is_abelian),
    Check("C25", "RG modulo the augmentation ideal is R", "RG/Delta = R under the augmentation map",
          lambda r: {"quotient_matches_base": _quotient_matches_base(r, augmentation_mask(r))},
          lambda o: o["quotient_matches_base"],
          applies=_kind("group_ring")),
]

CHECKS_BY_ID = {c.id: c for c in CHECKS}


# -- running -------------------------------------------------------------------------------


def run_check(check: Check, rings: list, *, own: bool = True, cap: int = DEFAULT_CAP) -> CheckResult:
    """Evaluate ``check`` over ``rings`` (or its own family when it has one and ``own``)."""
    start = time.perf_counter()
    if check.own_family is not None:
        if not own:
            return CheckResult(check.id, check.anchor, "skipped", 0,
                               reason="supplies its own family; runs with the default catalog")
        try:
            rings = check.own_family(cap)
        except CapacityError as exc:
            where = getattr(exc, "expression", "")
            return CheckResult(check.id, check.anchor, "skipped", 0,
                               reason=f"{where}: {exc}" if where else str(exc))
    examined = 0
    for ring in rings:
        if not check.applies(ring):
            continue
        examined += 1
        obs = check.observe(ring)
        if not check.claim(obs):
            cx = Counterexample(check.id, ring.label, obs)
            return CheckResult(check.id, check.anchor, "fail", examined, cx,
                               runtime_ms=1000 * (time.perf_counter() - start))
    return CheckResult(check.id, check.anchor, "pass", examined,
                       runtime_ms=1000 * (time.perf_counter() - start))


def replay(check: Check, cx: Counterexample, rings: list, cap: int = DEFAULT_CAP) -> bool:
    """Re-run the observation on the named ring; True iff the violation reproduces."""
    pool = check.own_family(cap) if check.own_family is not None else rings
    for ring in pool:
        if ring.label == cx.ring:
            obs = check.observe(ring)
            return obs == cx.observed and not check.claim(obs)
    return False


@dataclass
class SuiteReport:
    results: list
    dropped: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            counts[r.status] += 1
        return {"checks": len(self.results), **counts, "dropped_expressions": list(self.dropped)}

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)


def build_catalog(exprs: list, cap: int = DEFAULT_CAP, memo: Optional[dict] = None) -> tuple[list, list]:
    """Evaluate catalog expressions; those beyond ``cap`` are dropped and returned separately."""
    memo = {} if memo is None else memo
    rings, dropped = [], []
    for e in exprs:
        try:
            rings.append(evaluate(e, cap, memo))
        except CapacityError:
            dropped.append(str(e))
    return rings, dropped


def run_all(catalog: Optional[list] = None, *, cap: int = DEFAULT_CAP, jobs: int = 1,
            only: Optional[list] = None, checks: Optional[list] = None) -> SuiteReport:
    """Run every check.  ``catalog=None`` means the default catalog plus the checks' own families."""
    own = catalog is None
    exprs = default_catalog(cap) if catalog is None else list(catalog)
    rings, dropped = build_catalog(exprs, cap)
    selected = list(checks or CHECKS)
    if only:
        wanted = set(only)
        selected = [c for c in selected if c.id in wanted]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run_check(c, rings, own=own, cap=cap), selected))
    else:
        results = [run_check(c, rings, own=own, cap=cap) for c in selected]
    return SuiteReport(results, dropped)


@dataclass
class ScanRow:
    n: int
    gnc: bool
    branch: str
    prime_power: bool

    @property
    def consistent(self) -> bool:
        return self.gnc == self.prime_power


def scan_zn(max_n: int) -> list[ScanRow]:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        ring = build_zn(n)
        rows.append(ScanRow(n, K.holds(ring, "gnc"), K.semilocal_branch(ring), is_prime_power(n)))
    return rows


def parse_catalog(text: str) -> list[str]:
    """One expression per line; blank lines and ``#`` comments skipped."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(str(parse_ring_expr(line)))
    return out


__all__ = [
    "CHECKS", "CHECKS_BY_ID", "Check", "CheckResult", "Counterexample", "RingExpr", "ScanRow",
    "SuiteReport", "build_catalog", "default_catalog", "expr_size", "is_prime_power",
    "parse_catalog", "replay", "run_all", "run_check", "scan_zn",
]
