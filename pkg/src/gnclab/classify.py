"""Clean / nil-clean decompositions and ring-level predicates with certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import RingInputError
from .ring import (
    FiniteRing,
    center_mask,
    idempotent_mask,
    jacobson_mask,
    nilpotent_mask,
    quotient,
    tables_match,
    unit_mask,
)

KINDS = ("clean", "nil_clean", "strongly_nil_clean")

PROPERTIES = (
    "gnc", "nil_clean", "clean", "strongly_nil_clean", "uu", "nr", "ni", "local",
    "abelian", "boolean", "reduced", "division", "field", "two_primal_finite",
)

BRANCHES = ("local_nil_J", "nil_clean", "quotient_is_matrix_over_Z2", "none")


@dataclass(frozen=True)
class Decomposition:
    element: int
    kind: str
    idempotent_part: int
    other_part: int
    commuting: bool

    def to_dict(self, ring: FiniteRing) -> dict:
        return {
            "element": _elem(ring, self.element),
            "kind": self.kind,
            "idempotent_part": _elem(ring, self.idempotent_part),
            "other_part": _elem(ring, self.other_part),
            "commuting": self.commuting,
        }


@dataclass
class Certificate:
    """Evidence for a verdict.

    ``kind`` is ``witness_element``, ``failing_element`` or ``subset_listing``.
    ``elements`` are carrier indices; ``rows`` list, for a refuted
    decomposition, every idempotent with the reason it fails.
    """

    kind: str
    elements: list = field(default_factory=list)
    note: str = ""
    rows: list = field(default_factory=list)

    def to_dict(self, ring: FiniteRing) -> dict:
        out = {"kind": self.kind, "elements": [_elem(ring, e) for e in self.elements]}
        if self.note:
            out["note"] = self.note
        if self.rows:
            out["rows"] = [{"idempotent": _elem(ring, e), "difference": _elem(ring, d), "reason": why}
                           for e, d, why in self.rows]
        return out


@dataclass
class Verdict:
    holds: bool
    witness: Optional[Certificate] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, ring: FiniteRing) -> dict:
        return {"holds": self.holds,
                "witness": None if self.witness is None else self.witness.to_dict(ring)}


@dataclass
class RingProfile:
    label: str
    size: int
    verdicts: dict

    def __getitem__(self, prop: str) -> Verdict:
        return self.verdicts[prop]

    def to_dict(self, ring: FiniteRing) -> dict:
        return {"label": self.label, "size": self.size,
                "verdicts": {k: v.to_dict(ring) for k, v in self.verdicts.items()}}


def _elem(ring: FiniteRing, x: int) -> dict:
    return {"index": int(x), "value": ring.format(int(x))}


# -- decompositions -------------------------------------------------------------


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise RingInputError(f"unknown decomposition kind {kind!r}; expected one of {', '.join(KINDS)}")


def witness_array(ring: FiniteRing, kind: str) -> np.ndarray:
    """Least idempotent decomposing each element under ``kind``, -1 if none."""
    _check_kind(kind)

    def compute():
        target = unit_mask(ring) if kind == "clean" else nilpotent_mask(ring)
        found = np.full(ring.size, -1, dtype=np.int64)
        remaining = ring.elements()
        for e in np.flatnonzero(idempotent_mask(ring)):
            if not len(remaining):
                break
            diff = np.asarray(ring.sub(remaining, e), dtype=np.int64)
            ok = target[diff]
            if kind == "strongly_nil_clean":
                ok &= np.asarray(ring.mul(e, diff)) == np.asarray(ring.mul(diff, e))
            found[remaining[ok]] = e
            remaining = remaining[~ok]
        return found

    return ring.cached(("witness", kind), compute)


def refutation(ring: FiniteRing, x: int, kind: str) -> Certificate:
    """One row per idempotent explaining why ``x - e`` does not qualify."""
    rows = []
    units, nil = unit_mask(ring), nilpotent_mask(ring)
    for e in np.flatnonzero(idempotent_mask(ring)):
        d = int(ring.sub(x, e))
        if kind == "clean":
            why = "difference is not a unit" if not units[d] else "ok"
        elif not nil[d]:
            why = "difference is not nilpotent"
        elif kind == "strongly_nil_clean" and int(ring.mul(e, d)) != int(ring.mul(d, e)):
            why = "idempotent and nilpotent do not commute"
        else:
            why = "ok"
        rows.append((int(e), d, why))
    return Certificate("failing_element", [int(x)], f"no {kind} decomposition", rows)


def decompose(ring: FiniteRing, x: int, kind: str) -> Union[Decomposition, Certificate]:
    _check_kind(kind)
    x = ring.check_index(x)
    e = int(witness_array(ring, kind)[x])
    if e < 0:
        return refutation(ring, x, kind)
    q = int(ring.sub(x, e))
    return Decomposition(x, kind, e, q, int(ring.mul(e, q)) == int(ring.mul(q, e)))


def nil_clean_set(ring: FiniteRing) -> frozenset:
    return frozenset(int(i) for i in np.flatnonzero(witness_array(ring, "nil_clean") >= 0))


def negated_clean(ring: FiniteRing, d: Decomposition) -> Decomposition:
    """From x = e + q nil-clean, the clean form -x = (1 - e) + (-(1 + q))."""
    e2 = int(ring.sub(ring.one, d.idempotent_part))
    u = int(ring.neg(ring.add(ring.one, d.other_part)))
    neg_x = int(ring.neg(d.element))
    return Decomposition(neg_x, "clean", e2, u, int(ring.mul(e2, u)) == int(ring.mul(u, e2)))


# -- ring predicates ------------------------------------------------------------


def _all_decompose(ring: FiniteRing, kind: str, among: np.ndarray) -> Verdict:
    bad = among[witness_array(ring, kind)[among] < 0]
    if len(bad):
        return Verdict(False, refutation(ring, int(bad[0]), kind))
    return Verdict(True)


def _first_pair(bad: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> list:
    i, j = np.unravel_index(int(np.argmax(bad)), bad.shape)
    return [int(rows[i]), int(cols[j])]


def _closed(ring: FiniteRing, mask: np.ndarray, ops, note: str) -> Verdict:
    """Is the set ``mask`` closed under each binary op in ``ops`` (pairs from members)?"""
    members = np.flatnonzero(mask)
    for op, what in ops:
        for blk in ring.blocks(members):
            vals = np.asarray(op(blk[:, None], members[None, :]))
            bad = ~mask[vals]
            if bad.any():
                return Verdict(False, Certificate("failing_element", _first_pair(bad, blk, members),
                                                  f"{note}: {what} leaves the set"))
    return Verdict(True)


def _gnc(ring):
    return _all_decompose(ring, "nil_clean", np.flatnonzero(~unit_mask(ring)))


def _uu(ring):
    units = np.flatnonzero(unit_mask(ring))
    bad = units[~nilpotent_mask(ring)[np.asarray(ring.sub(units, ring.one), dtype=np.int64)]]
    if len(bad):
        return Verdict(False, Certificate("failing_element", [int(bad[0])], "unit not of the form 1 + nilpotent"))
    return Verdict(True)


def _nr(ring):
    return _closed(ring, nilpotent_mask(ring), [(ring.sub, "difference"), (ring.mul, "product")], "Nil(R)")


def _ni(ring):
    v = _nr(ring)
    if not v:
        return v
    nil = nilpotent_mask(ring)
    members = np.flatnonzero(nil)
    everything = ring.elements()
    for blk in ring.blocks(members):
        for vals, side in ((ring.mul(everything[:, None], blk[None, :]), "left"),
                           (ring.mul(blk[None, :], everything[:, None]), "right")):
            bad = ~nil[np.asarray(vals)]
            if bad.any():
                r, q = _first_pair(bad, everything, blk)
                return Verdict(False, Certificate("failing_element", [r, q], f"Nil(R) does not absorb {side} products"))
    return Verdict(True)


def _local(ring):
    if ring.size == 1:
        return Verdict(False, Certificate("subset_listing", [], "the zero ring is not local"))
    return _closed(ring, ~unit_mask(ring), [(ring.add, "sum")], "non-units")


def _abelian(ring):
    everything = ring.elements()
    for e in np.flatnonzero(idempotent_mask(ring)):
        bad = np.asarray(ring.mul(e, everything)) != np.asarray(ring.mul(everything, e))
        if bad.any():
            return Verdict(False, Certificate("failing_element", [int(e), int(np.argmax(bad))],
                                              "idempotent does not commute"))
    return Verdict(True)


def _boolean(ring):
    bad = np.flatnonzero(~idempotent_mask(ring))
    if len(bad):
        return Verdict(False, Certificate("failing_element", [int(bad[0])], "x*x != x"))
    return Verdict(True)


def _reduced(ring):
    nil = nilpotent_mask(ring).copy()
    nil[ring.zero] = False
    if nil.any():
        return Verdict(False, Certificate("failing_element", [int(np.argmax(nil))], "nonzero nilpotent"))
    return Verdict(True)


def _division(ring):
    if ring.size == 1:
        return Verdict(False, Certificate("subset_listing", [], "the zero ring is not a division ring"))
    bad = ~unit_mask(ring)
    bad[ring.zero] = False
    if bad.any():
        return Verdict(False, Certificate("failing_element", [int(np.argmax(bad))], "nonzero non-unit"))
    return Verdict(True)


def _commutative(ring):
    everything = ring.elements()
    for blk in ring.blocks(everything):
        bad = np.asarray(ring.mul(blk[:, None], everything[None, :])) != np.asarray(
            ring.mul(everything[None, :], blk[:, None]))
        if bad.any():
            return Verdict(False, Certificate("failing_element", _first_pair(bad, blk, everything),
                                              "elements do not commute"))
    return Verdict(True)


def _field(ring):
    v = _division(ring)
    return v if not v else _commutative(ring)


def _two_primal(ring):
    diff = nilpotent_mask(ring) ^ jacobson_mask(ring)
    if diff.any():
        return Verdict(False, Certificate("failing_element", [int(np.argmax(diff))], "Nil(R) != J(R)"))
    return Verdict(True)


_DECIDERS = {
    "gnc": _gnc,
    "nil_clean": lambda r: _all_decompose(r, "nil_clean", r.elements()),
    "clean": lambda r: _all_decompose(r, "clean", r.elements()),
    "strongly_nil_clean": lambda r: _all_decompose(r, "strongly_nil_clean", r.elements()),
    "uu": _uu,
    "nr": _nr,
    "ni": _ni,
    "local": _local,
    "abelian": _abelian,
    "boolean": _boolean,
    "reduced": _reduced,
    "division": _division,
    "field": _field,
    "commutative": _commutative,
    "two_primal_finite": _two_primal,
}


def ring_predicate(ring: FiniteRing, prop: str) -> Verdict:
    if prop not in _DECIDERS:
        raise RingInputError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")
    return ring.cached(("pred", prop), lambda: _DECIDERS[prop](ring))


def is_gnc(ring: FiniteRing) -> Verdict:
    return ring_predicate(ring, "gnc")


def holds(ring: FiniteRing, prop: str) -> bool:
    return ring_predicate(ring, prop).holds


def j_is_nil(ring: FiniteRing) -> bool:
    return bool(nilpotent_mask(ring)[jacobson_mask(ring)].all())


def local_nil_j(ring: FiniteRing) -> bool:
    return holds(ring, "local") and j_is_nil(ring)


def only_trivial_idempotents(ring: FiniteRing) -> bool:
    ids = set(np.flatnonzero(idempotent_mask(ring)).tolist())
    return ring.size > 1 and ids == {ring.zero, ring.one}


def ring_profile(ring: FiniteRing, props=PROPERTIES) -> RingProfile:
    return RingProfile(ring.label, ring.size, {p: ring_predicate(ring, p) for p in props})


def central_elements(ring: FiniteRing) -> np.ndarray:
    return np.flatnonzero(center_mask(ring))


# -- semilocal trichotomy -------------------------------------------------------


def _matrix_size_for(q_size: int) -> Optional[int]:
    bits = q_size.bit_length() - 1
    if q_size != 1 << bits:
        return None
    n = int(round(bits ** 0.5))
    return n if n >= 1 and n * n == bits else None


def matrix_z2_isomorphism(q: FiniteRing) -> Optional[np.ndarray]:
    """An isomorphism M_n(Z2) -> q as an index map, or None.

    Backtracks over systems of matrix units: orthogonal idempotents e_ii with
    two-element corners summing to 1, then e_1j, e_j1 with e_1j e_j1 = e_11 and
    e_j1 e_1j = e_jj.  Candidate maps are verified on full tables.
    """
    from .constructions import build_matrix, build_zn

    n = _matrix_size_for(q.size)
    if n is None or int(q.add(q.one, q.one)) != q.zero:
        return None
    target = build_matrix(build_zn(2), n)
    everything = q.elements()

    def corner(e, f):
        return np.unique(np.asarray(q.mul(q.mul(e, everything), f)))

    ids = [int(e) for e in np.flatnonzero(idempotent_mask(q)) if e != q.zero]
    prim = [e for e in ids if len(corner(e, e)) == 2]

    def diagonals(chosen, acc):
        if len(chosen) == n:
            if acc == q.one:
                yield list(chosen)
            return
        for e in prim:
            if e in chosen:
                continue
            if all(int(q.mul(e, f)) == q.zero and int(q.mul(f, e)) == q.zero for f in chosen):
                yield from diagonals(chosen + [e], int(q.add(acc, e)))

    def off_diagonals(diag, j, rows, cols):
        if j == n:
            yield rows, cols
            return
        e1, ej = diag[0], diag[j]
        for a in corner(e1, ej):
            if a == q.zero:
                continue
            for b in corner(ej, e1):
                if int(q.mul(a, b)) == e1 and int(q.mul(b, a)) == ej:
                    yield from off_diagonals(diag, j + 1, rows + [int(a)], cols + [int(b)])

    bits = target.parts["coords"].decode(target.elements())
    for diag in diagonals([], q.zero):
        for rows, cols in off_diagonals(diag, 1, [], []):
            e1j = [diag[0]] + rows          # e_{1j}
            ej1 = [diag[0]] + cols          # e_{j1}
            units = [[int(q.mul(ej1[i], e1j[j])) for j in range(n)] for i in range(n)]
            phi = np.full(target.size, q.zero, dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    hit = bits[i * n + j] == 1
                    phi[hit] = np.asarray(q.add(phi[hit], units[i][j]))
            if tables_match(target, q, phi):
                return phi
    return None


def semilocal_branch(ring: FiniteRing) -> str:
    """First holding branch in the order local_nil_J, nil_clean, quotient_is_matrix_over_Z2."""

    def compute():
        if local_nil_j(ring):
            return "local_nil_J"
        if holds(ring, "nil_clean"):
            return "nil_clean"
        if j_is_nil(ring):
            if matrix_z2_isomorphism(jacobson_quotient(ring)) is not None:
                return "quotient_is_matrix_over_Z2"
        return "none"

    return ring.cached("semilocal_branch", compute)


def jacobson_quotient(ring: FiniteRing) -> FiniteRing:
    return ring.cached("jacobson_quotient",
                       lambda: quotient(ring, jacobson_mask(ring), label=f"{ring.label}/J").ring)
