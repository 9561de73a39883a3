"""Finite unital rings on a dense index carrier, plus element-level classification.

Every ring has carrier ``0..size-1``.  Addition and multiplication are either
materialized ``size x size`` tables or vectorized callables that accept numpy
index arrays (broadcasting) and return index arrays.  All bulk scans below are
written against ``ring.add`` / ``ring.mul`` so both representations work.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator, Optional, Union

import numpy as np

from .errors import CapacityError, RingInputError, ValidationError

MATERIALIZE_BOUND = 4096
VALIDATE_BOUND = 512
DEFAULT_CAP = 2**20

# elements per vectorized block in bulk scans
_BLOCK = 1 << 21

Op = Union[np.ndarray, Callable[[np.ndarray, np.ndarray], np.ndarray]]


def _table_dtype(size: int):
    if size <= np.iinfo(np.int16).max:
        return np.int16
    return np.int32


def _materialize(fn: Callable, size: int) -> np.ndarray:
    table = np.empty((size, size), dtype=_table_dtype(size))
    cols = np.arange(size, dtype=np.int64)
    step = max(1, _BLOCK // max(size, 1))
    for start in range(0, size, step):
        rows = np.arange(start, min(size, start + step), dtype=np.int64)
        table[start:start + len(rows)] = fn(rows[:, None], cols[None, :])
    return table


class FiniteRing:
    """A finite ring with identity, carrier ``range(size)``.

    ``kind`` and ``parts`` record how the ring was built (the constructions
    module uses them for projections, bases and group data).  ``formatter``
    turns an index into a human readable element string.
    """

    def __init__(
        self,
        size: int,
        zero: int,
        one: int,
        add: Op,
        mul: Op,
        neg: Optional[Union[np.ndarray, Callable]] = None,
        label: str = "",
        *,
        kind: str = "table",
        parts: Optional[dict] = None,
        formatter: Optional[Callable[[int], str]] = None,
        modulus: Optional[int] = None,
        materialize_bound: int = MATERIALIZE_BOUND,
    ):
        if size < 1:
            raise RingInputError("ring size must be positive")
        if not (0 <= zero < size and 0 <= one < size):
            raise RingInputError("zero/one index out of range")
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.kind = kind
        self.parts = dict(parts or {})
        self.modulus = modulus
        self._formatter = formatter
        self._cache: dict = {}

        self._add_fn = None
        self._mul_fn = None
        self.add_table: Optional[np.ndarray] = None
        self.mul_table: Optional[np.ndarray] = None
        if isinstance(add, np.ndarray):
            self.add_table = add
        elif size <= materialize_bound:
            self.add_table = _materialize(add, size)
        else:
            self._add_fn = add
        if isinstance(mul, np.ndarray):
            self.mul_table = mul
        elif size <= materialize_bound:
            self.mul_table = _materialize(mul, size)
        else:
            self._mul_fn = mul

        if neg is None:
            if self.add_table is None:
                raise RingInputError("lazy rings must supply a negation")
            hits = self.add_table == self.zero
            if not hits.any(axis=1).all():
                raise ValidationError("additive inverse missing", axiom="additive inverse",
                                      witness=(int(np.argmin(hits.any(axis=1))),))
            neg = hits.argmax(axis=1)
        elif callable(neg):
            neg = neg(np.arange(size, dtype=np.int64))
        self.negation = np.asarray(neg, dtype=np.int64)

    # -- arithmetic ---------------------------------------------------------

    @property
    def is_materialized(self) -> bool:
        return self.add_table is not None and self.mul_table is not None

    def add(self, a, b):
        if self.add_table is not None:
            return self.add_table[a, b]
        return self._add_fn(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def mul(self, a, b):
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return self._mul_fn(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def neg(self, a):
        return self.negation[a]

    def sub(self, a, b):
        return self.add(a, self.negation[b])

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Return (add, mul) tables, materializing lazy operations on the fly."""
        add = self.add_table if self.add_table is not None else _materialize(self._add_fn, self.size)
        mul = self.mul_table if self.mul_table is not None else _materialize(self._mul_fn, self.size)
        return add, mul

    def blocks(self, xs: np.ndarray) -> Iterator[np.ndarray]:
        """Split ``xs`` so that ``len(block) * size`` stays within the scan budget."""
        step = max(1, _BLOCK // self.size)
        for start in range(0, len(xs), step):
            yield xs[start:start + step]

    def times_int(self, k: int, x: int = None) -> int:
        """``k`` copies of ``x`` (default ``one``) added together, by doubling."""
        x = self.one if x is None else x
        acc, base = self.zero, int(x)
        k = int(k)
        while k:
            if k & 1:
                acc = int(self.add(acc, base))
            base = int(self.add(base, base))
            k >>= 1
        return acc

    def format(self, x: int) -> str:
        if self._formatter is None:
            return str(int(x))
        return self._formatter(int(x))

    def check_index(self, x) -> int:
        if isinstance(x, (bool, np.bool_)) or not isinstance(x, (int, np.integer)):
            raise RingInputError(f"element index must be an integer, got {x!r}")
        if not 0 <= x < self.size:
            raise RingInputError(f"element index {x} out of range for {self.label or 'ring'} of size {self.size}")
        return int(x)

    def cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def __repr__(self) -> str:
        return f"FiniteRing({self.label or self.kind!r}, size={self.size})"


# -- element-level operations ------------------------------------------------


def power_all(ring: FiniteRing, xs: np.ndarray, k: int) -> np.ndarray:
    """Vectorized ``x**k`` for every entry of ``xs`` by repeated squaring."""
    xs = np.asarray(xs, dtype=np.int64)
    result = np.full(xs.shape, ring.one, dtype=np.int64)
    base = xs.copy()
    while k:
        if k & 1:
            result = np.asarray(ring.mul(result, base), dtype=np.int64)
        k >>= 1
        if k:
            base = np.asarray(ring.mul(base, base), dtype=np.int64)
    return result


def power(ring: FiniteRing, x: int, k: int) -> int:
    x = ring.check_index(x)
    if k < 0:
        raise RingInputError("exponent must be nonnegative")
    return int(power_all(ring, np.array([x]), int(k))[0])


def inverse_array(ring: FiniteRing) -> np.ndarray:
    """Two-sided inverse of every element, ``-1`` where none exists."""

    def compute():
        inv = np.full(ring.size, -1, dtype=np.int64)
        everything = ring.elements()
        for xs in ring.blocks(everything):
            hits = np.asarray(ring.mul(xs[:, None], everything[None, :])) == ring.one
            has = hits.any(axis=1)
            cand = hits.argmax(axis=1)
            left_ok = np.asarray(ring.mul(cand, xs)) == ring.one
            ok = has & left_ok
            inv[xs[ok]] = cand[ok]
        return inv

    return ring.cached("inverse", compute)


def unit_mask(ring: FiniteRing) -> np.ndarray:
    return ring.cached("unit_mask", lambda: inverse_array(ring) >= 0)


def idempotent_mask(ring: FiniteRing) -> np.ndarray:
    def compute():
        xs = ring.elements()
        return np.asarray(ring.mul(xs, xs)) == xs

    return ring.cached("idempotent_mask", compute)


def nilpotent_mask(ring: FiniteRing) -> np.ndarray:
    # the power sequence of x enters its cycle within |R| steps
    return ring.cached("nilpotent_mask",
                       lambda: power_all(ring, ring.elements(), ring.size) == ring.zero)


def nilpotency_indices(ring: FiniteRing) -> np.ndarray:
    """Least ``t >= 1`` with ``x**t == 0`` per element, 0 for non-nilpotents."""

    def compute():
        out = np.zeros(ring.size, dtype=np.int64)
        todo = np.flatnonzero(nilpotent_mask(ring))
        cur = todo.copy()
        t = 1
        while len(todo):
            hit = cur == ring.zero
            out[todo[hit]] = t
            todo, cur = todo[~hit], cur[~hit]
            cur = np.asarray(ring.mul(cur, todo), dtype=np.int64)
            t += 1
        return out

    return ring.cached("nilpotency_indices", compute)


def one_minus(ring: FiniteRing) -> np.ndarray:
    return ring.cached("one_minus", lambda: np.asarray(ring.sub(ring.one, ring.elements()), dtype=np.int64))


def jacobson_mask(ring: FiniteRing) -> np.ndarray:
    """J(R) = {x : 1 - y*x is a unit for every y}.

    Units never qualify in a nonzero ring (take y = x^-1), so only non-units
    are scanned.
    """

    def compute():
        units = unit_mask(ring)
        omx = one_minus(ring)
        mask = np.zeros(ring.size, dtype=bool)
        cand = ring.elements() if ring.size == 1 else np.flatnonzero(~units)
        everything = ring.elements()
        for xs in ring.blocks(cand):
            prods = np.asarray(ring.mul(everything[:, None], xs[None, :]))
            mask[xs] = units[omx[prods]].all(axis=0)
        return mask

    return ring.cached("jacobson_mask", compute)


def center_mask(ring: FiniteRing) -> np.ndarray:
    def compute():
        mask = np.zeros(ring.size, dtype=bool)
        everything = ring.elements()
        for xs in ring.blocks(everything):
            left = np.asarray(ring.mul(xs[:, None], everything[None, :]))
            right = np.asarray(ring.mul(everything[None, :], xs[:, None]))
            mask[xs] = (left == right).all(axis=1)
        return mask

    return ring.cached("center_mask", compute)


def is_central(ring: FiniteRing, x: int) -> bool:
    if "center_mask" in ring._cache:
        return bool(ring._cache["center_mask"][x])
    everything = ring.elements()
    return bool((np.asarray(ring.mul(x, everything)) == np.asarray(ring.mul(everything, x))).all())


def unit_check(ring: FiniteRing, x: int) -> Optional[int]:
    """Inverse of ``x`` if it is a unit, else ``None``."""
    x = ring.check_index(x)
    if "inverse" in ring._cache:
        y = int(ring._cache["inverse"][x])
        return None if y < 0 else y
    everything = ring.elements()
    right = np.asarray(ring.mul(x, everything)) == ring.one
    left = np.asarray(ring.mul(everything, x)) == ring.one
    both = np.flatnonzero(right & left)
    return int(both[0]) if len(both) else None


def nilpotency_index(ring: FiniteRing, x: int) -> Optional[int]:
    x = ring.check_index(x)
    if power(ring, x, ring.size) != ring.zero:
        return None
    cur, t = x, 1
    while cur != ring.zero:
        cur = int(ring.mul(cur, x))
        t += 1
    return t


@dataclass(frozen=True)
class ElementSets:
    units: frozenset
    idempotents: frozenset
    nilpotents: frozenset
    jacobson: frozenset
    center: frozenset


def _as_set(mask: np.ndarray) -> frozenset:
    return frozenset(int(i) for i in np.flatnonzero(mask))


def element_sets(ring: FiniteRing) -> ElementSets:
    return ring.cached("element_sets", lambda: ElementSets(
        units=_as_set(unit_mask(ring)),
        idempotents=_as_set(idempotent_mask(ring)),
        nilpotents=_as_set(nilpotent_mask(ring)),
        jacobson=_as_set(jacobson_mask(ring)),
        center=_as_set(center_mask(ring)),
    ))


@dataclass(frozen=True)
class ElementProfile:
    element: int
    is_unit: bool
    inverse: Optional[int]
    is_idempotent: bool
    nilpotency_index: Optional[int]
    in_jacobson: bool
    is_central: bool

    def to_dict(self) -> dict:
        return {
            "element": self.element,
            "is_unit": self.is_unit,
            "inverse": self.inverse,
            "is_idempotent": self.is_idempotent,
            "nilpotency_index": self.nilpotency_index,
            "in_jacobson": self.in_jacobson,
            "is_central": self.is_central,
        }


def profile(ring: FiniteRing, x: int) -> ElementProfile:
    x = ring.check_index(x)
    inv = unit_check(ring, x)
    return ElementProfile(
        element=x,
        is_unit=inv is not None,
        inverse=inv,
        is_idempotent=int(ring.mul(x, x)) == x,
        nilpotency_index=nilpotency_index(ring, x),
        in_jacobson=bool(jacobson_mask(ring)[x]),
        is_central=is_central(ring, x),
    )


# -- ideals and quotients ----------------------------------------------------


def is_two_sided_ideal(ring: FiniteRing, mask: np.ndarray) -> bool:
    members = np.flatnonzero(mask)
    if not mask[ring.zero]:
        return False
    if not mask[np.asarray(ring.sub(members[:, None], members[None, :]))].all():
        return False
    everything = ring.elements()
    for xs in ring.blocks(members):
        if not mask[np.asarray(ring.mul(everything[:, None], xs[None, :]))].all():
            return False
        if not mask[np.asarray(ring.mul(xs[:, None], everything[None, :]))].all():
            return False
    return True


@dataclass
class Quotient:
    ring: FiniteRing
    reps: np.ndarray         # quotient index -> least representative in the parent
    projection: np.ndarray   # parent index -> quotient index


def quotient(ring: FiniteRing, ideal: np.ndarray, label: Optional[str] = None, *,
             check: bool = False) -> Quotient:
    """R/I with cosets represented by their least element index.

    ``ideal`` is a boolean mask of a two-sided ideal, verified only when ``check``.
    """
    if check and not is_two_sided_ideal(ring, ideal):
        raise RingInputError("the mask is not a two-sided ideal")
    members = np.flatnonzero(ideal)
    everything = ring.elements()
    rep_of = everything.copy()
    for js in ring.blocks(members):
        shifted = np.asarray(ring.add(everything[:, None], js[None, :]))
        rep_of = np.minimum(rep_of, shifted.min(axis=1))
    reps = np.unique(rep_of)
    proj = np.searchsorted(reps, rep_of)
    add = proj[np.asarray(ring.add(reps[:, None], reps[None, :]))]
    mul = proj[np.asarray(ring.mul(reps[:, None], reps[None, :]))]
    dtype = _table_dtype(len(reps))
    q = FiniteRing(
        len(reps), int(proj[ring.zero]), int(proj[ring.one]),
        add.astype(dtype), mul.astype(dtype),
        label=label or f"{ring.label}/I",
        kind="quotient",
        parts={"parent": ring},
        formatter=lambda i: f"[{ring.format(int(reps[i]))}]",
    )
    return Quotient(q, reps, proj)


def tables_match(a: FiniteRing, b: FiniteRing, bijection: Optional[np.ndarray] = None) -> bool:
    """True iff ``bijection`` (a -> b indices; identity if omitted) is a ring isomorphism."""
    if a.size != b.size:
        return False
    phi = np.arange(a.size) if bijection is None else np.asarray(bijection, dtype=np.int64)
    if len(np.unique(phi)) != a.size or phi.min() < 0 or phi.max() >= b.size:
        return False
    if phi[a.zero] != b.zero or phi[a.one] != b.one:
        return False
    xs = a.elements()
    for blk in a.blocks(xs):
        if not (phi[np.asarray(a.add(blk[:, None], xs[None, :]))]
                == np.asarray(b.add(phi[blk][:, None], phi[None, :]))).all():
            return False
        if not (phi[np.asarray(a.mul(blk[:, None], xs[None, :]))]
                == np.asarray(b.mul(phi[blk][:, None], phi[None, :]))).all():
            return False
    return True


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    valid: bool
    mode: str                          # exhaustive | sampled | complete
    checks: int = 0
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"valid": self.valid, "mode": self.mode, "checks": self.checks,
                "axiom": self.axiom, "witness": list(self.witness) if self.witness else None}


class _Violation(Exception):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)


def _first(bad: np.ndarray, *coords) -> tuple:
    idx = np.unravel_index(int(np.argmax(bad)), bad.shape)
    return tuple(np.broadcast_to(c, bad.shape)[idx] for c in coords)


def _require(ok, axiom, *coords):
    ok = np.asarray(ok)
    if not ok.all():
        raise _Violation(axiom, _first(~ok, *coords))


def _check_unary(ring, add, mul, xs):
    n = ring.size
    _require((ring.negation >= 0) & (ring.negation < n), "negation range", xs)
    if ring.zero == ring.one and n > 1:
        raise _Violation("zero differs from one", (ring.zero,))
    _require(add(ring.zero, xs) == xs, "additive identity", xs)
    _require(add(xs, ring.zero) == xs, "additive identity", xs)
    _require(add(xs, ring.negation[xs]) == ring.zero, "additive inverse", xs)
    _require(mul(ring.one, xs) == xs, "multiplicative identity", xs)
    _require(mul(xs, ring.one) == xs, "multiplicative identity", xs)


def _check_triples(add, mul, a, b, c):
    _require(add(a, b) == add(b, a), "additive commutativity", a, b)
    _require(add(add(a, b), c) == add(a, add(b, c)), "additive associativity", a, b, c)
    _require(mul(mul(a, b), c) == mul(a, mul(b, c)), "multiplicative associativity", a, b, c)
    _require(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "left distributivity", a, b, c)
    _require(mul(add(a, b), c) == add(mul(a, c), mul(b, c)), "right distributivity", a, b, c)


def additive_generators(ring: FiniteRing, add=None) -> list[int]:
    """Greedy generating set; every element is a left-nested sum of these."""
    add = add or ring.add
    reached = np.zeros(ring.size, dtype=bool)
    reached[ring.zero] = True
    gens: list[int] = []
    while not reached.all():
        g = int(np.argmin(reached))
        gens.append(g)
        frontier = np.flatnonzero(reached)
        while len(frontier):
            nxt = np.concatenate([np.asarray(add(frontier, h)).ravel() for h in gens])
            nxt = np.unique(nxt[~reached[nxt]])
            reached[nxt] = True
            frontier = nxt
    return gens


def _tables_or_ops(ring: FiniteRing):
    if ring.is_materialized:
        at, mt = ring.add_table, ring.mul_table
    elif ring.size <= 8192:
        at, mt = ring.tables()
    else:
        return ring.add, ring.mul
    return (lambda a, b: at[a, b]), (lambda a, b: mt[a, b])


def validate(ring: FiniteRing, bound: int = VALIDATE_BOUND, *, seed: int = 0,
             method: str = "auto") -> ValidationReport:
    """Check the ring axioms.

    ``auto`` scans every triple when ``size <= bound`` and otherwise a seeded
    sample of ``10*size`` triples.  ``complete`` is an exact check that only
    needs pairs times additive generators: associativity of ``+`` and
    biadditivity of ``*`` propagate from generators, and once ``*`` is biadditive
    associativity is trilinear.
    """
    if method not in ("auto", "exhaustive", "sampled", "complete"):
        raise RingInputError(f"unknown validation method {method!r}")
    if method == "auto":
        method = "exhaustive" if ring.size <= bound else "sampled"
    n = ring.size
    xs = ring.elements()
    checks = 0
    try:
        add, mul = (_tables_or_ops(ring) if method != "sampled" else (ring.add, ring.mul))
        for op in (add, mul):
            vals = np.asarray(op(xs[:1, None], xs[None, :]))
            _require((vals >= 0) & (vals < n), "closure", xs[:1, None], xs[None, :])
        _check_unary(ring, add, mul, xs)
        if method == "exhaustive":
            step = max(1, _BLOCK // (n * n))
            for start in range(0, n, step):
                a = xs[start:start + step, None, None]
                _check_triples(add, mul, a, xs[None, :, None], xs[None, None, :])
                checks += len(a.ravel()) * n * n
        elif method == "sampled":
            rng = np.random.default_rng(seed)
            count = max(10 * n, 1000)
            a, b, c = (rng.integers(0, n, size=count) for _ in range(3))
            _check_triples(add, mul, a, b, c)
            checks = count
        else:
            checks = _complete_check(ring, add, mul, xs)
    except _Violation as v:
        return ValidationReport(False, method, checks, v.axiom, v.witness)
    return ValidationReport(True, method, checks)


def _complete_check(ring, add, mul, xs) -> int:
    n = ring.size
    gens = additive_generators(ring, add)
    checks = 0
    for blk in ring.blocks(xs):
        a, b = blk[:, None], xs[None, :]
        _require(add(a, b) == add(b, a), "additive commutativity", a, b)
        _require(mul(a, ring.zero) == ring.zero, "zero absorbs", a)
        _require(mul(ring.zero, a) == ring.zero, "zero absorbs", a)
        for g in gens:
            _require(add(add(a, b), g) == add(a, add(b, g)), "additive associativity", a, b, g)
            _require(mul(a, add(b, g)) == add(mul(a, b), mul(a, g)), "left distributivity", a, b, g)
            _require(mul(add(b, g), a) == add(mul(b, a), mul(g, a)), "right distributivity", b, g, a)
        checks += len(blk) * n * (1 + 3 * len(gens))
    g = np.array(gens, dtype=np.int64)
    if len(g):
        a, b, c = g[:, None, None], g[None, :, None], g[None, None, :]
        _require(mul(mul(a, b), c) == mul(a, mul(b, c)), "multiplicative associativity", a, b, c)
        checks += len(g) ** 3
    return checks


def require_valid(ring: FiniteRing, bound: int = VALIDATE_BOUND, *, seed: int = 0) -> ValidationReport:
    report = validate(ring, bound, seed=seed)
    if not report.valid:
        raise ValidationError(f"{ring.label or 'ring'} violates {report.axiom}",
                              axiom=report.axiom, witness=report.witness)
    return report


# -- Cayley-table persistence ------------------------------------------------


def to_cayley(ring: FiniteRing) -> dict:
    """Tables as nested lists; ``elements`` (display names) only for structured rings."""
    add, mul = ring.tables()
    out = {
        "label": ring.label,
        "size": ring.size,
        "zero": ring.zero,
        "one": ring.one,
        "add": add.tolist(),
        "mul": mul.tolist(),
    }
    if ring._formatter is not None:
        out["elements"] = [ring.format(i) for i in range(ring.size)]
    return out


def from_cayley(data: dict, *, cap: int = DEFAULT_CAP) -> FiniteRing:
    try:
        size = int(data["size"])
        add = np.asarray(data["add"], dtype=np.int64)
        mul = np.asarray(data["mul"], dtype=np.int64)
        zero, one = int(data["zero"]), int(data["one"])
        names = [str(x) for x in data["elements"]] if "elements" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise RingInputError(f"malformed Cayley table: {exc}") from exc
    if names is not None and len(names) != size:
        raise RingInputError(f"elements must list {size} names")
    if size > cap:
        raise CapacityError(size, cap)
    if add.shape != (size, size) or mul.shape != (size, size):
        raise RingInputError(f"Cayley tables must be {size}x{size}")
    if add.min() < 0 or add.max() >= size or mul.min() < 0 or mul.max() >= size:
        raise ValidationError("table entry out of range", axiom="closure")
    dtype = _table_dtype(size)
    return FiniteRing(size, zero, one, add.astype(dtype), mul.astype(dtype),
                      label=str(data.get("label", "")), kind="cayley",
                      formatter=names.__getitem__ if names else None)


def save(ring: FiniteRing, path) -> None:
    Path(path).write_text(json.dumps(to_cayley(ring), separators=(",", ":")) + "\n")


def load(path, *, cap: int = DEFAULT_CAP) -> FiniteRing:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise RingInputError(f"cannot read Cayley JSON {path}: {exc}") from exc
    return from_cayley(data, cap=cap)
