"""Ring families and finite groups.

Structured rings (products, matrices, truncated polynomial rings, group rings,
...) store their elements as tuples of component indices.  A tuple is packed
into one carrier index by mixed radix; the first coordinate is the least
significant digit, except for direct products which use lexicographic order
(first factor most significant).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from importlib import resources
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import CapacityError, RingInputError, ValidationError
from .ring import DEFAULT_CAP, FiniteRing, from_cayley, is_central

SHAPES = ("full", "upper", "upper_const_diag")


class Coords:
    """Mixed-radix packing of coordinate tuples into carrier indices."""

    def __init__(self, radices: Sequence[int], big_endian: bool = False):
        self.radices = [int(r) for r in radices]
        order = range(len(self.radices) - 1, -1, -1) if big_endian else range(len(self.radices))
        self.weights = [0] * len(self.radices)
        w = 1
        for i in order:
            self.weights[i] = w
            w *= self.radices[i]
        self.size = w

    def decode(self, idx) -> list:
        idx = np.asarray(idx, dtype=np.int64)
        return [(idx // w) % r for w, r in zip(self.weights, self.radices)]

    def encode(self, digits) -> np.ndarray:
        out = 0
        for d, w in zip(digits, self.weights):
            out = out + np.asarray(d, dtype=np.int64) * w
        return np.asarray(out, dtype=np.int64)


def _check_cap(size: int, cap: int) -> None:
    if size > cap:
        raise CapacityError(size, cap)


def _total(base, terms):
    return reduce(base.add, terms)


def _structured(label: str, kind: str, comps: list, mul_digits: Callable,
                one_digits: list, cap: int, formatter=None, parts=None,
                big_endian: bool = False) -> FiniteRing:
    """Assemble a ring whose additive group is the product of ``comps``.

    ``comps`` are rings or bimodules (anything with size, add, negation, zero);
    ``mul_digits`` maps two coordinate lists to the product's coordinate list.
    """
    coords = Coords([c.size for c in comps], big_endian=big_endian)
    _check_cap(coords.size, cap)

    def add(a, b):
        da, db = coords.decode(a), coords.decode(b)
        return coords.encode([c.add(x, y) for c, x, y in zip(comps, da, db)])

    def mul(a, b):
        return coords.encode(mul_digits(coords.decode(a), coords.decode(b)))

    def neg(a):
        return coords.encode([c.negation[d] for c, d in zip(comps, coords.decode(a))])

    zero = int(coords.encode([c.zero for c in comps]))
    one = int(coords.encode(one_digits))
    parts = dict(parts or {})
    parts["coords"] = coords
    fmt = None
    if formatter is not None:
        fmt = lambda i: formatter([int(d) for d in coords.decode(i)])  # noqa: E731
    return FiniteRing(coords.size, zero, one, add, mul, neg, label,
                      kind=kind, parts=parts, formatter=fmt)


def _wrap(text: str) -> str:
    return text if text.lstrip("-").isalnum() else f"({text})"


def _poly_format(base: FiniteRing, terms: list) -> str:
    """Render ``[(coefficient index, monomial string), ...]`` as a sum."""
    out = []
    for coef, mono in terms:
        if coef == base.zero:
            continue
        if not mono:
            out.append(base.format(coef))
        elif coef == base.one:
            out.append(mono)
        else:
            out.append(_wrap(base.format(coef)) + mono)
    return "+".join(out) if out else base.format(base.zero)


def _matrix_format(base: FiniteRing, rows: list) -> str:
    return "[" + ",".join("[" + ",".join(base.format(e) for e in row) + "]" for row in rows) + "]"


# -- Z_n and products ---------------------------------------------------------


def build_zn(n: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise RingInputError(f"Zn needs a positive modulus, got {n!r}")
    n = int(n)
    _check_cap(n, cap)
    return FiniteRing(
        n, 0, 1 % n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        f"Zn({n})", kind="zn", parts={"n": n}, modulus=n,
    )


def build_product(factors: Sequence[FiniteRing], cap: int = DEFAULT_CAP) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise RingInputError("Prod needs at least one factor")

    def mul_digits(a, b):
        return [f.mul(x, y) for f, x, y in zip(factors, a, b)]

    def fmt(d):
        return "(" + ",".join(f.format(x) for f, x in zip(factors, d)) + ")"

    return _structured(
        "Prod(" + ",".join(f.label for f in factors) + ")", "product", factors, mul_digits,
        [f.one for f in factors], cap, fmt, {"factors": factors}, big_endian=True)


# -- matrix rings -------------------------------------------------------------


def _matrix_positions(n: int, shape: str) -> list:
    if shape == "full":
        return [(i, j) for i in range(n) for j in range(n)]
    if shape == "upper":
        return [(i, j) for i in range(n) for j in range(i, n)]
    # constant diagonal: one shared diagonal digit, then the strict upper part
    return [(0, 0)] + [(i, j) for i in range(n) for j in range(i + 1, n)]


def _entry_getter(n: int, shape: str):
    pos = _matrix_positions(n, shape)
    where = {p: k for k, p in enumerate(pos)}
    if shape == "upper_const_diag":
        for i in range(n):
            where[(i, i)] = 0
    return pos, where


def build_matrix(base: FiniteRing, n: int, shape: str = "full", cap: int = DEFAULT_CAP) -> FiniteRing:
    if shape not in SHAPES:
        raise RingInputError(f"unknown matrix shape {shape!r}")
    if n < 1:
        raise RingInputError("matrix size must be at least 1")
    pos, where = _entry_getter(n, shape)
    _check_cap(base.size ** len(pos), cap)

    def mul_digits(a, b):
        out = []
        for i, j in pos:
            terms = [base.mul(a[where[i, k]], b[where[k, j]])
                     for k in range(n) if (i, k) in where and (k, j) in where]
            out.append(_total(base, terms))
        return out

    one_digits = [base.one if i == j else base.zero for i, j in pos]

    def rows(d):
        return [[d[where[i, j]] if (i, j) in where else base.zero for j in range(n)] for i in range(n)]

    tag = {"full": "M", "upper": "T", "upper_const_diag": "S"}[shape]
    return _structured(
        f"{tag}({n},{base.label})", "matrix", [base] * len(pos), mul_digits, one_digits, cap,
        lambda d: _matrix_format(base, rows(d)),
        {"base": base, "n": n, "shape": shape,
         "to_base": (lambda idx: Coords([base.size] * len(pos)).decode(idx)[0])
         if shape == "upper_const_diag" else None})


# -- bimodules, trivial extensions, formal triangular rings -----------------------


@dataclass
class BimoduleTable:
    """An (R,S)-bimodule M given by tables on indices.

    ``left[r, m]`` is ``r*m`` and ``right[m, s]`` is ``m*s``.
    """

    size: int
    add_table: np.ndarray
    left: np.ndarray
    right: np.ndarray
    zero: int = 0
    label: str = "M"
    negation: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        self.add_table = np.asarray(self.add_table, dtype=np.int64)
        self.left = np.asarray(self.left, dtype=np.int64)
        self.right = np.asarray(self.right, dtype=np.int64)
        if self.negation is None:
            hits = self.add_table == self.zero
            if not hits.any(axis=1).all():
                raise ValidationError("bimodule lacks additive inverses", axiom="module inverse")
            self.negation = hits.argmax(axis=1)

    def add(self, a, b):
        return self.add_table[a, b]


def regular_bimodule(r: FiniteRing) -> BimoduleTable:
    add, mul = r.tables()
    return BimoduleTable(r.size, add, mul, mul, r.zero, "regular", r.negation)


def zero_bimodule(r: FiniteRing, s: FiniteRing) -> BimoduleTable:
    return BimoduleTable(1, np.zeros((1, 1)), np.zeros((r.size, 1)), np.zeros((1, s.size)), 0, "zero")


def reduction_bimodule(r: FiniteRing, s: FiniteRing) -> BimoduleTable:
    """M = S with R = Zn acting on the left through k -> k*1_S."""
    if r.kind != "zn":
        raise RingInputError("the reduce module needs a Zn ring on the left")
    if s.times_int(r.size) != s.zero:
        raise RingInputError(f"{r.label} does not act on {s.label}: {r.size}*1 is nonzero there")
    add, mul = s.tables()
    images = np.array([s.times_int(k) for k in range(r.size)], dtype=np.int64)
    left = mul[images[:, None], np.arange(s.size)[None, :]]
    return BimoduleTable(s.size, add, left, mul, s.zero, "reduce", s.negation)


def validate_bimodule(m: BimoduleTable, r: FiniteRing, s: FiniteRing) -> None:
    """Exhaustive bimodule axioms; raises ValidationError on the first failure."""
    xs = np.arange(m.size)
    a, b = xs[:, None], xs[None, :]

    def need(ok, axiom):
        if not np.all(ok):
            raise ValidationError(f"bimodule {m.label} violates {axiom}", axiom=axiom)

    if m.left.shape != (r.size, m.size) or m.right.shape != (m.size, s.size):
        raise ValidationError("bimodule action tables have the wrong shape", axiom="shape")
    need(m.add_table[a, b] == m.add_table[b, a], "additive commutativity")
    need(m.add_table[m.add_table[a, b][:, :, None], xs[None, None, :]]
         == m.add_table[a[:, :, None], m.add_table[b[:, :, None], xs[None, None, :]]],
         "additive associativity")
    need(m.add_table[m.zero, xs] == xs, "additive identity")
    rs, ss = r.elements(), s.elements()
    rt, st = r.tables()[1], s.tables()[1]
    ra, sa = r.tables()[0], s.tables()[0]
    L, R = m.left, m.right
    need(L[r.one, xs] == xs, "left unital")
    need(R[xs, s.one] == xs, "right unital")
    # r(m+m') = rm + rm' and (r+r')m = rm + r'm
    need(L[rs[:, None, None], m.add_table[a, b][None]] ==
         m.add_table[L[rs[:, None, None], a[None]], L[rs[:, None, None], b[None]]], "left additivity in M")
    need(L[ra[rs[:, None], rs[None, :]][:, :, None], xs[None, None, :]] ==
         m.add_table[L[rs[:, None, None], xs[None, None, :]], L[rs[None, :, None], xs[None, None, :]]],
         "left additivity in R")
    need(R[m.add_table[a, b][:, :, None], ss[None, None, :]] ==
         m.add_table[R[a[:, :, None], ss[None, None, :]], R[b[:, :, None], ss[None, None, :]]],
         "right additivity in M")
    need(R[xs[:, None, None], sa[ss[:, None], ss[None, :]][None]] ==
         m.add_table[R[xs[:, None, None], ss[None, :, None]], R[xs[:, None, None], ss[None, None, :]]],
         "right additivity in S")
    need(L[rt[rs[:, None], rs[None, :]][:, :, None], xs[None, None, :]] ==
         L[rs[:, None, None], L[rs[None, :, None], xs[None, None, :]]], "left associativity")
    need(R[R[xs[:, None, None], ss[None, :, None]], ss[None, None, :]] ==
         R[xs[:, None, None], st[ss[:, None], ss[None, :]][None]], "right associativity")
    need(R[L[rs[:, None, None], xs[None, :, None]], ss[None, None, :]] ==
         L[rs[:, None, None], R[xs[None, :, None], ss[None, None, :]]], "(rm)s = r(ms)")


def build_trivial_extension(base: FiniteRing, module: Optional[BimoduleTable] = None,
                            cap: int = DEFAULT_CAP) -> FiniteRing:
    regular = module is None
    _check_cap(base.size * (base.size if regular else module.size), cap)
    if regular:
        module = regular_bimodule(base)
    else:
        validate_bimodule(module, base, base)
    m = module

    def mul_digits(a, b):
        r1, m1 = a
        r2, m2 = b
        return [base.mul(r1, r2), m.add(m.left[r1, m2], m.right[m1, r2])]

    label = f"Triv({base.label})" if regular else f"Triv({base.label},{module.label})"
    return _structured(
        label, "triv", [base, m], mul_digits, [base.one, m.zero], cap,
        lambda d: f"({base.format(d[0])},{base.format(d[1]) if regular else d[1]})",
        {"base": base, "module": m,
         "to_base": lambda idx: Coords([base.size, m.size]).decode(idx)[0]})


def build_formal_triangular(r: FiniteRing, s: FiniteRing, m: BimoduleTable,
                            cap: int = DEFAULT_CAP) -> FiniteRing:
    _check_cap(r.size * m.size * s.size, cap)
    validate_bimodule(m, r, s)

    def mul_digits(a, b):
        r1, m1, s1 = a
        r2, m2, s2 = b
        return [r.mul(r1, r2), m.add(m.left[r1, m2], m.right[m1, s2]), s.mul(s1, s2)]

    def fmt(d):
        mid = r.format(d[1]) if m.label == "regular" else (s.format(d[1]) if m.label == "reduce" else str(d[1]))
        return f"[[{r.format(d[0])},{mid}],[0,{s.format(d[2])}]]"

    return _structured(
        f"TT({r.label},{s.label},{m.label})", "formal_triangular", [r, m, s], mul_digits,
        [r.one, m.zero, s.one], cap, fmt, {"r": r, "s": s, "module": m})


# -- truncated polynomial rings ---------------------------------------------


def build_rn(base: FiniteRing, n: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """R[x]/(x^n); coordinates are the coefficients of 1, x, ..., x^(n-1)."""
    if n < 2:
        raise RingInputError("Rn needs n >= 2")
    _check_cap(base.size ** n, cap)

    def mul_digits(a, b):
        return [_total(base, [base.mul(a[p], b[d - p]) for p in range(d + 1)]) for d in range(n)]

    def fmt(d):
        return _poly_format(base, [(c, "" if k == 0 else ("x" if k == 1 else f"x^{k}")) for k, c in enumerate(d)])

    return _structured(
        f"Rn({base.label},{n})", "rn", [base] * n, mul_digits,
        [base.one] + [base.zero] * (n - 1), cap, fmt,
        {"base": base, "n": n, "to_base": lambda idx: Coords([base.size] * n).decode(idx)[0]})


def _mono(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def build_anm(base: FiniteRing, n: int, m: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """R[x,y] with x^n = y^m = yx = 0 and additionally xy = 0.

    Coordinates: constant, x^1..x^(n-1), y^1..y^(m-1).
    """
    if n < 2 or m < 2:
        raise RingInputError("Anm needs n, m >= 2")
    k = 1 + (n - 1) + (m - 1)
    _check_cap(base.size ** k, cap)
    xs = list(range(1, n))
    ys = list(range(n, k))

    def mul_digits(a, b):
        out = [base.mul(a[0], b[0])]
        for offset, deg in ((0, n), (n - 1, m)):
            # coefficient slots for var^1..var^(deg-1) start at offset + 1
            for d in range(1, deg):
                terms = [base.mul(a[0], b[offset + d]), base.mul(a[offset + d], b[0])]
                terms += [base.mul(a[offset + p], b[offset + d - p]) for p in range(1, d)]
                out.append(_total(base, terms))
        return out

    def fmt(d):
        terms = [(d[0], "")] + [(d[i], _mono("x", i)) for i in xs] + [(d[j], _mono("y", j - n + 1)) for j in ys]
        return _poly_format(base, terms)

    return _structured(
        f"Anm({base.label},{n},{m})", "anm", [base] * k, mul_digits,
        [base.one] + [base.zero] * (k - 1), cap, fmt,
        {"base": base, "n": n, "m": m, "to_base": lambda idx: Coords([base.size] * k).decode(idx)[0]})


def build_bnm(base: FiniteRing, n: int, m: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """R[x,y]/(x^n, y^m) with commuting x, y; coordinate i*m + j holds x^i y^j."""
    if n < 2 or m < 2:
        raise RingInputError("Bnm needs n, m >= 2")
    k = n * m
    _check_cap(base.size ** k, cap)

    def mul_digits(a, b):
        out = []
        for i in range(n):
            for j in range(m):
                terms = [base.mul(a[p * m + q], b[(i - p) * m + (j - q)])
                         for p in range(i + 1) for q in range(j + 1)]
                out.append(_total(base, terms))
        return out

    def mono(i, j):
        return ("" if i == 0 else _mono("x", i)) + ("" if j == 0 else _mono("y", j))

    def fmt(d):
        return _poly_format(base, [(d[i * m + j], mono(i, j)) for i in range(n) for j in range(m)])

    return _structured(
        f"Bnm({base.label},{n},{m})", "bnm", [base] * k, mul_digits,
        [base.one] + [base.zero] * (k - 1), cap, fmt,
        {"base": base, "n": n, "m": m, "to_base": lambda idx: Coords([base.size] * k).decode(idx)[0]})


# -- twisted matrix rings -------------------------------------------------------


def _require_central(base: FiniteRing, s: int, what: str) -> int:
    s = base.check_index(s)
    if not is_central(base, s):
        raise RingInputError(f"{what} needs a central element, {base.format(s)} is not central")
    return s


def build_ks(base: FiniteRing, s: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """2x2 arrays [[a, x], [y, b]] with the corner products twisted by ``s``."""
    s = _require_central(base, s, "Ks")
    _check_cap(base.size ** 4, cap)
    mul, add = base.mul, base.add

    def mul_digits(p, q):
        a1, x1, y1, b1 = p
        a2, x2, y2, b2 = q
        return [
            add(mul(a1, a2), mul(s, mul(x1, y2))),
            add(mul(a1, x2), mul(x1, b2)),
            add(mul(y1, a2), mul(b1, y2)),
            add(mul(s, mul(y1, x2)), mul(b1, b2)),
        ]

    return _structured(
        f"Ks({base.label},{s})", "ks", [base] * 4, mul_digits,
        [base.one, base.zero, base.zero, base.one], cap,
        lambda d: _matrix_format(base, [d[:2], d[2:]]), {"base": base, "s": s})


def build_formal_matrix(base: FiniteRing, n: int, s: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """n x n arrays with c_ij = sum_k s^e(i,k,j) a_ik b_kj, e = 1 + [i=j] - [i=k] - [k=j]."""
    if n < 2:
        raise RingInputError("Ms needs n >= 2")
    s = _require_central(base, s, "Ms")
    _check_cap(base.size ** (n * n), cap)
    spow = [base.one, s, int(base.mul(s, s))]

    def mul_digits(a, b):
        out = []
        for i in range(n):
            for j in range(n):
                terms = []
                for k in range(n):
                    e = 1 + (i == j) - (i == k) - (k == j)
                    terms.append(base.mul(spow[e], base.mul(a[i * n + k], b[k * n + j])))
                out.append(_total(base, terms))
        return out

    return _structured(
        f"Ms({n},{base.label},{s})", "ms", [base] * (n * n), mul_digits,
        [base.one if i == j else base.zero for i in range(n) for j in range(n)], cap,
        lambda d: _matrix_format(base, [d[i * n:(i + 1) * n] for i in range(n)]),
        {"base": base, "n": n, "s": s})


# -- groups and group rings ---------------------------------------------------------


_GEN_NAMES = "ghkabcdef"


class FiniteGroup:
    """A finite group on indices ``0..size-1`` given by its Cayley table."""

    def __init__(self, table, identity: int = 0, label: str = "G", names: Optional[list] = None,
                 cyclic_orders: Optional[list] = None):
        self.table = np.asarray(table, dtype=np.int64)
        self.size = len(self.table)
        self.identity = int(identity)
        self.label = label
        self.names = names or [str(i) for i in range(self.size)]
        self.cyclic_orders = cyclic_orders
        hits = self.table == self.identity
        self.inverse = hits.argmax(axis=1)

    def op(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverse[a]

    def validate(self) -> None:
        xs = np.arange(self.size)
        t = self.table
        if t.shape != (self.size, self.size) or t.min() < 0 or t.max() >= self.size:
            raise ValidationError(f"{self.label}: table is not closed", axiom="closure")
        if not ((t[self.identity] == xs).all() and (t[:, self.identity] == xs).all()):
            raise ValidationError(f"{self.label}: identity fails", axiom="identity")
        if not (t[xs, self.inverse] == self.identity).all() or not (t[self.inverse, xs] == self.identity).all():
            raise ValidationError(f"{self.label}: inverses fail", axiom="inverse")
        if not (t[t[:, :, None], xs[None, None, :]] == t[xs[:, None, None], t[None, :, :]]).all():
            raise ValidationError(f"{self.label}: not associative", axiom="associativity")

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def order(self, x: int) -> int:
        k, cur = 1, int(x)
        while cur != self.identity:
            cur = int(self.table[cur, x])
            k += 1
        return k

    def orders(self) -> list[int]:
        return [self.order(x) for x in range(self.size)]

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders()))

    def is_p_group(self, p: int) -> bool:
        """Every element order is a power of ``p``."""
        for o in self.orders():
            while o % p == 0:
                o //= p
            if o != 1:
                return False
        return True

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, size={self.size})"


def build_group(spec) -> FiniteGroup:
    """``spec`` is an int ``n`` for C_n or a sequence of ints for C_n1 x C_n2 x ..."""
    orders = [spec] if isinstance(spec, (int, np.integer)) else list(spec)
    if not orders or any(int(o) < 1 for o in orders):
        raise RingInputError(f"cyclic orders must be positive, got {spec!r}")
    orders = [int(o) for o in orders]
    coords = Coords(orders)
    size = coords.size
    xs = np.arange(size)
    da, db = coords.decode(xs[:, None]), coords.decode(xs[None, :])
    table = coords.encode([(x + y) % o for x, y, o in zip(da, db, orders)])
    gens = _GEN_NAMES if len(orders) <= len(_GEN_NAMES) else None
    names = []
    for i in range(size):
        parts = []
        for pos, e in enumerate(coords.decode(i)):
            if e:
                g = gens[pos] if gens else f"g{pos}"
                parts.append(_mono(g, int(e)))
        names.append("".join(parts))
    label = "x".join(f"C({o})" for o in orders)
    return FiniteGroup(table, 0, label, names, orders)


def group_from_table(table, identity: int = 0, label: str = "G", names=None) -> FiniteGroup:
    g = FiniteGroup(table, identity, label, names)
    g.validate()
    return g


def build_group_ring(base: FiniteRing, g: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Functions G -> R with convolution; coordinate ``k`` is the coefficient of group element ``k``."""
    _check_cap(base.size ** g.size, cap)
    pairs = [[] for _ in range(g.size)]
    for a in range(g.size):
        for b in range(g.size):
            pairs[int(g.table[a, b])].append((a, b))

    def mul_digits(x, y):
        return [_total(base, [base.mul(x[a], y[b]) for a, b in pairs[k]]) for k in range(g.size)]

    names = ["" if k == g.identity else g.names[k] for k in range(g.size)]
    coords = Coords([base.size] * g.size)

    def eps(idx):
        return _total(base, coords.decode(idx))

    one = [base.zero] * g.size
    one[g.identity] = base.one
    return _structured(
        f"RG({base.label},{g.label})", "group_ring", [base] * g.size, mul_digits, one, cap,
        lambda d: _poly_format(base, [(d[k], names[k]) for k in range(g.size)]),
        {"base": base, "group": g, "to_base": eps})


def augmentation(ring: FiniteRing, x: int) -> int:
    if ring.kind != "group_ring":
        raise RingInputError(f"{ring.label} is not a group ring")
    x = ring.check_index(x)
    return int(ring.parts["to_base"](np.array([x]))[0])


def augmentation_mask(ring: FiniteRing) -> np.ndarray:
    if ring.kind != "group_ring":
        raise RingInputError(f"{ring.label} is not a group ring")
    return np.asarray(ring.parts["to_base"](ring.elements())) == ring.parts["base"].zero


def augmentation_ideal(ring: FiniteRing) -> frozenset:
    return frozenset(int(i) for i in np.flatnonzero(augmentation_mask(ring)))


def base_projection(ring: FiniteRing) -> Optional[np.ndarray]:
    """Canonical surjection onto the base ring, for constructions that have one."""
    fn = ring.parts.get("to_base")
    if fn is None:
        return None
    return np.asarray(fn(ring.elements()), dtype=np.int64)


def element_index(ring: FiniteRing, text: str) -> int:
    """Carrier index of the element whose formatted string is ``text``."""
    for i in range(ring.size):
        if ring.format(i) == text:
            return i
    raise RingInputError(f"no element {text!r} in {ring.label}")


# -- packaged Cayley tables ----------------------------------------------------


def field_f4() -> FiniteRing:
    """GF(4) from the packaged Cayley table (elements 0, 1, a, a+1)."""
    data = json.loads(resources.files("gnclab").joinpath("data/f4.json").read_text())
    ring = from_cayley(data)
    names = ["0", "1", "a", "a+1"]
    ring._formatter = lambda i: names[i]
    return ring
