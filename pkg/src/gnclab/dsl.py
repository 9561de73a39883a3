"""Ring-expression language.

    expr     := Zn(int) | Prod(expr{,expr}) | M(int,expr) | T(int,expr) | S(int,expr)
              | Triv(expr) | Rn(expr,int) | Anm(expr,int,int) | Bnm(expr,int,int)
              | Ks(expr,int) | Ms(int,expr,int) | TT(expr,expr,modspec) | RG(expr,group)
    group    := C(int) {x C(int)}
    modspec  := regular | zero | reduce

Whitespace is ignored.  ``str(parse(text))`` is the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import constructions as C
from .errors import ParseError, RingInputError
from .ring import DEFAULT_CAP, FiniteRing

MODSPECS = ("regular", "zero", "reduce")

# argument kinds: i = integer, e = expression, m = modspec, g = group, E = one or more expressions
SIGNATURES = {
    "Zn": "i", "Prod": "E", "M": "ie", "T": "ie", "S": "ie", "Triv": "e", "Rn": "ei",
    "Anm": "eii", "Bnm": "eii", "Ks": "ei", "Ms": "iei", "TT": "eem", "RG": "eg",
}


@dataclass(frozen=True)
class GroupExpr:
    orders: tuple

    def __str__(self) -> str:
        return "x".join(f"C({o})" for o in self.orders)


@dataclass(frozen=True)
class RingExpr:
    ctor: str
    args: tuple

    def __str__(self) -> str:
        return f"{self.ctor}(" + ",".join(str(a) for a in self.args) + ")"


Arg = Union[int, str, GroupExpr, RingExpr]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a constructor name", start)
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def group(self) -> GroupExpr:
        orders = [self.cyclic()]
        while self.peek() == "x":
            self.pos += 1
            orders.append(self.cyclic())
        return GroupExpr(tuple(orders))

    def cyclic(self) -> int:
        start = self.pos
        if self.name() != "C":
            raise ParseError("expected a cyclic group C(n)", start)
        self.expect("(")
        n = self.integer()
        self.expect(")")
        return n

    def expr(self) -> RingExpr:
        self.skip()
        start = self.pos
        ctor = self.name()
        if ctor not in SIGNATURES:
            raise ParseError(f"unknown constructor {ctor!r}", start)
        self.expect("(")
        sig = SIGNATURES[ctor]
        args: list = []
        if sig == "E":
            args.append(self.expr())
            while self.peek() == ",":
                self.pos += 1
                args.append(self.expr())
        else:
            for k, kind in enumerate(sig):
                if k:
                    if self.peek() != ",":
                        raise RingInputError(f"{ctor} takes {len(sig)} arguments (position {self.pos})")
                    self.pos += 1
                args.append(self.argument(ctor, kind))
        if self.peek() == ",":
            raise RingInputError(f"{ctor} takes {len(sig)} arguments (position {self.pos})")
        self.expect(")")
        return RingExpr(ctor, tuple(args))

    def argument(self, ctor: str, kind: str) -> Arg:
        self.skip()
        ch = self.peek()
        if kind == "i":
            if not ch.isdigit():
                raise RingInputError(f"{ctor} expects an integer argument at position {self.pos}")
            return self.integer()
        if kind == "e":
            if not ch.isalpha():
                raise RingInputError(f"{ctor} expects a ring expression at position {self.pos}")
            return self.expr()
        if kind == "g":
            return self.group()
        start = self.pos
        word = self.name()
        if word not in MODSPECS:
            raise RingInputError(f"{ctor} expects a module spec ({', '.join(MODSPECS)}) at position {start}")
        return word


def parse_ring_expr(text: str) -> RingExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise ParseError(f"trailing input {p.text[p.pos:]!r}", p.pos)
    return node


def evaluate(expr: Union[str, RingExpr], cap: int = DEFAULT_CAP,
             memo: Optional[dict] = None) -> FiniteRing:
    """Build the ring denoted by ``expr``; ``memo`` shares rings across calls by canonical text."""
    if isinstance(expr, str):
        expr = parse_ring_expr(expr)
    memo = {} if memo is None else memo
    key = str(expr)
    if key in memo:
        return memo[key]
    sub = [evaluate(a, cap, memo) if isinstance(a, RingExpr) else a for a in expr.args]
    ctor = expr.ctor
    if ctor == "Zn":
        ring = C.build_zn(sub[0], cap)
    elif ctor == "Prod":
        ring = C.build_product(sub, cap)
    elif ctor in ("M", "T", "S"):
        shape = {"M": "full", "T": "upper", "S": "upper_const_diag"}[ctor]
        ring = C.build_matrix(sub[1], sub[0], shape, cap)
    elif ctor == "Triv":
        ring = C.build_trivial_extension(sub[0], cap=cap)
    elif ctor == "Rn":
        ring = C.build_rn(sub[0], sub[1], cap)
    elif ctor == "Anm":
        ring = C.build_anm(sub[0], sub[1], sub[2], cap)
    elif ctor == "Bnm":
        ring = C.build_bnm(sub[0], sub[1], sub[2], cap)
    elif ctor == "Ks":
        ring = C.build_ks(sub[0], sub[1], cap)
    elif ctor == "Ms":
        ring = C.build_formal_matrix(sub[1], sub[0], sub[2], cap)
    elif ctor == "TT":
        r, s, spec = sub
        ring = C.build_formal_triangular(r, s, make_module(r, s, spec), cap)
    elif ctor == "RG":
        ring = C.build_group_ring(sub[0], C.build_group(sub[1].orders), cap)
    else:  # pragma: no cover - guarded by the parser
        raise RingInputError(f"unknown constructor {ctor}")
    ring.label = key
    memo[key] = ring
    return ring


def make_module(r: FiniteRing, s: FiniteRing, spec: str) -> C.BimoduleTable:
    if spec == "zero":
        return C.zero_bimodule(r, s)
    if spec == "reduce":
        return C.reduction_bimodule(r, s)
    if r.label != s.label:
        raise RingInputError(f"the regular module needs equal rings, got {r.label} and {s.label}")
    return C.regular_bimodule(r)
