"""Formal polynomials in cluster variables y_k and affine elements z_n.

A :class:`GeneratorExpr` is an integer combination of products of the
symbols ``y_k`` (any integer k) and ``z_n`` (n >= 1).  It is the input
language of :func:`rank2cluster.cluster.expand`: nothing here knows what
the symbols evaluate to.

The text grammar accepted by :func:`parse`::

    expr   := term (("+" | "-") term)*
    term   := factor (("*") factor)*
    factor := ("-" | "+") factor | atom ("^" | "**") INT | atom
    atom   := INT | "y" INDEX | "z" INDEX | "(" expr ")"
    INDEX  := digits | "[" "-"? digits "]"

``y[-3]`` is y_{-3}; ``y3`` is y_3.  ``z0`` evaluates to 1.
"""

from __future__ import annotations

import re
from typing import Callable, Iterator, Mapping

from .errors import ExpressionSyntaxError

# a monomial is a sorted tuple of ((kind, index), exponent) with kind in "yz"
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for g, e in b:
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


class GeneratorExpr:
    """Immutable integer polynomial in the formal generators y_k, z_n."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        t = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((tuple(g), int(e)) for g, e in mono if e))
            for (kind, idx), e in mono:
                if kind not in ("y", "z") or e < 0:
                    raise ValueError(f"bad factor {kind}{idx}^{e}")
                if kind == "z" and idx < 1:
                    raise ValueError("z_n needs n >= 1; use z() for the conventions")
            if c:
                t[mono] = t.get(mono, 0) + int(c)
                if not t[mono]:
                    del t[mono]
        self._terms = t

    @classmethod
    def _make(cls, terms: dict) -> GeneratorExpr:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c: int) -> GeneratorExpr:
        return cls._make({(): c} if c else {})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, GeneratorExpr):
            return other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return {(): other} if other else {}
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self._terms)
        for m, c in o.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GeneratorExpr._make(out)

    __radd__ = __add__

    def __neg__(self):
        return GeneratorExpr._make({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-GeneratorExpr._make(dict(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return GeneratorExpr._make({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not in the algebra")
        result = GeneratorExpr.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._terms == o

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def relabel(self, fn: Callable[[str, int], tuple]) -> GeneratorExpr:
        """Rename generators; ``fn(kind, index)`` returns a new (kind, index)."""
        out = GeneratorExpr.constant(0)
        for mono, c in self._terms.items():
            new = tuple((fn(kind, idx), e) for (kind, idx), e in mono)
            out = out + GeneratorExpr({new: c})
        return out

    def y_indices(self) -> set:
        return {idx for mono in self._terms for (kind, idx), _ in mono if kind == "y"}

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        s = ""
        for i, (mono, c) in enumerate(self.items()):
            body = "*".join(_factor_text(g, e) for g, e in mono)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if i == 0:
                s = ("-" if c < 0 else "") + body
            else:
                s += (" - " if c < 0 else " + ") + body
        return s

    def __repr__(self):
        return f"GeneratorExpr({self.to_text()})"


def _mono_sort_key(mono: Monomial):
    return (-sum(e for _, e in mono), mono)


def _factor_text(g, e) -> str:
    kind, idx = g
    name = f"{kind}{idx}" if idx >= 0 else f"{kind}[{idx}]"
    return name if e == 1 else f"{name}^{e}"


def y(k: int) -> GeneratorExpr:
    return GeneratorExpr._make({((("y", k), 1),): 1})


def z(n: int = 1) -> GeneratorExpr:
    """z_n with the conventions z_0 = 1 and z_n = 0 for n < 0."""
    if n == 0:
        return GeneratorExpr.constant(1)
    if n < 0:
        return GeneratorExpr.constant(0)
    return GeneratorExpr._make({((("z", n), 1),): 1})


def monomial(factors: Mapping) -> GeneratorExpr:
    """Product of generators from ``{("y", k): e, ("z", n): e}``."""
    return GeneratorExpr({tuple(factors.items()): 1})


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<gen>[yz])(?:(?P<idx>\d+)|\[\s*(?P<bidx>-?\d+)\s*\])"
    r"|(?P<op>\*\*|[-+*^()]))"
)


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("gen") is not None:
            idx = m.group("idx") if m.group("idx") is not None else m.group("bidx")
            out.append(("gen", (m.group("gen"), int(idx))))
        else:
            op = m.group("op")
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ExpressionSyntaxError(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        if self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            f = self.factor()
            return -f if op == "-" else f
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            n = self.take("int")[1]
            return base ** n
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return GeneratorExpr.constant(val)
        if kind == "gen":
            self.take()
            g, idx = val
            if g == "y":
                return y(idx)
            if idx < 0:
                raise ExpressionSyntaxError("z index must be nonnegative")
            return z(idx)
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        raise ExpressionSyntaxError(f"unexpected token {val!r}")


def parse(text: str) -> GeneratorExpr:
    """Parse the tiny generator grammar, e.g. ``"y0*y3 - y1*y2"``."""
    p = _Parser(_tokenize(text))
    if not p.toks:
        raise ExpressionSyntaxError("empty expression")
    e = p.expr()
    if p.i != len(p.toks):
        raise ExpressionSyntaxError(f"trailing input near token {p.toks[p.i][1]!r}")
    return e
