"""Exact sparse Laurent polynomials in two variables and lattice polygons.

Everything in the package is expressed through :class:`LaurentPoly`, a
bivariate Laurent polynomial whose coefficients are either Python integers
(ring ``"int"``) or polynomials in two deformation parameters q1, q2 with
integer coefficients (ring ``"qpoly"``, see :class:`QPoly`).  The two
coefficient rings share one set of dictionary kernels (``_add_terms``,
``_mul_terms``, ``_div_terms``), so there is a single arithmetic engine to
audit.

Values are immutable.  Exponent tuples are ``(g1, g2)``; coefficients are
exact, there is no floating point anywhere.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Callable, Iterable, Mapping

try:
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover - plain ints give the same results, slower
    _big = int

from .errors import InexactDivisionError, RingMismatchError, ZeroPolynomialError

INT = "int"
QPOLY = "qpoly"

Exp = tuple  # (g1, g2)


# ---------------------------------------------------------------------------
# dictionary kernels
# ---------------------------------------------------------------------------

def _add_terms(a: Mapping, b: Mapping, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        if sign < 0:
            c = -c
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            s = v + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _mul_terms(a: Mapping, b: Mapping) -> dict:
    if len(a) < len(b):
        a, b = b, a
    if len(a) * len(b) > KRONECKER_THRESHOLD and _all_int(a) and _all_int(b):
        return _kron_mul(a, b)
    out: dict = {}
    get = out.get
    b_items = list(b.items())
    for (e1, e2), c in a.items():
        for (f1, f2), d in b_items:
            key = (e1 + f1, e2 + f2)
            v = get(key)
            out[key] = c * d if v is None else v + c * d
    return {e: c for e, c in out.items() if c}


def _all_int(terms: Mapping) -> bool:
    return all(type(c) is int for c in terms.values())


def _int_div(x: int, y: int) -> int:
    q, r = divmod(x, y)
    if r:
        raise InexactDivisionError(f"{x} is not divisible by {y}")
    return q


def _coeff_div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        return _int_div(x, y)
    if isinstance(x, int):
        x = QPoly.const(x)
    return x.exact_div(y)


def _div_terms(a: Mapping, b: Mapping, cdiv: Callable = _coeff_div) -> dict:
    """Exact quotient of two sparse term dictionaries.

    Lexicographic long division on the exponents.  Every quotient exponent
    must lie in the box forced by the extreme exponents of ``a`` and ``b``;
    leaving the box, or a coefficient that does not divide, means no exact
    quotient exists.  The result is checked by re-multiplication.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return {}
    if len(a) * len(b) > KRONECKER_THRESHOLD and _all_int(a) and _all_int(b):
        quot = _kron_div(a, b)
        if quot is not None:
            return quot
    lead = max(b)
    lead_c = b[lead]
    lo1 = min(e[0] for e in a) - min(e[0] for e in b)
    hi1 = max(e[0] for e in a) - lead[0]
    lo2 = min(e[1] for e in a) - min(e[1] for e in b)
    hi2 = max(e[1] for e in a) - max(e[1] for e in b)
    if lo1 > hi1 or lo2 > hi2:
        raise InexactDivisionError("Newton polygon of divisor does not fit")
    rem = dict(a)
    heap = [(-e1, -e2) for e1, e2 in rem]
    heapq.heapify(heap)
    quot: dict = {}
    b_items = list(b.items())
    while heap:
        n1, n2 = heapq.heappop(heap)
        key = (-n1, -n2)
        c = rem.get(key)
        if c is None:
            continue
        q1, q2 = key[0] - lead[0], key[1] - lead[1]
        if not (lo1 <= q1 <= hi1 and lo2 <= q2 <= hi2):
            raise InexactDivisionError("remainder leaves the quotient box")
        qc = cdiv(c, lead_c)
        quot[(q1, q2)] = qc
        for (f1, f2), d in b_items:
            k = (q1 + f1, q2 + f2)
            v = rem.get(k)
            if v is None:
                rem[k] = -qc * d
                heapq.heappush(heap, (-k[0], -k[1]))
            else:
                s = v - qc * d
                if s:
                    rem[k] = s
                else:
                    del rem[k]
    if _mul_terms(quot, b) != dict(a):
        raise InexactDivisionError("re-multiplication check failed")
    return quot


# ---------------------------------------------------------------------------
# Kronecker kernels for large integer polynomials
# ---------------------------------------------------------------------------
#
# A term dict with integer coefficients becomes one big integer: exponent
# (e1, e2) goes to slot (e1 - o1) * W + (e2 - o2), and slot i carries weight
# 2^(k*i).  Products and exact quotients of polynomials are then products
# and exact quotients of integers, which CPython does in C.

KRONECKER_THRESHOLD = 4000


def _span(terms: Mapping) -> tuple:
    e1 = [e[0] for e in terms]
    e2 = [e[1] for e in terms]
    return min(e1), max(e1), min(e2), max(e2)


def _slot_bytes(bound: int) -> int:
    # room for a sign bit above |c| <= bound
    return (bound.bit_length() + 2 + 7) // 8


def _pack(terms: Mapping, o1: int, o2: int, width: int, nbytes: int, slots: int) -> int:
    pos = bytearray(slots * nbytes)
    neg = bytearray(slots * nbytes)
    for (e1, e2), c in terms.items():
        i = ((e1 - o1) * width + (e2 - o2)) * nbytes
        if c > 0:
            pos[i:i + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[i:i + nbytes] = (-c).to_bytes(nbytes, "little")
    return _big(int.from_bytes(pos, "little")) - _big(int.from_bytes(neg, "little"))


def _unpack(v: int, o1: int, o2: int, width: int, nbytes: int, slots: int):
    """Inverse of :func:`_pack`; ``None`` when some slot overflows."""
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * slots, "little")
    u = int(v + offset)
    if u < 0 or u.bit_length() > 8 * nbytes * slots:
        return None
    data = u.to_bytes(slots * nbytes, "little")
    out = {}
    for i in range(slots):
        c = int.from_bytes(data[i * nbytes:(i + 1) * nbytes], "little") - half
        if c:
            out[((i // width) + o1, (i % width) + o2)] = c
    return out


def _kron_mul(a: Mapping, b: Mapping) -> dict:
    a1, A1, a2, A2 = _span(a)
    b1, B1, b2, B2 = _span(b)
    width = (A2 - a2) + (B2 - b2) + 1
    slots = ((A1 - a1) + (B1 - b1) + 1) * width
    bound = sum(abs(c) for c in a.values()) * max(abs(c) for c in b.values())
    nb = _slot_bytes(bound)
    va = _pack(a, a1, a2, width, nb, ((A1 - a1) + 1) * width)
    vb = _pack(b, b1, b2, width, nb, ((B1 - b1) + 1) * width)
    out = _unpack(va * vb, a1 + b1, a2 + b2, width, nb, slots)
    assert out is not None  # the slot size bounds every product coefficient
    return out


def _rows(terms: Mapping, o2: int, nbytes: int, slots: int) -> dict:
    """Pack each fixed-e1 row of ``terms`` as an integer in the e2 slots."""
    grouped: dict = {}
    for (e1, e2), c in terms.items():
        grouped.setdefault(e1, {})[(0, e2)] = c
    return {e1: _pack(row, 0, o2, slots, nbytes, slots) for e1, row in grouped.items()}


def _kron_div(a: Mapping, b: Mapping):
    """Exact quotient a / b by long division along e1, each row packed as
    one integer; ``None`` if the slot size turns out too small."""
    a1, A1, a2, A2 = _span(a)
    b1, B1, b2, B2 = _span(b)
    q1, Q1, q2, Q2 = a1 - b1, A1 - B1, a2 - b2, A2 - B2
    if q1 > Q1 or q2 > Q2:
        raise InexactDivisionError("Newton polygon of divisor does not fit")
    nb = _slot_bytes(max(abs(c) for c in a.values()))
    for _ in range(3):
        rem = _rows(a, a2, nb, A2 - a2 + 1)
        brows = sorted(_rows(b, b2, nb, B2 - b2 + 1).items())
        lead = brows[-1][1]
        quot: dict = {}
        for i in range(Q1, q1 - 1, -1):
            r = rem.pop(i + B1, 0)
            if not r:
                continue
            qv, rr = divmod(r, lead)
            if rr:
                raise InexactDivisionError("a row of the quotient is not exact")
            for j, bv in brows[:-1]:
                rem[i + j] = rem.get(i + j, 0) - qv * bv
            row = _unpack(qv, 0, q2, Q2 - q2 + 1, nb, Q2 - q2 + 1)
            if row is None:
                break
            for (_, e2), c in row.items():
                quot[(i, e2)] = c
        else:
            if any(rem.values()):
                raise InexactDivisionError("nonzero remainder")
            if _mul_terms(quot, b) == dict(a):
                return quot
        nb *= 2
    return None


# ---------------------------------------------------------------------------
# coefficient ring Z[q1, q2]
# ---------------------------------------------------------------------------

class QPoly:
    """Polynomial in q1, q2 with integer coefficients.

    Supports mixed arithmetic with ``int``; ``QPoly.const(0)`` is falsy.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        t = {}
        for e, c in (terms or {}).items():
            e = (int(e[0]), int(e[1]))
            if e[0] < 0 or e[1] < 0:
                raise ValueError("q-exponents must be nonnegative")
            if c:
                t[e] = int(c)
        self._terms = t
        self._hash = None

    @classmethod
    def _make(cls, terms: dict) -> QPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls._make({(0, 0): c} if c else {})

    @classmethod
    def q(cls, i: int) -> QPoly:
        """The generator q1 (``i=1``) or q2 (``i=2``)."""
        return cls._make({(1, 0): 1} if i == 1 else {(0, 1): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def _coerce(self, other) -> dict:
        if isinstance(other, QPoly):
            return other._terms
        if isinstance(other, int):
            return {(0, 0): other} if other else {}
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QPoly._make(_add_terms(self._terms, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QPoly._make(_add_terms(self._terms, o, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QPoly._make({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QPoly._make({})
            return QPoly._make({e: c * other for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QPoly._make(_mul_terms(self._terms, o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return _power(self, n, QPoly.const(1))

    def exact_div(self, other) -> QPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot divide QPoly by {type(other).__name__}")
        return QPoly._make(_div_terms(self._terms, o, _int_div))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._terms == o

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant_value(self) -> int:
        return self._terms.get((0, 0), 0)

    def evaluate(self, q1, q2):
        return sum(c * q1 ** e1 * q2 ** e2 for (e1, e2), c in self._terms.items())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (e1, e2), c in sorted(self._terms.items(), reverse=True):
            mono = _monomial_text(((("q1", e1)), ("q2", e2)))
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"QPoly({self.to_text()})"


def _power(x, n: int, one):
    if n < 0:
        raise ValueError("negative exponent")
    result = one
    while n:
        if n & 1:
            result = result * x
        n >>= 1
        if n:
            x = x * x
    return result


# ---------------------------------------------------------------------------
# text helpers
# ---------------------------------------------------------------------------

def _monomial_text(factors) -> str:
    out = []
    for name, e in factors:
        if e == 1:
            out.append(name)
        elif e:
            out.append(f"{name}^{e}")
    return "*".join(out)


def _signed_term(c: int, mono: str) -> tuple[int, str]:
    sign = -1 if c < 0 else 1
    c = abs(c)
    if not mono:
        return sign, str(c)
    if c == 1:
        return sign, mono
    return sign, f"{c}*{mono}"


def _join_terms(parts) -> str:
    s = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            s = ("-" if sign < 0 else "") + body
        else:
            s += (" - " if sign < 0 else " + ") + body
    return s


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Immutable sparse Laurent polynomial in two variables.

    Parameters
    ----------
    terms : mapping
        ``{(g1, g2): coeff}``; zero coefficients are dropped.
    ring : {"int", "qpoly"}
        Coefficient ring.  In the ``"qpoly"`` ring integer coefficients are
        promoted to :class:`QPoly`.

    Examples
    --------
    >>> y1 = LaurentPoly.monomial(1, 0)
    >>> ((y1 + 1) * (y1 - 1)).to_text()
    'y1^2 - 1'
    """

    __slots__ = ("_terms", "ring", "_hash")

    def __init__(self, terms: Mapping | None = None, ring: str = INT):
        if ring not in (INT, QPOLY):
            raise ValueError(f"unknown ring {ring!r}")
        t = {}
        for e, c in (terms or {}).items():
            e = (int(e[0]), int(e[1]))
            if ring == QPOLY:
                if isinstance(c, int):
                    c = QPoly.const(c)
                elif not isinstance(c, QPoly):
                    raise TypeError("qpoly coefficients must be QPoly or int")
            elif not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("int ring coefficients must be int")
            if c:
                t[e] = c
        self._terms = t
        self.ring = ring
        self._hash = None

    @classmethod
    def _make(cls, terms: dict, ring: str) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.ring = ring
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring: str = INT) -> LaurentPoly:
        return cls._make({}, ring)

    @classmethod
    def constant(cls, c, ring: str = INT) -> LaurentPoly:
        return cls({(0, 0): c}, ring)

    @classmethod
    def one(cls, ring: str = INT) -> LaurentPoly:
        return cls.constant(1, ring)

    @classmethod
    def monomial(cls, g1: int, g2: int, coeff=1, ring: str = INT) -> LaurentPoly:
        return cls({(g1, g2): coeff}, ring)

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def support(self) -> list:
        return sorted(self._terms)

    def coeff(self, g1: int, g2: int):
        return self._terms.get((g1, g2), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic ---------------------------------------------------------
    def _other_terms(self, other) -> dict:
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other._terms
        if isinstance(other, QPoly):
            if self.ring != QPOLY:
                raise RingMismatchError("QPoly scalar in int ring")
            return {(0, 0): other} if other else {}
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return {}
            return {(0, 0): QPoly.const(other) if self.ring == QPOLY else other}
        return NotImplemented

    def __add__(self, other):
        o = self._other_terms(other)
        if o is NotImplemented:
            return o
        return LaurentPoly._make(_add_terms(self._terms, o), self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other_terms(other)
        if o is NotImplemented:
            return o
        return LaurentPoly._make(_add_terms(self._terms, o, -1), self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly._make({e: -c for e, c in self._terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return LaurentPoly.zero(self.ring)
            return LaurentPoly._make({e: c * other for e, c in self._terms.items()}, self.ring)
        o = self._other_terms(other)
        if o is NotImplemented:
            return o
        return LaurentPoly._make(_mul_terms(self._terms, o), self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise InexactDivisionError("only monomials have Laurent inverses")
            ((g1, g2), c), = self._terms.items()
            if c not in (1, -1):
                raise InexactDivisionError("coefficient is not a unit")
            return LaurentPoly._make({(g1 * n, g2 * n): c ** (-n)}, self.ring)
        return _power(self, n, LaurentPoly.one(self.ring))

    def exact_div(self, other) -> LaurentPoly:
        """Exact quotient; raises :class:`InexactDivisionError` if none exists."""
        o = self._other_terms(other)
        if o is NotImplemented:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        if not o:
            raise ZeroDivisionError("division by the zero polynomial")
        return LaurentPoly._make(_div_terms(self._terms, o), self.ring)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == self._other_terms(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- transformations ----------------------------------------------------
    def map_exponents(self, fn: Callable[[int, int], tuple]) -> LaurentPoly:
        """Apply an injective map to every exponent."""
        out: dict = {}
        for (g1, g2), c in self._terms.items():
            out[tuple(fn(g1, g2))] = c
        if len(out) != len(self._terms):
            raise ValueError("exponent map is not injective on the support")
        return LaurentPoly._make(out, self.ring)

    def swap_variables(self) -> LaurentPoly:
        return self.map_exponents(lambda g1, g2: (g2, g1))

    def map_coefficients(self, fn: Callable, ring: str) -> LaurentPoly:
        return LaurentPoly({e: fn(c) for e, c in self._terms.items()}, ring)

    def min_exponents(self) -> tuple:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no support")
        return (min(e[0] for e in self._terms), min(e[1] for e in self._terms))

    def max_exponents(self) -> tuple:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no support")
        return (max(e[0] for e in self._terms), max(e[1] for e in self._terms))

    def minimal_exponents(self) -> list:
        """Exponents minimal for the componentwise partial order, lex-sorted."""
        pts = sorted(self._terms)
        out = []
        best_g2 = None
        # for increasing g1, a point is minimal iff its g2 beats every earlier g2
        for g1, g2 in pts:
            if best_g2 is None or g2 < best_g2:
                out.append((g1, g2))
                best_g2 = g2
        return out

    def evaluate(self, x1, x2, q=(0, 0)):
        """Exact value at ``y1 = x1, y2 = x2`` (and ``q`` for ``qpoly``)."""
        x1, x2 = Fraction(x1), Fraction(x2)
        total = Fraction(0)
        for (g1, g2), c in self._terms.items():
            if isinstance(c, QPoly):
                c = c.evaluate(Fraction(q[0]), Fraction(q[1]))
            total += c * x1 ** g1 * x2 ** g2
        return total

    def all_coefficients_positive(self) -> bool:
        """True iff nonzero and every coefficient is a positive integer
        (in ``qpoly``: a nonzero polynomial with nonnegative integer
        coefficients)."""
        if not self._terms:
            return False
        if self.ring == QPOLY:
            return all(c.has_nonnegative_coefficients() for c in self._terms.values())
        return all(c > 0 for c in self._terms.values())

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for (g1, g2), c in self.items():
            if self.ring == QPOLY:
                coeff = {"qterms": [{"qexp": [e1, e2], "c": str(v)} for (e1, e2), v in c.items()]}
            else:
                coeff = str(c)
            terms.append({"exp": [g1, g2], "coeff": coeff})
        return {"ring": self.ring, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        ring = data["ring"]
        terms = {}
        for t in data["terms"]:
            e = tuple(t["exp"])
            c = t["coeff"]
            if ring == QPOLY:
                c = QPoly({tuple(q["qexp"]): int(q["c"]) for q in c["qterms"]})
            else:
                c = int(c)
            if e in terms:
                raise ValueError(f"duplicate exponent {e}")
            terms[e] = c
        return cls(terms, ring)

    def to_text(self, names: tuple = ("y1", "y2")) -> str:
        """Render as ``numerator / denominator-monomial``.

        >>> LaurentPoly({(-1, 0): 1, (-1, 1): 1}).to_text()
        '(y2 + 1) / y1'
        """
        if not self._terms:
            return "0"
        m1, m2 = self.min_exponents()
        d1, d2 = max(0, -m1), max(0, -m2)
        parts = []
        for (g1, g2), c in sorted(self._terms.items(), reverse=True):
            mono = _monomial_text(((names[0], g1 + d1), (names[1], g2 + d2)))
            if isinstance(c, QPoly):
                parts.append(_qcoeff_term(c, mono))
            else:
                parts.append(_signed_term(c, mono))
        num = _join_terms(parts)
        den = _monomial_text(((names[0], d1), (names[1], d2)))
        if not den:
            return num
        if len(parts) > 1 or (parts[0][0] < 0):
            num = f"({num})"
        if d1 and d2:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self):
        return f"LaurentPoly[{self.ring}]({self.to_text()})"


def _qcoeff_term(c: QPoly, mono: str) -> tuple[int, str]:
    items = c.items()
    if len(items) == 1:
        (e1, e2), v = items[0]
        qm = _monomial_text((("q1", e1), ("q2", e2)))
        body = "*".join(x for x in (qm, mono) if x)
        return _signed_term(v, body)
    body = f"({c.to_text()})"
    return 1, f"{body}*{mono}" if mono else body


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_div(b)


# ---------------------------------------------------------------------------
# lattice polygons
# ---------------------------------------------------------------------------

def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable) -> tuple:
    """Extreme points of a finite planar set, counterclockwise from the
    lexicographically smallest one (monotone chain, exact integers)."""
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if not pts:
        raise ZeroPolynomialError("convex hull of the empty set")
    if len(pts) <= 2:
        return tuple(pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


def _direction_key(v):
    # angle measured counterclockwise from (0, -1), in the half-open range (0, 2*pi]
    dx, dy = v
    half = 0 if (dx > 0 or (dx == 0 and dy > 0)) else 1
    return half, v


def _direction_cmp(u, v) -> int:
    hu, hv = _direction_key(u)[0], _direction_key(v)[0]
    if hu != hv:
        return -1 if hu < hv else 1
    cr = u[0] * v[1] - u[1] * v[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


class LatticePolygon:
    """Convex lattice polygon stored by its extreme points.

    Vertices are kept counterclockwise starting from the lexicographically
    smallest one; a single point and a segment are valid polygons.  Any
    point list handed to the constructor is replaced by its convex hull.
    """

    __slots__ = ("vertices",)

    def __init__(self, points: Iterable):
        self.vertices = convex_hull(points)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self) -> list:
        """Edge vectors, counterclockwise (a segment has two opposite edges)."""
        v = self.vertices
        if len(v) == 1:
            return []
        return [(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1])
                for i in range(len(v))]

    def normal_vectors(self) -> list:
        """The set V of outward normals, each as long as its side."""
        return [(dy, -dx) for dx, dy in self.edges()]

    @classmethod
    def from_normals(cls, normals: Iterable, anchor: tuple) -> LatticePolygon:
        """Rebuild a polygon from its normal set and its lex-smallest vertex.

        Positively proportional normals are merged first.
        """
        edges = [(-ny, nx) for nx, ny in normals if (nx, ny) != (0, 0)]
        edges.sort(key=cmp_to_key(_direction_cmp))
        merged: list = []
        for e in edges:
            if merged and _direction_cmp(merged[-1], e) == 0:
                merged[-1] = (merged[-1][0] + e[0], merged[-1][1] + e[1])
            else:
                merged.append(e)
        pts = [tuple(anchor)]
        for dx, dy in merged[:-1]:
            x, y = pts[-1]
            pts.append((x + dx, y + dy))
        return cls(pts)

    def contains(self, p) -> bool:
        v = self.vertices
        if len(v) == 1:
            return tuple(p) == v[0]
        if len(v) == 2:
            a, b = v
            if _cross(a, b, p):
                return False
            return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
        return all(_cross(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))

    def translate(self, t) -> LatticePolygon:
        return LatticePolygon([(x + t[0], y + t[1]) for x, y in self.vertices])

    def scale(self, k: int) -> LatticePolygon:
        return LatticePolygon([(k * x, k * y) for x, y in self.vertices])

    def __eq__(self, other):
        if not isinstance(other, LatticePolygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"

    def to_json(self) -> dict:
        return {"vertices": [list(p) for p in self.vertices]}

    @classmethod
    def from_json(cls, data: Mapping) -> LatticePolygon:
        return cls([tuple(p) for p in data["vertices"]])

    def to_svg(self, unit: int = 20, margin: int = 2) -> str:
        """Plain SVG document of the polygon with coordinate axes."""
        xs = [p[0] for p in self.vertices] + [0]
        ys = [p[1] for p in self.vertices] + [0]
        x0, x1 = min(xs) - margin, max(xs) + margin
        y0, y1 = min(ys) - margin, max(ys) + margin
        w, h = (x1 - x0) * unit, (y1 - y0) * unit

        def px(p):
            return (p[0] - x0) * unit, (y1 - p[1]) * unit

        ox, oy = px((0, 0))
        path = " ".join(f"{a},{b}" for a, b in (px(p) for p in self.vertices))
        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
            f'<line x1="0" y1="{oy}" x2="{w}" y2="{oy}" stroke="gray"/>',
            f'<line x1="{ox}" y1="0" x2="{ox}" y2="{h}" stroke="gray"/>',
        ]
        if self.is_point:
            cx, cy = px(self.vertices[0])
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        else:
            lines.append(f'<polygon points="{path}" fill="lightgray" stroke="black"/>')
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def minkowski_sum(p: LatticePolygon, q: LatticePolygon) -> LatticePolygon:
    """Minkowski sum by merging the normal sets of the summands.

    The lex-smallest vertex of the sum is the sum of the lex-smallest
    vertices, which anchors the rebuilt polygon.
    """
    anchor = (p.vertices[0][0] + q.vertices[0][0], p.vertices[0][1] + q.vertices[0][1])
    normals = p.normal_vectors() + q.normal_vectors()
    if not normals:
        return LatticePolygon([anchor])
    return LatticePolygon.from_normals(normals, anchor)


def newton_polygon(a: LaurentPoly) -> LatticePolygon:
    if not a:
        raise ZeroPolynomialError("Newton polygon of zero")
    return LatticePolygon(a.support())


def is_monic(a: LaurentPoly) -> bool:
    """Every vertex of the Newton polygon carries coefficient exactly 1."""
    poly = newton_polygon(a)
    return all(a.coeff(*v) == 1 for v in poly.vertices)


def minkowski_difference(s: LatticePolygon, p: LatticePolygon) -> LatticePolygon:
    """The polygon Q with p + Q = s, which is unique when it exists."""
    def by_direction(poly):
        out: dict = {}
        for nx, ny in poly.normal_vectors():
            g = gcd(nx, ny)
            key = (nx // g, ny // g)
            out[key] = out.get(key, 0) + g
        return out

    left = by_direction(s)
    for key, g in by_direction(p).items():
        left[key] = left.get(key, 0) - g
        if left[key] < 0:
            raise ValueError("not a Minkowski summand")
    anchor = (s.vertices[0][0] - p.vertices[0][0], s.vertices[0][1] - p.vertices[0][1])
    normals = [(k[0] * g, k[1] * g) for k, g in left.items() if g]
    q = LatticePolygon.from_normals(normals, anchor) if normals else LatticePolygon([anchor])
    if minkowski_sum(p, q) != s:
        raise ValueError("not a Minkowski summand")
    return q
