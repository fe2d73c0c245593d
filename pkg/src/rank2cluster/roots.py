"""Rank-2 root systems of the Cartan matrices A(b, c)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotAffineError
from .ring import LatticePolygon


class Kind(enum.Enum):
    FINITE = "finite"
    AFFINE = "affine"
    INDEFINITE = "indefinite"


class _Infinity:
    """Sentinel for an infinite Coxeter number; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = lambda self: "infinity"  # noqa: E731

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("rank2cluster.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


@dataclass(frozen=True)
class CartanParams:
    """The pair (b, c) of the Cartan matrix [[2, -b], [-c, 2]]."""

    b: int
    c: int

    def __post_init__(self):
        if not (isinstance(self.b, int) and isinstance(self.c, int)) or self.b < 1 or self.c < 1:
            raise ValueError(f"b and c must be positive integers, got ({self.b}, {self.c})")

    @property
    def bc(self) -> int:
        return self.b * self.c

    @property
    def kind(self) -> Kind:
        if self.bc <= 3:
            return Kind.FINITE
        if self.bc == 4:
            return Kind.AFFINE
        return Kind.INDEFINITE

    @property
    def is_finite(self) -> bool:
        return self.bc <= 3

    @property
    def is_affine(self) -> bool:
        return self.bc == 4

    @property
    def period(self):
        """h + 2 for finite types, ``None`` otherwise."""
        h = coxeter_number(self)
        return None if h is INFINITY else h + 2

    def exponent(self, m: int) -> int:
        """Exponent in the exchange relation centred at index m."""
        return self.b if m % 2 else self.c

    def swapped(self) -> CartanParams:
        return CartanParams(self.c, self.b)

    def __str__(self):
        return f"({self.b},{self.c})"


def rem(m: int) -> int:
    """1 for odd m, 2 for even m."""
    return 1 if m % 2 else 2


def coxeter_number(p: CartanParams):
    return {1: 3, 2: 4, 3: 6}.get(p.bc, INFINITY)


def reflect(i: int, alpha, p: CartanParams) -> tuple:
    a1, a2 = alpha
    if i == 1:
        return (-a1 + p.b * a2, a2)
    if i == 2:
        return (a1, p.c * a1 - a2)
    raise ValueError("reflection index must be 1 or 2")


def norm(alpha, p: CartanParams) -> int:
    """The invariant quadratic form c*a1^2 - bc*a1*a2 + b*a2^2."""
    a1, a2 = alpha
    return p.c * a1 * a1 - p.bc * a1 * a2 + p.b * a2 * a2


def is_positive_imaginary(alpha, p: CartanParams) -> bool:
    a1, a2 = alpha
    # bc > 4: norm never vanishes on a nonzero lattice vector, so <= 0 is < 0
    return a1 > 0 and a2 > 0 and norm(alpha, p) <= 0


def delta(p: CartanParams) -> tuple:
    """Minimal positive imaginary root of an affine type."""
    table = {(2, 2): (1, 1), (1, 4): (1, 2), (4, 1): (2, 1)}
    if (p.b, p.c) not in table:
        raise NotAffineError(f"no delta for non-affine type {p}")
    return table[(p.b, p.c)]


def weyl_word(i: int, m: int) -> list:
    """Letters of w_i(m) = s_i s_j s_i ... (length m), leftmost first."""
    j = 3 - i
    return [i if k % 2 == 0 else j for k in range(m)]


def apply_word(word, alpha, p: CartanParams) -> tuple:
    for i in reversed(word):
        alpha = reflect(i, alpha, p)
    return alpha


@lru_cache(maxsize=None)
def _denominators(b: int, c: int, lo: int, hi: int) -> dict:
    p = CartanParams(b, c)
    alpha = {1: (-1, 0), 2: (0, -1), 3: (1, 0), 0: (0, 1)}
    for m in range(3, hi):
        k = p.exponent(m)
        alpha[m + 1] = (k * alpha[m][0] - alpha[m - 1][0], k * alpha[m][1] - alpha[m - 1][1])
    for m in range(0, lo, -1):
        k = p.exponent(m)
        alpha[m - 1] = (k * alpha[m][0] - alpha[m + 1][0], k * alpha[m][1] - alpha[m + 1][1])
    return alpha


def denominator_vector(m: int, p: CartanParams) -> tuple:
    """alpha(m): the exponent vector with y_m = x[alpha(m)] in the chart (y1, y2).

    Runs the linear recurrence alpha(m+1) + alpha(m-1) = k*alpha(m), valid
    away from the centres m = 1, 2, forward from alpha(2), alpha(3) and
    backward from alpha(1), alpha(0).  Finite types first reduce m into
    1..h+2.
    """
    period = p.period
    if period is not None:
        m = (m - 1) % period + 1
    lo, hi = min(m, 0) - 1, max(m, 3) + 1
    # round the cache window up so nearby calls share one table
    lo = -((-lo + 15) // 16) * 16
    hi = ((hi + 15) // 16) * 16
    return _denominators(p.b, p.c, lo, hi)[m]


def positive_real_roots(p: CartanParams, height_bound: int) -> list:
    """Positive real roots of height a1 + a2 <= height_bound, lex-sorted."""
    found = set()
    h = coxeter_number(p)
    if h is not INFINITY:
        for m in range(h):
            found.add(apply_word(weyl_word(1, m), (1, 0) if (m + 1) % 2 else (0, 1), p))
    else:
        for i in (1, 2):
            m, over = 0, 0
            # heights grow along each parity class, not along m itself
            while over < 2:
                idx = rem(m + i)
                root = apply_word(weyl_word(i, m), (1, 0) if idx == 1 else (0, 1), p)
                over = over + 1 if sum(root) > height_bound else 0
                found.add(root)
                m += 1
    return sorted(r for r in found if sum(r) <= height_bound)


def triangle(alpha, p: CartanParams) -> LatticePolygon:
    """Delta(alpha): vertices -alpha, -alpha + b*a2*e1, -alpha + c*a1*e2."""
    a1, a2 = alpha
    base = (-a1, -a2)
    return LatticePolygon([base, (-a1 + p.b * a2, -a2), (-a1, -a2 + p.c * a1)])
