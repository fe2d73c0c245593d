"""Cluster variables and cluster monomials of A(b, c) in any cluster chart.

A chart with base m0 writes every element as a Laurent polynomial in
(y_{m0}, y_{m0+1}); exponent ``(g1, g2)`` means y_{m0}^g1 * y_{m0+1}^g2.
The exchange recursion is run outward from the chart with exact division,
so an :class:`~rank2cluster.errors.InexactDivisionError` here would be a
violation of the Laurent phenomenon, i.e. a bug.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .chebyshev import chebyshev_values
from .errors import (
    NotAffineError,
    NotPointedError,
    UnsupportedIndexError,
    WindowExceededError,
)
from .expr import GeneratorExpr, parse, y
from .ring import INT, LaurentPoly
from .roots import CartanParams, denominator_vector

DEFAULT_WINDOW_CAP = 64


def default_window_cap() -> int:
    """Window cap, overridable with the ``CLUSTER_WINDOW_CAP`` variable."""
    raw = os.environ.get("CLUSTER_WINDOW_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_WINDOW_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("CLUSTER_WINDOW_CAP must be a positive integer")
    return cap


class ExchangeChart:
    """Memoised two-sided exchange recursion around a fixed cluster.

    Subclasses supply :meth:`exchange_rhs`, the right-hand side of
    ``v_{k-1} v_{k+1} = rhs(k, v_k)``.  A chart owns its memo table and is
    meant to be used from one thread at a time.
    """

    ring = INT

    def __init__(self, base: int = 1, window_cap: int | None = None):
        self.base = base
        self.window_cap = default_window_cap() if window_cap is None else window_cap
        self._memo = {
            base: LaurentPoly.monomial(1, 0, ring=self.ring),
            base + 1: LaurentPoly.monomial(0, 1, ring=self.ring),
        }
        self._lo, self._hi = base, base + 1

    def exchange_rhs(self, k: int, vk: LaurentPoly) -> LaurentPoly:
        raise NotImplementedError

    def reduce_index(self, m: int) -> int:
        return m

    def variable(self, m: int) -> LaurentPoly:
        m = self.reduce_index(m)
        if abs(m - self.base) > self.window_cap:
            raise WindowExceededError(
                f"|{m} - {self.base}| exceeds the window cap {self.window_cap}")
        memo = self._memo
        while m > self._hi:
            k = self._hi
            memo[k + 1] = self.exchange_rhs(k, memo[k]).exact_div(memo[k - 1])
            self._hi = k + 1
        while m < self._lo:
            k = self._lo
            memo[k - 1] = self.exchange_rhs(k, memo[k]).exact_div(memo[k + 1])
            self._lo = k - 1
        return memo[m]


class ClusterChart(ExchangeChart):
    """The cluster (y_{base}, y_{base+1}) of A(b, c)."""

    def __init__(self, params: CartanParams, base: int = 1, window_cap: int | None = None):
        self.params = params
        super().__init__(base, window_cap)
        self._z_values: list | None = None

    def exchange_rhs(self, k, vk):
        return vk ** self.params.exponent(k) + 1

    def reduce_index(self, m: int) -> int:
        period = self.params.period
        if period is None:
            return m
        return self.base + (m - self.base) % period

    @property
    def variable_names(self) -> tuple:
        return tuple(f"y{k}" if k >= 0 else f"y[{k}]" for k in (self.base, self.base + 1))

    def monomial(self, label: MonomialLabel) -> LaurentPoly:
        return self.variable(label.m) ** label.p * self.variable(label.m + 1) ** label.q

    # -- affine elements ----------------------------------------------------
    def z(self) -> LaurentPoly:
        return self.z_n(1)

    def z_n(self, n: int) -> LaurentPoly:
        """z_n = T_n(z) with z_0 = 1 and z_n = 0 for n < 0."""
        if not self.params.is_affine:
            raise NotAffineError(f"z_n is only defined for affine types, not {self.params}")
        if n < 0:
            return LaurentPoly.zero()
        if self._z_values is None or len(self._z_values) <= n:
            zz = expand(self, z_expression(self.params))
            size = max(n, 2 * len(self._z_values or ()), 4)
            self._z_values = chebyshev_values(zz, size, LaurentPoly.one())
        return self._z_values[n]

    def __repr__(self):
        return f"ClusterChart(params={self.params}, base={self.base})"


def z_expression(params: CartanParams) -> GeneratorExpr:
    """The affine element z written in four consecutive cluster variables."""
    key = (params.b, params.c)
    if key == (2, 2):
        return y(0) * y(3) - y(1) * y(2)
    if key == (1, 4):
        return y(0) ** 2 * y(3) - (y(1) + 2) * y(2) ** 2
    if key == (4, 1):
        # (4,1) is (1,4) with every cluster index lowered by one
        return y(-1) ** 2 * y(2) - (y(0) + 2) * y(1) ** 2
    raise NotAffineError(f"z is only defined for affine types, not {params}")


@dataclass(frozen=True)
class MonomialLabel:
    """The cluster monomial y_m^p * y_{m+1}^q."""

    m: int
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("cluster monomial exponents must be nonnegative")

    def canonical(self, params: CartanParams) -> MonomialLabel:
        """Unique representative: 1 is (0, 0, 0); a pure power y_k^p is
        (k, p, 0); finite types reduce m into 1..h+2."""
        m, p, q = self.m, self.p, self.q
        if p == 0 and q == 0:
            return MonomialLabel(0, 0, 0)
        if p == 0:
            m, p, q = m + 1, q, 0
        period = params.period
        if period is not None:
            m = (m - 1) % period + 1
        return MonomialLabel(m, p, q)

    def denominator(self, params: CartanParams) -> tuple:
        """p * alpha(m) + q * alpha(m+1)."""
        a = denominator_vector(self.m, params)
        b = denominator_vector(self.m + 1, params)
        return (self.p * a[0] + self.q * b[0], self.p * a[1] + self.q * b[1])

    def to_expr(self) -> GeneratorExpr:
        return y(self.m) ** self.p * y(self.m + 1) ** self.q


def cluster_variable(chart: ClusterChart, m: int) -> LaurentPoly:
    return chart.variable(m)


def cluster_monomial(chart: ClusterChart, label: MonomialLabel) -> LaurentPoly:
    return chart.monomial(label)


def expand(chart: ClusterChart, e) -> LaurentPoly:
    """Laurent expansion of a generator expression (or its text) in a chart."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, int):
        e = GeneratorExpr.constant(e)
    total = LaurentPoly.zero()
    for mono, c in e.items():
        term = LaurentPoly.constant(c)
        for (kind, idx), k in mono:
            factor = chart.variable(idx) if kind == "y" else chart.z_n(idx)
            term = term * factor ** k
        total = total + term
    return total


def denominator_vector_of(a: LaurentPoly) -> tuple:
    """alpha such that a = y^{-alpha} * (1 + higher terms)."""
    if not a:
        raise NotPointedError("zero has no denominator vector")
    minimal = a.minimal_exponents()
    if len(minimal) != 1:
        raise NotPointedError(f"incomparable minimal exponents {minimal}")
    g = minimal[0]
    if a.coeff(*g) != 1:
        raise NotPointedError(f"minimal exponent {g} has coefficient {a.coeff(*g)}")
    return (-g[0], -g[1])


def _sigma1(alpha, params):
    a1, a2 = alpha
    return (a1, params.c * max(a1, 0) - a2)


def _sigma2(alpha, params):
    a1, a2 = alpha
    return (params.b * max(a2, 0) - a1, a2)


def sigma_on_lattice(p: int, alpha, params: CartanParams) -> tuple:
    """Piecewise-linear action of sigma_p on denominator vectors.

    sigma_p = (sigma_2 sigma_1)^(p-1) sigma_1, since sigma_2 sigma_1 shifts
    every cluster index by +2.
    """
    alpha = _sigma1(tuple(alpha), params)
    if p >= 1:
        for _ in range(p - 1):
            alpha = _sigma2(_sigma1(alpha, params), params)
    else:
        for _ in range(1 - p):
            alpha = _sigma1(_sigma2(alpha, params), params)
    return alpha


def sigma_on_expr(p: int, e: GeneratorExpr) -> GeneratorExpr:
    """y_m -> y_{2p-m}; z_n and scalars are fixed."""
    return e.relabel(lambda kind, idx: (kind, 2 * p - idx) if kind == "y" else (kind, idx))


def separating_form(m: int, params: CartanParams) -> tuple:
    """Nonnegative (c1, c2) with c1*g1 + c2*g2 < 0 on Newt(y_m^p y_{m+1}^q).

    The form is (a_{m+2,2} + a_{m+1,2}, a_{m-1,1} + a_{m,1}) in terms of the
    denominator vectors.  Indices m <= -1 are handled by the symmetry that
    swaps the simple roots and sends index k to 3 - k.  For finite types the
    guarantee covers 3 <= m <= h/2 + 2.
    """
    if m in (0, 1, 2):
        raise UnsupportedIndexError(f"no separating form for m = {m} (segment case)")
    if m < 0:
        c2, c1 = separating_form(2 - m, params.swapped())
        return (c1, c2)
    a = {k: denominator_vector(k, params) for k in (m - 1, m, m + 1, m + 2)}
    return (a[m + 2][1] + a[m + 1][1], a[m - 1][0] + a[m][0])
