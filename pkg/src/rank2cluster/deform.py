"""The two-parameter deformation of A(2, 2) over Z[q1, q2].

Generators Y_m satisfy Y_{m-1} Y_{m+1} = Y_m^2 + q_<m> Y_m + 1, where
<m> is 1 for odd m and 2 for even m.  Setting q1 = q2 = 0 recovers
A(2, 2); setting Y_m = y_m^<m>, q1 = 2, q2 = 0 lands in A(1, 4).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chebyshev import chebyshev_values
from .cluster import ExchangeChart
from .ring import INT, QPOLY, LaurentPoly, QPoly
from .roots import rem

Q1 = QPoly.q(1)
Q2 = QPoly.q(2)


def q_of(m: int) -> QPoly:
    """q_<m>."""
    return Q1 if m % 2 else Q2


class DeformedChart(ExchangeChart):
    """Laurent expansions in (Y_base, Y_{base+1}) with Z[q1, q2] coefficients."""

    ring = QPOLY

    def __init__(self, base: int = 1, window_cap: int | None = None):
        super().__init__(base, window_cap)
        self._z_values: list | None = None

    def exchange_rhs(self, k, vk):
        return vk * vk + vk * q_of(k) + 1

    def Z(self) -> LaurentPoly:
        return self.Z_n(1)

    def Z_n(self, n: int) -> LaurentPoly:
        if n < 0:
            return LaurentPoly.zero(QPOLY)
        if self._z_values is None or len(self._z_values) <= n:
            Y = self.variable
            m = self.base - 1
            zz = Y(m) * Y(m + 3) - (Y(m + 1) + q_of(m + 1)) * (Y(m + 2) + q_of(m + 2))
            size = max(n, 2 * len(self._z_values or ()), 4)
            self._z_values = chebyshev_values(zz, size, LaurentPoly.one(QPOLY))
        return self._z_values[n]

    def __repr__(self):
        return f"DeformedChart(base={self.base})"


def Y_var(m: int, base: int = 1) -> LaurentPoly:
    return DeformedChart(base).variable(m)


def Z_element(base: int = 1) -> LaurentPoly:
    return DeformedChart(base).Z()


def Z_n(n: int, base: int = 1) -> LaurentPoly:
    return DeformedChart(base).Z_n(n)


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def specialize_22(a: LaurentPoly) -> LaurentPoly:
    """q1 = q2 = 0 and Y_m = y_m."""
    return LaurentPoly({e: c.evaluate(0, 0) for e, c in a.items()}, INT).map_coefficients(int, INT)


def specialize_14(a: LaurentPoly, base: int = 1) -> LaurentPoly:
    """q1 = 2, q2 = 0 and Y_m = y_m^<m>, in the chart (y_base, y_{base+1})."""
    w1, w2 = rem(base), rem(base + 1)
    out: dict = {}
    for (e1, e2), c in a.items():
        v = c.evaluate(2, 0)
        key = (w1 * e1, w2 * e2)
        out[key] = out.get(key, 0) + int(v)
    return LaurentPoly(out, INT)


# ---------------------------------------------------------------------------
# lemma relations
# ---------------------------------------------------------------------------

def c_coefficient(k: int) -> QPoly:
    """c_k of the Y_m Y_{m+n} relation."""
    if k < 1:
        raise ValueError("c_k needs k >= 1")
    if k % 2 == 0:
        p = k // 2
        num = p * (p + 1) * (2 * p + 1)
        assert num % 6 == 0
        return Q1 * Q2 * (num // 6)
    p = (k + 1) // 2
    num = (p - 1) * p * (p + 1)
    assert num % 6 == 0
    return (Q1 * Q1 + Q2 * Q2) * (num // 6) + p


def zz_rhs(ch: DeformedChart, n: int, p: int) -> LaurentPoly:
    if p > n:
        return ch.Z_n(p - n) + ch.Z_n(p + n)
    return ch.Z_n(2 * n) + 2


def zy_rhs(ch: DeformedChart, n: int, m: int) -> LaurentPoly:
    out = ch.variable(m - n) + ch.variable(m + n)
    for k in range(1, n + 1):
        out = out + ch.Z_n(n - k) * (q_of(m + k) * k)
    return out


def yy_rhs(ch: DeformedChart, m: int, n: int) -> LaurentPoly:
    out = ch.variable((2 * m + n) // 2) * ch.variable((2 * m + n + 1) // 2)
    for k in range(1, n):
        out = out + ch.variable(m + n - k) * (q_of(m + k) * min(k, n - k))
    for k in range(1, n):
        out = out + ch.Z_n(n - 1 - k) * c_coefficient(k)
    return out


@dataclass
class LemmaCase:
    relation: str
    indices: dict
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"id": f"{self.relation}:" + ",".join(f"{k}={v}" for k, v in self.indices.items()),
                "status": "PASS" if self.ok else "FAIL", "detail": self.detail}


@dataclass
class LemmaReport:
    cases: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)


def _first_difference(lhs: LaurentPoly, rhs: LaurentPoly) -> str:
    diff = lhs - rhs
    if not diff:
        return ""
    e, c = diff.items()[0]
    return f"lhs - rhs has term {c.to_text()} at exponent {list(e)}"


def verify_lemma_relations(n: int, p: int, m: int, chart: DeformedChart | None = None) -> LemmaReport:
    """Check Z_nZ_p, Z_nY_m and Y_mY_{m+n} by expansion (needs p >= n >= 1)."""
    if not 1 <= n <= p:
        raise ValueError("need p >= n >= 1")
    ch = chart or DeformedChart(1)
    report = LemmaReport()
    checks = [
        ("ZZ", {"n": n, "p": p}, ch.Z_n(n) * ch.Z_n(p), zz_rhs(ch, n, p)),
        ("ZY", {"n": n, "m": m}, ch.Z_n(n) * ch.variable(m), zy_rhs(ch, n, m)),
        ("YY", {"m": m, "n": n}, ch.variable(m) * ch.variable(m + n), yy_rhs(ch, m, n)),
    ]
    for name, idx, lhs, rhs in checks:
        report.cases.append(LemmaCase(name, idx, lhs == rhs, _first_difference(lhs, rhs)))
    return report
