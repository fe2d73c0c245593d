"""Canonical basis of A(b, c) for bc <= 4.

The basis consists of all cluster monomials, plus the Chebyshev elements
z_n = T_n(z) in the affine types.  Each element x[alpha] is labelled by its
denominator vector alpha in the chart (y1, y2): cluster monomials by
``Real(alpha)`` and z_n by ``Imaginary(n)`` (alpha = n * delta).

Main entry points are :func:`basis_element`, :func:`decompose`,
:func:`is_positive`, :func:`straighten_pair` and :func:`straighten_fully`.
"""

from __future__ import annotations

import threading
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Union

from .chebyshev import chebyshev_T
from .cluster import ClusterChart, MonomialLabel, expand
from .errors import (
    InvalidLabelError,
    NotAffineError,
    NotForbiddenError,
    NotInAlgebraError,
    UnsupportedTypeError,
)
from .expr import GeneratorExpr, y, z
from .ring import LaurentPoly
from .roots import CartanParams, delta, denominator_vector, is_positive_imaginary, rem

__all__ = [
    "Real", "Imaginary", "BasisLabel", "Decomposition", "PositivityResult",
    "chebyshev_T", "z_element", "z_n", "label_of", "monomial_for", "basis_element",
    "basis_expr", "decompose", "is_positive", "positivity_window_check",
    "straighten_pair", "straighten_fully", "multidegree", "grading_degree",
]


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Real:
    """x[alpha] for alpha outside the positive imaginary cone."""

    alpha: tuple

    def sort_key(self):
        return (0, self.alpha)

    def to_json(self):
        return {"real": list(self.alpha)}

    def __str__(self):
        return f"REAL({self.alpha[0]},{self.alpha[1]})"


@dataclass(frozen=True)
class Imaginary:
    """x[n * delta] = z_n."""

    n: int

    def sort_key(self):
        return (1, self.n)

    def to_json(self):
        return {"imaginary": self.n}

    def __str__(self):
        return f"IMAGINARY({self.n})"


BasisLabel = Union[Real, Imaginary]


def label_from_json(data) -> BasisLabel:
    if "real" in data:
        return Real(tuple(int(v) for v in data["real"]))
    return Imaginary(int(data["imaginary"]))


def _require_canonical(params: CartanParams):
    if params.bc > 4:
        raise UnsupportedTypeError(f"no canonical basis is constructed for indefinite type {params}")


def label_of(alpha, params: CartanParams) -> BasisLabel:
    """The basis label whose denominator vector is alpha."""
    _require_canonical(params)
    alpha = (int(alpha[0]), int(alpha[1]))
    if params.is_affine:
        d = delta(params)
        if alpha[0] > 0 and alpha[0] * d[1] == alpha[1] * d[0] and alpha[0] % d[0] == 0:
            return Imaginary(alpha[0] // d[0])
    if is_positive_imaginary(alpha, params):
        raise NotInAlgebraError(f"{alpha} is imaginary but not a multiple of delta")
    return Real(alpha)


def validate_label(label: BasisLabel, params: CartanParams) -> None:
    _require_canonical(params)
    if isinstance(label, Imaginary):
        if not params.is_affine:
            raise NotAffineError(f"IMAGINARY labels need an affine type, not {params}")
        if label.n < 1:
            raise InvalidLabelError("IMAGINARY(n) needs n >= 1")
    elif is_positive_imaginary(label.alpha, params):
        raise InvalidLabelError(f"REAL{label.alpha} is a positive imaginary root")


def _solve_cone(alpha, m: int, params: CartanParams):
    u = denominator_vector(m, params)
    v = denominator_vector(m + 1, params)
    det = u[0] * v[1] - u[1] * v[0]
    pn = alpha[0] * v[1] - alpha[1] * v[0]
    qn = u[0] * alpha[1] - u[1] * alpha[0]
    if pn % det or qn % det:
        return None
    p, q = pn // det, qn // det
    return (p, q) if p >= 0 and q >= 0 else None


_MONOMIAL_CACHE: dict = {}


def monomial_for(alpha, params: CartanParams) -> MonomialLabel:
    """The cluster monomial y_m^p y_{m+1}^q with p*alpha(m) + q*alpha(m+1) = alpha."""
    alpha = (int(alpha[0]), int(alpha[1]))
    key = (alpha, params.b, params.c)
    hit = _MONOMIAL_CACHE.get(key)
    if hit is not None:
        return hit
    if alpha == (0, 0):
        return MonomialLabel(0, 0, 0)
    if is_positive_imaginary(alpha, params):
        raise InvalidLabelError(f"{alpha} is not the denominator of a cluster monomial")
    period = params.period
    if period is not None:
        candidates = range(1, period + 1)
    else:
        # one generator of the cone has height <= |alpha|; heights grow with |m|
        h = abs(alpha[0]) + abs(alpha[1])
        reach = h * h + 4
        candidates = sorted(range(-reach, reach + 3), key=lambda k: (abs(k - 1), k))
    for m in candidates:
        sol = _solve_cone(alpha, m, params)
        if sol is not None:
            label = MonomialLabel(m, *sol).canonical(params)
            _MONOMIAL_CACHE[key] = label
            return label
    raise InvalidLabelError(f"no cluster cone contains {alpha}")  # pragma: no cover


def label_of_monomial(label: MonomialLabel, params: CartanParams) -> Real:
    return Real(label.denominator(params))


def basis_expr(label: BasisLabel, params: CartanParams) -> GeneratorExpr:
    validate_label(label, params)
    if isinstance(label, Imaginary):
        return z(label.n)
    return monomial_for(label.alpha, params).to_expr()


# ---------------------------------------------------------------------------
# affine elements
# ---------------------------------------------------------------------------

def z_element(chart: ClusterChart) -> LaurentPoly:
    return chart.z()


def z_n(chart: ClusterChart, n: int) -> LaurentPoly:
    return chart.z_n(n)


def basis_element(chart: ClusterChart, label: BasisLabel) -> LaurentPoly:
    """Laurent expansion of x[label] in the given chart."""
    validate_label(label, chart.params)
    if isinstance(label, Imaginary):
        return chart.z_n(label.n)
    return chart.monomial(monomial_for(label.alpha, chart.params))


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------

class Decomposition(Mapping):
    """Finite map BasisLabel -> nonzero integer; immutable."""

    def __init__(self, terms: Mapping | None = None):
        self._terms = {k: int(v) for k, v in (terms or {}).items() if v}

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self):
        return iter(self.labels())

    def __len__(self):
        return len(self._terms)

    def labels(self) -> list:
        return sorted(self._terms, key=lambda lab: lab.sort_key())

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_positive(self) -> bool:
        return bool(self._terms) and all(v > 0 for v in self._terms.values())

    def to_expr(self, params: CartanParams) -> GeneratorExpr:
        out = GeneratorExpr.constant(0)
        for lab in self.labels():
            out = out + self._terms[lab] * basis_expr(lab, params)
        return out

    def expand(self, chart: ClusterChart) -> LaurentPoly:
        total = LaurentPoly.zero()
        for lab in self.labels():
            total = total + basis_element(chart, lab) * self._terms[lab]
        return total

    def to_json(self) -> dict:
        return {"terms": [{"label": lab.to_json(), "coeff": str(self._terms[lab])}
                          for lab in self.labels()]}

    @classmethod
    def from_json(cls, data) -> Decomposition:
        return cls({label_from_json(t["label"]): int(t["coeff"]) for t in data["terms"]})

    def __repr__(self):
        inner = ", ".join(f"{lab}: {self._terms[lab]}" for lab in self.labels())
        return f"Decomposition({{{inner}}})"


_REF_LOCK = threading.Lock()
_REF_CHARTS: dict = {}


def _reference_chart(params: CartanParams) -> ClusterChart:
    with _REF_LOCK:
        ch = _REF_CHARTS.get(params)
        if ch is None:
            ch = _REF_CHARTS[params] = ClusterChart(params, 1)
        return ch


def _chart_automorphism(base: int):
    """Index map g of an automorphism taking (y1, y2) to the chart variables,
    and whether the chart order is reversed.

    Odd base: the even shift k -> k + base - 1.  Even base: sigma_p with
    p = (base + 2) / 2, which sends y1 -> y_{base+1} and y2 -> y_base.
    """
    if base % 2:
        s = base - 1
        return (lambda k: k + s), False
    two_p = base + 2
    return (lambda k: two_p - k), True


def _transport(label: BasisLabel, params: CartanParams, index_map) -> BasisLabel:
    if isinstance(label, Imaginary):
        return label
    mono = monomial_for(label.alpha, params)
    if mono.p == 0 and mono.q == 0:
        return label
    a, b = index_map(mono.m), index_map(mono.m + 1)
    if a < b:
        moved = MonomialLabel(a, mono.p, mono.q)
    else:
        moved = MonomialLabel(b, mono.q, mono.p)
    return label_of_monomial(moved.canonical(params), params)


def decompose(chart: ClusterChart, a: LaurentPoly, max_steps: int | None = None) -> Decomposition:
    """Write ``a`` (expanded in ``chart``) in the canonical basis.

    Greedy elimination: repeatedly take the lexicographically smallest
    componentwise-minimal exponent gamma of what is left, and subtract
    coeff * x[-gamma].  Both the chart-(y1, y2) result and the final result
    are verified by re-expansion.
    """
    params = chart.params
    _require_canonical(params)
    index_map, reversed_order = _chart_automorphism(chart.base)
    view = a.swap_variables() if reversed_order else a
    ref = _reference_chart(params)
    steps = 10 * len(a) + 100 if max_steps is None else max_steps

    remainder = view
    found: dict = {}
    while remainder:
        if steps <= 0:
            raise NotInAlgebraError("greedy decomposition exceeded its step cap")
        steps -= 1
        g = remainder.minimal_exponents()[0]
        label = label_of((-g[0], -g[1]), params)
        c = remainder.coeff(*g)
        if not isinstance(c, int):
            raise NotInAlgebraError("non-integer coefficient")
        remainder = remainder - basis_element(ref, label) * c
        found[label] = found.get(label, 0) + c

    local = Decomposition(found)
    if local.expand(ref) != view:
        raise NotInAlgebraError("re-expansion check failed in the reference chart")
    result = Decomposition({_transport(lab, params, index_map): c for lab, c in local.items()})
    if result.expand(chart) != a:
        raise NotInAlgebraError("re-expansion check failed in the input chart")
    return result


# ---------------------------------------------------------------------------
# positivity
# ---------------------------------------------------------------------------

@dataclass
class PositivityResult:
    """Verdict of :func:`is_positive`.

    ``certificate`` is the full basis decomposition.  A negative verdict
    names one offending label and, when a chart inside the searched window
    exposes it, a Laurent coefficient that is not positive.
    """

    positive: bool
    certificate: Decomposition
    negative_label: BasisLabel | None = None
    negative_coeff: int | None = None
    witness_chart: int | None = None
    witness_exponent: tuple | None = None
    witness_coeff: int | None = None

    @property
    def verdict(self) -> str:
        return "POSITIVE" if self.positive else "NOT_POSITIVE"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "certificate": self.certificate.to_json()}
        if not self.positive:
            out["witness"] = {
                "label": self.negative_label.to_json() if self.negative_label else None,
                "coeff": None if self.negative_coeff is None else str(self.negative_coeff),
                "chart": self.witness_chart,
                "exp": None if self.witness_exponent is None else list(self.witness_exponent),
                "laurent_coeff": None if self.witness_coeff is None else str(self.witness_coeff),
            }
        return out


def is_positive(chart: ClusterChart, a: LaurentPoly, witness_window: tuple = (-8, 8)) -> PositivityResult:
    """Decide positivity through the basis certificate (bc <= 4)."""
    cert = decompose(chart, a)
    if cert.is_positive():
        return PositivityResult(True, cert)
    result = PositivityResult(False, cert)
    bad = [lab for lab in cert.labels() if cert[lab] < 0]
    if bad:
        result.negative_label, result.negative_coeff = bad[0], cert[bad[0]]
    for base in sorted(range(witness_window[0], witness_window[1] + 1), key=lambda k: (abs(k - 1), k)):
        seen = cert.expand(ClusterChart(chart.params, base))
        for e, c in seen.items():
            if c <= 0:
                result.witness_chart, result.witness_exponent, result.witness_coeff = base, e, c
                return result
    return result


@dataclass
class WindowReport:
    """Per-chart positivity of Laurent coefficients; a necessary test only."""

    params: CartanParams
    charts: dict = field(default_factory=dict)

    @property
    def all_positive(self) -> bool:
        return all(self.charts.values())

    def to_json(self) -> dict:
        return {"params": [self.params.b, self.params.c],
                "charts": [{"base": m, "positive": ok} for m, ok in sorted(self.charts.items())],
                "all_positive": self.all_positive}


def positivity_window_check(e, params: CartanParams, m_lo: int, m_hi: int) -> WindowReport:
    """Check Laurent positivity of ``e`` in the charts m_lo..m_hi.

    Positivity in finitely many charts does not imply positivity.
    """
    report = WindowReport(params)
    for m in range(m_lo, m_hi + 1):
        report.charts[m] = expand(ClusterChart(params, m), e).all_coefficients_positive()
    return report


# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------

def _as_factor(f):
    if isinstance(f, GeneratorExpr):
        items = f.items()
        if len(items) != 1 or items[0][1] != 1 or len(items[0][0]) != 1 or items[0][0][0][1] != 1:
            raise ValueError(f"not a single generator: {f.to_text()}")
        return items[0][0][0][0]
    kind, idx = f
    if kind not in ("y", "z"):
        raise ValueError(f"unknown generator kind {kind!r}")
    return kind, int(idx)


def _shifted(e: GeneratorExpr, s: int) -> GeneratorExpr:
    return e.relabel(lambda kind, idx: (kind, idx + s) if kind == "y" else (kind, idx))


def _zsum(weight, n: int, kmin: int = 1) -> GeneratorExpr:
    """sum_{k >= kmin} weight(k) * z_{n(k)} with z_0 = 1, z_<0 = 0;
    ``n`` maps k to the z index and must decrease in k."""
    out = GeneratorExpr.constant(0)
    k = kmin
    while n(k) >= 0:
        out = out + weight(k) * z(n(k))
        k += 1
    return out


def straighten_pair(a, b, params: CartanParams) -> GeneratorExpr:
    """Right-hand side of the straightening relation for the product a*b.

    Factors are ``("y", m)``, ``("z", n)`` or single-generator expressions.
    The returned expression is a combination of cluster monomials and z_n.
    """
    _require_canonical(params)
    a, b = _as_factor(a), _as_factor(b)
    if params.b > params.c:
        # (c, b) with cluster indices raised by one
        lift = lambda f: (f[0], f[1] + 1) if f[0] == "y" else f  # noqa: E731
        return _shifted(straighten_pair(lift(a), lift(b), params.swapped()), -1)
    if params.is_finite:
        return _straighten_finite(a, b, params)
    return _straighten_affine(a, b, params)


def _straighten_finite(a, b, params: CartanParams) -> GeneratorExpr:
    if a[0] != "y" or b[0] != "y":
        raise NotAffineError("z_n only exists in affine types")
    period = params.period
    d = (b[1] - a[1]) % period
    n = min(d, period - d)
    if n <= 1:
        raise NotForbiddenError(f"y{a[1]}*y{b[1]} is a cluster monomial")
    m = a[1] if d == n else b[1]
    c = params.c
    if n == 2:
        k = m + 1
        return y(k) ** params.exponent(k) + 1
    odd = m % 2 == 1
    if n == 3 and c == 2:
        return y(m - 1) + y(m + 1) if odd else y(m + 2) + y(m + 4)
    if n == 3 and c == 3:
        return y(m - 1) + y(m + 1) ** 2 if odd else y(m + 2) ** 2 + y(m + 4)
    if n == 4 and c == 3:
        return y(m - 2) + y(m + 2) + (3 if odd else 0)
    raise AssertionError(f"unexpected distance {n} for {params}")  # pragma: no cover


def _straighten_affine(a, b, params: CartanParams) -> GeneratorExpr:
    is22 = params.b == 2
    if a[0] == "z" and b[0] == "z":
        n, p = sorted((a[1], b[1]))
        return z(p - n) + z(p + n) if p > n else 2 + z(2 * n)
    if a[0] == "y" and b[0] == "z":
        a, b = b, a
    if a[0] == "z":
        n, m = a[1], b[1]
        if is22:
            return y(m - n) + y(m + n)
        if m % 2 == 0:
            return y(m - 2 * n) + y(m + 2 * n)
        return (y(m - n) ** rem(m - n) + y(m + n) ** rem(m + n)
                + 4 * _zsum(lambda k: k, lambda k: n - 2 * k))
    i, j = sorted((a[1], b[1]))
    n = j - i
    if n <= 1:
        raise NotForbiddenError(f"y{i}*y{j} is a cluster monomial")
    if is22:
        return y((2 * i + n) // 2) * y((2 * i + n + 1) // 2) + _zsum(lambda k: k, lambda k: n - 2 * k)
    if n % 2 == 0:
        h = n // 2
        if i % 2 == 0:
            return y(i + h) ** rem(i + h) + _zsum(lambda k: 2 * k - 1, lambda k: h + 1 - 2 * k)
        out = y(i + h) ** (2 * rem(i + h))
        for k in range(1, h):
            out = out + 4 * min(k, h - k) * y(i + 2 * k)
        zs = _zsum(lambda k: 2 * k ** 3 + k, lambda k: 2 * h - 2 * k)
        return out + GeneratorExpr({mono: c // 3 for mono, c in zs.items()})
    # odd distance: the even index is the anchor, the odd one sits at anchor +- n
    m, sign = (i, 1) if i % 2 == 0 else (j, -1)
    out = GeneratorExpr.constant(0)
    k = 1
    while 2 * k < n:
        out = out + min(4 * k, n - 2 * k) * y(m + sign * 4 * k)
        k += 1
    if n % 3 == 0:
        return out + y(m + sign * (2 * n // 3)) ** 3
    three_s = 3 * m + sign * 2 * n
    return out + y(three_s // 3) * y(-(-three_s // 3))


def _decompose_monomial(mono, params: CartanParams):
    """Either ("basis", label) or ("rewrite", pair, rest)."""
    ys: dict = {}
    zs: dict = {}
    period = params.period
    for (kind, idx), e in mono:
        if kind == "z":
            zs[idx] = zs.get(idx, 0) + e
        else:
            if period is not None:
                idx = (idx - 1) % period + 1
            ys[idx] = ys.get(idx, 0) + e
    z_total = sum(zs.values())

    def rest_without(f1, f2):
        d_y, d_z = dict(ys), dict(zs)
        for kind, idx in (f1, f2):
            target = d_y if kind == "y" else d_z
            target[idx] -= 1
        factors = {("y", k): e for k, e in d_y.items() if e}
        factors.update({("z", k): e for k, e in d_z.items() if e})
        return GeneratorExpr({tuple(factors.items()): 1})

    zk = sorted(zs)
    if z_total >= 2:
        f1 = ("z", zk[0])
        f2 = ("z", zk[0] if zs[zk[0]] >= 2 else zk[1])
        return "rewrite", (f1, f2), rest_without(f1, f2)
    yk = sorted(ys)
    if z_total == 1:
        if yk:
            f1, f2 = ("z", zk[0]), ("y", yk[0])
            return "rewrite", (f1, f2), rest_without(f1, f2)
        return "basis", Imaginary(zk[0])
    if not yk:
        return "basis", Real((0, 0))
    if len(yk) == 1:
        return "basis", label_of_monomial(MonomialLabel(yk[0], ys[yk[0]], 0), params)
    if len(yk) == 2:
        lo, hi = yk
        if hi - lo == 1:
            return "basis", label_of_monomial(MonomialLabel(lo, ys[lo], ys[hi]), params)
        if period is not None and lo == 1 and hi == period:
            return "basis", label_of_monomial(MonomialLabel(hi, ys[hi], ys[lo]), params)
    if period is None:
        f1, f2 = ("y", yk[0]), ("y", yk[-1])
    else:
        pairs = [(u, v) for ix, u in enumerate(yk) for v in yk[ix + 1:]
                 if 2 <= (v - u) <= period - 2]
        u, v = pairs[0]
        f1, f2 = ("y", u), ("y", v)
    return "rewrite", (f1, f2), rest_without(f1, f2)


def straighten_fully(e, params: CartanParams, max_steps: int = 100000) -> Decomposition:
    """Normalise a generator expression into the canonical basis by repeated
    straightening, without any Laurent expansion."""
    _require_canonical(params)
    if isinstance(e, int):
        e = GeneratorExpr.constant(e)
    pending = dict(e.terms)
    found: dict = {}
    steps = 0
    while pending:
        steps += 1
        if steps > max_steps:
            raise NotInAlgebraError("straightening did not terminate within the step cap")
        mono, c = pending.popitem()
        kind, *rest = _decompose_monomial(mono, params)
        if kind == "basis":
            label = rest[0]
            found[label] = found.get(label, 0) + c
            continue
        (f1, f2), cofactor = rest
        replacement = straighten_pair(f1, f2, params) * cofactor
        for m2, c2 in replacement.terms.items():
            s = pending.get(m2, 0) + c * c2
            if s:
                pending[m2] = s
            else:
                pending.pop(m2, None)
    return Decomposition(found)


def grading_degree(mono, params: CartanParams) -> int:
    """Degree used for finite-type termination: (odd, even) weights are
    (1, 1) for A2, (3, 2) for B2 and (5, 3) for G2."""
    if not params.is_finite:
        raise ValueError("grading is for finite types")
    shift = 1 if params.b > params.c else 0
    odd_w, even_w = {1: (1, 1), 2: (3, 2), 3: (5, 3)}[params.bc]
    total = 0
    for (kind, idx), e in mono:
        total += e * (odd_w if (idx + shift) % 2 else even_w)
    return total


def multidegree(mono, params: CartanParams) -> tuple:
    """Lexicographic termination measure (mu1, mu2, mu3) for affine types."""
    if not params.is_affine:
        raise ValueError("multi-degree is for affine types")
    shift = 1 if params.b > params.c else 0
    zsum = sum(e for (kind, _), e in mono if kind == "z")
    ys = sorted((idx + shift, e) for (kind, idx), e in mono if kind == "y")
    if params.b == params.c:
        mu1 = zsum + sum(e for _, e in ys)
    else:
        mu1 = zsum + sum(rem(idx - 1) * e for idx, e in ys)
    if not ys:
        return (mu1, 0, 0)
    return (mu1, ys[-1][0] - ys[0][0], ys[0][1] + ys[-1][1])
