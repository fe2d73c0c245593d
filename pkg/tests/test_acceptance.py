"""Acceptance checks, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (visible with
``pytest -s`` or in the captured report) and then asserts.  Every
comparison is an exact equality; time limits are wall-clock.
"""

import random
import time

from rank2cluster.canonical import Decomposition, basis_element, basis_expr, decompose, is_positive, label_of
from rank2cluster.canonical import Imaginary, positivity_window_check
from rank2cluster.cluster import ClusterChart, MonomialLabel, denominator_vector_of, expand, sigma_on_expr
from rank2cluster.cluster import sigma_on_lattice, z_expression
from rank2cluster.deform import DeformedChart, specialize_14, specialize_22
from rank2cluster.expr import GeneratorExpr, parse, y, z
from rank2cluster.ring import QPOLY, LatticePolygon, LaurentPoly, QPoly, is_monic, newton_polygon
from rank2cluster.roots import CartanParams, delta, denominator_vector, rem, triangle
from rank2cluster.verify import integer_rank

STRESS = [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (1, 5)]
CANONICAL = [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4)]
AFFINE = [(2, 2), (1, 4)]


def _report(capsys, number, title, checks, elapsed, limit=None):
    failed = [(name, detail) for name, ok, detail in checks if not ok]
    timing_ok = limit is None or elapsed < limit
    ok = not failed and timing_ok
    budget = f" < {limit} s" if limit is not None else ""
    summary = f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.2f} s{budget}"
    if failed:
        summary += "; first failure: " + "; ".join(f"{n}: {d}" for n, d in failed[:3])
    if not timing_ok:
        summary += "; over the time limit"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {title} ({summary})")
    assert ok, summary


def _lp(num: str, chart, den=(0, 0)):
    return expand(chart, parse(num)) * LaurentPoly.monomial(-den[0], -den[1])


def _unreduced(P, base):
    """A chart that runs the recursion even where finite-type periodicity would shortcut it."""
    ch = ClusterChart(P, base)
    ch.reduce_index = lambda k: k
    return ch


def _reach(P):
    return 8 if P.bc > 4 else 12


# --------------------------------------------------------------------------
# 1
# --------------------------------------------------------------------------

TABLES = {
    (1, 1): {3: ("y2+1", (1, 0)), 4: ("y1+y2+1", (1, 1)), 5: ("y1+1", (0, 1))},
    (1, 2): {3: ("y2^2+1", (1, 0)), 4: ("y1+y2^2+1", (1, 1)), 5: ("(y1+1)^2+y2^2", (1, 2)), 6: ("y1+1", (0, 1))},
    (1, 3): {3: ("y2^3+1", (1, 0)), 4: ("y1+y2^3+1", (1, 1)), 5: ("(y1+1)^3+y2^3*(y2^3+3*y1+2)", (2, 3)),
             6: ("(y1+1)^2+y2^3", (1, 2)), 7: ("(y1+1)^3+y2^3", (1, 3)), 8: ("y1+1", (0, 1))},
}
COXETER = {(1, 1): 3, (1, 2): 4, (1, 3): 6}


def test_acceptance_1_finite_tables(capsys):
    want = {bc: {m: _lp(num, ClusterChart(CartanParams(*bc)), den) for m, (num, den) in t.items()}
            for bc, t in TABLES.items()}
    start = time.perf_counter()
    checks = []
    for bc, table in want.items():
        P = CartanParams(*bc)
        h = COXETER[bc]
        ch = _unreduced(P, 1)
        checks.append((f"{bc} table range", sorted(table) == list(range(3, h + 3)), sorted(table)))
        for m, value in table.items():
            got = ch.variable(m)
            checks.append((f"{bc} y{m}", got == value, got.to_text()))
        for m in range(-h - 2, h + 3):
            checks.append((f"{bc} period y{m}", ch.variable(m + h + 2) == ch.variable(m), ""))
    _report(capsys, 1, "finite-type tables and periodicity", checks, time.perf_counter() - start, 1)


# --------------------------------------------------------------------------
# 2
# --------------------------------------------------------------------------

def test_acceptance_2_laurent_stress(capsys):
    start = time.perf_counter()
    checks = []
    for bc in STRESS:
        P = CartanParams(*bc)
        r = _reach(P)
        for base in range(-3, 4):
            ch = _unreduced(P, base)
            try:
                values = [ch.variable(m) for m in range(base - r, base + r + 2)]
                ok, detail = all(isinstance(v, LaurentPoly) and v for v in values), ""
            except ArithmeticError as exc:
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            checks.append((f"{bc} base {base}", ok, detail))
    _report(capsys, 2, "Laurent phenomenon in charts -3..3", checks, time.perf_counter() - start, 60)


# --------------------------------------------------------------------------
# 3
# --------------------------------------------------------------------------

def _swap(poly: LatticePolygon) -> LatticePolygon:
    return LatticePolygon([(b, a) for a, b in poly.vertices])


def _expected_polygon(m, base, P):
    # chart automorphisms: an even shift for odd bases, y_k -> y_{base+2-k} for even ones
    if base % 2:
        return triangle(denominator_vector(m - base + 1, P), P)
    return _swap(triangle(denominator_vector(base + 2 - m, P), P))


def test_acceptance_3_newton_polygons(capsys):
    start = time.perf_counter()
    checks = []
    for bc in STRESS:
        P = CartanParams(*bc)
        r = _reach(P)
        for base in range(-3, 4):
            ch = _unreduced(P, base)
            for m in range(base - r, base + r + 2):
                if P.period is not None and (m - base) % P.period in (0, 1):
                    continue
                if P.period is None and m in (base, base + 1):
                    continue
                v = ch.variable(m)
                want = _expected_polygon(m, base, P)
                got = newton_polygon(v)
                checks.append((f"{bc} base {base} y{m}", got == want and is_monic(v), f"{got} vs {want}"))
    for bc in AFFINE + [(4, 1)]:
        P = CartanParams(*bc)
        d = delta(P)
        ch = ClusterChart(P, 1)
        for n in range(1, 7):
            zn = ch.z_n(n)
            want = triangle((n * d[0], n * d[1]), P)
            checks.append((f"{bc} z{n}", newton_polygon(zn) == want and is_monic(zn), str(newton_polygon(zn))))
    _report(capsys, 3, "Newton polygons are root triangles, all monic", checks, time.perf_counter() - start)


# --------------------------------------------------------------------------
# 4: right-hand sides transcribed directly from the published relations
# --------------------------------------------------------------------------

def _z(n):
    if n < 0:
        return GeneratorExpr.constant(0)
    return GeneratorExpr.constant(1) if n == 0 else z(n)


def _finite_relations():
    out = []
    for m in range(1, 7):
        rhs = y(m - 1) + y(m + 1) if m % 2 else y(m + 2) + y(m + 4)
        out.append(((1, 2), y(m) * y(m + 3), rhs, f"B2 y{m}y{m + 3}"))
    for m in range(1, 9):
        rhs = y(m - 1) + y(m + 1) ** 2 if m % 2 else y(m + 2) ** 2 + y(m + 4)
        out.append(((1, 3), y(m) * y(m + 3), rhs, f"G2 y{m}y{m + 3}"))
        rhs = y(m - 2) + y(m + 2) + (3 if m % 2 else 0)
        out.append(((1, 3), y(m) * y(m + 4), rhs, f"G2 y{m}y{m + 4}"))
    return out


def _affine_relations():
    out = []
    for bc in AFFINE:
        for n in range(1, 6):
            for p in range(n, 6):
                rhs = _z(p - n) + _z(p + n) if p > n else 2 + _z(2 * n)
                out.append((bc, _z(n) * _z(p), rhs, f"zz {n},{p}"))
    for n in range(1, 6):
        for m in range(-4, 5):
            out.append(((2, 2), z(n) * y(m), y(m - n) + y(m + n), f"zy-22 {n},{m}"))
            lo, hi = (2 * m + n) // 2, -(-(2 * m + n) // 2)
            rhs = y(lo) * y(hi) + sum((k * _z(n - 2 * k) for k in range(1, n // 2 + 1)), GeneratorExpr.constant(0))
            out.append(((2, 2), y(m) * y(m + n), rhs, f"yy-22 {m},{n}"))
    for n in range(1, 6):
        for m in range(-4, 5):
            if m % 2 == 0:
                rhs = y(m - 2 * n) + y(m + 2 * n)
            else:
                rhs = (y(m - n) ** rem(m - n) + y(m + n) ** rem(m + n)
                       + sum((4 * k * _z(n - 2 * k) for k in range(1, n // 2 + 1)), GeneratorExpr.constant(0)))
            out.append(((1, 4), z(n) * y(m), rhs, f"zy-14 {n},{m}"))
    for m in range(-4, 5):
        for n in range(0, 6):
            if m % 2 == 0:
                rhs = y(m + n) ** rem(m + n) + sum(((2 * k - 1) * _z(n + 1 - 2 * k) for k in range(1, n // 2 + 2)),
                                                   GeneratorExpr.constant(0))
                out.append(((1, 4), y(m) * y(m + 2 * n), rhs, f"yy-14-00 {m},{n}"))
            else:
                rhs = y(m + n) ** (2 * rem(m + n))
                rhs = rhs + sum((4 * min(k, n - k) * y(m + 2 * k) for k in range(1, n)), GeneratorExpr.constant(0))
                third = sum(((2 * k ** 3 + k) * _z(2 * n - 2 * k) for k in range(1, n + 1)), GeneratorExpr.constant(0))
                rhs = rhs + GeneratorExpr({mono: c // 3 for mono, c in third.terms.items()})
                assert all(c % 3 == 0 for c in third.terms.values())
                out.append(((1, 4), y(m) * y(m + 2 * n), rhs, f"yy-14-11 {m},{n}"))
        if m % 2 == 0:
            for n in (1, 3, 5):
                for sign in (1, -1):
                    rhs = sum((min(4 * k, n - 2 * k) * y(m + sign * 4 * k) for k in range(1, n) if 1 < 2 * k < n),
                              GeneratorExpr.constant(0))
                    s3 = 3 * m + sign * 2 * n
                    if n % 3 == 0:
                        rhs = rhs + y(s3 // 3) ** 3
                    else:
                        rhs = rhs + y(s3 // 3) * y(-(-s3 // 3))
                    out.append(((1, 4), y(m) * y(m + sign * n), rhs, f"yy-14-01 {m},{'+' if sign > 0 else '-'}{n}"))
    return out


def test_acceptance_4_straightening(capsys):
    start = time.perf_counter()
    charts = {}
    checks = []
    for bc, lhs, rhs, name in _finite_relations() + _affine_relations():
        ch = charts.setdefault(bc, ClusterChart(CartanParams(*bc), 1))
        a, b = expand(ch, lhs), expand(ch, rhs)
        detail = "" if a == b else f"lhs - rhs = {(a - b).to_text()}"
        checks.append((f"{bc} {name}", a == b, detail))
    _report(capsys, 4, "straightening relations by double expansion", checks, time.perf_counter() - start, 120)


# --------------------------------------------------------------------------
# 5
# --------------------------------------------------------------------------

Q1, Q2 = QPoly.q(1), QPoly.q(2)


def _q(m):
    return Q1 if m % 2 else Q2


def _c(k):
    if k % 2 == 0:
        p = k // 2
        return Q1 * Q2 * (p * (p + 1) * (2 * p + 1) // 6)
    p = (k + 1) // 2
    return (Q1 * Q1 + Q2 * Q2) * ((p - 1) * p * (p + 1) // 6) + p


def test_acceptance_5_deformed_lemma(capsys):
    start = time.perf_counter()
    ch = DeformedChart(1)
    Y, Z = ch.variable, lambda n: ch.Z_n(n) if n >= 0 else LaurentPoly.zero(QPOLY)
    checks = []
    for n in range(1, 6):
        for p in range(n, 6):
            rhs = Z(p - n) + Z(p + n) if p > n else Z(2 * n) + 2
            checks.append((f"ZZ {n},{p}", Z(n) * Z(p) == rhs, ""))
        for m in range(-4, 5):
            rhs = Y(m - n) + Y(m + n)
            for k in range(1, n + 1):
                rhs = rhs + Z(n - k) * (_q(m + k) * k)
            checks.append((f"ZY {n},{m}", Z(n) * Y(m) == rhs, ""))
            rhs = Y((2 * m + n) // 2) * Y(-(-(2 * m + n) // 2))
            for k in range(1, n):
                rhs = rhs + Y(m + n - k) * (_q(m + k) * min(k, n - k))
            for k in range(1, n):
                rhs = rhs + Z(n - 1 - k) * _c(k)
            checks.append((f"YY {m},{n}", Y(m) * Y(m + n) == rhs, ""))
    c22, c14 = ClusterChart(CartanParams(2, 2), 1), ClusterChart(CartanParams(1, 4), 1)
    for m in range(-8, 9):
        checks.append((f"q=0 Y{m}", specialize_22(Y(m)) == c22.variable(m), ""))
        checks.append((f"(1,4) Y{m}", specialize_14(Y(m)) == c14.variable(m) ** rem(m), ""))
    for n in range(1, 5):
        checks.append((f"q=0 Z{n}", specialize_22(Z(n)) == c22.z_n(n), ""))
        checks.append((f"(1,4) Z{n}", specialize_14(Z(n)) == c14.z_n(n), ""))
    _report(capsys, 5, "deformed relations over Z[q1,q2] and both specializations", checks,
            time.perf_counter() - start)


# --------------------------------------------------------------------------
# 6
# --------------------------------------------------------------------------

def _label_pool(P, height=6):
    return [label_of((a1, a2), P) for a1 in range(-height, height + 1) for a2 in range(-height, height + 1)
            if abs(a1) + abs(a2) <= height]


def test_acceptance_6_round_trip(capsys):
    start = time.perf_counter()
    checks = []
    for bc in CANONICAL:
        P = CartanParams(*bc)
        pool = _label_pool(P)
        rng = random.Random(20240601 + 10 * bc[0] + bc[1])
        ch = ClusterChart(P, 1)
        for i in range(200):
            labels = rng.sample(pool, rng.randint(1, 6))
            d = Decomposition({lab: rng.choice([c for c in range(-5, 6) if c]) for lab in labels})
            total = LaurentPoly.zero()
            for lab, c in d.items():
                total = total + basis_element(ch, lab) * c
            got = decompose(ch, total)
            checks.append((f"{bc} #{i}", got == d, f"{d} -> {got}"))
    _report(capsys, 6, "decompose inverts the basis expansion", checks, time.perf_counter() - start, 60)


# --------------------------------------------------------------------------
# 7
# --------------------------------------------------------------------------

def test_acceptance_7_positivity(capsys):
    start = time.perf_counter()
    checks = []
    for bc in CANONICAL + [(2, 1), (3, 1), (4, 1)]:
        P = CartanParams(*bc)
        ch = ClusterChart(P, 1)
        for m in range(-8, 9):
            r = is_positive(ch, ch.variable(m))
            checks.append((f"{bc} y{m}", r.positive, r.verdict))
        if P.is_affine:
            for n in range(1, 7):
                r = is_positive(ch, ch.z_n(n))
                checks.append((f"{bc} z{n}", r.positive, r.verdict))
    P = CartanParams(2, 2)
    ch = ClusterChart(P, 1)
    e = parse("y0*y1+y2*y3+y3*y4-z1")
    r = is_positive(ch, expand(ch, e))
    checks.append(("remark element certified NOT_POSITIVE with IMAGINARY(1): -1",
                   not r.positive and r.negative_label == Imaginary(1) and r.negative_coeff == -1,
                   f"{r.verdict} {r.negative_label}: {r.negative_coeff}"))
    win = positivity_window_check(e, P, 1, 3)
    bad = [m for m, ok in sorted(win.charts.items()) if not ok]
    detail = ""
    if bad:
        seen = expand(ClusterChart(P, bad[0]), e)
        neg = [(ex, c) for ex, c in seen.items() if c <= 0]
        detail = f"chart base {bad[0]} has coefficient {neg[0][1]} at exponent {list(neg[0][0])}"
    checks.append(("remark element window-positive on charts 1..3", not bad, detail))
    _report(capsys, 7, "positivity certificates", checks, time.perf_counter() - start)


# --------------------------------------------------------------------------
# 8
# --------------------------------------------------------------------------

PRIME = (1 << 61) - 1


def _rank_mod_p(rows):
    """Rank over GF(p); full rank mod p implies full rank over Q."""
    m = [[x % PRIME for x in r] for r in rows]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], PRIME - 2, PRIME)
        m[rank] = [x * inv % PRIME for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * yv) % PRIME for x, yv in zip(m[i], m[rank])]
        rank += 1
    return rank


def _matrix(polys):
    support = sorted({e for a in polys for e in a.support()})
    return [[a.coeff(*e) for e in support] for a in polys]


def test_acceptance_8_independence(capsys):
    start = time.perf_counter()
    checks = []
    for bc in STRESS:
        P = CartanParams(*bc)
        ch = ClusterChart(P, 1)
        ms = range(1, P.period + 1) if P.period else range(-4, 5)
        labels = {MonomialLabel(m, p, q).canonical(P) for m in ms for p in range(4) for q in range(4 - p)}
        polys = [ch.monomial(lab) for lab in sorted(labels, key=lambda lab: (lab.m, lab.p, lab.q))]
        distinct = len(set(polys)) == len(polys)
        rows = _matrix(polys)
        r1, r2 = integer_rank(rows), _rank_mod_p(rows)
        checks.append((f"{bc} cluster monomials", distinct and r1 == r2 == len(polys), f"rank {r1}/{r2} of {len(polys)}"))
        mons = [(a0, a1, a2, a3) for a0 in range(5) for a1 in range(5) for a2 in range(5) for a3 in range(5)
                if a0 + a1 + a2 + a3 <= 4 and a0 * a2 == 0 and a1 * a3 == 0]
        polys = [expand(ch, y(0) ** a[0] * y(1) ** a[1] * y(2) ** a[2] * y(3) ** a[3]) for a in mons]
        rows = _matrix(polys)
        r1, r2 = integer_rank(rows), _rank_mod_p(rows)
        checks.append((f"{bc} standard monomials", r1 == r2 == len(polys), f"rank {r1}/{r2} of {len(polys)}"))
    _report(capsys, 8, "linear independence by exact rank", checks, time.perf_counter() - start, 30)


# --------------------------------------------------------------------------
# 9
# --------------------------------------------------------------------------

def _sigma(i, a, P):
    a1, a2 = a
    if i == 1:
        return (a1, P.c * max(a1, 0) - a2)
    return (P.b * max(a2, 0) - a1, a2)


def test_acceptance_9_symmetry(capsys):
    start = time.perf_counter()
    checks = []
    for bc in CANONICAL:
        P = CartanParams(*bc)
        ch = ClusterChart(P, 1)
        for a1 in range(-4, 5):
            for a2 in range(-4, 5):
                lab = label_of((a1, a2), P)
                e = basis_expr(lab, P)
                for i in (1, 2):
                    got = denominator_vector_of(expand(ch, sigma_on_expr(i, e)))
                    want = _sigma(i, (a1, a2), P)
                    checks.append((f"{bc} sigma{i}{(a1, a2)}", got == want == sigma_on_lattice(i, (a1, a2), P),
                                   f"{got} vs {want}"))
    for bc in STRESS:
        P = CartanParams(*bc)
        ch = ClusterChart(P, 1)
        for p in range(-2, 4):
            for m in range(-2, 4):
                if max(abs(k - 1) for k in (m, m + 1, 2 * p - m, 2 * p - m - 1)) > 7:
                    continue
                for a, b in [(1, 0), (0, 1), (2, 1), (1, 3)]:
                    e = y(m) ** a * y(m + 1) ** b
                    got = denominator_vector_of(expand(ch, sigma_on_expr(p, e)))
                    want = sigma_on_lattice(p, denominator_vector_of(expand(ch, e)), P)
                    checks.append((f"{bc} sigma_{p} y{m}^{a}y{m + 1}^{b}", got == want, f"{got} vs {want}"))
    for bc in AFFINE:
        P = CartanParams(*bc)
        ref = ClusterChart(P, 1)
        for base in range(-4, 5):
            ch = ClusterChart(P, base)
            # z through the four variables y_{base-1} .. y_{base+2} of this chart
            shifted = z_expression(P).relabel(lambda kind, idx, s=base - 1: (kind, idx + s))
            local = expand(ch, shifted)
            for n in range(1, 5):
                want = ref.z_n(n) if base % 2 else ref.z_n(n).swap_variables()
                checks.append((f"{bc} z{n} base {base}", ch.z_n(n) == want, ""))
            if base % 2:
                checks.append((f"{bc} z formula base {base}", local == ref.z(), local.to_text()))
            else:
                checks.append((f"{bc} z formula base {base}", expand(ch, sigma_on_expr(base // 2 + 1, z(1))) == ch.z(), ""))
    _report(capsys, 9, "sigma compatibility and chart independence of z_n", checks, time.perf_counter() - start)
