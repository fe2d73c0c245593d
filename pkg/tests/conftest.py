import sympy
from hypothesis import settings
from hypothesis import strategies as st

from rank2cluster.ring import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Y1, Y2 = sympy.symbols("y1 y2")


def to_sympy(a: LaurentPoly, x1=Y1, x2=Y2):
    """Independent rendering of a Laurent polynomial as a sympy expression."""
    return sum((sympy.Integer(c) * x1 ** e1 * x2 ** e2 for (e1, e2), c in a.items()), sympy.Integer(0))


def laurent_polys(max_terms=6, spread=3, coeff=5, nonzero=False):
    term = st.tuples(st.integers(-spread, spread), st.integers(-spread, spread))
    coeffs = st.integers(-coeff, coeff).filter(bool)
    d = st.dictionaries(term, coeffs, min_size=1 if nonzero else 0, max_size=max_terms)
    return d.map(LaurentPoly)


def brute_hull(points):
    """Extreme points by the definition: p is extreme unless it lies in a
    triangle (or on a segment) spanned by three (two) other points."""
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def on_segment(p, a, b):
        return cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])

    def in_triangle(p, a, b, c):
        d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
        return not ((d1 < 0 or d2 < 0 or d3 < 0) and (d1 > 0 or d2 > 0 or d3 > 0))

    extreme = []
    for p in pts:
        others = [q for q in pts if q != p]
        covered = any(on_segment(p, a, b) for i, a in enumerate(others) for b in others[i + 1:])
        if not covered:
            covered = any(cross(a, b, c) != 0 and in_triangle(p, a, b, c)
                          for i, a in enumerate(others) for j, b in enumerate(others[i + 1:], i + 1)
                          for c in others[j + 1:])
        if not covered:
            extreme.append(p)
    return set(extreme)
