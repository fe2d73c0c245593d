"""Chebyshev polynomials of the first kind, normalised by T_0 = 1 and
T_n(t + 1/t) = t^n + t^-n for n > 0.

Univariate integer polynomials are plain tuples of coefficients in
ascending degree, e.g. ``T_2 = (-2, 0, 1)``.
"""

from __future__ import annotations

from functools import lru_cache


def _trim(p) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a, b) -> tuple:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_scale(a, k: int) -> tuple:
    return _trim(k * x for x in a)


def poly_shift(a, k: int = 1) -> tuple:
    """Multiply by t^k."""
    return _trim((0,) * k + tuple(a)) if a else ()


def poly_derivative(a) -> tuple:
    return _trim(i * a[i] for i in range(1, len(a)))


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> tuple:
    """Coefficients of T_n.

    The identity T_n(t + 1/t) = t^n + t^-n forces T_{n+1} = t*T_n - T_{n-1}
    once n >= 2, with T_2 = t^2 - 2 (twice T_0 enters there, not T_0 itself).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    if n == 2:
        return (-2, 0, 1)
    return poly_add(poly_shift(chebyshev_T(n - 1)), poly_scale(chebyshev_T(n - 2), -1))


def chebyshev_values(x, n: int, one) -> list:
    """[T_0(x), ..., T_n(x)] for any ring element ``x`` supporting + - *."""
    vals = [one]
    if n >= 1:
        vals.append(x)
    if n >= 2:
        vals.append(x * x - 2 * one)
    for k in range(2, n):
        vals.append(x * vals[k] - vals[k - 1])
    return vals


def evaluate(poly, x, one):
    """Horner evaluation of an integer polynomial at a ring element."""
    acc = one * 0
    for c in reversed(poly):
        acc = acc * x + one * c
    return acc
