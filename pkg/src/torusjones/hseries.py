"""The generating series ``H_{2,2m+1}(x)`` in two forms, and its q-difference
equation ``H(x) = 1 - q x^2 - q^{2m} x^{2m+1} H(qx)``."""

from __future__ import annotations

from fractions import Fraction

from .chi import PeriodicChi
from .exactalg import InvalidArgument, LaurentQ, SeriesX, q_binomial, qpow, series_shift

__all__ = ["h_series", "h_chi_series", "verify_h_difference", "x_pochhammer"]


def _check(m: int, order: int):
    if m < 1:
        raise InvalidArgument("m must be positive")
    if order < 1:
        raise InvalidArgument("order must be positive")


def x_pochhammer(n: int, order: int) -> SeriesX:
    """``(x; q)_n = prod_{k=1}^{n} (1 - x q^{k-1})`` truncated below ``x^order``."""
    out = SeriesX.monomial(order, 0)
    for k in range(1, n + 1):
        factor = SeriesX(order, [LaurentQ.one(), -qpow(k - 1)])
        out = out * factor
    return out


def _tuples(m: int, order: int):
    """Yield ``(k_m, x_degree, weight)`` for weakly increasing tuples
    ``k_1 <= ... <= k_m`` whose lowest x-power is below ``order``."""

    def rec(level: int, upper: int, deg: int, weight: LaurentQ):
        # choose k_level <= upper; level counts down to 1
        if level == 0:
            yield deg, weight
            return
        for k in range(upper + 1):
            d = deg + 2 * k
            if d >= order:
                break
            w = weight * q_binomial(upper, k).shift(k * (k + 1))
            yield from rec(level - 1, k, d, w)

    for km in range(order):
        for deg, w in rec(m - 1, km, km, LaurentQ.one()):
            yield km, deg, w


def h_series(m: int, order: int) -> SeriesX:
    """Multi-sum form, truncated below ``x^order``."""
    _check(m, order)
    grouped: dict[tuple[int, int], LaurentQ] = {}
    for km, deg, w in _tuples(m, order):
        key = (km, deg)
        grouped[key] = grouped.get(key, LaurentQ.zero()) + w
    poch = {}
    acc = [LaurentQ.zero()] * order
    for (km, deg), w in sorted(grouped.items()):
        if w.is_zero():
            continue
        if km not in poch:
            poch[km] = x_pochhammer(km + 1, order - km)
        p = poch[km]
        for i in range(order - deg):
            c = p[i]
            if c:
                acc[deg + i] = acc[deg + i] + w * c
    return SeriesX(order, acc)


def h_chi_series(m: int, order: int) -> SeriesX:
    """``sum_n chi_{8m+4}(n) q^{(n^2-(2m-1)^2)/(8(2m+1))} x^{(n-(2m-1))/2}``."""
    _check(m, order)
    chi = PeriodicChi(2, 2 * m + 1)
    base = 2 * m - 1
    acc = [LaurentQ.zero()] * order
    for n in range(base, base + 2 * order - 1):
        c = chi(n)
        if not c:
            continue
        # n is odd wherever chi is nonzero
        deg = (n - base) // 2
        e = Fraction(n * n - base * base, 8 * (2 * m + 1))
        acc[deg] = acc[deg] + qpow(e, c)
    return SeriesX(order, acc)


def verify_h_difference(m: int, order: int, *, coeff: LaurentQ | None = None) -> bool:
    """Check the q-difference equation on ``h_series(m, order)``.

    ``coeff`` replaces ``q^{2m}`` (for mutation tests).
    """
    _check(m, order)
    if coeff is None:
        coeff = qpow(2 * m)
    h = h_series(m, order)
    rhs = (
        SeriesX(order, [1, 0, -LaurentQ.q()])
        - SeriesX.monomial(order, 2 * m + 1, coeff) * series_shift(h)
    )
    return (h - rhs).is_zero()
