"""Alexander polynomial of ``T(s,t)`` and the expansion of
``(A^{1/2} - A^{-1/2}) / Delta(A)`` at ``A -> infinity``.

Polynomials here are :class:`LaurentQ` values read in the variable ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import InvalidArgument, LaurentQ, lp_div_exact, qpow
from .jones import TorusKnotId

__all__ = ["AlexSeries", "alexander_poly", "inverse_series"]


def _sym(e: Fraction) -> LaurentQ:
    # A^e - A^-e
    return qpow(e) - qpow(-e)


def alexander_poly(knot: TorusKnotId) -> LaurentQ:
    s, t = knot.s, knot.t
    half = Fraction(1, 2)
    num = _sym(half) * _sym(Fraction(s * t, 2))
    delta = lp_div_exact(lp_div_exact(num, _sym(Fraction(s, 2))), _sym(Fraction(t, 2)))
    return delta


@dataclass(frozen=True)
class AlexSeries:
    """Coefficients of ``A^{-n/2}`` for ``0 <= n <= order``."""

    knot: TorusKnotId
    order: int
    coeffs: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def inverse_series(knot: TorusKnotId, n_max: int) -> AlexSeries:
    if n_max < 1:
        raise InvalidArgument("n_max must be positive")
    delta = alexander_poly(knot)
    # work in u = A^{-1/2}:  A^e -> u^{-2e}
    d_terms = {-2 * int(e): c for e, c in delta.terms()}
    v = min(d_terms)
    den = [0] * (max(d_terms) - v + 1)
    for k, c in d_terms.items():
        den[k - v] = c
    lead = den[0]
    if lead not in (1, -1):
        raise ArithmeticError("Alexander polynomial is not monic")
    # (u^{-1} - u) / (u^v D(u)) = u^{-1-v} (1 - u^2) / D(u)
    offset = -1 - v
    length = n_max + 1 - offset
    out = [0] * (n_max + 1)
    if length > 0:
        rem = [0] * length
        rem[0] = 1
        if length > 2:
            rem[2] = -1
        quot = [0] * length
        for i in range(length):
            c = rem[i]
            if not c:
                continue
            qc = c * lead  # lead is a unit
            quot[i] = qc
            for j in range(1, min(len(den), length - i)):
                if den[j]:
                    rem[i + j] -= qc * den[j]
        for i, c in enumerate(quot):
            n = i + offset
            if 0 <= n <= n_max:
                out[n] = c
    return AlexSeries(knot, n_max, tuple(out))
