"""Colored Jones polynomials of torus knots.

Five independent routes to ``J_{T(s,t)}(N)`` (normalized so the unknot is 1):

* :func:`jones_morton` -- Morton's closed sum,
* :func:`jones_via_k` -- the Alexander-series function ``K_{s,t}(N)``,
* :func:`jones_recursion1` -- iterating the first-order recursion (``s = 2``),
* :func:`jones_hypergeometric` and :func:`jones_cyclotomic` -- terminating
  multi-sums (``s = 2``),
* :func:`jones_t34` -- the special sum for ``T(3,4)``,

plus exact checks of the difference equations that relate them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .chi import PeriodicChi
from .exactalg import (
    InvalidArgument,
    LaurentQ,
    NotDivisible,
    lp_div_exact,
    q_binomial,
    q_pochhammer,
    qpow,
)

__all__ = [
    "TorusKnotId",
    "Method",
    "JonesValue",
    "IntegralityError",
    "k_function",
    "jones_morton",
    "jones_via_k",
    "jones_recursion1",
    "jones_hypergeometric",
    "jones_cyclotomic",
    "jones_t34",
    "verify_k_recursion2",
    "verify_k_recursion1",
    "verify_jones_recursion2",
    "jones",
    "METHODS_TWO_STRAND",
]


class IntegralityError(ArithmeticError):
    """A computed invariant came out with a fractional exponent."""


@dataclass(frozen=True)
class TorusKnotId:
    """Torus knot ``T(s,t)``; the pair is stored with ``s < t``."""

    s: int
    t: int

    def __post_init__(self):
        s, t = self.s, self.t
        if not (isinstance(s, int) and isinstance(t, int)):
            raise InvalidArgument("s and t must be integers")
        if s > t:
            s, t = t, s
            object.__setattr__(self, "s", s)
            object.__setattr__(self, "t", t)
        if s < 2 or s == t:
            raise InvalidArgument(f"need 2 <= s < t, got ({self.s}, {self.t})")
        if gcd(s, t) != 1:
            raise InvalidArgument(f"({s}, {t}) is not a coprime pair")

    @classmethod
    def two_strand(cls, m: int) -> "TorusKnotId":
        if m < 1:
            raise InvalidArgument("m must be positive")
        return cls(2, 2 * m + 1)

    @property
    def is_two_strand(self) -> bool:
        return self.s == 2

    @property
    def m(self) -> int:
        if self.s != 2:
            raise InvalidArgument(f"T({self.s},{self.t}) is not of the form T(2,2m+1)")
        return (self.t - 1) // 2

    @property
    def chi(self) -> PeriodicChi:
        return PeriodicChi(self.s, self.t)

    def __str__(self):
        return f"T({self.s},{self.t})"


class Method(str, enum.Enum):
    MORTON = "morton"
    VIA_K = "via_k"
    RECURSION2 = "recursion2"
    RECURSION1 = "recursion1"
    HYPERGEOMETRIC = "hypergeometric"
    CYCLOTOMIC = "cyclotomic"
    T34 = "t34"


METHODS_TWO_STRAND = (Method.RECURSION1, Method.HYPERGEOMETRIC, Method.CYCLOTOMIC)


@dataclass(frozen=True)
class JonesValue:
    knot: TorusKnotId
    color: int
    value: LaurentQ
    method: Method

    def __post_init__(self):
        if self.color < 1:
            raise InvalidArgument("color N must be positive")
        if not self.value.is_integral():
            raise IntegralityError(
                f"{self.method.value}: J_{self.knot}({self.color}) has fractional exponents"
            )
        if self.color == 1 and self.value != 1:
            raise IntegralityError(f"{self.method.value}: J_{self.knot}(1) = {self.value}, expected 1")


def _check_color(N: int):
    if not isinstance(N, int) or N < 1:
        raise InvalidArgument(f"color N must be a positive integer, got {N!r}")


# -- K function and the routes through it -------------------------------


@lru_cache(maxsize=1024)
def _k_value(s: int, t: int, N: int) -> LaurentQ:
    st = s * t
    a = st - s - t
    chi = PeriodicChi(s, t)
    terms: dict[Fraction, int] = {}
    top = st * N
    for k in range(top + 1):
        c = chi(top - k)
        if c:
            e = Fraction(k * k - a * a, 4 * st)
            terms[e] = terms.get(e, 0) + c
    return LaurentQ(terms).shift(Fraction(N * (2 * a - st * N), 4))


def k_function(knot: TorusKnotId, N: int) -> LaurentQ:
    """``K_{s,t}(N)``, built from the inverse-Alexander coefficients."""
    if N < 0:
        raise InvalidArgument("N must be non-negative")
    return _k_value(knot.s, knot.t, N)


def jones_via_k(knot: TorusKnotId, N: int) -> JonesValue:
    _check_color(N)
    s, t = knot.s, knot.t
    k = k_function(knot, N)
    value = lp_div_exact(k, 1 - qpow(-N)).shift(Fraction((s - 1) * (t - 1) * (1 - N), 2))
    return JonesValue(knot, N, value, Method.VIA_K)


# -- Morton's formula ----------------------------------------------------


@lru_cache(maxsize=1024)
def _morton_value(s: int, t: int, N: int) -> LaurentQ:
    st = s * t
    terms: dict[Fraction, int] = {}
    # j = 2r runs over -(N-1), -(N-3), ..., N-1
    for j in range(1 - N, N, 2):
        e1 = Fraction(st * j * j - 2 * (s + t) * j + 2, 4)
        e2 = Fraction(st * j * j - 2 * (s - t) * j - 2, 4)
        terms[e1] = terms.get(e1, 0) + 1
        terms[e2] = terms.get(e2, 0) - 1
    num = LaurentQ(terms)
    den = qpow(Fraction(N, 2)) - qpow(Fraction(-N, 2))
    return lp_div_exact(num, den).shift(Fraction(st * (1 - N * N), 4))


def jones_morton(knot: TorusKnotId, N: int) -> JonesValue:
    _check_color(N)
    return JonesValue(knot, N, _morton_value(knot.s, knot.t, N), Method.MORTON)


# -- recursions ------------------------------------------------------------


def _k2_inhomogeneous(s: int, t: int, N: int) -> LaurentQ:
    return 1 - qpow(s * (1 - N) - 1) - qpow(t * (1 - N) - 1) + qpow((s + t) * (1 - N))


def verify_k_recursion2(knot: TorusKnotId, N: int, *, coeff: LaurentQ | None = None) -> bool:
    """Exact check of the second-order difference equation for ``K``.

    ``coeff`` overrides the multiplier of ``K(N-2)`` (used for mutation tests).
    """
    if N < 2:
        raise InvalidArgument("N must be at least 2")
    s, t = knot.s, knot.t
    st = s * t
    if coeff is None:
        coeff = qpow(st * (2 - N) - s - t)
    rhs = _k2_inhomogeneous(s, t, N) + coeff * k_function(knot, N - 2)
    return (k_function(knot, N) - rhs).is_zero()


def verify_k_recursion1(m: int, N: int, *, coeff: LaurentQ | None = None) -> bool:
    """Exact check of the first-order difference equation for ``K_{2,2m+1}``."""
    if N < 1:
        raise InvalidArgument("N must be positive")
    knot = TorusKnotId.two_strand(m)
    if coeff is None:
        coeff = qpow(2 * m * (1 - N) - N)
    rhs = 1 - qpow(1 - 2 * N) - coeff * k_function(knot, N - 1)
    return (k_function(knot, N) - rhs).is_zero()


def verify_jones_recursion2(knot: TorusKnotId, N: int) -> bool:
    """Check the second-order recursion for ``J`` on Morton values."""
    if N < 3:
        raise InvalidArgument("N must be at least 3")
    s, t = knot.s, knot.t
    st = s * t
    inhom = _k2_inhomogeneous(s, t, N).shift(Fraction((s - 1) * (t - 1) * (1 - N), 2))
    prev = jones_morton(knot, N - 2).value
    num = inhom + (1 - qpow(2 - N)) * prev.shift(st * (1 - N) - 1)
    try:
        rhs = lp_div_exact(num, 1 - qpow(-N))
    except NotDivisible:
        return False
    return rhs == jones_morton(knot, N).value


def _require_two_strand(m: int) -> TorusKnotId:
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument(f"m must be a positive integer, got {m!r}")
    return TorusKnotId.two_strand(m)


def jones_recursion1(m: int, N: int) -> JonesValue:
    """Iterate the first-order recursion for ``T(2,2m+1)`` from ``J(1) = 1``."""
    knot = _require_two_strand(m)
    _check_color(N)
    j = LaurentQ.one()
    for k in range(2, N + 1):
        num = qpow(m * (1 - k)) * (1 - qpow(1 - 2 * k)) - qpow(m - (2 * m + 1) * k) * (1 - qpow(1 - k)) * j
        j = lp_div_exact(num, 1 - qpow(-k))
    return JonesValue(knot, N, j, Method.RECURSION1)


# -- terminating multi-sums ----------------------------------------------


def _chain_sums(depth: int, top: int, weight) -> list[LaurentQ]:
    """``S[k] = sum over k_1 <= ... <= k_depth <= k`` with ``k_{depth+1} = k`` of
    ``prod_i weight(k_i) * [k_{i+1} choose k_i]``.

    Nested evaluation of the sum over weakly increasing tuples: each layer sums
    the previous one against ``weight(i) [k choose i]``.
    """
    layer = [LaurentQ.one()] * (top + 1)
    for _ in range(depth):
        nxt = []
        for k in range(top + 1):
            acc = LaurentQ.zero()
            for i in range(k + 1):
                acc = acc + weight(i) * q_binomial(k, i) * layer[i]
            nxt.append(acc)
        layer = nxt
    return layer


def jones_hypergeometric(m: int, N: int) -> JonesValue:
    knot = _require_two_strand(m)
    _check_color(N)
    # (q^{1-N})_k vanishes for k >= N, so k_m <= N - 1
    top = N - 1
    inner = _chain_sums(m - 1, top, lambda i: qpow(i * (i + 1 - 2 * N)))
    total = LaurentQ.zero()
    for k in range(top + 1):
        total = total + q_pochhammer(1 - N, k).shift(-N * k) * inner[k]
    return JonesValue(knot, N, total.shift(m * (1 - N)), Method.HYPERGEOMETRIC)


def jones_cyclotomic(m: int, N: int) -> JonesValue:
    knot = _require_two_strand(m)
    _check_color(N)
    total = LaurentQ.zero()
    for km in range(N):
        head = q_pochhammer(1 - N, km) * q_pochhammer(1 + N, km)
        try:
            head = lp_div_exact(head, q_pochhammer(1, km))
        except NotDivisible as exc:
            raise NotDivisible(f"cyclotomic term k_m={km} (m={m}, N={N}) is not a Laurent polynomial") from exc
        inner = _chain_sums(m - 1, km, lambda i: qpow((i - km) * (i - km - 1)))
        total = total + head * inner[km]
    return JonesValue(knot, N, total.shift(m * (1 - N * N)), Method.CYCLOTOMIC)


def jones_t34(N: int) -> JonesValue:
    _check_color(N)
    total = LaurentQ.zero()
    for n in range(N):
        bracket = LaurentQ.zero()
        for k in range((n - 1) // 2 + 1):
            bracket = bracket + q_binomial(n, 2 * k + 1).shift(2 * k * (k + 1 - N) + N)
        for k in range(n // 2 + 1):
            bracket = bracket + q_binomial(n + 1, 2 * k + 1).shift(2 * k * (k + 1 - N))
        total = total + q_pochhammer(1 - N, n).shift(-2 * N * n) * bracket
    return JonesValue(TorusKnotId(3, 4), N, total.shift(3 * (1 - N)), Method.T34)


def jones(knot: TorusKnotId, N: int, method: Method | str = Method.MORTON) -> JonesValue:
    """Dispatch to one computation route, validating that it applies."""
    method = Method(method)
    if method is Method.MORTON:
        return jones_morton(knot, N)
    if method is Method.VIA_K:
        return jones_via_k(knot, N)
    if method is Method.T34:
        if (knot.s, knot.t) != (3, 4):
            raise InvalidArgument("method t34 applies only to T(3,4)")
        return jones_t34(N)
    if method is Method.RECURSION2:
        raise InvalidArgument("the second-order recursion is only used as a check")
    if not knot.is_two_strand:
        raise InvalidArgument(f"method {method.value} requires s = 2")
    fn = {
        Method.RECURSION1: jones_recursion1,
        Method.HYPERGEOMETRIC: jones_hypergeometric,
        Method.CYCLOTOMIC: jones_cyclotomic,
    }[method]
    return fn(knot.m, N)
