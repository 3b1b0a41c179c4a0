"""Exact arithmetic kernel.

Laurent polynomials in one formal variable ``q`` with rational exponents and
integer coefficients, truncated power series in ``x`` over those, and the
q-Pochhammer symbol / Gaussian binomial.

Internally a :class:`LaurentQ` keeps its exponents as integers over a single
per-value denominator (always reduced), so that the hot loops run on plain
``int`` keys.  The public view is always in terms of :class:`fractions.Fraction`.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from itertools import repeat
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "RatExp",
    "LaurentQ",
    "SeriesX",
    "NotDivisible",
    "InvalidArgument",
    "lp_add",
    "lp_mul",
    "lp_div_exact",
    "lp_subst_inverse",
    "q_pochhammer",
    "q_binomial",
    "series_add",
    "series_mul",
    "series_shift",
    "qpow",
]

# Fraction already keeps lowest terms with a positive denominator and 0 == 0/1.
RatExp = Fraction

ExpLike = Union[int, Fraction, str]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class InvalidArgument(ValueError):
    pass


def as_ratexp(e: ExpLike) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, bool):
        raise TypeError("bool is not an exponent")
    if isinstance(e, (int, str)):
        return Fraction(e)
    raise TypeError(f"cannot use {type(e).__name__} as an exponent")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class LaurentQ:
    """Immutable Laurent polynomial in ``q`` with rational exponents.

    >>> q = LaurentQ.q()
    >>> (1 - q) * (1 + q)
    LaurentQ('1 - q^2')
    """

    __slots__ = ("_den", "_c", "_hash")

    def __init__(self, terms: Mapping[ExpLike, int] | None = None):
        if not terms:
            self._den, self._c = 1, {}
            self._hash = None
            return
        exps = {}
        for e, c in terms.items():
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers")
            if c:
                f = as_ratexp(e)
                exps[f] = exps.get(f, 0) + c
        den = 1
        for f in exps:
            den = _lcm(den, f.denominator)
        c = {}
        for f, v in exps.items():
            if v:
                c[f.numerator * (den // f.denominator)] = v
        self._den, self._c = _reduce(den, c)
        self._hash = None

    @classmethod
    def _raw(cls, den: int, c: dict) -> "LaurentQ":
        # c must not contain zero coefficients
        obj = cls.__new__(cls)
        obj._den, obj._c = _reduce(den, c)
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls._raw(1, {})

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls._raw(1, {0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentQ":
        return cls._raw(1, {0: c} if c else {})

    @classmethod
    def monomial(cls, exp: ExpLike, coef: int = 1) -> "LaurentQ":
        f = as_ratexp(exp)
        if not coef:
            return cls.zero()
        return cls._raw(f.denominator, {f.numerator: coef})

    @classmethod
    def q(cls) -> "LaurentQ":
        return cls._raw(1, {1: 1})

    # -- inspection ------------------------------------------------------

    def terms(self) -> list[tuple[Fraction, int]]:
        """Nonzero terms as ``(exponent, coefficient)``, exponents increasing."""
        d = self._den
        return [(Fraction(k, d), self._c[k]) for k in sorted(self._c)]

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.terms())

    def coefficient(self, exp: ExpLike) -> int:
        f = as_ratexp(exp)
        if self._den % f.denominator:
            return 0
        return self._c.get(f.numerator * (self._den // f.denominator), 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return self._den == 1

    def has_integer_coefficients(self) -> bool:
        return True  # enforced at construction

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> Fraction:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return Fraction(max(self._c), self._den)

    def valuation(self) -> Fraction:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return Fraction(min(self._c), self._den)

    def at_one(self) -> int:
        """Sum of coefficients, i.e. the value at ``q = 1``."""
        return sum(self._c.values())

    def int_terms(self) -> dict[int, int]:
        """Copy of the term map for an integral polynomial."""
        if self._den != 1:
            raise ValueError("polynomial has fractional exponents")
        return dict(self._c)

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other: "LaurentQ"):
        if self._den == other._den:
            return self._den, self._c, other._c
        den = _lcm(self._den, other._den)
        return den, _rescale(self._c, den // self._den), _rescale(other._c, den // other._den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        den, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, v in b.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentQ._raw(den, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw(self._den, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return LaurentQ.zero()
        den, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, vb), = b.items()
            return LaurentQ._raw(den, {k + kb: v * vb for k, v in a.items()})
        out: dict[int, int] = {}
        get = out.get
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                out[k] = get(k, 0) + va * vb
        return LaurentQ._raw(den, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._c) != 1:
                raise NotDivisible("only monomials have Laurent inverses")
            (k, v), = self._c.items()
            if v not in (1, -1):
                raise NotDivisible("monomial coefficient is not a unit")
            return LaurentQ._raw(self._den, {-k * -n: v ** -n})
        result = LaurentQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exp: ExpLike) -> "LaurentQ":
        """Multiply by ``q**exp``."""
        f = as_ratexp(exp)
        den = _lcm(self._den, f.denominator)
        c = _rescale(self._c, den // self._den)
        off = f.numerator * (den // f.denominator)
        return LaurentQ._raw(den, {k + off: v for k, v in c.items()})

    def scale_exponents(self, factor: ExpLike) -> "LaurentQ":
        """Substitute ``q -> q**factor``."""
        f = as_ratexp(factor)
        if f == 0:
            return LaurentQ.const(self.at_one())
        den = self._den * f.denominator
        return LaurentQ._raw(den, _merge((k * f.numerator, v) for k, v in self._c.items()))

    def subst_inverse(self) -> "LaurentQ":
        return LaurentQ._raw(self._den, {-k: v for k, v in self._c.items()})

    def exact_div(self, other: "LaurentQ") -> "LaurentQ":
        return lp_div_exact(self, other)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._den == other._den and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._den, frozenset(self._c.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentQ({self.to_plain()!r})"

    def to_plain(self, var: str = "q") -> str:
        from .render import plain

        return plain(self.terms(), var)

    def to_json(self) -> list[dict[str, str]]:
        return [{"exp": _exp_str(e), "coef": str(c)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, str]]) -> "LaurentQ":
        terms: dict[Fraction, int] = {}
        last = None
        for item in data:
            e = Fraction(item["exp"])
            if last is not None and e <= last:
                raise ValueError("exponents must be strictly increasing")
            last = e
            c = int(item["coef"])
            if c == 0:
                raise ValueError("zero coefficient in serialized polynomial")
            terms[e] = c
        return cls(terms)


def _exp_str(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _coerce(x):
    if isinstance(x, LaurentQ):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentQ.const(x)
    return NotImplemented


def _rescale(c: dict, factor: int) -> dict:
    if factor == 1:
        return c
    return {k * factor: v for k, v in c.items()}


def _merge(items) -> dict:
    out: dict[int, int] = {}
    for k, v in items:
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _reduce(den: int, c: dict):
    if den == 1 or not c:
        return 1 if not c else den, c
    g = den
    for k in c:
        g = gcd(g, k)
        if g == 1:
            return den, c
    return den // g, {k // g: v for k, v in c.items()}


def qpow(exp: ExpLike, coef: int = 1) -> LaurentQ:
    """Shorthand for the monomial ``coef * q**exp``."""
    return LaurentQ.monomial(exp, coef)


# -- module-level operations ----------------------------------------------


def lp_add(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a + b


def lp_mul(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a * b


def lp_subst_inverse(a: LaurentQ) -> LaurentQ:
    return a.subst_inverse()


def lp_div_exact(num: LaurentQ, den: LaurentQ) -> LaurentQ:
    """Exact quotient ``num / den`` by leading-term elimination.

    Elimination runs from the highest exponent downward.  Raises
    :class:`NotDivisible` if a nonzero remainder survives.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentQ.zero()
    d, n, v = num._aligned(den)
    if len(v) == 1:
        (kv, cv), = v.items()
        out = {}
        for k, c in n.items():
            qc, r = divmod(c, cv)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {cv}")
            out[k - kv] = qc
        return LaurentQ._raw(d, out)
    if len(v) == 2:
        quot = _div_binomial(n, v)
    else:
        quot = _div_general(n, v)
    return LaurentQ._raw(d, quot)


def _div_general(n: dict, v: dict) -> dict:
    v_hi, v_lo = max(v), min(v)
    lead = v[v_hi]
    others = [(k - v_hi, c) for k, c in v.items() if k != v_hi]
    n_lo = min(n)
    # lowest exponent a quotient term may have
    stop = n_lo - v_lo + v_hi
    rem = dict(n)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    while heap:
        e = -heapq.heappop(heap)
        c = rem.pop(e, 0)
        if not c:
            continue
        if e < stop:
            raise NotDivisible(f"nonzero remainder at exponent index {e}")
        qc, r = divmod(c, lead)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by leading coefficient {lead}")
        quot[e - v_hi] = qc
        for off, oc in others:
            k = e + off
            if k in rem:
                s = rem[k] - qc * oc
                if s:
                    rem[k] = s
                else:
                    del rem[k]
            else:
                rem[k] = -qc * oc
                heapq.heappush(heap, -k)
    return quot


def _div_binomial(n: dict, v: dict) -> dict:
    """Leading-term elimination against ``hi*q^a + lo*q^b``.

    Each residue class modulo ``a - b`` is eliminated independently.  Between
    two numerator terms the quotient is geometric with ratio ``-lo/hi``; when
    that ratio is a unit the run is written in bulk.
    """
    a, b = max(v), min(v)
    hi, lo = v[a], v[b]
    step = a - b
    stop = min(n) + step  # lowest position that can still be eliminated
    ratio, rr = divmod(-lo, hi)
    bulk = rr == 0 and ratio in (1, -1)
    classes: dict[int, list[int]] = {}
    for k in n:
        classes.setdefault(k % step, []).append(k)
    quot: dict[int, int] = {}
    for keys in classes.values():
        keys.sort(reverse=True)
        i, nk = 0, len(keys)
        pos, carry = keys[0], 0
        while True:
            c = carry
            if i < nk and keys[i] == pos:
                c += n[pos]
                i += 1
            if pos < stop or not c:
                if c:
                    raise NotDivisible("nonzero remainder in binomial division")
                if i >= nk:
                    break
                pos, carry = keys[i], 0
                continue
            qc, r = divmod(c, hi)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by leading coefficient {hi}")
            quot[pos - a] = qc
            pos -= step
            if bulk:
                last = stop if i >= nk else max(keys[i] + step, stop)
                if pos >= last:
                    cnt = (pos - last) // step + 1
                    if ratio == 1:
                        quot.update(zip(range(pos - a, last - a - 1, -step), repeat(qc)))
                    else:
                        quot.update(zip(range(pos - a, last - a - 1, -2 * step), repeat(-qc)))
                        quot.update(zip(range(pos - step - a, last - a - 1, -2 * step), repeat(qc)))
                        qc = qc * (-1) ** cnt
                    pos = last - step
            carry = -lo * qc
    return quot


@lru_cache(maxsize=4096)
def q_pochhammer(a: ExpLike, n: int) -> LaurentQ:
    """``(q^a; q)_n = prod_{k=1}^{n} (1 - q^(a+k-1))``."""
    if n < 0:
        raise InvalidArgument("n must be non-negative")
    a = as_ratexp(a)
    result = LaurentQ.one()
    for k in range(1, n + 1):
        e = a + k - 1
        if e == 0:
            return LaurentQ.zero()
        result = result * (1 - qpow(e))
    return result


@lru_cache(maxsize=8192)
def q_binomial(n: int, m: int) -> LaurentQ:
    """Gaussian binomial ``[n choose m]_q`` as a polynomial in ``q``."""
    if n < 0 or m < 0:
        raise InvalidArgument("arguments must be non-negative")
    if m > n:
        raise InvalidArgument(f"m={m} exceeds n={n}")
    m = min(m, n - m)
    if m == 0:
        return LaurentQ.one()
    # q-Pascal: [n, m] = [n-1, m-1] + q^m [n-1, m]
    return q_binomial(n - 1, m - 1) + q_binomial(n - 1, m).shift(m)


# -- truncated series in x ----------------------------------------------


class SeriesX:
    """Power series in ``x`` with :class:`LaurentQ` coefficients, truncated
    below ``x**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[LaurentQ | int] = ()):
        if order < 0:
            raise InvalidArgument("order must be non-negative")
        cs = [c if isinstance(c, LaurentQ) else LaurentQ.const(c) for c in coeffs][:order]
        cs.extend(LaurentQ.zero() for _ in range(order - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, order: int, deg: int, coef: LaurentQ | int = 1) -> "SeriesX":
        cs = [LaurentQ.zero()] * order
        if deg < order:
            cs[deg] = coef if isinstance(coef, LaurentQ) else LaurentQ.const(coef)
        return cls(order, cs)

    def __getitem__(self, i: int) -> LaurentQ:
        return self.coeffs[i]

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, SeriesX):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __neg__(self):
        return SeriesX(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, SeriesX):
            return series_mul(self, other)
        if isinstance(other, (LaurentQ, int)):
            return SeriesX(self.order, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, order: int) -> "SeriesX":
        return SeriesX(min(order, self.order), self.coeffs)

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c.to_plain()})*x^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"SeriesX({body} + O(x^{self.order}))"


def series_add(a: SeriesX, b: SeriesX) -> SeriesX:
    order = min(a.order, b.order)
    return SeriesX(order, [a.coeffs[i] + b.coeffs[i] for i in range(order)])


def series_mul(a: SeriesX, b: SeriesX) -> SeriesX:
    order = min(a.order, b.order)
    out = [LaurentQ.zero()] * order
    for i in range(order):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(order - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return SeriesX(order, out)


def series_shift(a: SeriesX) -> SeriesX:
    """Substitute ``x -> q*x``; the coefficient of ``x^i`` picks up ``q^i``."""
    return SeriesX(a.order, [c.shift(i) for i, c in enumerate(a.coeffs)])
