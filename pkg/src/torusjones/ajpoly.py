"""Recurrence operators in ``(E, Q; q)`` and the passage to the A-polynomial.

A recursion for ``J(N)`` is stored with coefficients that are rational
functions of ``Q = q^N`` and ``q``.  Homogenizing it and setting ``q = 1``,
``Q = M^2``, ``E = L`` yields a polynomial in ``(L, M)`` which is compared
with the known A-polynomial of the torus knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Callable, Iterable, Mapping

from .exactalg import InvalidArgument, LaurentQ, NotDivisible, lp_div_exact, qpow
from .jones import TorusKnotId
from .render import latex_bivariate, plain_bivariate

__all__ = [
    "BivarPoly",
    "RatExpr",
    "RecurrenceOp",
    "APoly",
    "AJReport",
    "DegenerateSpecialization",
    "recursion_as_operator",
    "homogenize",
    "specialize_q1",
    "a_polynomial_reference",
    "check_aj",
    "apply_operator",
]


class DegenerateSpecialization(ArithmeticError):
    """Every coefficient of the operator vanishes at ``q = 1``."""


class BivarPoly:
    """Laurent polynomial in two variables with integer coefficients.

    ``terms`` maps ``(e1, e2)`` to the coefficient of ``v1^e1 v2^e2`` where
    ``names == (v1, v2)``.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None, names=("Q", "q")):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.names = tuple(names)

    @classmethod
    def mono(cls, e1: int = 0, e2: int = 0, coef: int = 1, names=("Q", "q")) -> "BivarPoly":
        return cls({(e1, e2): coef}, names)

    @classmethod
    def const(cls, c: int, names=("Q", "q")) -> "BivarPoly":
        return cls({(0, 0): c}, names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.const(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPoly(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), u in self.terms.items():
            for (b1, b2), v in other.terms.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + u * v
        return BivarPoly(out, self.names)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items())

    def __repr__(self):
        return f"BivarPoly({plain_bivariate(self.sorted_terms(), self.names, compact=False)!r})"

    # -- operations specific to coefficients in (Q, q) --------------------

    def shift_q(self, k: int = 1) -> "BivarPoly":
        """Substitute ``Q -> Q q^k`` (the effect of ``N -> N + k``)."""
        return BivarPoly({(i, j + k * i): c for (i, j), c in self.terms.items()}, self.names)

    def at_qpow(self, N: int) -> LaurentQ:
        """Evaluate at ``Q = q^N``."""
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            e = i * N + j
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    def _by_first(self) -> dict[int, LaurentQ]:
        groups: dict[int, dict[int, int]] = {}
        for (i, j), c in self.terms.items():
            groups.setdefault(i, {})[j] = c
        return {i: LaurentQ(g) for i, g in groups.items()}

    def vanishes_at_q1(self) -> bool:
        return all(p.at_one() == 0 for p in self._by_first().values())

    def div_q_minus_1(self) -> "BivarPoly":
        """Exact division by ``(q - 1)``."""
        out = {}
        for i, p in self._by_first().items():
            for e, c in lp_div_exact(p, qpow(1) - 1).terms():
                out[(i, int(e))] = c
        return BivarPoly(out, self.names)

    def specialize_q1(self) -> LaurentQ:
        """``q -> 1, Q -> M^2``; the result is read as a polynomial in ``M``."""
        out: dict[int, int] = {}
        for (i, _), c in self.terms.items():
            out[2 * i] = out.get(2 * i, 0) + c
        return LaurentQ(out)


class RatExpr:
    """Quotient of two :class:`BivarPoly`; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: BivarPoly | int, den: BivarPoly | int = 1):
        if isinstance(num, int):
            num = BivarPoly.const(num)
        if isinstance(den, int):
            den = BivarPoly.const(den, num.names)
        if den.is_zero():
            raise ZeroDivisionError("RatExpr with zero denominator")
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatExpr") -> "RatExpr":
        if self.den == other.den:
            return RatExpr(self.num + other.num, self.den)
        return RatExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatExpr(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RatExpr") -> "RatExpr":
        return RatExpr(self.num * other.num, self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, RatExpr):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def shift_q(self, k: int = 1) -> "RatExpr":
        return RatExpr(self.num.shift_q(k), self.den.shift_q(k))

    def at_qpow(self, N: int) -> tuple[LaurentQ, LaurentQ]:
        return self.num.at_qpow(N), self.den.at_qpow(N)

    def __repr__(self):
        return f"RatExpr({self.num!r} / {self.den!r})"


@dataclass(frozen=True)
class RecurrenceOp:
    """``sum_k coeff_k(Q, q) E^k``, optionally equated to an inhomogeneous term."""

    entries: tuple[tuple[int, RatExpr], ...]
    inhomogeneous: RatExpr | None = None

    def __post_init__(self):
        if not self.entries:
            raise InvalidArgument("operator needs at least one entry")
        shifts = [k for k, _ in self.entries]
        if any(k < 0 for k in shifts) or shifts != sorted(set(shifts)):
            raise InvalidArgument("shifts must be non-negative and strictly increasing")
        if self.entries[-1][1].is_zero():
            raise InvalidArgument("leading coefficient vanishes")

    @property
    def order(self) -> int:
        return self.entries[-1][0]

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    @property
    def is_homogeneous(self) -> bool:
        return self.inhomogeneous is None or self.inhomogeneous.is_zero()

    def coefficient(self, shift: int) -> RatExpr | None:
        for k, c in self.entries:
            if k == shift:
                return c
        return None

    def scaled(self, factor: RatExpr) -> "RecurrenceOp":
        """Multiply the whole relation by ``factor``."""
        inh = None if self.inhomogeneous is None else self.inhomogeneous * factor
        return RecurrenceOp(tuple((k, c * factor) for k, c in self.entries), inh)


# -- building operators from the recursions -----------------------------


def _Q(i: int, j: int = 0, c: int = 1) -> BivarPoly:
    return BivarPoly.mono(i, j, c)


def recursion_as_operator(knot: TorusKnotId, order: int) -> RecurrenceOp:
    """Rewrite a recursion for ``J`` as ``(sum_k a_k E^k) J(N) = f(N)``.

    ``order=1`` is the first-order recursion for ``T(2,2m+1)`` shifted by one,
    relating ``J(N+1)`` and ``J(N)``; ``order=2`` is the second-order
    recursion shifted by two.
    """
    s, t = knot.s, knot.t
    one = _Q(0)
    if order == 1:
        if s != 2:
            raise InvalidArgument("the first-order recursion requires s = 2")
        m = knot.m
        # J(N+1) + q^{-m-1} Q^{-(2m+1)} (1 - Q^-1)/(1 - q^-1 Q^-1) J(N)
        #   = Q^{-m} (1 - q^-1 Q^-2)/(1 - q^-1 Q^-1)
        den = one - _Q(-1, -1)
        c0 = RatExpr(_Q(-(2 * m + 1), -m - 1) * (one - _Q(-1)), den)
        inh = RatExpr(_Q(-m) * (one - _Q(-2, -1)), den)
        return RecurrenceOp(((0, c0), (1, RatExpr(one))), inh)
    if order == 2:
        st = s * t
        h = (s - 1) * (t - 1) // 2
        # J(N+2) - q^{-st-1} Q^{-st} (1 - Q^-1)/(1 - q^-2 Q^-1) J(N)
        #   = q^-h Q^-h (1 - q^{-s-1}Q^-s - q^{-t-1}Q^-t + q^{-s-t}Q^{-s-t}) / (1 - q^-2 Q^-1)
        den = one - _Q(-1, -2)
        c0 = RatExpr(-(_Q(-st, -st - 1) * (one - _Q(-1))), den)
        bracket = one - _Q(-s, -s - 1) - _Q(-t, -t - 1) + _Q(-s - t, -s - t)
        inh = RatExpr(_Q(-h, -h) * bracket, den)
        return RecurrenceOp(((0, c0), (2, RatExpr(one))), inh)
    raise InvalidArgument(f"order must be 1 or 2, got {order}")


def homogenize(op: RecurrenceOp) -> RecurrenceOp:
    """Eliminate the inhomogeneous term ``f``: ``f(N) R(N+1) - f(N+1) R(N) = 0``."""
    if op.is_homogeneous:
        raise InvalidArgument("operator is already homogeneous")
    f = op.inhomogeneous
    f1 = f.shift_q(1)
    acc: dict[int, RatExpr] = {}

    def add(k, r):
        acc[k] = acc[k] + r if k in acc else r

    for k, c in op.entries:
        add(k + 1, f * c.shift_q(1))
        add(k, -(f1 * c))
    entries = tuple((k, acc[k]) for k in sorted(acc) if not acc[k].is_zero())
    return RecurrenceOp(entries, None)


def apply_operator(op: RecurrenceOp, values: Mapping[int, LaurentQ] | Callable[[int], LaurentQ], N: int) -> tuple[LaurentQ, LaurentQ]:
    """Evaluate ``(op J)(N) - f(N)`` at generic ``q`` as a fraction ``(num, den)``.

    The relation holds at ``N`` exactly when ``num`` is zero.
    """
    get = values if callable(values) else values.__getitem__
    num, den = LaurentQ.zero(), LaurentQ.one()
    for k, c in op.entries:
        a, b = c.at_qpow(N)
        if b.is_zero():
            raise ZeroDivisionError(f"coefficient of E^{k} has a pole at N={N}")
        term = a * get(N + k)
        num, den = num * b + term * den, den * b
    if not op.is_homogeneous:
        a, b = op.inhomogeneous.at_qpow(N)
        num, den = num * b - a * den, den * b
    return num, den


# -- univariate helpers over Z[M] ------------------------------------------


def _dense(p: LaurentQ) -> list[int]:
    t = p.int_terms()
    lo = min(t)
    out = [0] * (max(t) - lo + 1)
    for k, c in t.items():
        out[k - lo] = c
    return out  # ascending, monomial factor dropped


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    g = reduce(gcd, a, 0)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and a:
        la = a[-1]
        off = len(a) - len(b)
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + off] -= la * c
        _trim(a)
    return a


def _upoly_gcd(p: LaurentQ, r: LaurentQ) -> LaurentQ:
    """Primitive gcd in ``Z[M]`` of the polynomial parts (monomials ignored)."""
    a, b = _primitive(_dense(p)), _primitive(_dense(r))
    while b:
        a, b = b, _primitive(_prem(a, b))
    return LaurentQ({i: c for i, c in enumerate(_primitive(a))})


def _strip_monomial(p: LaurentQ) -> LaurentQ:
    return LaurentQ({i: c for i, c in enumerate(_dense(p)) if c})


# -- A-polynomials ----------------------------------------------------------


class APoly:
    """Polynomial in ``(L, M)`` normalized up to monomials, sign and integer
    content: lowest exponents 0, content 1, lex-leading coefficient > 0."""

    __slots__ = ("poly",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | BivarPoly):
        if isinstance(terms, BivarPoly):
            terms = terms.terms
        self.poly = BivarPoly(_normalize(terms), ("L", "M"))

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self.poly.terms)

    def sorted_terms(self):
        return self.poly.sorted_terms()

    def __eq__(self, other):
        if not isinstance(other, APoly):
            return NotImplemented
        return self.poly.terms == other.poly.terms

    def __hash__(self):
        return hash(self.poly)

    def normalized(self) -> "APoly":
        return APoly(self.poly.terms)

    def l_degree(self) -> int:
        return max(i for i, _ in self.poly.terms)

    def __mul__(self, other: "APoly") -> "APoly":
        return APoly((self.poly * other.poly).terms)

    def divide(self, other: "APoly") -> "APoly | None":
        """Exact cofactor ``self / other`` in ``Z[L, M]`` or ``None``."""
        q = _bivar_div(self.poly.terms, other.poly.terms)
        return None if q is None else APoly(q)

    def to_json(self) -> list[dict]:
        return [{"l": i, "m": j, "coef": str(c)} for (i, j), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "APoly":
        return cls({(int(d["l"]), int(d["m"])): int(d["coef"]) for d in data})

    def expanded(self) -> str:
        return plain_bivariate(self.sorted_terms())

    def to_plain(self) -> str:
        """``(L-1)(...)`` when ``L - 1`` divides, otherwise the expansion."""
        cof = _bivar_div(self.poly.terms, {(1, 0): 1, (0, 0): -1})
        if cof is None or not cof:
            return self.expanded()
        return "(L-1)(" + plain_bivariate(sorted(cof.items())) + ")"

    def to_latex(self) -> str:
        cof = _bivar_div(self.poly.terms, {(1, 0): 1, (0, 0): -1})
        if cof is None or not cof:
            return latex_bivariate(self.sorted_terms())
        return "(L - 1)(" + latex_bivariate(sorted(cof.items())) + ")"

    def __repr__(self):
        return f"APoly({self.expanded()!r})"


def _normalize(terms: Mapping[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        return {}
    li = min(i for i, _ in terms)
    mj = min(j for _, j in terms)
    g = reduce(gcd, terms.values(), 0)
    lead = terms[max(terms)]
    if lead < 0:
        g = -g
    return {(i - li, j - mj): c // g for (i, j), c in terms.items()}


def _bivar_div(a: Mapping, b: Mapping) -> dict | None:
    """Lex leading-term division; ``None`` if not exact over ``Z``."""
    if not b:
        raise ZeroDivisionError
    rem = dict(a)
    lb = max(b)
    cb = b[lb]
    quot: dict[tuple[int, int], int] = {}
    while rem:
        la = max(rem)
        e = (la[0] - lb[0], la[1] - lb[1])
        if e[0] < 0 or e[1] < 0:
            return None
        c, r = divmod(rem[la], cb)
        if r:
            return None
        quot[e] = c
        for (i, j), v in b.items():
            k = (i + e[0], j + e[1])
            s = rem.get(k, 0) - c * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return quot


def specialize_q1(op: RecurrenceOp) -> APoly:
    """``q -> 1``, ``Q -> M^2``, ``E -> L``, denominators cleared.

    Factors depending on ``M`` alone are removed (the content of the result as
    a polynomial in ``L`` over ``Z[M]``), as are monomials, sign and integer
    content.
    """
    if not op.is_homogeneous:
        raise InvalidArgument("specialize a homogeneous operator")
    nums, dens = [], []
    for k, c in op.entries:
        n, d = c.num, c.den
        while n.vanishes_at_q1() and d.vanishes_at_q1() and not n.is_zero():
            n, d = n.div_q_minus_1(), d.div_q_minus_1()
        if n.is_zero():
            continue
        n1, d1 = n.specialize_q1(), d.specialize_q1()
        if d1.is_zero():
            raise DegenerateSpecialization(f"coefficient of E^{k} has a pole at q = 1")
        if n1.is_zero():
            continue
        nums.append((k, n1))
        dens.append(d1)
    if not nums:
        raise DegenerateSpecialization("every coefficient vanishes at q = 1")
    lcm = _strip_monomial(dens[0])
    for d in dens[1:]:
        d = _strip_monomial(d)
        lcm = lp_div_exact(lcm * d, _upoly_gcd(lcm, d))
    # Laurent division keeps each denominator's monomial factor
    coeffs = [(k, n * lp_div_exact(lcm, d)) for (k, n), d in zip(nums, dens)]
    content = reduce(_upoly_gcd, (p for _, p in coeffs[1:]), coeffs[0][1])
    terms: dict[tuple[int, int], int] = {}
    for k, p in coeffs:
        for e, c in lp_div_exact(p, content).terms():
            terms[(k, int(e))] = terms.get((k, int(e)), 0) + c
    return APoly(terms)


def a_polynomial_reference(knot: TorusKnotId) -> APoly:
    """The known A-polynomial: ``(L-1)(1 + L M^{2(2m+1)})`` for ``T(2,2m+1)``,
    ``(L-1)(-1 + L^2 M^{2st})`` otherwise."""
    s, t = knot.s, knot.t
    lm1 = BivarPoly({(1, 0): 1, (0, 0): -1}, ("L", "M"))
    if s == 2:
        other = BivarPoly({(0, 0): 1, (1, 2 * t): 1}, ("L", "M"))
    else:
        other = BivarPoly({(0, 0): -1, (2, 2 * s * t): 1}, ("L", "M"))
    return APoly(lm1 * other)


@dataclass(frozen=True)
class AJReport:
    knot: TorusKnotId
    order: int
    match: bool
    computed: APoly
    reference: APoly
    divisible: bool
    cofactor: APoly | None

    def to_json(self) -> dict:
        return {
            "knot": [self.knot.s, self.knot.t],
            "order": self.order,
            "match": self.match,
            "divisible": self.divisible,
            "computed": self.computed.to_json(),
            "reference": self.reference.to_json(),
            "cofactor": None if self.cofactor is None else self.cofactor.to_json(),
        }


def check_aj(knot: TorusKnotId, order: int | None = None) -> AJReport:
    """Derive the A-polynomial from a recursion and compare with the reference.

    By default the minimal recursion is used: first order for ``s = 2``,
    second order otherwise.
    """
    if order is None:
        order = 1 if knot.s == 2 else 2
    computed = specialize_q1(homogenize(recursion_as_operator(knot, order)))
    reference = a_polynomial_reference(knot)
    cof = computed.divide(reference)
    return AJReport(
        knot=knot,
        order=order,
        match=computed == reference,
        computed=computed,
        reference=reference,
        divisible=cof is not None,
        cofactor=cof,
    )
