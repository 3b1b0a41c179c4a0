"""Text renderings of polynomials (plain, LaTeX)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _plain_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _latex_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"{e.numerator}/{e.denominator}"


def _join(pieces: Sequence[tuple[int, str]], sep_plus=" + ", sep_minus=" - ") -> str:
    # pieces: (coefficient, monomial text without sign, '' for constants)
    if not pieces:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(pieces):
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((sep_minus if c < 0 else sep_plus) + body)
    return "".join(out)


def plain(terms: Sequence[tuple[Fraction, int]], var: str = "q") -> str:
    """Lowest exponent first, e.g. ``-q^-4 + q^-3 + q^-1``."""
    pieces = []
    for e, c in terms:
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{_plain_exp(e)}"
        pieces.append((c, mono))
    return _join(pieces)


def latex(terms: Sequence[tuple[Fraction, int]], var: str = "q") -> str:
    pieces = []
    for e, c in terms:
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{{{_latex_exp(e)}}}"
        pieces.append((c, mono))
    text = _join(pieces)
    return text.replace("*", " ")


def plain_bivariate(terms: Sequence[tuple[tuple[int, int], int]], names=("L", "M"), compact=True) -> str:
    """Render ``{(i, j): c}`` items in the given order, e.g. ``1+L*M^6``."""
    pieces = []
    for (i, j), c in terms:
        factors = []
        for name, k in zip(names, (i, j)):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        pieces.append((c, "*".join(factors)))
    if compact:
        return _join(pieces, "+", "-")
    return _join(pieces)


def latex_bivariate(terms: Sequence[tuple[tuple[int, int], int]], names=("L", "M")) -> str:
    pieces = []
    for (i, j), c in terms:
        factors = []
        for name, k in zip(names, (i, j)):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{{{k}}}")
        pieces.append((c, " ".join(factors)))
    return _join(pieces).replace("*", " ")
