"""The odd periodic function of modulus ``2st`` attached to a torus knot."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exactalg import InvalidArgument

__all__ = ["PeriodicChi", "chi_value"]


@dataclass(frozen=True)
class PeriodicChi:
    """``chi_{2st}``: +1 at residues ``st-s-t`` and ``st+s+t``, -1 at
    ``st-t+s`` and ``st+t-s``, zero elsewhere (residues mod ``2st``)."""

    s: int
    t: int
    modulus: int = field(init=False)
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        s, t = self.s, self.t
        if s < 2 or t < 2:
            raise InvalidArgument(f"need s, t >= 2, got ({s}, {t})")
        if gcd(s, t) != 1:
            raise InvalidArgument(f"s={s} and t={t} are not coprime")
        st = s * t
        mod = 2 * st
        table = {
            (st - s - t) % mod: 1,
            (st - t + s) % mod: -1,
            (st + t - s) % mod: -1,
            (st + s + t) % mod: 1,
        }
        assert len(table) == 4
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "_table", table)

    def __call__(self, n: int) -> int:
        return self._table.get(n % self.modulus, 0)

    def residues(self) -> dict[int, int]:
        """The four nonzero residues in ``[0, 2st)`` with their signs."""
        return dict(sorted(self._table.items()))


def chi_value(c: PeriodicChi, n: int) -> int:
    return c(n)
