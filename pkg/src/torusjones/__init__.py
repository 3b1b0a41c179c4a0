"""Exact colored Jones polynomials of torus knots, their q-difference
equations and the A-polynomials derived from them."""

from .exactalg import LaurentQ, SeriesX, NotDivisible, InvalidArgument, q_binomial, q_pochhammer
from .chi import PeriodicChi, chi_value
from .jones import (
    TorusKnotId,
    JonesValue,
    Method,
    k_function,
    jones,
    jones_morton,
    jones_via_k,
    jones_recursion1,
    jones_hypergeometric,
    jones_cyclotomic,
    jones_t34,
    verify_k_recursion1,
    verify_k_recursion2,
    verify_jones_recursion2,
)
from .hseries import h_series, h_chi_series, verify_h_difference
from .alexander import alexander_poly, inverse_series
from .ajpoly import APoly, check_aj, homogenize, recursion_as_operator, specialize_q1

__version__ = "0.1.0"
