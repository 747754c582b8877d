"""Frobenius-Euler numbers and polynomials of all orders, plus their
Bernoulli and Euler companions.

The order-1 numbers H_n(u) are the EGF coefficients of (1-u)/(e^t - u);
they satisfy H_0 = 1 and, for n > 0,

    H_n(u) = (sum_{l<n} C(n,l) H_l(u)) / (u - 1),

which is the recurrence used here (the series expansion is kept in
:mod:`feident.series` as an independent oracle).  Order-N numbers are the
coefficients of the N-th power of the order-1 EGF.

The closed formula for higher-order numbers in terms of the coefficient
triangle comes in two variants: ``corrected`` carries the prefactor
((u-1)/u)^(N-1), which the generating-function oracle confirms, and
``as_printed`` carries ((1-u)/u)^(N-1), the commonly typeset form whose
sign is wrong for even N.  Both are computable so that the verification
harness can audit the difference.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import binomial
from .poly import Polynomial
from .series import bernoulli_oracle, frobenius_oracle, series_pow
from .stirling import triangle_recurrence

__all__ = [
    "VARIANTS",
    "fe_number",
    "fe_polynomial",
    "fe_higher_numbers",
    "fe_higher_number_oracle",
    "fe_higher_number_formula",
    "fe_higher_polynomial",
    "euler_polynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
]

VARIANTS = ("as_printed", "corrected")


def _check_u(u: Fraction, forbid_zero: bool = False) -> Fraction:
    u = Fraction(u)
    if u == 1:
        raise ValueError("u = 1 is outside the parameter domain")
    if forbid_zero and u == 0:
        raise ValueError("u = 0 is outside the parameter domain (division by u)")
    return u


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return variant


@lru_cache(maxsize=None)
def _fe_number(n: int, u: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for l in range(n):
        acc += binomial(n, l) * _fe_number(l, u)
    return acc / (u - 1)


def fe_number(n: int, u: Fraction) -> Fraction:
    """n-th Frobenius-Euler number H_n(u), by recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _fe_number(n, _check_u(u))


def fe_polynomial(n: int, u: Fraction) -> Polynomial:
    """H_n(x|u) = sum_l C(n,l) x^(n-l) H_l(u); monic of degree n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    u = _check_u(u)
    return Polynomial([binomial(n, d) * _fe_number(n - d, u) for d in range(n + 1)])


def fe_higher_numbers(n_max: int, order: int, u: Fraction) -> tuple[Fraction, ...]:
    """H_0^(N)(u)..H_{n_max}^(N)(u) as coefficients of the N-th power of
    the order-1 generating function."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    u = _check_u(u)
    return series_pow(frobenius_oracle(u, n_max), order).coeffs


def fe_higher_number_oracle(n: int, order: int, u: Fraction) -> Fraction:
    """H_n^(N)(u) through the series route (the oracle side of the
    two-route checks)."""
    return fe_higher_numbers(n, order, u)[n]


def fe_higher_number_formula(
    n: int, order: int, u: Fraction, variant: str = "corrected"
) -> Fraction:
    """H_n^(N)(u) through the coefficient-triangle route:

        factor^(N-1) / (N-1)! * sum_k a_k(N) H_{n+k}(u)

    with factor (u-1)/u for ``corrected`` and (1-u)/u for ``as_printed``.
    Shares nothing with the series route beyond basic arithmetic.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    u = _check_u(u, forbid_zero=True)
    _check_variant(variant)
    factor = (1 - u) / u if variant == "as_printed" else (u - 1) / u
    row = triangle_recurrence(order).row(order)
    acc = Fraction(0)
    for k, weight in enumerate(row):
        acc += weight * _fe_number(n + k, u)
    return factor ** (order - 1) * acc / math.factorial(order - 1)


def fe_higher_polynomial(n: int, order: int, u: Fraction) -> Polynomial:
    """H_n^(N)(x|u) = sum_l C(n,l) x^(n-l) H_l^(N)(u), from the series
    route's higher-order numbers."""
    if n < 0:
        raise ValueError("n must be >= 0")
    numbers = fe_higher_numbers(n, order, u)
    return Polynomial([binomial(n, d) * numbers[n - d] for d in range(n + 1)])


def euler_polynomial(n: int) -> Polynomial:
    """E_n(x), the u = -1 specialization of H_n(x|u)."""
    return fe_polynomial(n, Fraction(-1))


@lru_cache(maxsize=None)
def _bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    return bernoulli_oracle(n_max).coeffs


def bernoulli_number(n: int) -> Fraction:
    """B_n from t/(e^t - 1); B_1 = -1/2 in this convention."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bernoulli_numbers(n)[n]


def bernoulli_polynomial(n: int) -> Polynomial:
    """B_n(x) = sum_l C(n,l) x^(n-l) B_l."""
    if n < 0:
        raise ValueError("n must be >= 0")
    numbers = _bernoulli_numbers(n)
    return Polynomial([binomial(n, d) * numbers[n - d] for d in range(n + 1)])
