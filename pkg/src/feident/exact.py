"""Exact rational scalars and combinatorial counting primitives.

Every quantity in this package is an exact ``fractions.Fraction`` (or an
arbitrary-precision ``int`` where integrality is guaranteed); nothing is
ever rounded.  This module also owns the text format used for rationals
on the command line and in JSON: ``"p/q"`` with an optional leading
``-``, the denominator omitted when it is 1 (``"2"``, ``"-1/3"``).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator, Sequence

__all__ = [
    "rat",
    "parse_rational",
    "format_rational",
    "binomial",
    "multinomial",
    "compositions",
    "weak_compositions",
]

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def rat(numer: int, denom: int = 1) -> Fraction:
    """Exact fraction numer/denom in canonical form (positive denominator,
    gcd-reduced).  Raises ValueError on a zero denominator."""
    if denom == 0:
        raise ValueError("zero denominator")
    return Fraction(numer, denom)


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" rational grammar.

    Accepts an optional leading minus sign and an optional "/q" part with
    q > 0; anything else (empty string, decimals, "1/0", signed
    denominators) is rejected with ValueError.
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational in p/q form: {text!r}")
    numer = int(m.group(1))
    denom = int(m.group(2)) if m.group(2) is not None else 1
    if denom == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(numer, denom)


def format_rational(value: Fraction | int) -> str:
    """Inverse of :func:`parse_rational`; ``Fraction`` already prints in
    canonical "p/q" form."""
    return str(Fraction(value))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient n!/(parts[0]! * parts[1]! * ...).

    The parts must be nonnegative and sum to n.
    """
    if n < 0:
        raise ValueError("multinomial needs n >= 0")
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    denom = 1
    for p in parts:
        denom *= math.factorial(p)
    return math.factorial(n) // denom


def compositions(total: int, num_parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers with ``num_parts`` entries
    summing to ``total``, in lexicographic order.

    There are C(total-1, num_parts-1) of them; the iterator is empty when
    num_parts > total.
    """
    if total < 1 or num_parts < 1:
        raise ValueError("compositions needs total >= 1 and num_parts >= 1")
    yield from _compositions(total, num_parts)


def _compositions(total: int, num_parts: int) -> Iterator[tuple[int, ...]]:
    if num_parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - num_parts + 2):
        for rest in _compositions(total - first, num_parts - 1):
            yield (first,) + rest


def weak_compositions(total: int, num_parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of nonnegative integers with ``num_parts`` entries
    summing to ``total``, in lexicographic order.

    There are C(total+num_parts-1, num_parts-1) of them.
    """
    if total < 0 or num_parts < 1:
        raise ValueError("weak_compositions needs total >= 0 and num_parts >= 1")
    yield from _weak_compositions(total, num_parts)


def _weak_compositions(total: int, num_parts: int) -> Iterator[tuple[int, ...]]:
    if num_parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, num_parts - 1):
            yield (first,) + rest
