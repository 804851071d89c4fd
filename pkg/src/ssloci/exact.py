"""Exact rational arithmetic: Bernoulli numbers and special zeta values.

Everything here is a Python int or a fractions.Fraction; no floats, ever.
Sign convention: bernoulli(2) == 1/6 and bernoulli(4) == -1/30, so that
zeta_neg_odd(k) == -bernoulli(2k)/(2k) yields zeta(-1) == -1/12 and
zeta(-3) == 1/120.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import BadParameter, NonIntegral

# Cache of computed Bernoulli numbers, keyed by (even) index.  Values are
# immutable once published; growth is serialized by the lock so concurrent
# readers are safe.
_CACHE: dict[int, Fraction] = {}
_CACHE_LOCK = threading.Lock()


def _akiyama_tanigawa(m: int) -> Fraction:
    """Triangular recurrence for B_m; exact in Fraction arithmetic."""
    row = [Fraction(1, j + 1) for j in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(m + 1 - i):
            row[j] = (j + 1) * (row[j] - row[j + 1])
    return row[0]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m for even m >= 2."""
    if m < 2 or m % 2 != 0:
        raise BadParameter(f"bernoulli requires even m >= 2, got {m}")
    with _CACHE_LOCK:
        value = _CACHE.get(m)
        if value is None:
            value = _akiyama_tanigawa(m)
            _CACHE[m] = value
    return value


def zeta_neg_odd(k: int) -> Fraction:
    """zeta(1 - 2k) = -B_{2k}/(2k) for k >= 1, e.g. zeta(-1) = -1/12."""
    if k < 1:
        raise BadParameter(f"zeta_neg_odd requires k >= 1, got {k}")
    return -bernoulli(2 * k) / (2 * k)


def as_integer(x: Fraction | int) -> int:
    """Collapse an exact rational to an int; NonIntegral if it is not one."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise NonIntegral(x)
    return x.numerator


def decimal_str(x: Fraction | int) -> str:
    """Render exactly: ints as plain decimal digits, rationals as "num/den"."""
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"
