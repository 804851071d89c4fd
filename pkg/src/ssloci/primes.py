"""Primality, factorization and prime-power recognition for small integers."""

from __future__ import annotations

from .errors import BadParameter


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return n > 1


def factor(n: int) -> dict[int, int]:
    """Prime factorization {p: multiplicity} by trial division; n >= 1."""
    if n < 1:
        raise BadParameter(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_base(q: int) -> tuple[int, int]:
    """Decompose q = p^e with p prime, e >= 1; BadParameter otherwise."""
    if q < 2:
        raise BadParameter(f"{q} is not a prime power")
    fac = factor(q)
    if len(fac) != 1:
        raise BadParameter(f"{q} is not a prime power")
    ((p, e),) = fac.items()
    return p, e
