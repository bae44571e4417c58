"""Small integer helpers: primality, factorization, divisors, totient."""
from __future__ import annotations

from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """``(p, m)`` with ``n == p**m`` and ``m >= 1``, or None."""
    f = factorize(n)
    if len(f) != 1:
        return None
    (p, m), = f.items()
    return p, m


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    out = n
    for p in factorize(n):
        out -= out // p
    return out


def coprime_residues(n: int) -> list[int]:
    return [k for k in range(n) if gcd(k, n) == 1]
