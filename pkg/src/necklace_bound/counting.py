"""Exact counts of necklaces and Lyndon words with fixed content.

All arithmetic is on Python ints.  The final division by ``n`` in the
totient/Moebius sums is checked for exactness.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache, reduce
from math import factorial, gcd

from .core import InputError, InvariantError

__all__ = [
    "euler_phi",
    "mobius",
    "divisors_of_gcd",
    "multinomial",
    "count_necklaces",
    "count_lyndon",
    "bound_rhs",
    "decrement",
    "necklaces_binary",
    "lyndon_binary",
    "necklaces_total_binary",
]


@lru_cache(maxsize=4096)
def _factorize(m: int) -> tuple[tuple[int, int], ...]:
    factors = []
    q = 2
    while q * q <= m:
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            factors.append((q, e))
        q += 1 if q == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def euler_phi(m: int) -> int:
    if m < 1:
        raise InputError(f"euler_phi needs m >= 1, got {m}")
    out = m
    for q, _ in _factorize(m):
        out -= out // q
    return out


def mobius(m: int) -> int:
    if m < 1:
        raise InputError(f"mobius needs m >= 1, got {m}")
    factors = _factorize(m)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors_of_gcd(values: Sequence[int]) -> list[int]:
    """Ascending positive divisors of ``gcd(values)``; zeros do not contribute."""
    g = reduce(gcd, values, 0)
    if g == 0:
        raise InputError("gcd of an all-zero vector is undefined here")
    small = [j for j in range(1, int(g**0.5) + 1) if g % j == 0]
    large = [g // j for j in reversed(small) if j * j != g]
    return small + large


def multinomial(c: Sequence[int]) -> int:
    """``n! / (n_0! ... n_{k-1}!)`` for ``n = sum(c)``."""
    if any(x < 0 for x in c):
        raise InputError("content entries must be non-negative")
    out = factorial(sum(c))
    for x in c:
        out //= factorial(x)
    return out


def _mobius_sum(c: Sequence[int], weight) -> int:
    n = sum(c)
    if n < 1:
        raise InputError("content must have total length n >= 1")
    if any(x < 0 for x in c):
        raise InputError("content entries must be non-negative")
    total = 0
    for j in divisors_of_gcd(c):
        w = weight(j)
        if w:
            total += w * multinomial([x // j for x in c])
    q, r = divmod(total, n)
    if r:
        raise InvariantError(f"non-exact division {total}/{n} for content {tuple(c)}")
    return q


def count_necklaces(c: Sequence[int]) -> int:
    """Number of necklaces with content ``c``."""
    return _mobius_sum(c, euler_phi)


def count_lyndon(c: Sequence[int]) -> int:
    """Number of Lyndon words with content ``c``."""
    return _mobius_sum(c, mobius)


def decrement(c: Sequence[int], i: int) -> tuple[int, ...]:
    """Copy of ``c`` with entry ``i`` reduced by one."""
    out = list(c)
    out[i] -= 1
    return tuple(out)


def bound_rhs(c: Sequence[int]) -> int:
    """Sum of Lyndon counts with each coordinate of ``c`` decremented in turn."""
    if any(x < 1 for x in c):
        raise InputError("bound_rhs needs every content entry >= 1")
    return sum(count_lyndon(decrement(c, i)) for i in range(len(c)))


def necklaces_binary(n: int, d: int) -> int:
    """``N(n, d)``: binary necklaces of length ``n`` with ``d`` ones."""
    if not 0 <= d <= n:
        raise InputError(f"density {d} out of range for length {n}")
    return count_necklaces((n - d, d))


def lyndon_binary(n: int, d: int) -> int:
    """``L(n, d)``: binary Lyndon words of length ``n`` with ``d`` ones."""
    if not 0 <= d <= n:
        raise InputError(f"density {d} out of range for length {n}")
    return count_lyndon((n - d, d))


def necklaces_total_binary(n: int) -> int:
    """All binary necklaces of length ``n``: ``(1/n) sum_{j|n} phi(j) 2^(n/j)``."""
    if n < 1:
        raise InputError("n must be >= 1")
    total = sum(euler_phi(j) * 2 ** (n // j) for j in range(1, n + 1) if n % j == 0)
    q, r = divmod(total, n)
    if r:
        raise InvariantError(f"non-exact division {total}/{n}")
    return q
