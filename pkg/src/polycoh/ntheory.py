"""Small exact number-theory helpers: primality, divisors, checked lcm."""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import ModulusOverflowError, NotAPrimeError

# Largest modulus the residue algebra will represent.  Python integers do not
# overflow, but catalog consumers expect 64-bit-sized moduli; anything bigger
# is reported instead of silently accepted.
MAX_MODULUS = 2**63 - 1

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10^24,
# which covers the whole 64-bit range with room to spare.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ensure_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotAPrimeError(f"{p!r} is not a prime number")
    return p


@lru_cache(maxsize=64)
def primes_below(limit: int) -> tuple[int, ...]:
    """All primes strictly below ``limit``, ascending (simple sieve)."""
    if limit <= 2:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n`` >= 1, ascending (trial division)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return tuple(out)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` >= 1, ascending."""
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return tuple(small + large[::-1])


def checked_lcm(a: int, b: int) -> int:
    """lcm(a, b), raising ModulusOverflowError past the 64-bit limit."""
    l = a // math.gcd(a, b) * b
    if l > MAX_MODULUS:
        raise ModulusOverflowError(
            f"combined modulus lcm({a}, {b}) = {l} exceeds the 64-bit limit"
        )
    return l


def first_prime_in_class(a: int, n: int) -> int | None:
    """Smallest prime p with p % n == a, or None if the class has none.

    For gcd(a, n) == 1 a prime exists by Dirichlet's theorem and the
    ascending scan terminates; otherwise the only candidate is gcd(a, n)
    itself, since every member of the class is divisible by it.
    """
    g = math.gcd(a, n)
    if g > 1:
        return g if is_prime(g) and g % n == a else None
    x = a
    while True:
        if x >= 2 and is_prime(x):
            return x
        x += n
