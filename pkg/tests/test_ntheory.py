import math

import pytest

from polycoh.errors import ModulusOverflowError, NotAPrimeError
from polycoh.ntheory import (
    checked_lcm,
    divisors,
    ensure_prime,
    first_prime_in_class,
    is_prime,
    prime_factors,
    primes_below,
)


def test_is_prime_small_values():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-3, 50):
        assert is_prime(n) == (n in known)


def test_is_prime_agrees_with_sieve():
    sieve = set(primes_below(20000))
    for n in range(20000):
        assert is_prime(n) == (n in sieve)


def test_is_prime_large():
    assert is_prime(2**61 - 1)  # Mersenne prime
    assert not is_prime(2**61 + 1)
    assert is_prime(10**12 + 39)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_ensure_prime_rejects():
    with pytest.raises(NotAPrimeError):
        ensure_prime(1)
    with pytest.raises(NotAPrimeError):
        ensure_prime(15)
    assert ensure_prime(13) == 13


def test_primes_below():
    assert primes_below(2) == ()
    assert primes_below(3) == (2,)
    assert primes_below(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert len(primes_below(10001)) == 1229


def test_prime_factors():
    assert prime_factors(1) == ()
    assert prime_factors(12) == (2, 3)
    assert prime_factors(97) == (97,)
    assert prime_factors(2 * 3 * 5 * 49) == (2, 3, 5, 7)


def test_divisors():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(36) == (1, 2, 3, 4, 6, 9, 12, 18, 36)


def test_checked_lcm():
    assert checked_lcm(6, 8) == 24
    assert checked_lcm(1, 7) == 7
    with pytest.raises(ModulusOverflowError):
        checked_lcm(2**40, 2**40 + 1)


def test_first_prime_in_class():
    assert first_prime_in_class(1, 4) == 5
    assert first_prime_in_class(3, 4) == 3
    assert first_prime_in_class(0, 2) == 2
    assert first_prime_in_class(6, 10) is None
    assert first_prime_in_class(3, 9) == 3
    assert first_prime_in_class(0, 9) is None
    # agrees with an exhaustive scan on a sample
    for n in (7, 12, 30):
        for a in range(n):
            got = first_prime_in_class(a, n)
            scan = next(
                (p for p in primes_below(10**5) if p % n == a), None
            )
            if math.gcd(a, n) == 1:
                assert got == scan
            else:
                assert got == scan  # at most one candidate either way
