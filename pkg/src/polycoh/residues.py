"""Exact algebra of residue-class sets of primes.

A :class:`ResidueSet` stores a modulus ``N`` and a set of residues in
``[0, N)`` and stands for every integer congruent to one of them.  Sets of
this shape are closed under finite unions and intersections, decide prime
membership exactly, and admit a unique minimal-modulus canonical form --
which is what makes them usable as "occurs for p = a (mod N)" conditions.

"All primes" is represented as {0} mod 1 and "no primes" as the empty set
mod 1, so the algebra has no special cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidBoundError, InvalidModulusError, ModulusOverflowError
from .ntheory import (
    MAX_MODULUS,
    checked_lcm,
    divisors,
    ensure_prime,
    is_prime,
    primes_below,
)


@dataclass(frozen=True)
class ResidueSet:
    """Integers congruent to one of ``residues`` modulo ``modulus``."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidModulusError(f"modulus must be >= 1, got {self.modulus}")
        if any(not 0 <= r < self.modulus for r in self.residues):
            raise InvalidModulusError(
                f"residues {sorted(self.residues)} out of range for modulus {self.modulus}"
            )

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.residues

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ResidueSet({sorted(self.residues)} mod {self.modulus})"


ALL_PRIMES = ResidueSet(1, frozenset({0}))
NO_PRIMES = ResidueSet(1, frozenset())


def make(modulus: int, residues: Iterable[int] = ()) -> ResidueSet:
    """Build a ResidueSet, reducing the residues mod ``modulus``.

    The result is deliberately not canonicalized; call :func:`normalize`.
    """
    if not isinstance(modulus, int) or modulus < 1:
        raise InvalidModulusError(f"modulus must be a positive integer, got {modulus!r}")
    if modulus > MAX_MODULUS:
        raise ModulusOverflowError(f"modulus {modulus} exceeds the 64-bit limit")
    return ResidueSet(modulus, frozenset(r % modulus for r in residues))


def lift(s: ResidueSet, modulus: int) -> frozenset[int]:
    """Residues of ``s`` re-expressed modulo a multiple of its modulus."""
    if modulus % s.modulus:
        raise InvalidModulusError(
            f"{modulus} is not a multiple of the set's modulus {s.modulus}"
        )
    step = s.modulus
    return frozenset(r + k * step for r in s.residues for k in range(modulus // step))


def normalize(s: ResidueSet) -> ResidueSet:
    """Canonical form: the minimal modulus d | N over which ``s`` is a
    union of full congruence classes.

    The moduli d for which that holds are exactly the divisors of N that are
    multiples of one minimal d0 (membership factors through x mod d1 and
    x mod d2 only if it factors through x mod gcd(d1, d2)), so scanning the
    divisors in ascending order finds the canonical representative.
    """
    n, res = s.modulus, s.residues
    size = len(res)
    for d in divisors(n):
        fiber = n // d
        if size % fiber:
            continue
        proj = frozenset(r % d for r in res)
        if len(proj) * fiber == size:
            return ResidueSet(d, proj)
    return s


def intersect(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Exact intersection, canonicalized."""
    l = checked_lcm(a.modulus, b.modulus)
    return normalize(ResidueSet(l, lift(a, l) & lift(b, l)))


def union(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Exact union, canonicalized."""
    l = checked_lcm(a.modulus, b.modulus)
    return normalize(ResidueSet(l, lift(a, l) | lift(b, l)))


def contains_prime(s: ResidueSet, p: int) -> bool:
    """Whether the prime ``p`` belongs to ``s`` (non-primes are rejected)."""
    ensure_prime(p)
    return p % s.modulus in s.residues


def from_min_prime(k: int) -> ResidueSet:
    """The set matching exactly the primes p >= k, for k >= 2.

    A prime is >= k iff it divides none of the primes below k, i.e. iff it
    is a unit modulo their product.  For example k = 5 gives {1, 5} mod 6.
    """
    if not isinstance(k, int) or k < 2:
        raise InvalidBoundError(f"bound must be an integer >= 2, got {k!r}")
    n = 1
    for p in primes_below(k):
        n *= p
        if n > MAX_MODULUS:
            raise ModulusOverflowError(
                f"primorial modulus for bound {k} exceeds the 64-bit limit"
            )
    return normalize(
        ResidueSet(n, frozenset(a for a in range(n) if math.gcd(a, n) == 1))
    )


def exclude_prime(s: ResidueSet, q: int) -> ResidueSet:
    """Remove the single prime ``q`` from ``s``.

    Lifting to lcm(N, q) and dropping the residues divisible by q removes
    exactly q among primes: any other prime in those classes would be a
    multiple of q.
    """
    ensure_prime(q)
    l = checked_lcm(s.modulus, q)
    return normalize(ResidueSet(l, frozenset(r for r in lift(s, l) if r % q)))


def class_contains_prime(a: int, n: int) -> bool:
    """Whether the class a mod n contains at least one prime.

    For gcd(a, n) == 1 Dirichlet's theorem gives infinitely many; otherwise
    every member is divisible by g = gcd(a, n) > 1, so the only possible
    prime is g itself.
    """
    if not 0 <= a < n:
        raise InvalidModulusError(f"residue {a} out of range for modulus {n}")
    g = math.gcd(a, n)
    if g == 1:
        return True
    return is_prime(g) and g % n == a


def covers_all_primes(s: ResidueSet) -> bool:
    """Whether every prime belongs to ``s``.

    Representation-independent: a class of the modulus matters only if it
    contains a prime at all.
    """
    return all(
        a in s.residues or not class_contains_prime(a, s.modulus)
        for a in range(s.modulus)
    )


def prime_subset(a: ResidueSet, b: ResidueSet) -> bool:
    """Whether every prime in ``a`` also lies in ``b``.

    Decided exactly at the class level: the difference a \\ b at the common
    modulus may contain primes only in classes that contain primes.
    """
    l = checked_lcm(a.modulus, b.modulus)
    extra = lift(a, l) - lift(b, l)
    return not any(class_contains_prime(r, l) for r in extra)


def as_json_dict(s: ResidueSet) -> dict:
    """Canonical JSON form: {"modulus": N, "residues": ascending list}."""
    c = normalize(s)
    return {"modulus": c.modulus, "residues": sorted(c.residues)}
