"""Exact Molien-series verification of the monomial reflection families.

G(m, r, n) is the group of n x n monomial matrices whose nonzero entries
are m-th roots of unity with phase product an (m/r)-th root of unity.  Its
ring of invariant polynomial functions is free on generators of degrees
m, 2m, ..., (n-1)m, mn/r (in the convention where linear forms have degree
one; consumers working with doubled cohomological degrees halve first or
use :func:`doubled_degrees`).

This module recomputes the graded dimension series of the invariant ring
directly from the group average

    M(t) = 1/|G| * sum_g 1 / det(1 - t g)
         = 1/|G| * sum_g prod_cycles 1 / (1 - zeta^e t^len)

and checks it against the claimed degrees, i.e. that
M(t) * prod_i (1 - t^{d_i}) = 1 up to the truncation order.  Everything is
exact integer and rational arithmetic; a verdict carries no tolerance.

Expansion strategy: each factor 1/(1 - zeta^e t^len) is a geometric series,
so a group element's series has coefficients that are Z-linear tallies of
root-of-unity powers.  Those tallies are accumulated unreduced (exactly) in
the group ring of Z/m, and only the final averaged coefficients are reduced
into the canonical basis of Q(zeta_m) modulo the m-th cyclotomic
polynomial, where they must come out as nonnegative integers.  Elements
sharing a cycle-shape contribute identical series and are tallied once.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import (
    InternalArithmeticError,
    InvalidParametersError,
    SizeLimitError,
)

DEFAULT_BUDGET = 10**7


def _polydiv_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    """Exact division of integer polynomials with monic divisor."""
    num_l = list(num)
    deg_d = len(den) - 1
    deg_q = len(num_l) - 1 - deg_d
    quot = [0] * (deg_q + 1)
    for i in range(deg_q, -1, -1):
        c = num_l[i + deg_d]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num_l[i + j] -= c * dj
    if any(num_l[: deg_d]):
        raise InternalArithmeticError("non-exact cyclotomic polynomial division")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    poly = tuple([-1] + [0] * (m - 1) + [1])  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def _zeta_power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_m for 0 <= j < m, as integer coefficient rows.

    Since Phi_m divides x^m - 1, higher powers reduce by exponent mod m.
    """
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    top = tuple(-c for c in phi[:deg])  # x^deg == top in the quotient
    rows: list[tuple[int, ...]] = [
        tuple(1 if i == j else 0 for i in range(deg)) for j in range(min(deg, m))
    ]
    for _ in range(deg, m):
        prev = rows[-1]
        carry = prev[deg - 1]
        shifted = (0,) + prev[: deg - 1]
        rows.append(tuple(shifted[i] + carry * top[i] for i in range(deg)))
    return tuple(rows)


@dataclass(frozen=True)
class CyclotomicElement:
    """An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi-1).

    Coefficients are exact rationals; the vector length is the degree of
    the m-th cyclotomic polynomial.
    """

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        deg = len(cyclotomic_polynomial(self.conductor)) - 1
        if len(self.coeffs) != deg:
            raise InvalidParametersError(
                f"coefficient vector of length {len(self.coeffs)} for conductor "
                f"{self.conductor} (expected {deg})"
            )

    @classmethod
    def from_rational(cls, m: int, value) -> "CyclotomicElement":
        deg = len(cyclotomic_polynomial(m)) - 1
        coeffs = [Fraction(0)] * deg
        coeffs[0] = Fraction(value)
        return cls(m, tuple(coeffs))

    @classmethod
    def zero(cls, m: int) -> "CyclotomicElement":
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CyclotomicElement":
        return cls.from_rational(m, 1)

    @classmethod
    def zeta_power(cls, m: int, e: int) -> "CyclotomicElement":
        row = _zeta_power_table(m)[e % m]
        return cls(m, tuple(Fraction(c) for c in row))

    @classmethod
    def from_power_tally(cls, m: int, counts) -> "CyclotomicElement":
        """Reduce an integer tally {exponent: multiplicity} of zeta powers."""
        table = _zeta_power_table(m)
        deg = len(table[0])
        vec = [0] * deg
        for e, c in enumerate(counts):
            if c:
                row = table[e % m]
                for i in range(deg):
                    vec[i] += c * row[i]
        return cls(m, tuple(Fraction(v) for v in vec))

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.conductor != self.conductor:
                raise InvalidParametersError("mixed cyclotomic conductors")
            return other
        return CyclotomicElement.from_rational(self.conductor, other)

    def __add__(self, other) -> "CyclotomicElement":
        o = self._coerce(other)
        return CyclotomicElement(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CyclotomicElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "CyclotomicElement":
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        deg = len(a)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _zeta_power_table(self.conductor)
        vec = [Fraction(0)] * deg
        for e, c in enumerate(prod):
            if c:
                row = table[e % self.conductor]
                for i in range(deg):
                    vec[i] += c * row[i]
        return CyclotomicElement(self.conductor, tuple(vec))

    __rmul__ = __mul__

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise InternalArithmeticError(f"{self} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"CyclotomicElement(m={self.conductor}, {self.coeffs})"


@dataclass(frozen=True)
class PhasedPermutation:
    """A monomial matrix: basis vector i maps to zeta^phases[i] times
    basis vector perm[i], with phases exponents of a primitive m-th root.

    Membership in G(m, r, n) requires the phase sum to vanish mod r.
    """

    perm: tuple[int, ...]
    phases: tuple[int, ...]
    m: int
    r: int

    def __post_init__(self) -> None:
        n = len(self.perm)
        if self.m < 1 or self.r < 1 or self.m % self.r:
            raise InvalidParametersError(
                f"invalid group parameters m={self.m}, r={self.r}"
            )
        if sorted(self.perm) != list(range(n)) or len(self.phases) != n:
            raise InvalidParametersError("not a phased permutation")
        if any(not 0 <= a < self.m for a in self.phases):
            raise InvalidParametersError("phase exponents must lie in [0, m)")
        if sum(self.phases) % self.r:
            raise InvalidParametersError(
                f"phase sum {sum(self.phases)} is not divisible by r={self.r}"
            )

    def __mul__(self, other: "PhasedPermutation") -> "PhasedPermutation":
        if (self.m, self.r) != (other.m, other.r):
            raise InvalidParametersError("mixed groups in composition")
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        phases = tuple(
            (other.phases[i] + self.phases[other.perm[i]]) % self.m
            for i in range(len(self.perm))
        )
        return PhasedPermutation(perm, phases, self.m, self.r)


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series truncated to t^0 .. t^(order-1), exact coefficients."""

    order: int
    coefficients: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.coefficients[j]


def group_order(m: int, r: int, n: int) -> int:
    return m**n * math.factorial(n) // r


def _validate_group(m: int, r: int, n: int) -> None:
    if m < 1 or n < 1 or r < 1 or m % r:
        raise InvalidParametersError(
            f"G(m={m}, r={r}, n={n}) needs m, n >= 1 and r | m"
        )


def group_elements(
    m: int, r: int, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[PhasedPermutation]:
    """Stream every element of G(m, r, n) exactly once."""
    _validate_group(m, r, n)
    order = group_order(m, r, n)
    if order > budget:
        raise SizeLimitError(
            f"G({m},{r},{n}) has {order} elements, beyond the budget of {budget}"
        )

    def iterate() -> Iterator[PhasedPermutation]:
        for perm in itertools.permutations(range(n)):
            for phases in itertools.product(range(m), repeat=n):
                if sum(phases) % r == 0:
                    yield PhasedPermutation(perm, phases, m, r)

    return iterate()


def cycle_factors(g: PhasedPermutation) -> list[tuple[int, int]]:
    """(length, phase-sum mod m) per permutation cycle, sorted.

    The characteristic factor of g on a cycle is 1 - zeta^e t^length.
    """
    n = len(g.perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        length, e, i = 0, 0, start
        while not seen[i]:
            seen[i] = True
            e += g.phases[i]
            length += 1
            i = g.perm[i]
        out.append((length, e % g.m))
    out.sort()
    return out


def _cycle_product_series(
    shape: tuple[tuple[int, int], ...], m: int, order: int
) -> list[list[int]]:
    """Tally-form series of prod 1/(1 - zeta^e t^len) up to t^(order-1).

    Row j is the coefficient of t^j as multiplicities of zeta^0..zeta^(m-1);
    each factor is applied through the recurrence R = S + zeta^e t^len R.
    """
    cur = [[0] * m for _ in range(order)]
    cur[0][0] = 1
    for length, e in shape:
        rot = [(u - e) % m for u in range(m)]
        for j in range(length, order):
            prev = cur[j - length]
            row = cur[j]
            cur[j] = [row[u] + prev[rot[u]] for u in range(m)]
    return cur


def molien_series(
    m: int, r: int, n: int, order: int, budget: int = DEFAULT_BUDGET
) -> TruncatedSeries:
    """The graded dimension series of the invariant ring of G(m, r, n),
    exact up to t^(order-1).

    Coefficients are verified to be nonnegative integers before returning;
    anything else raises InternalArithmeticError (a bug, never bad input).
    """
    if order < 1:
        raise InvalidParametersError(f"truncation order must be >= 1, got {order}")
    shapes = Counter(
        tuple(cycle_factors(g)) for g in group_elements(m, r, n, budget)
    )
    total = [[0] * m for _ in range(order)]
    for shape, count in shapes.items():
        series = _cycle_product_series(shape, m, order)
        for j in range(order):
            row = series[j]
            tot = total[j]
            for u in range(m):
                tot[u] += count * row[u]

    size = group_order(m, r, n)
    coeffs = []
    for j in range(order):
        value = CyclotomicElement.from_power_tally(m, total[j])
        if not value.is_rational:
            raise InternalArithmeticError(
                f"Molien coefficient of t^{j} for G({m},{r},{n}) is irrational"
            )
        num = value.as_rational() / size
        if num.denominator != 1 or num < 0:
            raise InternalArithmeticError(
                f"Molien coefficient of t^{j} for G({m},{r},{n}) is {num}, "
                "not a nonnegative integer"
            )
        coeffs.append(int(num))
    return TruncatedSeries(order, tuple(coeffs))


def invariant_degrees(m: int, r: int, n: int) -> tuple[int, ...]:
    """Claimed degrees of the basic invariants: m, 2m, ..., (n-1)m, mn/r."""
    _validate_group(m, r, n)
    return tuple(sorted([m * i for i in range(1, n)] + [m * n // r]))


def doubled_degrees(m: int, r: int, n: int) -> tuple[int, ...]:
    """The same degrees in the doubled (cohomological) convention."""
    return tuple(2 * d for d in invariant_degrees(m, r, n))


def verify_degrees(m: int, r: int, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Check the claimed degrees against the group-average series.

    True iff  molien_series * prod_i (1 - t^{d_i})  equals 1 exactly up to
    order 1 + sum(d_i).  The window is wide enough: the candidate product
    of 1/(1 - t^{d_i}) and the true series first disagree no later than the
    degree of prod (1 - t^{d_i}) itself, which the window covers in full.
    """
    degs = invariant_degrees(m, r, n)
    order = 1 + sum(degs)
    series = molien_series(m, r, n, order, budget)

    poly = [0] * order
    poly[0] = 1
    for d in degs:
        nxt = poly[:]
        for j in range(d, order):
            nxt[j] -= poly[j - d]
        poly = nxt

    for j in range(order):
        acc = sum(series[k] * poly[j - k] for k in range(j + 1))
        if acc != (1 if j == 0 else 0):
            return False
    return True
