"""Desk-scale cross-checks of the decision engine against brute force.

The checks here deliberately avoid the decomposer: the reference side
builds the realizable multisets directly as unions of explicitly listed
generator types, so agreement is evidence, not circularity.

Two suites are provided.  Over the integers, a type is realizable iff it
is a union of {2} and the degree patterns of SU(n) and Sp(n).  At the
prime 3, the generating patterns are those plus the even spin patterns,
{4, 12}, and {12, 16}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .catalog import Catalog, DegreeMultiset
from .realizability import PrimeSpec, realizable_at_prime, realizable_over


@dataclass
class SuiteResult:
    """Outcome of a verification sweep."""

    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "ok" if self.passed else f"{len(self.mismatches)} mismatches"
        return f"{self.name}: {self.checked} checked, {status}"


def even_degree_multisets(max_degree: int, max_count: int):
    """Every multiset of even degrees <= max_degree with <= max_count
    elements, the empty one included."""
    values = range(2, max_degree + 1, 2)
    for size in range(max_count + 1):
        yield from combinations_with_replacement(values, size)


def multiset_monoid(
    generators: list[tuple[int, ...]], max_count: int
) -> set[tuple[int, ...]]:
    """All multiset unions of the generators with at most max_count
    elements (the empty union included)."""
    out = {()}
    frontier = [()]
    while frontier:
        base = frontier.pop()
        for gen in generators:
            if len(base) + len(gen) <= max_count:
                merged = tuple(sorted(base + gen))
                if merged not in out:
                    out.add(merged)
                    frontier.append(merged)
    return out


def su_type(n: int) -> tuple[int, ...]:
    return tuple(range(4, 2 * n + 1, 2))


def sp_type(n: int) -> tuple[int, ...]:
    return tuple(range(4, 4 * n + 1, 4))


def spin_type(n: int) -> tuple[int, ...]:
    return tuple(sorted([4 * i for i in range(1, n)] + [2 * n]))


def classical_generator_types(max_degree: int) -> list[tuple[int, ...]]:
    """{2} plus every SU(n) and Sp(n) degree pattern within the bound."""
    gens = [(2,)]
    gens += [su_type(n) for n in range(2, max_degree // 2 + 1)]
    gens += [sp_type(n) for n in range(1, max_degree // 4 + 1)]
    return gens


def p3_generator_types(max_degree: int) -> list[tuple[int, ...]]:
    """The generating patterns available at the prime 3."""
    gens = classical_generator_types(max_degree)
    n = 3
    while max(spin_type(n)) <= max_degree:
        gens.append(spin_type(n))
        n += 1
    if 12 <= max_degree:
        gens.append((4, 12))
    if 16 <= max_degree:
        gens.append((12, 16))
    return gens


def check_integral_realizability(
    cat: Catalog, max_degree: int = 24, max_count: int = 4
) -> SuiteResult:
    """Engine verdict over all primes vs. the {2}/SU/Sp union monoid."""
    result = SuiteResult(name="integral realizability")
    allowed = multiset_monoid(classical_generator_types(max_degree), max_count)
    spec = PrimeSpec.all_primes()
    for ms in even_degree_multisets(max_degree, max_count):
        expected = ms in allowed
        got = realizable_over(cat, DegreeMultiset.of(ms), spec).verdict
        result.checked += 1
        if got != expected:
            result.mismatches.append(
                {"degrees": list(ms), "engine": got, "bruteforce": expected}
            )
    return result


def check_p3_realizability(
    cat: Catalog, max_degree: int = 24, max_count: int = 3
) -> SuiteResult:
    """Two-way check at p = 3.

    Every generator instance must be realizable at 3, and over all small
    multisets the engine verdict at 3 must coincide with membership in the
    union monoid of those generators.
    """
    result = SuiteResult(name="p=3 realizability")
    gens = p3_generator_types(max_degree)
    for gen in gens:
        ok, _ = realizable_at_prime(cat, DegreeMultiset.of(gen), 3)
        result.checked += 1
        if not ok:
            result.mismatches.append(
                {"degrees": list(gen), "engine": False, "bruteforce": True}
            )
    allowed = multiset_monoid(gens, max_count)
    for ms in even_degree_multisets(max_degree, max_count):
        expected = ms in allowed
        got, _ = realizable_at_prime(cat, DegreeMultiset.of(ms), 3)
        result.checked += 1
        if got != expected:
            result.mismatches.append(
                {"degrees": list(ms), "engine": got, "bruteforce": expected}
            )
    return result
