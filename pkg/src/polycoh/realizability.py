"""Realizability verdicts for even-degree polynomial types.

A type is realizable over a coefficient ring exactly when, at every prime
that is not a unit in the ring, it decomposes into catalog entries
occurring at that prime.  Consequently the primes at which a type is
realizable form a finite union of congruence classes -- computed here as
the union over all decompositions of the intersection of the parts' prime
sets -- and a ring enters the story only through its set of non-unit
primes, described by a :class:`PrimeSpec`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from .catalog import Catalog, DegreeMultiset
from .decompose import Decomposition, decompose, decompose_at_prime
from .errors import InvalidParametersError
from .ntheory import checked_lcm, ensure_prime, first_prime_in_class, is_prime, primes_below
from .residues import (
    ALL_PRIMES,
    NO_PRIMES,
    ResidueSet,
    as_json_dict,
    class_contains_prime,
    covers_all_primes,
    intersect,
    lift,
    normalize,
    prime_subset,
    union,
)

# Scan bound for exhibiting a concrete failing prime from a listable spec;
# past it the exact class-level certificate is reported instead.
WITNESS_PRIME_BOUND = 10**6


@dataclass(frozen=True)
class PrimeSpec:
    """The set of primes that are not units in the coefficient ring.

    Variants: every prime ("all"), an explicit finite list ("finite"), all
    primes outside a finite list ("cofinite"), or a residue-class set
    ("listable").
    """

    kind: str
    primes: tuple[int, ...] = ()
    classes: ResidueSet | None = None

    @staticmethod
    def all_primes() -> "PrimeSpec":
        return PrimeSpec("all")

    @staticmethod
    def finite(primes) -> "PrimeSpec":
        return PrimeSpec("finite", _validated_primes(primes))

    @staticmethod
    def cofinite(excluded) -> "PrimeSpec":
        return PrimeSpec("cofinite", _validated_primes(excluded))

    @staticmethod
    def listable(classes: ResidueSet) -> "PrimeSpec":
        return PrimeSpec("listable", (), normalize(classes))

    def describe(self) -> str:
        if self.kind == "all":
            return "all primes"
        if self.kind == "finite":
            return "primes {" + ", ".join(map(str, self.primes)) + "}"
        if self.kind == "cofinite":
            return "all primes except {" + ", ".join(map(str, self.primes)) + "}"
        c = self.classes
        return f"primes in {sorted(c.residues)} mod {c.modulus}"


def _validated_primes(primes) -> tuple[int, ...]:
    return tuple(sorted({ensure_prime(p) for p in primes}))


@dataclass
class RealizabilityReport:
    """Outcome of a realizability query: verdict, classes, and evidence."""

    target: DegreeMultiset
    spec: PrimeSpec
    verdict: bool
    prime_set: ResidueSet
    witnesses: dict[int, Decomposition] = field(default_factory=dict)
    failing_prime: int | None = None
    failing_class: tuple[int, int] | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "degrees": list(self.target.degrees),
            "verdict": self.verdict,
            "primeSet": as_json_dict(self.prime_set),
            "witnesses": {
                str(p): list(dec.names) for p, dec in sorted(self.witnesses.items())
            },
        }
        if self.failing_prime is not None:
            doc["failingPrime"] = self.failing_prime
        if self.failing_class is not None:
            residue, modulus = self.failing_class
            doc["failingClass"] = {"residue": residue, "modulus": modulus}
        return doc


def prime_set_of_type(cat: Catalog, target) -> ResidueSet:
    """The canonical residue-class set of primes at which ``target`` is
    realizable: union over decompositions of the intersection over parts of
    their occurrence sets.  The empty type is realizable at every prime.
    """
    target = DegreeMultiset.of(target)
    out = NO_PRIMES
    for dec in decompose(cat, target):
        dec_set = reduce(
            intersect, (cat.prime_set_of(part) for part in dec.parts), ALL_PRIMES
        )
        out = union(out, dec_set)
        if out == ALL_PRIMES:
            break
    return out


def realizable_at_prime(
    cat: Catalog, target, p: int
) -> tuple[bool, Decomposition | None]:
    """Verdict at a single prime, with the canonical first witness."""
    decs = decompose_at_prime(cat, target, p)
    if decs:
        return True, decs[0]
    return False, None


def realizable_over(cat: Catalog, target, spec: PrimeSpec) -> RealizabilityReport:
    """Verdict over a ring described by its non-unit primes.

    True exactly when every prime of the spec lies in the type's prime set.
    On failure a concrete failing prime is exhibited whenever one exists
    (always for the all/finite/cofinite variants); a listable spec whose
    difference contains no prime below the scan bound carries the offending
    residue class instead.
    """
    target = DegreeMultiset.of(target)
    ps = prime_set_of_type(cat, target)
    report = RealizabilityReport(target, spec, False, ps)

    if spec.kind == "all":
        report.verdict = covers_all_primes(ps)
        if report.verdict:
            _attach_witness(cat, target, report, 2)
        else:
            report.failing_prime = _smallest_uncovered_prime(ps)
    elif spec.kind == "finite":
        report.verdict = True
        for p in spec.primes:
            ok, wit = realizable_at_prime(cat, target, p)
            if ok:
                report.witnesses[p] = wit
            elif report.verdict:
                report.verdict = False
                report.failing_prime = p
    elif spec.kind == "cofinite":
        # Classwise at the canonical modulus: a class outside the set either
        # carries infinitely many primes (so some non-excluded one fails) or
        # exactly one candidate, which is ignored iff excluded.
        excluded = set(spec.primes)
        failing = [
            p
            for a in range(ps.modulus)
            if a not in ps.residues
            and (p := _first_prime_in_class_outside(a, ps.modulus, excluded))
            is not None
        ]
        report.verdict = not failing
        if report.verdict:
            _attach_witness(cat, target, report, _smallest_prime_not_in(excluded))
        else:
            report.failing_prime = min(failing)
    elif spec.kind == "listable":
        report.verdict = prime_subset(spec.classes, ps)
        if report.verdict:
            p0 = _smallest_listed_prime(spec.classes)
            if p0 is not None:
                _attach_witness(cat, target, report, p0)
        else:
            p0 = _smallest_listed_prime(spec.classes, outside=ps)
            if p0 is not None:
                report.failing_prime = p0
            else:
                report.failing_class = _offending_class(spec.classes, ps)
    else:
        raise InvalidParametersError(f"unknown prime spec kind {spec.kind!r}")
    return report


def congruence_classes(cat: Catalog, target) -> tuple[int, list[int]]:
    """The canonical (modulus, ascending residues) answer: a type is
    realizable over a ring iff every non-unit prime is congruent to one of
    the residues modulo the modulus."""
    c = prime_set_of_type(cat, target)
    return c.modulus, sorted(c.residues)


def _attach_witness(cat: Catalog, target, report: RealizabilityReport, p: int) -> None:
    ok, wit = realizable_at_prime(cat, target, p)
    if ok:
        report.witnesses[p] = wit


def _smallest_uncovered_prime(s: ResidueSet) -> int:
    """Smallest prime outside ``s``; caller guarantees one exists."""
    best = None
    for a in range(s.modulus):
        if a in s.residues:
            continue
        p = first_prime_in_class(a, s.modulus)
        if p is not None and (best is None or p < best):
            best = p
    if best is None:  # pragma: no cover - guarded by covers_all_primes
        raise RuntimeError("no uncovered prime found in a non-covering set")
    return best


def _first_prime_in_class_outside(a: int, n: int, excluded: set[int]) -> int | None:
    """Smallest prime congruent to a mod n that is not excluded, if any.

    For gcd(a, n) > 1 the class holds at most one prime; otherwise the
    ascending scan terminates because the class holds infinitely many and
    the exclusion list is finite.
    """
    g = math.gcd(a, n)
    if g > 1:
        p = first_prime_in_class(a, n)
        return p if p is not None and p not in excluded else None
    x = a
    while True:
        if x >= 2 and is_prime(x) and x not in excluded:
            return x
        x += n


def _smallest_prime_not_in(excluded) -> int:
    x = 2
    while True:
        if is_prime(x) and x not in excluded:
            return x
        x += 1


def _smallest_listed_prime(
    classes: ResidueSet, outside: ResidueSet | None = None
) -> int | None:
    """Smallest prime of ``classes`` (optionally outside ``outside``) below
    the witness scan bound, or None."""
    for p in primes_below(WITNESS_PRIME_BOUND):
        if p % classes.modulus in classes.residues and (
            outside is None or p % outside.modulus not in outside.residues
        ):
            return p
    return None


def _offending_class(classes: ResidueSet, ps: ResidueSet) -> tuple[int, int]:
    """Smallest prime-bearing class of the difference classes \\ ps."""
    l = checked_lcm(classes.modulus, ps.modulus)
    for a in sorted(lift(classes, l) - lift(ps, l)):
        if class_contains_prime(a, l):
            return (a, l)
    raise RuntimeError(  # pragma: no cover - guarded by prime_subset
        "no offending class found although prime_subset failed"
    )
