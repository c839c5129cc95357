"""Catalog of realizable building-block types.

Every entry couples a multiset of even generator degrees with the residue
classes of primes at which a space with that polynomial cohomology type
exists: the simply connected simple compact Lie groups (plus the circle),
the infinite families of monomial complex reflection groups G(m, r, n)
together with the dihedral and cyclic degree patterns, and seventeen
sporadic complex reflection groups in the Shephard-Todd numbering.

A catalog answers three questions: what are the degrees of an entry, at
which primes does it occur, and which entry instances fit inside a given
target multiset.  The prime conditions written as lower bounds ("p >= 5")
are materialized eagerly as residue sets modulo a primorial, so downstream
code sees one uniform representation.
"""

from __future__ import annotations

import json
import operator
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import CatalogError, InvalidParametersError, InvalidTypeError
from .ntheory import divisors
from .residues import (
    ALL_PRIMES,
    ResidueSet,
    as_json_dict,
    contains_prime,
    exclude_prime,
    from_min_prime,
    make,
    normalize,
)


@dataclass(frozen=True)
class DegreeMultiset:
    """The type of a graded polynomial ring: its generator degrees.

    Stored sorted ascending so equality is structural.  Every degree must be
    a positive even integer; odd-degree generators only arise over rings
    where 2 = 0, which this engine does not model.
    """

    degrees: tuple[int, ...]

    @classmethod
    def of(cls, degrees) -> "DegreeMultiset":
        if isinstance(degrees, DegreeMultiset):
            return degrees
        out = []
        for d in degrees:
            try:
                d = operator.index(d)
            except TypeError:
                raise InvalidTypeError(f"degree {d!r} is not an integer") from None
            if d <= 0 or d % 2:
                raise InvalidTypeError(
                    f"degree {d} is invalid: generator degrees must be positive "
                    "even integers (odd generators are out of scope)"
                )
            out.append(d)
        return cls(tuple(sorted(out)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __bool__(self) -> bool:
        return bool(self.degrees)

    @property
    def max_degree(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    def counter(self) -> Counter:
        return Counter(self.degrees)

    def union(self, other: "DegreeMultiset") -> "DegreeMultiset":
        return DegreeMultiset(tuple(sorted(self.degrees + other.degrees)))


@dataclass(frozen=True)
class EntryInstance:
    """One concrete catalog entry: a family identifier plus parameters."""

    family: str
    params: tuple[int, ...]
    name: str

    @property
    def sort_key(self) -> tuple:
        return (self.name, self.params)


@dataclass(frozen=True)
class FamilyTemplate:
    """A parametric catalog row: constraints, degree formula, prime condition.

    The three text fields reproduce the row as documentation and travel with
    the JSON form; the callables implement it.
    """

    ident: str
    constraints: str
    degree_formula: str
    prime_condition: str
    check: Callable[[tuple[int, ...]], bool]
    degrees: Callable[[tuple[int, ...]], tuple[int, ...]]
    primes: Callable[[tuple[int, ...]], ResidueSet]
    display: Callable[[tuple[int, ...]], str]
    sweep: Callable[[DegreeMultiset], Iterator[tuple[int, ...]]]


@dataclass(frozen=True)
class SporadicEntry:
    """A single fixed catalog row: name, degrees, prime occurrence set."""

    name: str
    degrees: tuple[int, ...]
    primes: ResidueSet


def _su_degrees(n: int) -> tuple[int, ...]:
    return tuple(range(4, 2 * n + 1, 2))


def _sp_degrees(n: int) -> tuple[int, ...]:
    return tuple(range(4, 4 * n + 1, 4))


def _spin_degrees(n: int) -> tuple[int, ...]:
    return tuple(sorted([4 * i for i in range(1, n)] + [2 * n]))


def _gmrn_degrees(m: int, r: int, n: int) -> tuple[int, ...]:
    return tuple(sorted([2 * m * i for i in range(1, n)] + [2 * m * n // r]))


def _fixed_family(
    ident: str, degrees: tuple[int, ...], primes: ResidueSet, prime_text: str
) -> FamilyTemplate:
    """A parameterless row (circle and the exceptional Lie groups)."""
    deg_ms = DegreeMultiset.of(degrees)

    def sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        if deg_ms.max_degree <= target.max_degree:
            yield ()

    return FamilyTemplate(
        ident=ident,
        constraints="",
        degree_formula=", ".join(str(d) for d in degrees),
        prime_condition=prime_text,
        check=lambda params: params == (),
        degrees=lambda params: degrees,
        primes=lambda params: primes,
        display=lambda params: ident,
        sweep=sweep,
    )


def _build_families() -> tuple[FamilyTemplate, ...]:
    all_p = ALL_PRIMES
    p_ge_3 = from_min_prime(3)
    p_ge_5 = from_min_prime(5)
    p_ge_7 = from_min_prime(7)

    def su_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        for n in range(2, target.max_degree // 2 + 1):
            yield (n,)

    su = FamilyTemplate(
        ident="SU",
        constraints="n >= 2",
        degree_formula="4, 6, ..., 2n",
        prime_condition="all p",
        check=lambda p: len(p) == 1 and p[0] >= 2,
        degrees=lambda p: _su_degrees(p[0]),
        primes=lambda p: all_p,
        display=lambda p: f"SU({p[0]})",
        sweep=su_sweep,
    )

    def sp_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        for n in range(1, target.max_degree // 4 + 1):
            yield (n,)

    sp = FamilyTemplate(
        ident="Sp",
        constraints="n >= 1",
        degree_formula="4, 8, ..., 4n",
        prime_condition="all p",
        check=lambda p: len(p) == 1 and p[0] >= 1,
        degrees=lambda p: _sp_degrees(p[0]),
        primes=lambda p: all_p,
        display=lambda p: f"Sp({p[0]})",
        sweep=sp_sweep,
    )

    def spin_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        for n in range(3, target.max_degree // 2 + 1):
            yield (n,)

    spin = FamilyTemplate(
        ident="Spin",
        constraints="n >= 3",
        degree_formula="4, 8, ..., 4(n-1), 2n",
        prime_condition="p >= 3",
        check=lambda p: len(p) == 1 and p[0] >= 3,
        degrees=lambda p: _spin_degrees(p[0]),
        primes=lambda p: p_ge_3,
        display=lambda p: f"Spin({2 * p[0]})",
        sweep=spin_sweep,
    )

    def gmrn_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        # 2m is always among the degrees and the instance has n of them.
        for m in range(3, target.max_degree // 2 + 1):
            for n in range(2, len(target) + 1):
                for r in divisors(m):
                    yield (m, r, n)

    gmrn = FamilyTemplate(
        ident="G(m,r,n)",
        constraints="n >= 2, m >= 3, r | m",
        degree_formula="2m, 4m, ..., 2(n-1)m, 2mn/r",
        prime_condition="p == 1 (mod m)",
        check=lambda p: len(p) == 3
        and p[2] >= 2
        and p[0] >= 3
        and p[1] >= 1
        and p[0] % p[1] == 0,
        degrees=lambda p: _gmrn_degrees(*p),
        primes=lambda p: normalize(make(p[0], (1,))),
        display=lambda p: f"G({p[0]},{p[1]},{p[2]})",
        sweep=gmrn_sweep,
    )

    def dihedral_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        for m in range(5, target.max_degree // 2 + 1):
            if m != 6:
                yield (m,)

    dihedral = FamilyTemplate(
        ident="D",
        constraints="m >= 5, m != 6",
        degree_formula="4, 2m",
        prime_condition="p == +-1 (mod m)",
        check=lambda p: len(p) == 1 and p[0] >= 5 and p[0] != 6,
        degrees=lambda p: (4, 2 * p[0]),
        primes=lambda p: normalize(make(p[0], (1, p[0] - 1))),
        display=lambda p: f"D_{2 * p[0]}",
        sweep=dihedral_sweep,
    )

    def cyclic_sweep(target: DegreeMultiset) -> Iterator[tuple[int, ...]]:
        for m in range(3, target.max_degree // 2 + 1):
            yield (m,)

    cyclic = FamilyTemplate(
        ident="C",
        constraints="m >= 3",
        degree_formula="2m",
        prime_condition="p == 1 (mod m)",
        check=lambda p: len(p) == 1 and p[0] >= 3,
        degrees=lambda p: (2 * p[0],),
        primes=lambda p: normalize(make(p[0], (1,))),
        display=lambda p: f"C_{p[0]}",
        sweep=cyclic_sweep,
    )

    return (
        _fixed_family("S^1", (2,), all_p, "all p"),
        su,
        sp,
        spin,
        _fixed_family("G_2", (4, 12), p_ge_3, "p >= 3"),
        _fixed_family("F_4", (4, 12, 16, 24), p_ge_5, "p >= 5"),
        _fixed_family("E_6", (4, 10, 12, 16, 18, 24), p_ge_5, "p >= 5"),
        _fixed_family("E_7", (4, 12, 16, 20, 24, 28, 36), p_ge_5, "p >= 5"),
        _fixed_family("E_8", (4, 16, 24, 28, 36, 40, 48, 60), p_ge_7, "p >= 7"),
        gmrn,
        dihedral,
        cyclic,
    )


_FAMILIES = _build_families()
_FAMILY_BY_IDENT = {f.ident: f for f in _FAMILIES}

# name, degrees, (modulus, residues), optionally an excluded prime
_SPORADIC_ROWS = (
    ("G_8", (16, 24), (4, (1,)), None),
    ("G_9", (16, 48), (8, (1,)), None),
    ("G_12", (12, 16), (8, (1, 3)), None),
    ("G_14", (12, 48), (24, (1, 19)), None),
    ("G_16", (40, 60), (5, (1,)), None),
    ("G_17", (40, 120), (20, (1,)), None),
    ("G_20", (24, 60), (15, (1, 4)), None),
    ("G_21", (24, 120), (60, (1, 49)), None),
    ("G_22", (24, 40), (20, (1, 9)), None),
    ("G_23", (4, 12, 20), (5, (1, 4)), None),
    ("G_24", (8, 12, 28), (7, (1, 2, 4)), 2),
    ("G_29", (8, 16, 24, 40), (4, (1,)), None),
    ("G_30", (4, 24, 40, 60), (5, (1, 4)), None),
    ("G_31", (16, 24, 40, 48), (4, (1,)), None),
    ("G_32", (24, 36, 48, 60), (3, (1,)), None),
    ("G_33", (8, 12, 20, 24, 36), (3, (1,)), None),
    ("G_34", (12, 24, 36, 48, 60, 84), (3, (1,)), None),
)


def _build_sporadics() -> tuple[SporadicEntry, ...]:
    out = []
    for name, degrees, (mod, res), excluded in _SPORADIC_ROWS:
        primes = normalize(make(mod, res))
        if excluded is not None:
            primes = exclude_prime(primes, excluded)
        out.append(SporadicEntry(name, degrees, primes))
    return tuple(out)


def _fits(part: Counter, whole: Counter) -> bool:
    return all(whole[d] >= c for d, c in part.items())


@dataclass(frozen=True)
class Catalog:
    """An immutable queryable collection of families and sporadic entries."""

    families: tuple[FamilyTemplate, ...]
    sporadics: tuple[SporadicEntry, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Catalog):
            return NotImplemented
        return (
            tuple(f.ident for f in self.families)
            == tuple(f.ident for f in other.families)
            and self.sporadics == other.sporadics
        )

    def __hash__(self) -> int:
        return hash((tuple(f.ident for f in self.families), self.sporadics))

    def _sporadic(self, name: str) -> SporadicEntry | None:
        for sp in self.sporadics:
            if sp.name == name:
                return sp
        return None

    def instance(self, family: str, params: Iterable[int] = ()) -> EntryInstance:
        """Validated entry instance for a family identifier and parameters."""
        params = tuple(params)
        sp = self._sporadic(family)
        if sp is not None:
            if params:
                raise InvalidParametersError(f"{family} takes no parameters")
            return EntryInstance(family, (), sp.name)
        fam = next((f for f in self.families if f.ident == family), None)
        if fam is None:
            raise InvalidParametersError(f"unknown catalog family {family!r}")
        if not fam.check(params):
            raise InvalidParametersError(
                f"parameters {params} violate the constraints of {family}"
                + (f" ({fam.constraints})" if fam.constraints else "")
            )
        return EntryInstance(fam.ident, params, fam.display(params))

    def lookup(self, name: str) -> EntryInstance:
        """Parse a display name such as 'SU(5)', 'G(6,3,2)' or 'G_24'."""
        return self.instance(*parse_entry_name(name))

    def degrees_of(self, inst: EntryInstance) -> DegreeMultiset:
        sp = self._sporadic(inst.family)
        if sp is not None:
            return DegreeMultiset.of(sp.degrees)
        fam = _FAMILY_BY_IDENT.get(inst.family)
        if fam is None or fam not in self.families:
            raise InvalidParametersError(f"{inst.family!r} is not in this catalog")
        return DegreeMultiset.of(fam.degrees(inst.params))

    def prime_set_of(self, inst: EntryInstance) -> ResidueSet:
        sp = self._sporadic(inst.family)
        if sp is not None:
            return sp.primes
        fam = _FAMILY_BY_IDENT.get(inst.family)
        if fam is None or fam not in self.families:
            raise InvalidParametersError(f"{inst.family!r} is not in this catalog")
        return fam.primes(inst.params)

    def candidates(self, target) -> list[EntryInstance]:
        """Every instance whose degrees form a sub-multiset of ``target``.

        Finite and complete: the parameter sweeps cover every instance whose
        smallest mandatory degree and degree count fit inside the target.
        """
        target = DegreeMultiset.of(target)
        need = target.counter()
        out = []
        for fam in self.families:
            for params in fam.sweep(target):
                degs = fam.degrees(params)
                if _fits(Counter(degs), need):
                    out.append(EntryInstance(fam.ident, params, fam.display(params)))
        for sp in self.sporadics:
            if _fits(Counter(sp.degrees), need):
                out.append(EntryInstance(sp.name, (), sp.name))
        out.sort(key=lambda inst: inst.sort_key)
        return out

    def occurs_at(self, inst: EntryInstance, p: int) -> bool:
        return contains_prime(self.prime_set_of(inst), p)


def parse_entry_name(name: str) -> tuple[str, tuple[int, ...]]:
    """Split a display name into (family identifier, parameters)."""
    text = name.strip()
    if text in ("S^1", "S1"):
        return ("S^1", ())
    if text in ("G_2", "F_4", "E_6", "E_7", "E_8"):
        return (text, ())
    for prefix, ident in (("SU(", "SU"), ("Sp(", "Sp"), ("Spin(", "Spin")):
        if text.startswith(prefix) and text.endswith(")"):
            arg = _int_or_raise(text[len(prefix) : -1], name)
            if ident == "Spin":
                if arg % 2:
                    raise InvalidParametersError(
                        f"{name!r}: only even spin ranks are catalogued"
                    )
                arg //= 2
            return (ident, (arg,))
    if text.startswith("G(") and text.endswith(")"):
        parts = text[2:-1].split(",")
        if len(parts) != 3:
            raise InvalidParametersError(f"{name!r}: expected G(m,r,n)")
        return ("G(m,r,n)", tuple(_int_or_raise(p, name) for p in parts))
    if text.startswith("D_"):
        arg = _int_or_raise(text[2:], name)
        if arg % 2:
            raise InvalidParametersError(f"{name!r}: dihedral subscript must be even")
        return ("D", (arg // 2,))
    if text.startswith("C_"):
        return ("C", (_int_or_raise(text[2:], name),))
    if text.startswith("G_"):
        return (text, ())
    raise InvalidParametersError(f"unrecognized catalog entry name {name!r}")


def _int_or_raise(text: str, name: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InvalidParametersError(f"bad number in entry name {name!r}") from None


@lru_cache(maxsize=1)
def builtin() -> Catalog:
    """The full built-in catalog."""
    return Catalog(families=_FAMILIES, sporadics=_build_sporadics())


def degrees_of(inst: EntryInstance, cat: Catalog | None = None) -> DegreeMultiset:
    return (cat or builtin()).degrees_of(inst)


def prime_set_of(inst: EntryInstance, cat: Catalog | None = None) -> ResidueSet:
    return (cat or builtin()).prime_set_of(inst)


def candidates(cat: Catalog, target) -> list[EntryInstance]:
    return cat.candidates(target)


def export_json(cat: Catalog) -> str:
    """Serialize a catalog: sporadics explicitly, families symbolically."""
    doc = {
        "sporadics": [
            {
                "name": sp.name,
                "degrees": list(sp.degrees),
                "primes": as_json_dict(sp.primes),
            }
            for sp in cat.sporadics
        ],
        "families": [
            {
                "name": f.ident,
                "constraints": f.constraints,
                "degreeFormula": f.degree_formula,
                "primeCondition": f.prime_condition,
            }
            for f in cat.families
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def import_json(text: str) -> Catalog:
    """Inverse of :func:`export_json`.

    Families are symbolic references resolved against the built-in
    definitions; their documentation strings must match exactly, so a
    round trip is the identity.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"malformed catalog JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CatalogError("malformed catalog JSON: expected an object")

    families = []
    for row in doc.get("families", ()):
        name = row.get("name")
        fam = _FAMILY_BY_IDENT.get(name)
        if fam is None:
            raise CatalogError(f"family {name!r}: unknown family identifier")
        expected = {
            "constraints": fam.constraints,
            "degreeFormula": fam.degree_formula,
            "primeCondition": fam.prime_condition,
        }
        for key, want in expected.items():
            if row.get(key) != want:
                raise CatalogError(
                    f"family {name!r}: field {key!r} does not match the "
                    f"built-in definition ({row.get(key)!r} != {want!r})"
                )
        families.append(fam)

    sporadics = []
    for row in doc.get("sporadics", ()):
        name = row.get("name")
        if not isinstance(name, str) or not name:
            raise CatalogError(f"sporadic entry with missing name: {row!r}")
        degrees = row.get("degrees")
        if not isinstance(degrees, list) or not degrees:
            raise CatalogError(f"sporadic {name!r}: missing degree list")
        for d in degrees:
            if not isinstance(d, int) or d <= 0 or d % 2:
                raise CatalogError(
                    f"sporadic {name!r}: degree {d!r} is not a positive even integer"
                )
        primes = row.get("primes")
        if (
            not isinstance(primes, dict)
            or not isinstance(primes.get("modulus"), int)
            or not isinstance(primes.get("residues"), list)
        ):
            raise CatalogError(f"sporadic {name!r}: malformed prime set")
        mod = primes["modulus"]
        res = primes["residues"]
        if mod < 1 or any(not isinstance(r, int) or not 0 <= r < mod for r in res):
            raise CatalogError(f"sporadic {name!r}: malformed prime set")
        sporadics.append(
            SporadicEntry(name, tuple(sorted(degrees)), normalize(make(mod, res)))
        )

    return Catalog(families=tuple(families), sporadics=tuple(sporadics))
