import random
from collections import Counter
from itertools import combinations_with_replacement

import pytest

from polycoh.catalog import DegreeMultiset
from polycoh.decompose import decompose, decompose_at_prime
from polycoh.errors import InvalidTypeError, NotAPrimeError
from polycoh.residues import contains_prime


def naive_decompositions(cat, target):
    """Reference enumerator: pick the smallest remaining degree, try every
    fitting candidate that covers it, deduplicate at the end."""
    target = DegreeMultiset.of(target)
    cands = [
        (inst, Counter(cat.degrees_of(inst).degrees)) for inst in cat.candidates(target)
    ]
    results = set()

    def rec(remaining, acc):
        if not remaining:
            results.add(tuple(sorted(acc)))
            return
        d = min(remaining)
        for inst, degs in cands:
            if degs[d] and all(remaining[x] >= c for x, c in degs.items()):
                rec(remaining - degs, acc + [(inst.name, inst.params)])

    rec(Counter(target.degrees), [])
    return results


def as_sets(decs):
    return {tuple(sorted((p.name, p.params) for p in d.parts)) for d in decs}


# ---------------------------------------------------------------- frozen examples


def test_single_circle(cat):
    assert [d.names for d in decompose(cat, [2])] == [("S^1",)]


def test_four_six(cat):
    got = as_sets(decompose(cat, [4, 6]))
    assert got == naive_decompositions(cat, [4, 6])
    assert got == {
        (("SU(3)", (3,)),),
        (("G(3,3,2)", (3, 3, 2)),),
        (("C_3", (3,)), ("SU(2)", (2,))),
        (("C_3", (3,)), ("Sp(1)", (1,))),
    }


def test_four_twelve(cat):
    got = as_sets(decompose(cat, [4, 12]))
    assert got == naive_decompositions(cat, [4, 12])
    # the dihedral row is excluded at m = 6, its G(6,6,2) twin is not
    assert got == {
        (("G_2", ()),),
        (("G(6,6,2)", (6, 6, 2)),),
        (("C_6", (6,)), ("SU(2)", (2,))),
        (("C_6", (6,)), ("Sp(1)", (1,))),
    }


def test_empty_target_has_the_empty_decomposition(cat):
    decs = decompose(cat, [])
    assert len(decs) == 1 and decs[0].parts == ()


def test_output_order_is_canonical(cat):
    decs = decompose(cat, [4, 12])
    assert [d.names for d in decs] == [
        ("G(6,6,2)",),
        ("G_2",),
        ("C_6", "SU(2)"),
        ("C_6", "Sp(1)"),
    ]


# ---------------------------------------------------------------- properties


def test_matches_naive_enumerator_small_targets(cat):
    for size in range(0, 4):
        for ms in combinations_with_replacement(range(2, 25, 2), size):
            got = decompose(cat, ms)
            assert as_sets(got) == naive_decompositions(cat, ms), ms
            assert len(as_sets(got)) == len(got), ms  # no duplicates


def test_soundness_random_targets(cat):
    rng = random.Random(104)
    for _ in range(40):
        ms = sorted(rng.choice(range(2, 33, 2)) for _ in range(rng.randint(0, 4)))
        for dec in decompose(cat, ms):
            merged = Counter()
            for part in dec.parts:
                merged.update(cat.degrees_of(part).degrees)
            assert sorted(merged.elements()) == ms


def test_order_independence(cat):
    rng = random.Random(200)
    ms = [4, 6, 8, 12]
    reference = [d.names for d in decompose(cat, ms)]
    for _ in range(5):
        shuffled = ms[:]
        rng.shuffle(shuffled)
        assert [d.names for d in decompose(cat, shuffled)] == reference


def test_monotone_consistency_under_union(cat):
    rng = random.Random(321)
    small = [[2], [4], [4, 6], [4, 12], [8], [12, 16], [4, 8]]
    for p in (2, 3, 5, 7, 13):
        for _ in range(10):
            a = rng.choice(small)
            b = rng.choice(small)
            da = decompose_at_prime(cat, a, p)
            db = decompose_at_prime(cat, b, p)
            if da and db:
                assert decompose_at_prime(cat, sorted(a + b), p), (a, b, p)


def test_invalid_inputs(cat):
    with pytest.raises(InvalidTypeError):
        decompose(cat, [5])
    with pytest.raises(NotAPrimeError):
        decompose_at_prime(cat, [4], 6)


# ---------------------------------------------------------------- at a prime


def test_decompose_at_prime_examples(cat):
    assert [d.names for d in decompose_at_prime(cat, [4, 12], 3)] == [("G_2",)]
    assert decompose_at_prime(cat, [4, 12], 2) == []
    for p in (2, 3, 5, 101):
        decs = decompose_at_prime(cat, [4, 6, 8], p)
        assert ("SU(4)",) in [d.names for d in decs]


def test_decompose_at_prime_is_a_filter(cat):
    for ms in ([4, 12], [4, 6, 8], [12, 16], [8, 12]):
        for p in (2, 3, 5, 7, 11, 13):
            direct = decompose_at_prime(cat, ms, p)
            filtered = [
                d
                for d in decompose(cat, ms)
                if all(contains_prime(cat.prime_set_of(x), p) for x in d.parts)
            ]
            assert direct == filtered
