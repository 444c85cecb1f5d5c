import random

import numpy as np
import pytest

from majorityrank import (
    AlternativeSet,
    InputError,
    MajorityStructure,
    is_externally_stable,
    mes_union,
    minimal_stable_set_containing,
    solve,
    sort_by_solution,
    uncovered_set,
    weak_top_cycle,
)
from oracles import brute_mes_union, brute_uncovered, brute_weak_top_cycle, random_structure

ABC = AlternativeSet(("a", "b", "c"))
CHAIN = MajorityStructure(ABC, np.triu(np.ones((3, 3), dtype=bool), 1), np.zeros((3, 3), dtype=bool))
CYCLE = MajorityStructure(
    ABC,
    np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=bool),
    np.zeros((3, 3), dtype=bool),
)


def test_chain_solutions():
    assert uncovered_set(CHAIN).members == {"a"}
    assert mes_union(CHAIN).members == {"a"}
    assert weak_top_cycle(CHAIN).members == {"a"}


def test_cycle_solutions():
    assert uncovered_set(CYCLE).members == {"a", "b", "c"}
    assert mes_union(CYCLE).members == {"a", "b", "c"}
    assert weak_top_cycle(CYCLE).members == {"a", "b", "c"}


def test_toy_structure_solutions(toy_structure):
    full = set(toy_structure.alternatives.items)
    # no pair covers another, every alternative sits in some minimal stable
    # set, and no proper dominant subset exists; brute force agrees
    assert uncovered_set(toy_structure).members == full == brute_uncovered(toy_structure)
    assert mes_union(toy_structure).members == full == brute_mes_union(toy_structure)
    assert weak_top_cycle(toy_structure).members == full == brute_weak_top_cycle(toy_structure)


def test_toy_minimal_stable_sets(toy_structure):
    expected = [{"x1", "x5"}, {"x2", "x5"}, {"x3", "x5"}, {"x4", "x5"}, {"x2", "x3", "x4"}]
    for candidate in expected:
        assert is_externally_stable(toy_structure, candidate)
        assert not any(
            is_externally_stable(toy_structure, candidate - {x}) for x in candidate
        )
    for x in toy_structure.alternatives:
        minimal = minimal_stable_set_containing(toy_structure, x)
        assert x in minimal
        assert is_externally_stable(toy_structure, minimal)
        assert not any(is_externally_stable(toy_structure, minimal - {y}) for y in minimal)


def test_empty_subset_rejected(toy_structure):
    for func in (uncovered_set, mes_union, weak_top_cycle):
        with pytest.raises(InputError):
            func(toy_structure, set())


def test_unknown_kind_rejected(toy_structure):
    with pytest.raises(InputError):
        solve(toy_structure, "banks")
    with pytest.raises(InputError):
        sort_by_solution(toy_structure, "banks")


def test_sorting_on_chain_is_the_chain():
    classes = sort_by_solution(CHAIN, "UC").classes
    assert classes == ({"a"}, {"b"}, {"c"})
    assert sort_by_solution(CHAIN, "UC").ranking().ranks == {"a": 1, "b": 2, "c": 3}


def test_sorting_toy_structure_single_class(toy_structure):
    sorted_classes = sort_by_solution(toy_structure, "UC")
    assert sorted_classes.classes == (frozenset(toy_structure.alternatives.items),)
    assert set(sorted_classes.ranking().ranks.values()) == {1}


def test_undominated_alternatives_belong_everywhere():
    rng = random.Random(31)
    found = 0
    while found < 20:
        ms = random_structure(rng, rng.randint(2, 9))
        undominated = [
            name for i, name in enumerate(ms.alternatives) if not ms.beats[:, i].any()
        ]
        if not undominated:
            continue
        found += 1
        for name in undominated:
            assert name in uncovered_set(ms).members
            assert name in mes_union(ms).members
            assert name in weak_top_cycle(ms).members


def test_solutions_match_brute_force_on_random_structures():
    rng = random.Random(33)
    for _ in range(150):
        m = rng.randint(1, 9)
        ms = random_structure(rng, m, tie_prob=rng.choice([0.0, 0.2, 0.5]))
        subset = None
        if m > 1 and rng.random() < 0.5:
            size = rng.randint(1, m)
            subset = set(rng.sample(ms.alternatives.items, size))
        assert uncovered_set(ms, subset).members == brute_uncovered(ms, subset)
        assert mes_union(ms, subset).members == brute_mes_union(ms, subset)
        assert weak_top_cycle(ms, subset).members == brute_weak_top_cycle(ms, subset)


def test_mes_output_is_externally_stable_union():
    rng = random.Random(35)
    for _ in range(60):
        ms = random_structure(rng, rng.randint(1, 9))
        union = mes_union(ms).members
        assert union
        assert is_externally_stable(ms, union)


def test_wtc_dominance_and_minimality():
    rng = random.Random(37)
    for _ in range(60):
        ms = random_structure(rng, rng.randint(1, 9))
        cycle = weak_top_cycle(ms).members
        outside = set(ms.alternatives.items) - cycle
        index = ms.alternatives.index
        assert all(ms.beats[index(y), index(x)] for y in cycle for x in outside)
        for removed in cycle:
            kept = cycle - {removed}
            if not kept:
                continue
            rest = outside | {removed}
            assert not all(ms.beats[index(y), index(x)] for y in kept for x in rest)


def test_sorting_partitions_and_is_deterministic():
    rng = random.Random(39)
    for _ in range(40):
        ms = random_structure(rng, rng.randint(1, 9))
        for kind in ("UC", "MES", "WTC"):
            sorted_classes = sort_by_solution(ms, kind)
            merged = [name for cls in sorted_classes.classes for name in cls]
            assert sorted(merged) == sorted(ms.alternatives.items)
            again = sort_by_solution(ms, kind)
            assert again.classes == sorted_classes.classes
            remaining = set(ms.alternatives.items)
            for cls in sorted_classes.classes:
                assert solve(ms, kind, remaining).members == cls
                remaining -= cls
