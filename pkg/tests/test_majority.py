import random

import numpy as np
import pytest

from majorityrank import (
    AlternativeSet,
    Criterion,
    InputError,
    MajorityStructure,
    Profile,
    build_majority,
    count_cycles,
    sections,
)
from conftest import TOY_BEATS, order_ranking
from oracles import brute_cycles, random_structure


def test_toy_profile_majority_matrix(toy_structure):
    assert np.array_equal(toy_structure.beats, TOY_BEATS)
    assert not toy_structure.ties.any()


def test_weighted_pair_wins():
    ab = AlternativeSet(("a", "b"))
    better = order_ranking(ab, ("a", "b"))
    worse = order_ranking(ab, ("b", "a"))
    ms = build_majority(Profile(ab, [Criterion("c1", 2, better), Criterion("c2", 1, worse)]))
    assert ms.beats[0, 1] and not ms.beats[1, 0] and not ms.ties[0, 1]


def test_equal_weights_tie():
    ab = AlternativeSet(("a", "b"))
    ms = build_majority(Profile(ab, [
        Criterion("c1", 1, order_ranking(ab, ("a", "b"))),
        Criterion("c2", 1, order_ranking(ab, ("b", "a"))),
    ]))
    assert ms.ties[0, 1] and ms.ties[1, 0] and not ms.beats.any()


def test_structure_validation_rejects_bad_matrices():
    names = AlternativeSet(("a", "b"))
    sym = np.array([[0, 1], [1, 0]], dtype=bool)
    with pytest.raises(InputError):
        MajorityStructure(names, sym, np.zeros((2, 2), dtype=bool))
    with pytest.raises(InputError):
        MajorityStructure(names, np.zeros((2, 2), dtype=bool), np.zeros((2, 2), dtype=bool))


def test_sections_read_off(toy_structure):
    result = sections(toy_structure, "x5")
    assert result.lower == {"x1", "x2", "x3"}
    assert result.upper == {"x4"}
    assert result.horizon == set()
    with pytest.raises(InputError):
        sections(toy_structure, "nope")


def test_sections_on_chain_and_ties():
    abc = AlternativeSet(("a", "b", "c"))
    chain = MajorityStructure(abc, np.triu(np.ones((3, 3), dtype=bool), 1), np.zeros((3, 3), dtype=bool))
    mid = sections(chain, "b")
    assert mid.lower == {"c"} and mid.upper == {"a"} and mid.horizon == set()

    ab = AlternativeSet(("a", "b"))
    tied = MajorityStructure(ab, np.zeros((2, 2), dtype=bool), ~np.eye(2, dtype=bool))
    both = sections(tied, "a")
    assert both.lower == set() and both.upper == set() and both.horizon == {"b"}


def test_cycles_on_transitive_chain_are_zero():
    names = AlternativeSet(tuple("abcd"))
    chain = MajorityStructure(names, np.triu(np.ones((4, 4), dtype=bool), 1), np.zeros((4, 4), dtype=bool))
    assert [count_cycles(chain, k) for k in (3, 4, 5)] == [0, 0, 0]


def test_toy_profile_three_cycles(toy_structure):
    # enumeration finds exactly x1x2x3, x1x4x5, x2x4x5, x3x4x5
    assert brute_cycles(toy_structure, 3) == 4
    assert count_cycles(toy_structure, 3) == 4


def test_cycle_length_bounds(toy_structure):
    for bad in (2, 6, 0):
        with pytest.raises(InputError):
            count_cycles(toy_structure, bad)


def test_trichotomy_and_symmetry_on_random_profiles():
    rng = random.Random(3)
    for _ in range(25):
        m = rng.randint(2, 7)
        names = AlternativeSet(tuple(f"a{i}" for i in range(m)))
        criteria = []
        for c in range(rng.randint(1, 5)):
            scores = {name: float(rng.randint(0, 4)) for name in names}
            from majorityrank import from_scores
            criteria.append(Criterion(f"c{c}", rng.randint(1, 3), from_scores(names, scores)))
        ms = build_majority(Profile(names, criteria))
        off = ~np.eye(m, dtype=bool)
        assert not (ms.beats & ms.beats.T).any()
        assert np.array_equal(ms.ties, ms.ties.T)
        assert np.array_equal(ms.beats | ms.beats.T | ms.ties, off)


def test_weight_split_equivalence():
    rng = random.Random(5)
    names = AlternativeSet(tuple(f"a{i}" for i in range(6)))
    from majorityrank import from_scores
    rankings = [from_scores(names, {n: float(rng.randint(0, 5)) for n in names}) for _ in range(3)]
    weights = [3, 1, 2]
    weighted = Profile(names, [Criterion(f"c{i}", w, r) for i, (w, r) in enumerate(zip(weights, rankings))])
    split = Profile(names, [
        Criterion(f"c{i}_{k}", 1, r)
        for i, (w, r) in enumerate(zip(weights, rankings))
        for k in range(w)
    ])
    a, b = build_majority(weighted), build_majority(split)
    assert np.array_equal(a.beats, b.beats) and np.array_equal(a.ties, b.ties)


def test_scheme_of_criterion_rankings_is_irrelevant():
    rng = random.Random(9)
    names = AlternativeSet(tuple(f"a{i}" for i in range(6)))
    from majorityrank import from_scores
    scores = [{n: float(rng.randint(0, 3)) for n in names} for _ in range(4)]
    dense = Profile(names, [Criterion(f"c{i}", 1, from_scores(names, s, scheme="dense")) for i, s in enumerate(scores)])
    comp = Profile(names, [Criterion(f"c{i}", 1, from_scores(names, s, scheme="competition")) for i, s in enumerate(scores)])
    a, b = build_majority(dense), build_majority(comp)
    assert np.array_equal(a.beats, b.beats) and np.array_equal(a.ties, b.ties)


def test_cycle_trace_matches_enumeration_on_random_structures():
    rng = random.Random(13)
    for _ in range(40):
        ms = random_structure(rng, rng.randint(3, 8))
        for k in (3, 4, 5):
            assert count_cycles(ms, k) == brute_cycles(ms, k)
