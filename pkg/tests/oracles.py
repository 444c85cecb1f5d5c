"""Definitional brute-force references used to validate the fast paths."""

from __future__ import annotations

import itertools
import random

import numpy as np

from majorityrank import AlternativeSet, MajorityStructure, Ranking


def random_structure(rng: random.Random, m: int, tie_prob: float = 0.2) -> MajorityStructure:
    """Random majority structure: each pair beats one way, the other, or ties."""
    names = AlternativeSet(tuple(f"a{i}" for i in range(m)))
    beats = np.zeros((m, m), dtype=bool)
    ties = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            roll = rng.random()
            if roll < tie_prob:
                ties[i, j] = ties[j, i] = True
            elif roll < tie_prob + (1.0 - tie_prob) / 2.0:
                beats[i, j] = True
            else:
                beats[j, i] = True
    return MajorityStructure(names, beats, ties)


def random_ranking(rng: random.Random, alternatives: AlternativeSet, max_positions: int | None = None) -> Ranking:
    """Random dense ranking with ties."""
    m = len(alternatives)
    positions = max_positions or rng.randint(1, m)
    scores = {name: rng.randint(1, positions) for name in alternatives}
    used = sorted(set(scores.values()), reverse=True)
    dense = {v: k + 1 for k, v in enumerate(used)}
    return Ranking(alternatives, {name: dense[v] for name, v in scores.items()})


def _indices(ms: MajorityStructure, subset) -> list[int]:
    if subset is None:
        return list(range(len(ms)))
    return sorted(ms.alternatives.index(name) for name in subset)


def brute_uncovered(ms: MajorityStructure, subset=None) -> frozenset[str]:
    idx = _indices(ms, subset)
    beats = ms.beats
    out = []
    for y in idx:
        covered = False
        for x in idx:
            if x == y or not beats[x, y]:
                continue
            if all(beats[x, z] or not beats[y, z] for z in idx if z not in (x, y)):
                covered = True
                break
        if not covered:
            out.append(ms.alternatives.items[y])
    return frozenset(out)


def _dominator_masks(ms: MajorityStructure, idx: list[int]) -> dict[int, int]:
    return {
        x: sum(1 << y for y in idx if ms.beats[y, x])
        for x in idx
    }


def externally_stable(ms: MajorityStructure, idx: list[int], candidate: set[int]) -> bool:
    masks = _dominator_masks(ms, idx)
    bits = sum(1 << x for x in candidate)
    return all(masks[x] & bits for x in idx if x not in candidate)


def brute_mes_union(ms: MajorityStructure, subset=None) -> frozenset[str]:
    """Union of minimal externally stable sets by full subset enumeration.

    External stability survives taking supersets, so minimality only needs
    single-element removals to be checked.
    """
    idx = _indices(ms, subset)
    masks = _dominator_masks(ms, idx)

    def stable(bits: int) -> bool:
        return all(masks[x] & bits for x in idx if not bits & (1 << x))

    stable_sets = []
    for r in range(1, len(idx) + 1):
        for comb in itertools.combinations(idx, r):
            bits = sum(1 << x for x in comb)
            if stable(bits):
                stable_sets.append(bits)
    union = 0
    for bits in stable_sets:
        if not any(stable(bits & ~(1 << x)) for x in idx if bits & (1 << x)):
            union |= bits
    return frozenset(ms.alternatives.items[i] for i in idx if union & (1 << i))


def brute_weak_top_cycle(ms: MajorityStructure, subset=None) -> frozenset[str]:
    """Smallest dominant set by enumerating subsets in increasing size."""
    idx = _indices(ms, subset)
    masks = _dominator_masks(ms, idx)
    for r in range(1, len(idx) + 1):
        for comb in itertools.combinations(idx, r):
            inside = sum(1 << x for x in comb)
            # dominant: every outsider is beaten by every member
            if all(masks[x] & inside == inside for x in idx if not inside & (1 << x)):
                return frozenset(ms.alternatives.items[i] for i in comb)
    raise AssertionError("the full subset is always dominant")


def brute_cycles(ms: MajorityStructure, k: int) -> int:
    """Count k-cycles by enumerating vertex tuples anchored at their minimum."""
    m = len(ms)
    count = 0
    for tup in itertools.permutations(range(m), k):
        if tup[0] != min(tup):
            continue
        if all(ms.beats[tup[i], tup[(i + 1) % k]] for i in range(k)):
            count += 1
    return count


def naive_pair_stats(r1: Ranking, r2: Ranking) -> tuple[int, int, int, int, int, int]:
    """(N, N+, N-, n1, n2, N0) by direct pair loops."""
    names = list(r1.alternatives)
    total = concordant = discordant = ties1 = ties2 = ties_both = 0
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a = r1.ranks[names[i]] - r1.ranks[names[j]]
            b = r2.ranks[names[i]] - r2.ranks[names[j]]
            total += 1
            if a == 0 and b == 0:
                ties_both += 1
            if a == 0:
                ties1 += 1
            if b == 0:
                ties2 += 1
            if a != 0 and b != 0:
                if (a > 0) == (b > 0):
                    concordant += 1
                else:
                    discordant += 1
    return total, concordant, discordant, ties1, ties2, ties_both
