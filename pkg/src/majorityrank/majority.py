"""Weighted majority relation over a profile, sections, and cycle counting.

For alternatives x, y the structure records exactly one of three outcomes:
x beats y (criteria preferring x outweigh, by votes, those preferring y),
y beats x, or the two sides carry equal weight and the pair is tied.
Criteria that rank the pair equal contribute to neither side.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import AlternativeSet, Profile
from .errors import InputError

# Closed k-walks on a loop-free asymmetric digraph cannot revisit a vertex
# for k <= 5 (a revisit would split off a closed walk of length 1 or 2),
# so the trace of the k-th matrix power counts each k-cycle exactly k times.
# For k >= 6 the decomposition 3+3 breaks the argument.
_CYCLE_LENGTHS = (3, 4, 5)


@dataclass(frozen=True)
class MajorityStructure:
    """Boolean majority and tie matrices over an alternative set.

    ``beats[i, j]`` is True iff alternative ``i`` majority-dominates ``j``;
    ``ties`` is symmetric and irreflexive.  For every pair exactly one of
    ``beats[i, j]``, ``beats[j, i]``, ``ties[i, j]`` holds.
    """

    alternatives: AlternativeSet
    beats: np.ndarray
    ties: np.ndarray

    def __post_init__(self) -> None:
        m = len(self.alternatives)
        beats = np.array(self.beats, dtype=bool)
        ties = np.array(self.ties, dtype=bool)
        if beats.shape != (m, m) or ties.shape != (m, m):
            raise InputError(f"matrices must be {m}x{m}")
        if beats.diagonal().any() or ties.diagonal().any():
            raise InputError("majority and tie matrices must have zero diagonals")
        if (beats & beats.T).any():
            raise InputError("majority matrix must be asymmetric")
        if not np.array_equal(ties, ties.T):
            raise InputError("tie matrix must be symmetric")
        off = ~np.eye(m, dtype=bool)
        if not np.array_equal(beats | beats.T | ties, off) or (beats & ties).any() or (beats.T & ties).any():
            raise InputError("each pair must be decided exactly once (beat, lose or tie)")
        beats.setflags(write=False)
        ties.setflags(write=False)
        object.__setattr__(self, "beats", beats)
        object.__setattr__(self, "ties", ties)

    def __len__(self) -> int:
        return len(self.alternatives)

    def restrict_indices(self, subset: set[str] | frozenset[str] | None) -> np.ndarray:
        """Indices of ``subset`` in stable alternative order (full set if None)."""
        if subset is None:
            return np.arange(len(self.alternatives))
        if not subset:
            raise InputError("subset must not be empty")
        idx = sorted(self.alternatives.index(name) for name in subset)
        return np.array(idx, dtype=np.intp)


@dataclass(frozen=True)
class Sections:
    """The three sections of one alternative: dominated, dominating, tied."""

    lower: frozenset[str]
    upper: frozenset[str]
    horizon: frozenset[str]


def build_majority(profile: Profile) -> MajorityStructure:
    """Aggregate a profile into its weighted majority structure.

    ``beats[x, y]`` holds iff the total weight of criteria ranking x
    strictly better than y exceeds the total weight ranking y better;
    equal totals put the pair into ``ties``.
    """
    m = len(profile.alternatives)
    votes = np.zeros((m, m), dtype=np.int64)
    for criterion in profile.criteria:
        ranks = criterion.ranking.rank_vector()
        votes += criterion.weight * (ranks[:, None] < ranks[None, :])
    beats = votes > votes.T
    ties = (votes == votes.T) & ~np.eye(m, dtype=bool)
    return MajorityStructure(profile.alternatives, beats, ties)


def sections(ms: MajorityStructure, x: str) -> Sections:
    """Lower section (dominated by x), upper section (dominating x), horizon (tied)."""
    i = ms.alternatives.index(x)
    items = ms.alternatives.items
    lower = frozenset(items[j] for j in np.flatnonzero(ms.beats[i]))
    upper = frozenset(items[j] for j in np.flatnonzero(ms.beats[:, i]))
    horizon = frozenset(items[j] for j in np.flatnonzero(ms.ties[i]))
    return Sections(lower=lower, upper=upper, horizon=horizon)


def count_cycles(ms: MajorityStructure, k: int) -> int:
    """Exact number of directed k-cycles in the majority relation, k in {3, 4, 5}."""
    if k not in _CYCLE_LENGTHS:
        raise InputError(f"cycle length must be one of {_CYCLE_LENGTHS}, got {k}")
    m = len(ms)
    if m ** k >= 2 ** 62:  # int64 trace stays exact
        raise InputError(f"cycle counting supports at most {int(2 ** 62 ** (1 / 5))} alternatives")
    power = np.linalg.matrix_power(ms.beats.astype(np.int64), k)
    trace = int(np.trace(power))
    assert trace % k == 0
    return trace // k
