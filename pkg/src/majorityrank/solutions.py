"""Tournament solutions and solution-based sorting.

Three solution concepts, each selecting a non-empty "best" subset of any
given subset of alternatives (all relations restricted to that subset):

* ``UC``  - the uncovered set.  x covers y iff x beats y and beats
  everything y beats; covering is transitive, so some alternative is
  always uncovered.
* ``MES`` - the union of all inclusion-minimal externally stable sets.
  A set is externally stable when every outside alternative is beaten by
  some member.
* ``WTC`` - the weak top cycle: the unique minimal set whose every member
  beats every non-member.

Sorting extracts the solution, removes it, and repeats; the k-th extracted
class receives rank k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DENSE, AlternativeSet, Ranking
from .errors import InputError
from .majority import MajorityStructure

UC = "UC"
MES = "MES"
WTC = "WTC"
KINDS = (UC, MES, WTC)


@dataclass(frozen=True)
class SolutionSet:
    kind: str
    members: frozenset[str]


@dataclass(frozen=True)
class SortedClasses:
    """Ordered partition produced by iterated select-and-exclude sorting."""

    alternatives: AlternativeSet
    kind: str
    classes: tuple[frozenset[str], ...]

    def ranking(self, scheme: str = DENSE) -> Ranking:
        """Dense ranking assigning rank k to every member of the k-th class."""
        ranks = {}
        for k, cls in enumerate(self.classes, start=1):
            for name in cls:
                ranks[name] = k
        return Ranking(self.alternatives, ranks, scheme=scheme)


def uncovered_set(ms: MajorityStructure, subset: frozenset[str] | set[str] | None = None) -> SolutionSet:
    """Alternatives of ``subset`` not covered by any other member."""
    idx = ms.restrict_indices(subset)
    sub = ms.beats[np.ix_(idx, idx)]
    # leak[y, x] = # of z beaten by y but not by x; x covers y iff it beats y and leak is 0
    leak = sub.astype(np.int64) @ (~sub).astype(np.int64).T
    covers = sub & (leak.T == 0)
    uncovered = ~covers.any(axis=0)
    items = ms.alternatives.items
    return SolutionSet(UC, frozenset(items[i] for i in idx[uncovered]))


def _masks(ms: MajorityStructure, idx: np.ndarray) -> tuple[int, list[int], list[int]]:
    """Bitmask views of the restricted relation: member mask, dominators, dominated."""
    members = 0
    for i in idx.tolist():
        members |= 1 << i
    beats = ms.beats
    upper = [0] * len(beats)
    lower = [0] * len(beats)
    for i in idx.tolist():
        up = 0
        low = 0
        for j in idx.tolist():
            if beats[j, i]:
                up |= 1 << j
            if beats[i, j]:
                low |= 1 << j
        upper[i] = up
        lower[i] = low
    return members, upper, lower


def _is_stable(candidate: int, members: int, upper: list[int]) -> bool:
    outside = members & ~candidate
    while outside:
        bit = outside & -outside
        x = bit.bit_length() - 1
        if not (upper[x] & candidate):
            return False
        outside ^= bit
    return True


def is_externally_stable(
    ms: MajorityStructure,
    candidate: frozenset[str] | set[str],
    subset: frozenset[str] | set[str] | None = None,
) -> bool:
    """Whether every alternative of ``subset`` outside ``candidate`` is beaten by a member."""
    idx = ms.restrict_indices(subset)
    members, upper, _ = _masks(ms, idx)
    cand = 0
    for name in candidate:
        bit = 1 << ms.alternatives.index(name)
        if not (members & bit):
            raise InputError(f"candidate member {name!r} lies outside the subset")
        cand |= bit
    return _is_stable(cand, members, upper)


def mes_union(ms: MajorityStructure, subset: frozenset[str] | set[str] | None = None) -> SolutionSet:
    """Union of all inclusion-minimal externally stable subsets of ``subset``.

    Membership test: x lies in some minimal externally stable set iff for
    some witness z in {x} or the lower section of x, the subset minus z and
    minus every dominator of z other than x is still externally stable.  In
    that case x is the sole member able to cover z, so pruning down to a
    minimal stable set can never drop x.  External stability is preserved
    under supersets, which makes the certificate sound in both directions.
    """
    idx = ms.restrict_indices(subset)
    members, upper, lower = _masks(ms, idx)
    chosen = []
    items = ms.alternatives.items
    for i in idx.tolist():
        witnesses = [i]
        rest = lower[i]
        while rest:
            bit = rest & -rest
            witnesses.append(bit.bit_length() - 1)
            rest ^= bit
        me = 1 << i
        for z in witnesses:
            reduced = members & ~(((1 << z) | upper[z]) & ~me)
            if _is_stable(reduced, members, upper):
                chosen.append(items[i])
                break
    return SolutionSet(MES, frozenset(chosen))


def minimal_stable_set_containing(
    ms: MajorityStructure,
    x: str,
    subset: frozenset[str] | set[str] | None = None,
) -> frozenset[str]:
    """One inclusion-minimal externally stable set containing ``x``.

    Greedy pruning in stable index order, never removing ``x``; the result
    is deterministic.  Raises InputError when no minimal stable set
    contains ``x``.
    """
    idx = ms.restrict_indices(subset)
    members, upper, lower = _masks(ms, idx)
    i = ms.alternatives.index(x)
    me = 1 << i
    if not (members & me):
        raise InputError(f"alternative {x!r} lies outside the subset")
    witnesses = [i]
    rest = lower[i]
    while rest:
        bit = rest & -rest
        witnesses.append(bit.bit_length() - 1)
        rest ^= bit
    for z in witnesses:
        current = members & ~(((1 << z) | upper[z]) & ~me)
        if not _is_stable(current, members, upper):
            continue
        for j in idx.tolist():
            bit = 1 << j
            if bit == me or not (current & bit):
                continue
            if _is_stable(current & ~bit, members, upper):
                current &= ~bit
        items = ms.alternatives.items
        return frozenset(items[j] for j in idx.tolist() if current & (1 << j))
    raise InputError(f"no minimal externally stable set contains {x!r}")


def weak_top_cycle(ms: MajorityStructure, subset: frozenset[str] | set[str] | None = None) -> SolutionSet:
    """The minimal dominant subset of ``subset``.

    Dominant sets form an inclusion chain, and an alternative with maximal
    wins-minus-losses score always belongs to the minimal one; closing that
    seed under "add anything not beaten by every current member" therefore
    yields exactly the weak top cycle.
    """
    idx = ms.restrict_indices(subset)
    sub = ms.beats[np.ix_(idx, idx)]
    score = sub.sum(axis=1) - sub.sum(axis=0)
    inside = np.zeros(len(idx), dtype=bool)
    inside[int(np.argmax(score))] = True
    while True:
        dominated_by_all = sub[inside].all(axis=0)
        grow = ~inside & ~dominated_by_all
        if not grow.any():
            break
        inside |= grow
    items = ms.alternatives.items
    return SolutionSet(WTC, frozenset(items[i] for i in idx[inside]))


_SOLVERS = {UC: uncovered_set, MES: mes_union, WTC: weak_top_cycle}


def solve(ms: MajorityStructure, kind: str, subset: frozenset[str] | set[str] | None = None) -> SolutionSet:
    """Apply one solution concept by name."""
    try:
        solver = _SOLVERS[kind]
    except KeyError:
        raise InputError(f"unknown solution kind {kind!r}; expected one of {KINDS}") from None
    return solver(ms, subset)


def sort_by_solution(ms: MajorityStructure, kind: str) -> SortedClasses:
    """Iterated select-and-exclude sorting by the chosen solution concept."""
    if kind not in _SOLVERS:
        raise InputError(f"unknown solution kind {kind!r}; expected one of {KINDS}")
    remaining = set(ms.alternatives.items)
    classes: list[frozenset[str]] = []
    while remaining:
        best = _SOLVERS[kind](ms, remaining).members
        assert best, "solution concepts never return an empty set"
        classes.append(best)
        remaining -= best
    return SortedClasses(alternatives=ms.alternatives, kind=kind, classes=tuple(classes))
