"""Alternatives, rankings, criteria and profiles.

A ranking maps every alternative to a positive integer rank, smaller being
better, with ties allowed.  Two numbering schemes are supported:

* ``dense`` - the ranks in use are exactly ``1..K`` (a tied block is
  followed by the next integer);
* ``competition`` - the rank of an alternative is one plus the number of
  alternatives that are strictly better.

Both schemes encode the same weak order; they differ only in labelling.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .errors import InputError

DENSE = "dense"
COMPETITION = "competition"
SCHEMES = (DENSE, COMPETITION)


class Comparison(enum.Enum):
    """Outcome of comparing two alternatives within one ranking."""

    BETTER = "better"
    WORSE = "worse"
    TIED = "tied"


@dataclass(frozen=True)
class AlternativeSet:
    """Ordered set of unique alternative identifiers.

    Iteration order is stable and defines row/column indexing for every
    matrix built over the set.
    """

    items: tuple[str, ...]

    def __init__(self, items: Iterable[str]):
        object.__setattr__(self, "items", tuple(items))
        if not self.items:
            raise InputError("alternative set must not be empty")
        index: dict[str, int] = {}
        for i, name in enumerate(self.items):
            if not isinstance(name, str) or not name:
                raise InputError(f"alternative identifiers must be non-empty strings, got {name!r}")
            if name in index:
                raise InputError(f"duplicate alternative {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise InputError(f"unknown alternative {name!r}") from None

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[str]:
        return iter(self.items)

    def __contains__(self, name: object) -> bool:
        return name in self._index  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Ranking:
    """Assignment of one positive integer rank to every alternative.

    ``scheme`` declares the intended numbering convention.  Constructors in
    this package always emit conforming numberings; rankings ingested from
    files keep their published ranks as-is, so conformity there is checked
    advisorily (see :meth:`conforms_to_scheme`).
    """

    alternatives: AlternativeSet
    ranks: Mapping[str, int]
    scheme: str = DENSE

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise InputError(f"unknown ranking scheme {self.scheme!r}")
        ranks = dict(self.ranks)
        if set(ranks) != set(self.alternatives.items):
            missing = set(self.alternatives.items) - set(ranks)
            extra = set(ranks) - set(self.alternatives.items)
            raise InputError(f"ranking does not match alternative set (missing {sorted(missing)}, extra {sorted(extra)})")
        for name, rank in ranks.items():
            if not isinstance(rank, (int, np.integer)) or isinstance(rank, bool) or rank < 1:
                raise InputError(f"rank of {name!r} must be a positive integer, got {rank!r}")
        object.__setattr__(self, "ranks", MappingProxyType({a: int(ranks[a]) for a in self.alternatives}))

    def rank_of(self, name: str) -> int:
        self.alternatives.index(name)
        return self.ranks[name]

    def compare(self, a: str, b: str) -> Comparison:
        ra, rb = self.rank_of(a), self.rank_of(b)
        if ra < rb:
            return Comparison.BETTER
        if ra > rb:
            return Comparison.WORSE
        return Comparison.TIED

    def rank_vector(self) -> np.ndarray:
        """Ranks as an int64 vector in alternative-set order."""
        return np.array([self.ranks[a] for a in self.alternatives], dtype=np.int64)

    def distinct_positions(self) -> int:
        return len(set(self.ranks.values()))

    def conforms_to_scheme(self) -> bool:
        """Whether the stored ranks satisfy the declared numbering scheme."""
        values = self.rank_vector()
        if self.scheme == DENSE:
            used = set(values.tolist())
            return used == set(range(1, len(used) + 1))
        expected = 1 + (values[:, None] > values[None, :]).sum(axis=1)
        return bool(np.array_equal(values, expected))

    def to_dense(self) -> "Ranking":
        """Relabel to the dense scheme, preserving the order and all ties."""
        return from_scores(self.alternatives, {a: -r for a, r in self.ranks.items()}, scheme=DENSE)

    def to_competition(self) -> "Ranking":
        """Relabel to the competition scheme, preserving the order and all ties."""
        return from_scores(self.alternatives, {a: -r for a, r in self.ranks.items()}, scheme=COMPETITION)


def from_scores(
    alternatives: AlternativeSet,
    values: Mapping[str, float],
    scheme: str = DENSE,
    decimals: int | None = None,
) -> Ranking:
    """Rank alternatives by descending score.

    Higher value means better (smaller) rank; exactly equal values share a
    rank.  ``decimals`` optionally rounds the values first, so that scores
    published with fixed precision reproduce their published ties; by
    default no rounding is applied and ties require exact equality.

    Raises:
        InputError: if a value is missing or non-finite.
    """
    if scheme not in SCHEMES:
        raise InputError(f"unknown ranking scheme {scheme!r}")
    scored: dict[str, float] = {}
    for name in alternatives:
        if name not in values:
            raise InputError(f"no value for alternative {name!r}")
        v = float(values[name])
        if not math.isfinite(v):
            raise InputError(f"value for alternative {name!r} is not finite: {v!r}")
        scored[name] = round(v, decimals) if decimals is not None else v

    distinct = sorted(set(scored.values()), reverse=True)
    if scheme == DENSE:
        position = {v: i + 1 for i, v in enumerate(distinct)}
        ranks = {name: position[v] for name, v in scored.items()}
    else:
        better_count = {v: sum(1 for u in scored.values() if u > v) for v in distinct}
        ranks = {name: 1 + better_count[v] for name, v in scored.items()}
    return Ranking(alternatives, ranks, scheme=scheme)


def compare(ranking: Ranking, a: str, b: str) -> Comparison:
    """Compare two alternatives within a ranking (``Better`` iff rank(a) < rank(b))."""
    return ranking.compare(a, b)


@dataclass(frozen=True)
class Criterion:
    """A named criterion: one ranking plus its vote weight."""

    name: str
    weight: int
    ranking: Ranking

    def __post_init__(self) -> None:
        if not isinstance(self.weight, (int, np.integer)) or isinstance(self.weight, bool) or self.weight < 1:
            raise InputError(f"criterion {self.name!r} must have a positive integer weight, got {self.weight!r}")
        object.__setattr__(self, "weight", int(self.weight))


@dataclass(frozen=True)
class Profile:
    """A weighted set of criteria rankings over one alternative set.

    Each criterion acts as a virtual voter casting ``weight`` identical
    votes; the profile is the electorate handed to the majority rule.
    """

    alternatives: AlternativeSet
    criteria: tuple[Criterion, ...] = field(default=())

    def __init__(self, alternatives: AlternativeSet, criteria: Iterable[Criterion]):
        object.__setattr__(self, "alternatives", alternatives)
        object.__setattr__(self, "criteria", tuple(criteria))
        if not self.criteria:
            raise InputError("profile needs at least one criterion")
        names = set()
        for crit in self.criteria:
            if crit.name in names:
                raise InputError(f"duplicate criterion name {crit.name!r}")
            names.add(crit.name)
            if crit.ranking.alternatives.items != alternatives.items:
                raise InputError(f"criterion {crit.name!r} is ranked over a different alternative set")

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.criteria)

    def __len__(self) -> int:
        return len(self.criteria)
