"""Markov-chain ranking.

Alternatives are first partitioned into leagues by iterated weak-top-cycle
extraction; members of an earlier league rank above every later league.
Within a league, a title-passing chain moves between members: the current
winner keeps the title against anyone it beats, and loses it to any
challenger that beats or ties it, challengers being drawn uniformly.  The
transition matrix is column-stochastic and, thanks to the league pre-sort,
irreducible; members are ordered by decreasing stationary probability.

Stationary vectors are computed exactly over the rationals (the matrix has
integer counts over a common denominator), so genuinely equal
probabilities tie and distinct ones never collapse, no matter how small
their gap.  A float power-iteration cross-check is provided separately.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import numpy as np

from .core import DENSE, Ranking
from .errors import InputError, NumericalError, SingletonLeagueError
from .majority import MajorityStructure
from .solutions import WTC, sort_by_solution

try:  # gmpy2 rationals are dramatically faster; plain Fractions work too
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _rational = Fraction


@dataclass(frozen=True)
class LeaguePartition:
    """Disjoint leagues in decreasing strength order."""

    leagues: tuple[frozenset[str], ...]

    def __len__(self) -> int:
        return len(self.leagues)


@dataclass(frozen=True)
class TransitionMatrix:
    """Title-passing transition matrix of one league.

    ``counts[i, j]`` over the common ``denominator`` (league size minus
    one) is the probability that the title moves from member j to member
    i: the within-league win count of j on the diagonal, off-diagonal
    ones where i beats or ties j.  Every column sums to one.
    """

    members: tuple[str, ...]
    counts: np.ndarray
    denominator: int

    def __post_init__(self) -> None:
        counts = np.array(self.counts, dtype=np.int64)
        k = len(self.members)
        if counts.shape != (k, k):
            raise InputError(f"counts must be {k}x{k}")
        if self.denominator != k - 1 or k < 2:
            raise InputError("denominator must equal league size minus one (size >= 2)")
        if not (counts.sum(axis=0) == self.denominator).all():
            raise InputError("every column must sum to the denominator")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def matrix(self) -> np.ndarray:
        """Float view; exact integer counts remain available in ``counts``."""
        return self.counts / self.denominator


@dataclass(frozen=True)
class StationaryVector:
    """Exact stationary distribution of a league chain."""

    members: tuple[str, ...]
    probabilities: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probabilities", MappingProxyType(dict(self.probabilities)))

    def as_floats(self) -> np.ndarray:
        return np.array([float(self.probabilities[name]) for name in self.members])


def leagues(ms: MajorityStructure) -> LeaguePartition:
    """League partition: the classes of weak-top-cycle sorting."""
    return LeaguePartition(leagues=sort_by_solution(ms, WTC).classes)


def transition_matrix(ms: MajorityStructure, league: frozenset[str] | set[str]) -> TransitionMatrix:
    """Build the title-passing matrix of one league.

    Raises:
        SingletonLeagueError: for a one-member league, which has no games;
            its member receives probability 1 directly.
    """
    idx = ms.restrict_indices(league)
    k = len(idx)
    if k < 2:
        raise SingletonLeagueError("a singleton league has no transition matrix")
    beats = ms.beats[np.ix_(idx, idx)].astype(np.int64)
    ties = ms.ties[np.ix_(idx, idx)].astype(np.int64)
    counts = beats + ties + np.diag(beats.sum(axis=1))
    members = tuple(ms.alternatives.items[i] for i in idx.tolist())
    return TransitionMatrix(members=members, counts=counts, denominator=k - 1)


def stationary(tm: TransitionMatrix) -> StationaryVector:
    """Exact fixed point: probabilities p with (counts/denominator) p = p, sum 1.

    Solved by rational Gaussian elimination on the counts matrix; the
    league pre-sort makes the chain irreducible, so the solution is unique
    and strictly positive.
    """
    k = len(tm.members)
    one = _rational(1)
    # rows 0..k-2 of (counts - d*I) p = 0 (the rows are linearly dependent),
    # closed with the normalisation row sum(p) = 1
    rows = [[_rational(int(tm.counts[i, j]) - (tm.denominator if i == j else 0)) for j in range(k)]
            for i in range(k - 1)]
    rows.append([one] * k)
    rhs = [_rational(0)] * (k - 1) + [one]

    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            raise NumericalError("transition matrix is singular beyond the stationary degeneracy")
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        for r in range(col + 1, k):
            factor = rows[r][col] / rows[col][col]
            if factor == 0:
                continue
            rhs[r] -= factor * rhs[col]
            for c in range(col, k):
                rows[r][c] -= factor * rows[col][c]
    values = [_rational(0)] * k
    for r in range(k - 1, -1, -1):
        acc = rhs[r]
        for c in range(r + 1, k):
            acc -= rows[r][c] * values[c]
        values[r] = acc / rows[r][r]

    probabilities = {name: Fraction(int(v.numerator), int(v.denominator)) for name, v in zip(tm.members, values)}
    if any(p < 0 for p in probabilities.values()) or sum(probabilities.values()) != 1:
        raise NumericalError("stationary solve produced an invalid distribution")
    return StationaryVector(members=tm.members, probabilities=probabilities)


def power_iteration(tm: TransitionMatrix, tol: float = 1e-13, max_iter: int = 10 ** 6) -> np.ndarray:
    """Float stationary vector by lazy power iteration (cross-check path).

    Iterates p <- (p + Wp)/2, which shares fixed points with W but is
    aperiodic for every column-stochastic W, so it always converges.

    Raises:
        NumericalError: if the iteration budget is exhausted.
    """
    w = tm.matrix
    k = w.shape[0]
    p = np.full(k, 1.0 / k)
    for _ in range(max_iter):
        nxt = 0.5 * (p + w @ p)
        nxt /= nxt.sum()
        if np.abs(nxt - p).max() <= tol:
            return nxt
        p = nxt
    raise NumericalError(f"power iteration did not converge within {max_iter} iterations")


def markovian_ranking(ms: MajorityStructure, scheme: str = DENSE) -> Ranking:
    """Rank by league order first, then by decreasing stationary probability.

    Exactly equal probabilities within a league share a rank; all members
    of league k rank above all members of league k+1.
    """
    ranks: dict[str, int] = {}
    next_rank = 1
    for league in leagues(ms).leagues:
        if len(league) == 1:
            ranks[next(iter(league))] = next_rank
            next_rank += 1
            continue
        vector = stationary(transition_matrix(ms, league))
        order = sorted(vector.members, key=vector.probabilities.__getitem__, reverse=True)
        previous = None
        for name in order:
            p = vector.probabilities[name]
            if previous is not None and p != previous:
                next_rank += 1
            ranks[name] = next_rank
            previous = p
        next_rank += 1
    return Ranking(ms.alternatives, ranks, scheme=scheme)
