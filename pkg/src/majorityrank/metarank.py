"""Ranking the candidate rankings themselves.

Every candidate ranking is scored against each criterion ranking by a
correlation measure, giving it a correlation vector.  Candidate R1 beats
R2 when the criteria that correlate strictly better with R1 outweigh (by
vote weight) those favouring R2; equal components vote for neither side.
Component comparisons are performed in exact integer arithmetic on the
underlying pair censuses, so a tie means exact equality of the measure
values, never floating-point coincidence.

The resulting majority digraph is generally only a partial order, and is
condensed into a weak order over the candidates: pairs whose relative
order agrees across all linear orders at minimal Kendall distance from
the digraph stay ordered, pairs that vary are tied.  For an acyclic
digraph the optimal orders are exactly its linear extensions and the
fixed pairs are those comparable in the transitive closure; otherwise the
optimal orders are found exactly by branch and bound over subsets.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .core import COMPETITION, AlternativeSet, Criterion, Ranking
from .correlation import COINCIDING, TAU_B, PairStats, measure_function, pair_stats
from .errors import DegenerateRankingError, InputError, SizeLimitError

SUBSET_SOLVER_LIMIT = 20

NamedRankings = Mapping[str, Ranking] | Sequence[tuple[str, Ranking]]


@dataclass(frozen=True)
class CorrelationVector:
    """One candidate's correlation with every criterion, in criterion order."""

    ranking_name: str
    components: tuple[tuple[str, float], ...]

    def values(self) -> tuple[float, ...]:
        return tuple(v for _, v in self.components)


@dataclass(frozen=True)
class MetaComparison:
    """Pairwise weighted majority comparison of candidate rankings.

    ``wins[i, j]`` is the total criterion weight favouring candidate i
    over candidate j; ``majority[i, j]`` is True iff that total exceeds
    the reverse one.
    """

    candidates: tuple[str, ...]
    majority: np.ndarray
    wins: np.ndarray
    measure: str

    def __post_init__(self) -> None:
        majority = np.array(self.majority, dtype=bool)
        wins = np.array(self.wins, dtype=np.int64)
        n = len(self.candidates)
        if majority.shape != (n, n) or wins.shape != (n, n):
            raise InputError(f"matrices must be {n}x{n}")
        if (majority & majority.T).any():
            raise InputError("majority matrix must be asymmetric")
        if not np.array_equal(majority, wins > wins.T):
            raise InputError("majority entries must mirror strict win-total comparisons")
        majority.setflags(write=False)
        wins.setflags(write=False)
        object.__setattr__(self, "majority", majority)
        object.__setattr__(self, "wins", wins)


def correlation_vector(
    ranking: Ranking,
    criteria: Sequence[Criterion],
    measure: str = TAU_B,
    name: str = "candidate",
) -> CorrelationVector:
    """Correlate one ranking with every criterion ranking."""
    func = measure_function(measure)
    components = tuple((c.name, func(ranking, c.ranking)) for c in criteria)
    return CorrelationVector(ranking_name=name, components=components)


def _component_sign(first: PairStats, second: PairStats, measure: str) -> int:
    """Exact sign of measure(first) - measure(second) against a shared criterion."""
    if measure == COINCIDING:
        x = first.concordant + first.ties_both
        y = second.concordant + second.ties_both
        return (x > y) - (x < y)
    a1 = first.concordant - first.discordant
    a2 = second.concordant - second.discordant
    d1 = (first.total - first.ties_first) * (first.total - first.ties_second)
    d2 = (second.total - second.ties_first) * (second.total - second.ties_second)
    if d1 == 0 or d2 == 0:
        raise DegenerateRankingError("tau-b comparison involving a fully tied ranking is undefined")
    if a1 >= 0 and a2 < 0:
        return 1
    if a1 < 0 and a2 >= 0:
        return -1
    lhs = a1 * a1 * d2  # compare a1/sqrt(d1) with a2/sqrt(d2), same sign side
    rhs = a2 * a2 * d1
    if lhs == rhs:
        return 0
    bigger_magnitude = 1 if lhs > rhs else -1
    return bigger_magnitude if a1 >= 0 else -bigger_magnitude


def rankings_majority(
    candidates: NamedRankings,
    criteria: Sequence[Criterion],
    measure: str = TAU_B,
    weights: Sequence[int] | None = None,
) -> MetaComparison:
    """Weighted majority comparison of candidate rankings by criterion closeness.

    ``weights`` overrides the criterion vote weights when given (aligned
    with ``criteria``).  Every pair of candidates is compared component by
    component; a criterion contributes its weight to the side it strictly
    favours.
    """
    pairs = list(candidates.items()) if isinstance(candidates, Mapping) else list(candidates)
    names = tuple(name for name, _ in pairs)
    if len(set(names)) != len(names):
        raise InputError("candidate names must be unique")
    if weights is None:
        weight_list = [c.weight for c in criteria]
    else:
        weight_list = [int(w) for w in weights]
        if len(weight_list) != len(criteria):
            raise InputError("weights must align one-to-one with criteria")
        if any(w < 1 for w in weight_list):
            raise InputError("weights must be positive integers")

    census = [[pair_stats(ranking, c.ranking) for c in criteria] for _, ranking in pairs]
    n = len(pairs)
    wins = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            total = 0
            for k, weight in enumerate(weight_list):
                if _component_sign(census[i][k], census[j][k], measure) > 0:
                    total += weight
            wins[i, j] = total
    majority = wins > wins.T
    return MetaComparison(candidates=names, majority=majority, wins=wins, measure=measure)


# ---------------------------------------------------------------------------
# condensation of the majority digraph into a weak order


def _find_cycle(adj: np.ndarray) -> list[int]:
    n = len(adj)
    color = [0] * n
    parent = [-1] * n

    def dfs(u: int) -> list[int] | None:
        color[u] = 1
        for v in np.flatnonzero(adj[u]):
            if color[v] == 0:
                parent[v] = u
                found = dfs(int(v))
                if found:
                    return found
            elif color[v] == 1:
                cycle = [int(v), u]
                while cycle[-1] != v and parent[cycle[-1]] != -1:
                    cycle.append(parent[cycle[-1]])
                    if cycle[-1] == v:
                        break
                return cycle
        color[u] = 2
        return None

    for s in range(n):
        if color[s] == 0:
            found = dfs(s)
            if found:
                return found[::-1]
    return []


def _is_acyclic(adj: np.ndarray) -> bool:
    n = len(adj)
    indegree = adj.sum(axis=0).astype(int)
    alive = np.ones(n, dtype=bool)
    removed = 0
    while True:
        sources = np.flatnonzero(alive & (indegree == 0))
        if len(sources) == 0:
            break
        for s in sources:
            alive[s] = False
            indegree -= adj[s].astype(int)
            removed += 1
    return removed == n


def _transitive_closure(adj: np.ndarray) -> np.ndarray:
    closure = adj.copy()
    for k in range(len(adj)):
        closure |= closure[:, k][:, None] & closure[k, :][None, :]
    return closure


class _SubsetSolver:
    """Exact minimum-inversion linear orders against a digraph, by subset DP.

    States are the sets of still-unplaced candidates; placing x next costs
    one inversion per unplaced y that beats x.  The DP yields the optimal
    cost, the number of optimal orders, and which ordered pairs are
    realised by at least one optimal order.
    """

    def __init__(self, adj: np.ndarray):
        self.n = len(adj)
        if self.n > SUBSET_SOLVER_LIMIT:
            raise SizeLimitError(
                f"exact order search is capped at {SUBSET_SOLVER_LIMIT} candidates, got {self.n}"
            )
        self.in_masks = [0] * self.n  # beaten-by masks
        for x in range(self.n):
            mask = 0
            for y in np.flatnonzero(adj[:, x]):
                mask |= 1 << int(y)
            self.in_masks[x] = mask
        self.full = (1 << self.n) - 1
        self._cost: dict[int, int] = {0: 0}

    def _members(self, state: int) -> list[int]:
        out = []
        while state:
            bit = state & -state
            out.append(bit.bit_length() - 1)
            state ^= bit
        return out

    def cost(self, state: int) -> int:
        cached = self._cost.get(state)
        if cached is not None:
            return cached
        best = None
        for x in self._members(state):
            value = bin(self.in_masks[x] & state).count("1") + self.cost(state & ~(1 << x))
            if best is None or value < best:
                best = value
        self._cost[state] = best
        return best

    def optimal_choices(self, state: int) -> list[int]:
        target = self.cost(state)
        return [
            x
            for x in self._members(state)
            if bin(self.in_masks[x] & state).count("1") + self.cost(state & ~(1 << x)) == target
        ]

    def count_optimal(self) -> int:
        counts: dict[int, int] = {0: 1}

        def rec(state: int) -> int:
            cached = counts.get(state)
            if cached is not None:
                return cached
            total = sum(rec(state & ~(1 << x)) for x in self.optimal_choices(state))
            counts[state] = total
            return total

        return rec(self.full)

    def realized_pairs(self) -> np.ndarray:
        """realized[u, v] is True iff some optimal order places u before v."""
        realized = np.zeros((self.n, self.n), dtype=bool)
        seen = {self.full}
        stack = [self.full]
        while stack:
            state = stack.pop()
            rest = self._members(state)
            for x in self.optimal_choices(state):
                for y in rest:
                    if y != x:
                        realized[x, y] = True
                nxt = state & ~(1 << x)
                if nxt and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return realized

    def enumerate_optimal(self, cap: int) -> list[tuple[int, ...]]:
        orders: list[tuple[int, ...]] = []
        prefix: list[int] = []

        def rec(state: int) -> None:
            if len(orders) > cap:
                return
            if state == 0:
                orders.append(tuple(prefix))
                return
            for x in self.optimal_choices(state):
                prefix.append(x)
                rec(state & ~(1 << x))
                prefix.pop()

        rec(self.full)
        if len(orders) > cap:
            raise SizeLimitError(f"more than {cap} optimal orders")
        return orders


def _fixed_pair_order(mc: MetaComparison) -> np.ndarray:
    """Strict partial order of pairs ordered identically in every optimal order."""
    adj = mc.majority
    if _is_acyclic(adj):
        return _transitive_closure(adj)
    if len(adj) > SUBSET_SOLVER_LIMIT:
        cycle = [mc.candidates[i] for i in _find_cycle(adj)]
        raise SizeLimitError(
            f"majority digraph over {len(adj)} candidates is cyclic (e.g. {' > '.join(cycle)}); "
            f"exact search handles at most {SUBSET_SOLVER_LIMIT}"
        )
    realized = _SubsetSolver(adj).realized_pairs()
    return realized & ~realized.T


def _tie_blocks(order: np.ndarray) -> list[list[int]]:
    """Connected components of incomparability, merged while any cross pair disagrees."""
    n = len(order)
    incomparable = ~order & ~order.T & ~np.eye(n, dtype=bool)
    labels = list(range(n))

    def merge(a: int, b: int) -> None:
        keep, drop = min(a, b), max(a, b)
        for i in range(n):
            if labels[i] == drop:
                labels[i] = keep

    for i in range(n):
        for j in range(i + 1, n):
            if incomparable[i, j]:
                merge(labels[i], labels[j])

    while True:
        ids = sorted(set(labels))
        conflict = None
        for a in ids:
            for b in ids:
                if a >= b:
                    continue
                members_a = [i for i in range(n) if labels[i] == a]
                members_b = [i for i in range(n) if labels[i] == b]
                directions = {bool(order[i, j]) for i in members_a for j in members_b}
                if len(directions) != 1:
                    conflict = (a, b)
                    break
            if conflict:
                break
        if conflict is None:
            break
        merge(*conflict)

    ids = sorted(set(labels))
    return [[i for i in range(n) if labels[i] == cid] for cid in ids]


def closest_weak_order(mc: MetaComparison) -> Ranking:
    """Condense the majority digraph into a weak order over the candidates.

    The output uses competition numbering: each tied block keeps the rank
    one past the number of candidates strictly above it.

    Raises:
        SizeLimitError: cyclic digraph over more than 20 candidates.
    """
    order = _fixed_pair_order(mc)
    blocks = _tie_blocks(order)
    dominated = {
        idx: sum(1 for other in blocks if other is not block and order[block[0], other[0]])
        for idx, block in enumerate(blocks)
    }
    sorted_blocks = sorted(range(len(blocks)), key=lambda idx: dominated[idx], reverse=True)
    ranks: dict[str, int] = {}
    above = 0
    for idx in sorted_blocks:
        for i in blocks[idx]:
            ranks[mc.candidates[i]] = above + 1
        above += len(blocks[idx])
    return Ranking(AlternativeSet(mc.candidates), ranks, scheme=COMPETITION)


def optimal_order_count(mc: MetaComparison) -> int:
    """Number of linear orders at minimal Kendall distance from the majority digraph."""
    return _SubsetSolver(mc.majority).count_optimal()


def optimal_linear_orders(mc: MetaComparison, cap: int = 10 ** 6) -> list[tuple[str, ...]]:
    """All minimum-distance linear orders, best candidate first (capped enumeration)."""
    solver = _SubsetSolver(mc.majority)
    return [tuple(mc.candidates[i] for i in order) for order in solver.enumerate_optimal(cap)]


def minimum_distance(mc: MetaComparison) -> int:
    """Minimal number of majority pairs any candidate linear order must invert."""
    solver = _SubsetSolver(mc.majority)
    return solver.cost(solver.full)


def inversions_against(mc: MetaComparison, order: Sequence[str]) -> int:
    """Number of majority pairs that a given candidate order inverts."""
    if sorted(order) != sorted(mc.candidates):
        raise InputError("order must list every candidate exactly once")
    position = {name: i for i, name in enumerate(order)}
    total = 0
    for i, a in enumerate(mc.candidates):
        for j, b in enumerate(mc.candidates):
            if mc.majority[i, j] and position[a] > position[b]:
                total += 1
    return total
