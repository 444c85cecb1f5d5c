"""Build a weighted majority relation and meet the Condorcet paradox.

Act one: three committee members score four job candidates; the senior
member carries two votes.  With four votes in play, pairwise comparisons
can deadlock, and tied pairs are kept as first-class ties.

Act two: three equal voters produce a majority relation with a cycle,
even though every single voter is perfectly transitive.
"""

from majorityrank import (
    AlternativeSet,
    Criterion,
    Profile,
    build_majority,
    count_cycles,
    from_scores,
    sections,
)

candidates = AlternativeSet(("Ada", "Bea", "Cal", "Dan"))

senior = from_scores(candidates, {"Ada": 9.0, "Bea": 7.0, "Cal": 4.0, "Dan": 2.0})
first = from_scores(candidates, {"Bea": 8.0, "Cal": 6.0, "Dan": 3.0, "Ada": 1.0})
second = from_scores(candidates, {"Cal": 9.0, "Dan": 6.0, "Ada": 5.0, "Bea": 3.0})

profile = Profile(candidates, [
    Criterion("senior", 2, senior),   # two votes
    Criterion("first", 1, first),
    Criterion("second", 1, second),
])
print(f"total votes: {profile.total_weight}")

structure = build_majority(profile)
print("\nmajority matrix (rows beat columns):")
print("      " + "  ".join(f"{name:>4}" for name in candidates))
for i, name in enumerate(candidates):
    row = "  ".join(f"{int(v):>4}" for v in structure.beats[i])
    print(f"{name:>4}  {row}")

# the three sections of a candidate: whom they beat, who beats them,
# and whom they tie (2-2 deadlocks survive as ties)
for name in candidates:
    s = sections(structure, name)
    print(f"{name}: beats {sorted(s.lower)}, loses to {sorted(s.upper)}, ties {sorted(s.horizon)}")

# --- act two: transitive voters, cyclic majority --------------------------
trio = AlternativeSet(("Ada", "Bea", "Cal"))
rotations = [("Ada", "Bea", "Cal"), ("Bea", "Cal", "Ada"), ("Cal", "Ada", "Bea")]
cycle_profile = Profile(trio, [
    Criterion(f"voter{i}", 1, from_scores(trio, {name: float(3 - pos) for pos, name in enumerate(order)}))
    for i, order in enumerate(rotations)
])
cycle_structure = build_majority(cycle_profile)
print("\nthree rotated voters:")
for order in rotations:
    print("  " + " > ".join(order))
print("3-cycles in their majority relation:", count_cycles(cycle_structure, 3))
print("(Ada beats Bea, Bea beats Cal, and yet Cal beats Ada)")
