#!/usr/bin/env python3
"""Tour of the core model and the solvers on two tiny instances.

Run:  python demos/minimum_envy_basics.py
"""

import hrlq


def banner(title):
    print()
    print("=" * 64)
    print(title)
    print("=" * 64)


banner("A two-resident instance where no envy-free matching exists")

# Both hospitals must take exactly one resident.  r2 is only acceptable to
# h1, so the unique feasible matching sends r2 to h1 and r1 to h2 -- and r1,
# whom h1 prefers over r2, envies that seat.
inst_a = hrlq.validate_instance(
    residents=["r1", "r2"],
    hospitals=["h1", "h2"],
    resident_prefs={"r1": ["h1", "h2"], "r2": ["h1"]},
    hospital_prefs={"h1": ["r1", "r2"], "h2": ["r1"]},
    quotas={"h1": (1, 1), "h2": (1, 1)},
)
print(hrlq.serialize_instance(inst_a))

matching = hrlq.make_matching(inst_a, [("r2", "h1"), ("r1", "h2")])
report = hrlq.analyze(inst_a, matching)
print("the unique feasible matching:", dict(matching.assignment))
print("feasible:", report.feasible)
print("envy pairs:", report.envy_pairs)
print("blocking pairs:", report.blocking_pairs)

print()
print("the envy-free decision procedure agrees there is no envy-free matching:")
print("  yokoi_envy_free ->", hrlq.yokoi_envy_free(inst_a))

result = hrlq.min_ep_exact(inst_a)
print()
print("the exact solver therefore settles for one envy pair:")
print("  objective:", result.objective)
print("  matching:", dict(result.matching.assignment))
print("  found at guess level", result.stats.level,
      "after", result.stats.guesses_examined, "guesses; deleted", result.stats.guess)

oracle = hrlq.brute_min_ep(inst_a)
print("  brute-force oracle confirms the optimum:", oracle.objective)

banner("An instance that does admit an envy-free matching")

inst_b = hrlq.validate_instance(
    residents=["r1", "r2"],
    hospitals=["h1", "h2"],
    resident_prefs={"r1": ["h1", "h2"], "r2": ["h2"]},
    hospital_prefs={"h1": ["r1"], "h2": ["r1", "r2"]},
    quotas={"h1": (0, 1), "h2": (1, 1)},
)
print(hrlq.serialize_instance(inst_b))

solution = hrlq.yokoi_envy_free(inst_b)
print("envy-free matching:", dict(solution.assignment))
print("feasible:", hrlq.is_feasible(inst_b, solution),
      "| envy-free:", hrlq.is_envy_free(inst_b, solution))
print("note the wasteful (but envy-free) blocking pair at the empty h1:",
      hrlq.blocking_pairs(inst_b, solution))

banner("Plain deferred acceptance ignores lower quotas")

# Against the upper quotas alone, DA gives the classic stable outcome; with
# lower quotas in force that outcome may be infeasible, which is the entire
# reason the envy-free machinery above exists.
da = hrlq.deferred_acceptance(inst_a)
print("DA outcome:", dict(da.assignment))
print("feasible under the quota intervals?", hrlq.is_feasible(inst_a, da))

banner("Exhaustive enumeration as ground truth")

print("all feasible matchings of the first instance:")
for m in hrlq.enumerate_feasible(inst_a):
    print("  ", dict(m.assignment), "->", len(hrlq.envy_pairs(inst_a, m)), "envy pair(s)")
print("all feasible matchings of the second instance:")
for m in hrlq.enumerate_feasible(inst_b):
    print("  ", dict(m.assignment), "->", len(hrlq.envy_pairs(inst_b, m)), "envy pair(s)")
