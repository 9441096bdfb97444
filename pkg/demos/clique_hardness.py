#!/usr/bin/env python3
"""Why minimizing envy-residents is hard: the clique construction, end to end.

Each source edge spawns `copies` residents who want the edge's endpoints but
are pinned to a sink hospital by its exact quota.  Copies of edges inside a
clique stay envy-free; every other copy envies, so the count separates
graphs with and without a K-clique.

Run:  python demos/clique_hardness.py
"""

import math

import hrlq

print("--- yes side: a triangle with a pendant vertex, K = 3 ---")
pendant = hrlq.SourceGraph(4, [(1, 2), (1, 3), (2, 3), (3, 4)], k=3)
params = hrlq.CliqueReductionParams(copies=5)  # = n + 1: the separation-preserving value
instance = hrlq.clique_to_min_er(pendant, params)
n, m, t = pendant.n, pendant.m, 5
print(f"generated instance: {len(instance.residents)} residents (mt + n = {m * t + n}),",
      f"{len(instance.hospitals)} hospitals, sink quota {instance.quotas['x']}")

certificate = hrlq.matching_from_clique(pendant, params, {1, 2, 3})
envious = hrlq.envy_residents(instance, certificate)
bound = (m - math.comb(3, 2)) * t + n
print("certificate matching is feasible:", hrlq.is_feasible(instance, certificate))
print(f"envy-residents: {len(envious)} (bound (m - C(K,2))t + n = {bound})")
print("exactly the copies of the one edge outside the clique:", envious)

print("\n--- no side: the 4-cycle has no triangle ---")
cycle = hrlq.SourceGraph(4, [(1, 2), (1, 4), (2, 3), (3, 4)], k=3)
instance_no = hrlq.clique_to_min_er(cycle, params)
counts = [
    len(hrlq.envy_residents(instance_no, matching))
    for matching in hrlq.enumerate_feasible(instance_no)
]
floor = (m - math.comb(3, 2) + 1) * t
print(f"feasible matchings enumerated: {len(counts)} (the 4! vertex bijections;")
print(" every edge resident is forced into the sink by its exact quota)")
print(f"envy-resident counts range {min(counts)}..{max(counts)}; all >= {floor}")
assert min(counts) >= floor

print("\n--- both objectives on the same instance can differ ---")
# r2 and r3 are the only candidates for h1 and h2, so r1 lands at its
# last-choice h3 and envies both better seats: two envy pairs, one resident.
small = hrlq.validate_instance(
    residents=["r1", "r2", "r3"],
    hospitals=["h1", "h2", "h3"],
    resident_prefs={"r1": ["h1", "h2", "h3"], "r2": ["h1"], "r3": ["h2"]},
    hospital_prefs={"h1": ["r1", "r2"], "h2": ["r1", "r3"], "h3": ["r1"]},
    quotas={"h1": (1, 1), "h2": (1, 1), "h3": (1, 1)},
)
ep = hrlq.brute_min_ep(small)
er = hrlq.brute_min_er(small)
print("minimum envy-pairs:", ep.objective, "| minimum envy-residents:", er.objective)
print("(one resident can account for several envy pairs, so the resident")
print(" count is never larger than the pair count)")
