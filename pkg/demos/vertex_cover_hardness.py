#!/usr/bin/env python3
"""Why minimizing envy-pairs is hard: the vertex-cover construction, end to end.

A graph with a size-K vertex cover turns into a quota-[1,1] instance whose
best matching has few envy pairs; remove the cover and every matching pays a
full gadget's worth extra.  This demo builds both sides on the triangle and
verifies the gap by exhaustive enumeration.

Run:  python demos/vertex_cover_hardness.py
"""

import warnings

import hrlq

print("source graph: the triangle on 3 vertices")
triangle = hrlq.SourceGraph(3, [(1, 2), (1, 3), (2, 3)], k=2)
n, m = triangle.n, triangle.m

print("\n--- the gadget ---")
print("each source edge becomes a cycle of 2l residents and 2l hospitals;")
print("a cycle has exactly two perfect matchings, and each carries exactly")
print("one internal envy pair:")
for length in (2, 3):
    gadget = hrlq.gadget_instance((1, 2), length)
    matchings = list(hrlq.enumerate_feasible(gadget))
    named = hrlq.gadget_matchings((1, 2), length)
    print(f"  l={length}: cycle of {4 * length} vertices,",
          f"{len(matchings)} perfect matchings,",
          "envy pairs:",
          [hrlq.envy_pairs(gadget, m) for m in matchings])
    assert {frozenset(m.assignment.items()) for m in matchings} == {
        frozenset(named[0]), frozenset(named[1])
    }

print("\n--- yes side: the triangle has the cover {v1, v2} (K = 2) ---")
params = hrlq.VCReductionParams(gadget_length=10)  # = n^2 + 1: the separation-preserving value
instance = hrlq.vc_to_min_ep(triangle, params)
print(f"generated instance: {len(instance.residents)} residents,",
      f"{len(instance.hospitals)} hospitals",
      f"(2n + 4ml = {2 * n + 4 * m * 10} vertices total)")

certificate = hrlq.matching_from_cover(triangle, params, {1, 2})
envy = hrlq.envy_pairs(instance, certificate)
print("certificate matching is feasible:", hrlq.is_feasible(instance, certificate))
print(f"it has {len(envy)} envy pairs, within the guaranteed n^2 + m = {n * n + m}:")
for pair in envy:
    print("   ", pair)

print("\n--- no side: ask for a cover of size K = 1, which does not exist ---")
triangle_k1 = hrlq.SourceGraph(3, [(1, 2), (1, 3), (2, 3)], k=1)
instance_no = hrlq.vc_to_min_ep(triangle_k1, params)
counts = [
    len(hrlq.envy_pairs(instance_no, matching))
    for matching in hrlq.enumerate_feasible(instance_no)
]
print(f"feasible matchings enumerated: {len(counts)} (3! vertex bijections x 2^3 gadget choices)")
print(f"envy-pair counts range {min(counts)}..{max(counts)};",
      f"every one is >= n^2 + m + 1 = {n * n + m + 1}")
assert min(counts) >= n * n + m + 1

print("\n--- what a too-small gadget costs ---")
print("small gadget lengths keep instances tiny for tests, but the generator")
print("warns that the yes/no separation is gone:")
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    hrlq.vc_to_min_ep(triangle, hrlq.VCReductionParams(gadget_length=2))
for w in caught:
    print("  warning:", w.message)
