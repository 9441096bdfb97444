"""Shared fixtures: the two worked micro-instances and seeded random families."""

from __future__ import annotations

import itertools
import random

import hrlq


def instance_a() -> hrlq.Instance:
    """Two residents, two [1,1] hospitals; unique feasible matching has one envy-pair."""
    return hrlq.validate_instance(
        ["r1", "r2"],
        ["h1", "h2"],
        {"r1": ["h1", "h2"], "r2": ["h1"]},
        {"h1": ["r1", "r2"], "h2": ["r1"]},
        {"h1": (1, 1), "h2": (1, 1)},
    )


def instance_b() -> hrlq.Instance:
    """Envy-free feasible matching exists: r1 fills h2's lower quota."""
    return hrlq.validate_instance(
        ["r1", "r2"],
        ["h1", "h2"],
        {"r1": ["h1", "h2"], "r2": ["h2"]},
        {"h1": ["r1"], "h2": ["r1", "r2"]},
        {"h1": (0, 1), "h2": (1, 1)},
    )


def random_instance(
    rng: random.Random,
    max_residents: int = 6,
    max_hospitals: int = 4,
    max_upper: int = 2,
    density: float = 0.75,
    tight: float = 0.6,
    min_residents: int = 2,
    min_hospitals: int = 1,
) -> hrlq.Instance:
    """Random instance biased toward binding lower quotas (tight fraction l == u)."""
    n_res = rng.randint(min_residents, max_residents)
    n_hosp = rng.randint(min_hospitals, max_hospitals)
    residents = [f"r{i}" for i in range(1, n_res + 1)]
    hospitals = [f"h{j}" for j in range(1, n_hosp + 1)]
    resident_prefs = {}
    accepted: dict[str, list[str]] = {h: [] for h in hospitals}
    for r in residents:
        acc = [h for h in hospitals if rng.random() < density]
        rng.shuffle(acc)
        resident_prefs[r] = tuple(acc)
        for h in acc:
            accepted[h].append(r)
    hospital_prefs = {}
    for h in hospitals:
        order = accepted[h][:]
        rng.shuffle(order)
        hospital_prefs[h] = tuple(order)
    quotas = {}
    for h in hospitals:
        up = rng.randint(1, max_upper)
        low = up if rng.random() < tight else rng.randint(0, up)
        quotas[h] = (low, up)
    return hrlq.validate_instance(residents, hospitals, resident_prefs, hospital_prefs, quotas)


def random_feasible_instances(seed: int, count: int, **kwargs) -> list[hrlq.Instance]:
    rng = random.Random(seed)
    out: list[hrlq.Instance] = []
    while len(out) < count:
        inst = random_instance(rng, **kwargs)
        if hrlq.exists_feasible(inst):
            out.append(inst)
    return out


def _preference_options(items: tuple[str, ...]):
    """Every strict preference list over any subset of items, empty included."""
    for size in range(len(items) + 1):
        for subset in itertools.combinations(items, size):
            yield from itertools.permutations(subset)


def exhaustive_two_by_two():
    """Every 2-resident, 2-hospital instance with u <= 2 and all strict preferences."""
    residents = ("r1", "r2")
    hospitals = ("h1", "h2")
    quota_options = [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2)]
    res_options = list(_preference_options(hospitals))
    for p1, p2 in itertools.product(res_options, repeat=2):
        resident_prefs = {"r1": p1, "r2": p2}
        accepted = {
            h: tuple(r for r in residents if h in resident_prefs[r]) for h in hospitals
        }
        for o1 in itertools.permutations(accepted["h1"]):
            for o2 in itertools.permutations(accepted["h2"]):
                for q1, q2 in itertools.product(quota_options, repeat=2):
                    yield hrlq.validate_instance(
                        residents,
                        hospitals,
                        resident_prefs,
                        {"h1": o1, "h2": o2},
                        {"h1": q1, "h2": q2},
                    )


def has_envy_free_feasible(instance: hrlq.Instance, node_budget: int = 10**6) -> bool:
    """Exhaustive ground truth for the envy-free decision procedure."""
    return any(
        not hrlq.envy_pairs(instance, m)
        for m in hrlq.enumerate_feasible(instance, node_budget)
    )
