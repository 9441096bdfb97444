"""Solvers: deferred acceptance, envy-free decision, exact and brute-force envy minimization.

The exact minimum-envy-pair solver deletes guessed edge sets of growing size
and asks the envy-free decision procedure whether the trimmed instance admits
an envy-free matching that fills every lower quota; the first success is
optimal.  The brute-force oracles enumerate every feasible matching and are
the independent cross-check for the exact route.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .core import (
    Instance,
    Matching,
    Pair,
    envy_pairs,
    envy_residents,
    without_edges,
)


class Infeasible(Exception):
    """No matching can satisfy every hospital's quota interval."""


class BudgetExceeded(Exception):
    """The search visited more nodes than the caller allowed."""

    def __init__(self, node_budget: int):
        self.node_budget = node_budget
        super().__init__(f"search exceeded the node budget of {node_budget}")


class LevelCapExceeded(Exception):
    """The guess-level search was capped before any guess succeeded."""

    def __init__(self, level_cap: int, guesses_examined: int):
        self.level_cap = level_cap
        self.guesses_examined = guesses_examined
        super().__init__(
            f"no solution within guess level {level_cap} "
            f"({guesses_examined} guesses examined)"
        )


class ObjectiveKind(Enum):
    MIN_EP = "min-ep"
    MIN_ER = "min-er"
    ENVY_FREE = "envy-free"


@dataclass(frozen=True)
class SolveStats:
    """Search statistics: guesses/matchings examined, final level, node count, winning guess."""

    guesses_examined: int = 0
    level: int = 0
    nodes: int = 0
    guess: tuple[Pair, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class SolveResult:
    matching: Matching
    objective: int
    objective_kind: ObjectiveKind
    stats: SolveStats


def deferred_acceptance(instance: Instance) -> Matching:
    """Resident-proposing deferred acceptance against the upper quotas.

    Lower quotas are ignored.  Residents propose in index order, hospitals
    reject by preference only; the result is the unique resident-optimal
    stable matching for the capacities, so it has no blocking pairs.
    """
    caps = {h: instance.quotas[h][1] for h in instance.hospitals}
    hrank = instance.hospital_rank
    nxt = {r: 0 for r in instance.residents}
    held: dict[str, list[str]] = {h: [] for h in instance.hospitals}
    free = deque(instance.residents)
    while free:
        r = free.popleft()
        prefs = instance.resident_prefs[r]
        while nxt[r] < len(prefs):
            h = prefs[nxt[r]]
            nxt[r] += 1
            if caps[h] == 0:
                continue
            occupants = held[h]
            if len(occupants) < caps[h]:
                occupants.append(r)
                break
            worst = max(occupants, key=hrank[h].__getitem__)
            if hrank[h][r] < hrank[h][worst]:
                occupants.remove(worst)
                occupants.append(r)
                free.append(worst)
                break
        # falling through the list leaves r unmatched
    assignment = {}
    placed = {r: h for h, occ in held.items() for r in occ}
    for r in instance.residents:
        if r in placed:
            assignment[r] = placed[r]
    return Matching(assignment)


def reduced_capacity_instance(instance: Instance) -> Instance:
    """The companion instance whose upper quotas are the original lower quotas.

    Envy-free matchings that fill every lower quota correspond to stable
    matchings of this instance that fill every hospital.
    """
    return Instance(
        instance.residents,
        instance.hospitals,
        dict(instance.resident_prefs),
        dict(instance.hospital_prefs),
        {h: (0, low) for h, (low, _) in instance.quotas.items()},
    )


def yokoi_envy_free(instance: Instance) -> Matching | None:
    """Decide whether a feasible envy-free matching exists, returning one if so.

    Runs deferred acceptance on the reduced-capacity instance (Yokoi's
    characterization): an envy-free matching filling all lower quotas exists
    iff that run fills every hospital to exactly its lower quota.  Returns
    None otherwise; that is a regular outcome, not a failure.
    """
    matching = deferred_acceptance(reduced_capacity_instance(instance))
    counts: dict[str, int] = {}
    for h in matching.assignment.values():
        counts[h] = counts.get(h, 0) + 1
    for h, (low, _) in instance.quotas.items():
        if counts.get(h, 0) != low:
            return None
    return matching


class _FeasibleSearch:
    """Backtracking enumeration of feasible matchings.

    Residents are assigned in index order, each to an acceptable hospital
    with remaining capacity (preference order) or left unmatched.  A branch
    survives only while the remaining residents can still cover the
    remaining lower-quota demand; that cover is maintained incrementally and
    repaired with single augmenting paths, so dead branches are cut at the
    node where they die.
    """

    def __init__(self, instance: Instance, node_budget: int):
        self.instance = instance
        self.node_budget = node_budget
        self.nodes = 0
        hidx = instance.hospital_index
        self.acc = [
            tuple(hidx[h] for h in instance.resident_prefs[r]) for r in instance.residents
        ]
        self.acc_h = [
            tuple(instance.resident_index[r] for r in instance.hospital_prefs[h])
            for h in instance.hospitals
        ]
        self.low = [instance.quotas[h][0] for h in instance.hospitals]
        self.up = [instance.quotas[h][1] for h in instance.hospitals]
        self.n_res = len(instance.residents)
        self.n_hosp = len(instance.hospitals)
        self.occ = [0] * self.n_hosp
        self.choice = [-1] * self.n_res

    def initial_cover(self) -> list[int] | None:
        """Cover every lower-quota slot with a distinct resident, or report impossibility."""
        cover = [-1] * self.n_res
        for j in range(self.n_hosp):
            for _ in range(self.low[j]):
                if not self._augment(j, 0, cover, set()):
                    return None
        return cover

    def _augment(self, hospital: int, start: int, cover: list[int], visited: set[int]) -> bool:
        for r in self.acc_h[hospital]:
            if r < start or r in visited:
                continue
            visited.add(r)
            if cover[r] == -1 or self._augment(cover[r], start, cover, visited):
                cover[r] = hospital
                return True
        return False

    def _child_cover(self, i: int, j: int, cover: list[int]) -> list[int] | None:
        """Cover for the state after assigning resident i to hospital j (or -1)."""
        freed = cover[i]
        child = cover.copy()
        child[i] = -1
        if j >= 0 and self.occ[j] < self.low[j]:
            # One demand slot of j disappears with this assignment.
            if freed == j:
                freed = -1
            else:
                for r in range(i + 1, self.n_res):
                    if child[r] == j:
                        child[r] = -1
                        break
        if freed >= 0 and not self._augment(freed, i + 1, child, set()):
            return None
        return child

    def run(self, i: int, cover: list[int]) -> Iterator[Matching]:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(self.node_budget)
        if i == self.n_res:
            residents = self.instance.residents
            hospitals = self.instance.hospitals
            yield Matching(
                {
                    residents[r]: hospitals[self.choice[r]]
                    for r in range(self.n_res)
                    if self.choice[r] >= 0
                }
            )
            return
        for j in self.acc[i]:
            if self.occ[j] >= self.up[j]:
                continue
            child = self._child_cover(i, j, cover)
            if child is None:
                continue
            self.choice[i] = j
            self.occ[j] += 1
            yield from self.run(i + 1, child)
            self.occ[j] -= 1
            self.choice[i] = -1
        child = self._child_cover(i, -1, cover)
        if child is not None:
            yield from self.run(i + 1, child)


def exists_feasible(instance: Instance) -> bool:
    """True iff some matching satisfies every quota interval.

    Decided by matching residents against one demand slot per unit of lower
    quota; surplus residents may stay unmatched, so saturating the demand
    slots is both necessary and sufficient.
    """
    return _FeasibleSearch(instance, 0).initial_cover() is not None


def enumerate_feasible(instance: Instance, node_budget: int = 10**7) -> Iterator[Matching]:
    """Yield every feasible matching exactly once, in deterministic order.

    Raises BudgetExceeded once the backtracking search has visited
    node_budget states; that signals the instance is too large for
    exhaustive treatment.
    """
    search = _FeasibleSearch(instance, node_budget)
    cover = search.initial_cover()
    if cover is None:
        return
    yield from search.run(0, cover)


def _brute_minimize(
    instance: Instance, node_budget: int, kind: ObjectiveKind
) -> SolveResult:
    count_fn = envy_pairs if kind is ObjectiveKind.MIN_EP else envy_residents
    search = _FeasibleSearch(instance, node_budget)
    cover = search.initial_cover()
    if cover is None:
        raise Infeasible("no feasible matching exists")
    best: Matching | None = None
    best_obj = 0
    examined = 0
    for matching in search.run(0, cover):
        examined += 1
        obj = len(count_fn(instance, matching))
        if best is None or obj < best_obj:
            best, best_obj = matching, obj
    if best is None:
        raise Infeasible("no feasible matching exists")
    return SolveResult(
        matching=best,
        objective=best_obj,
        objective_kind=kind,
        stats=SolveStats(guesses_examined=examined, level=0, nodes=search.nodes),
    )


def brute_min_ep(instance: Instance, node_budget: int = 10**7) -> SolveResult:
    """Exhaustive minimum-envy-pair oracle; ties broken by enumeration order."""
    return _brute_minimize(instance, node_budget, ObjectiveKind.MIN_EP)


def brute_min_er(instance: Instance, node_budget: int = 10**7) -> SolveResult:
    """Exhaustive minimum-envy-resident oracle; ties broken by enumeration order."""
    return _brute_minimize(instance, node_budget, ObjectiveKind.MIN_ER)


def _mutual_top_edges(instance: Instance) -> frozenset[int]:
    out = set()
    for idx, (r, h) in enumerate(instance.edges):
        rp = instance.resident_prefs[r]
        hp = instance.hospital_prefs[h]
        if rp and hp and rp[0] == h and hp[0] == r:
            out.add(idx)
    return frozenset(out)


def min_ep_exact(
    instance: Instance,
    level_cap: int | None = None,
    prune_mutual_top: bool = False,
) -> SolveResult:
    """Feasible matching with the minimum number of envy-pairs.

    Level k enumerates every k-subset of the acceptable pairs in
    lexicographic order by edge index, deletes it, and runs the envy-free
    decision procedure on the trimmed instance.  The first success is
    reported; its guess set is therefore the lexicographically smallest
    winner at the optimal level.  Levels start at 0, so the reported
    objective is tight.

    Raises Infeasible when no feasible matching exists at all, and
    LevelCapExceeded when level_cap is given and exhausted.  With
    prune_mutual_top, guesses containing a pair that tops both of its own
    preference lists are skipped (a heuristic: such a pair rarely needs
    deleting); the skip count and justification are recorded in stats.note.
    """
    if not exists_feasible(instance):
        raise Infeasible("no feasible matching exists")
    edges = instance.edges
    n_edges = len(edges)
    skip = _mutual_top_edges(instance) if prune_mutual_top else frozenset()
    max_level = n_edges if level_cap is None else min(level_cap, n_edges)
    guesses = 0
    skipped = 0
    for k in range(max_level + 1):
        for combo in itertools.combinations(range(n_edges), k):
            if skip and not skip.isdisjoint(combo):
                skipped += 1
                continue
            guesses += 1
            trimmed = without_edges(instance, [edges[e] for e in combo])
            matching = yokoi_envy_free(trimmed)
            if matching is not None:
                note = ""
                if prune_mutual_top:
                    note = (
                        f"skipped {skipped} guesses containing mutual-top pairs "
                        "(heuristic; may miss the optimum)"
                    )
                return SolveResult(
                    matching=matching,
                    objective=len(envy_pairs(instance, matching)),
                    objective_kind=ObjectiveKind.MIN_EP,
                    stats=SolveStats(
                        guesses_examined=guesses,
                        level=k,
                        nodes=0,
                        guess=tuple(edges[e] for e in combo),
                        note=note,
                    ),
                )
    # Unreachable without a level cap or pruning: a feasible instance always
    # succeeds once the guess covers an optimal matching's envy-pairs.
    raise LevelCapExceeded(max_level, guesses)
