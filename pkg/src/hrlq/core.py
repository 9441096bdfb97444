"""Instance model and envy/feasibility predicates.

An instance pairs a bipartite acceptability graph (residents on one side,
hospitals on the other, both with strict preference lists) with a quota
interval [lower, upper] per hospital.  A matching is feasible when every
hospital's occupancy lies inside its interval.  Everything in this module is
a pure function of immutable inputs; identical calls return identical,
identically ordered results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Pair = tuple[str, str]


class InvalidInstanceError(ValueError):
    """An instance description breaks a structural invariant.

    Carries the complete list of violations, not just the first one found.
    """

    def __init__(self, violations: Iterable[str]):
        self.violations = tuple(violations)
        super().__init__("invalid instance: " + "; ".join(self.violations))


class InvalidMatchingError(ValueError):
    """A matching names unknown vertices, unacceptable pairs, or reuses a resident."""


@dataclass(frozen=True)
class Instance:
    """A validated hospitals/residents instance with quota intervals.

    Residents and hospitals keep their stable string names; dense integer
    indices are assigned by declaration order and drive every deterministic
    ordering produced by this package.  Construction validates all
    invariants (quota sanity, strict duplicate-free lists, mutual
    acceptability) and raises :class:`InvalidInstanceError` listing every
    violation at once.
    """

    residents: tuple[str, ...]
    hospitals: tuple[str, ...]
    resident_prefs: Mapping[str, tuple[str, ...]]
    hospital_prefs: Mapping[str, tuple[str, ...]]
    quotas: Mapping[str, tuple[int, int]]

    # Derived lookup tables (set in __post_init__, excluded from eq/repr):
    #   resident_index, hospital_index  name -> dense index
    #   resident_rank[r][h], hospital_rank[h][r]  position in preference list
    #   edges  all acceptable pairs sorted by (resident index, hospital index)

    def __post_init__(self) -> None:
        object.__setattr__(self, "residents", tuple(self.residents))
        object.__setattr__(self, "hospitals", tuple(self.hospitals))
        object.__setattr__(
            self,
            "resident_prefs",
            {r: tuple(self.resident_prefs.get(r, ())) for r in self.residents},
        )
        object.__setattr__(
            self,
            "hospital_prefs",
            {h: tuple(self.hospital_prefs.get(h, ())) for h in self.hospitals},
        )
        quotas = {}
        for h in self.hospitals:
            try:
                low, up = self.quotas[h]
                quotas[h] = (int(low), int(up))
            except (KeyError, TypeError, ValueError):
                quotas[h] = None
        violations = self._violations(quotas)
        if violations:
            raise InvalidInstanceError(violations)
        object.__setattr__(self, "quotas", quotas)

        object.__setattr__(self, "resident_index", {r: i for i, r in enumerate(self.residents)})
        object.__setattr__(self, "hospital_index", {h: i for i, h in enumerate(self.hospitals)})
        object.__setattr__(
            self,
            "resident_rank",
            {r: {h: k for k, h in enumerate(prefs)} for r, prefs in self.resident_prefs.items()},
        )
        object.__setattr__(
            self,
            "hospital_rank",
            {h: {r: k for k, r in enumerate(prefs)} for h, prefs in self.hospital_prefs.items()},
        )
        hidx = self.hospital_index
        edges = []
        for r in self.residents:
            for h in sorted(self.resident_prefs[r], key=hidx.__getitem__):
                edges.append((r, h))
        object.__setattr__(self, "edges", tuple(edges))

    def _violations(self, quotas: dict) -> list[str]:
        out: list[str] = []
        seen: set[str] = set()
        for r in self.residents:
            if r in seen:
                out.append(f"duplicate resident name {r}")
            seen.add(r)
        hseen: set[str] = set()
        for h in self.hospitals:
            if h in hseen:
                out.append(f"duplicate hospital name {h}")
            hseen.add(h)
        for name in sorted(seen & hseen):
            out.append(f"name {name} used for both a resident and a hospital")

        for r in self.resident_prefs:
            if r not in seen:
                out.append(f"preference list for unknown resident {r}")
        for h in self.hospital_prefs:
            if h not in hseen:
                out.append(f"preference list for unknown hospital {h}")
        for h in self.quotas:
            if h not in hseen:
                out.append(f"quota for unknown hospital {h}")

        for h in self.hospitals:
            q = quotas.get(h)
            if q is None:
                out.append(f"missing or malformed quota for {h}")
            else:
                low, up = q
                if low < 0:
                    out.append(f"negative lower quota at {h}")
                if low > up:
                    out.append(f"quota inversion at {h}: lower {low} exceeds upper {up}")

        for r in self.residents:
            local: set[str] = set()
            for h in self.resident_prefs[r]:
                if h in local:
                    out.append(f"duplicate hospital {h} in preference list of {r}")
                local.add(h)
                if h not in hseen:
                    out.append(f"unknown hospital {h} in preference list of {r}")
        for h in self.hospitals:
            local = set()
            for r in self.hospital_prefs[h]:
                if r in local:
                    out.append(f"duplicate resident {r} in preference list of {h}")
                local.add(r)
                if r not in seen:
                    out.append(f"unknown resident {r} in preference list of {h}")

        hosp_accepts = {h: set(self.hospital_prefs[h]) for h in self.hospitals}
        res_accepts = {r: set(self.resident_prefs[r]) for r in self.residents}
        for r in self.residents:
            for h in self.resident_prefs[r]:
                if h in hosp_accepts and r not in hosp_accepts[h]:
                    out.append(
                        f"one-sided acceptability ({r},{h}): {r} lists {h} but {h} does not list {r}"
                    )
        for h in self.hospitals:
            for r in self.hospital_prefs[h]:
                if r in res_accepts and h not in res_accepts[r]:
                    out.append(
                        f"one-sided acceptability ({r},{h}): {h} lists {r} but {r} does not list {h}"
                    )
        return out

    def prefers(self, resident: str, hospital: str, over: str | None) -> bool:
        """True if `resident` strictly prefers `hospital` to `over`.

        `over` may be None (unmatched); every acceptable hospital beats it.
        """
        rank = self.resident_rank[resident]
        if over is None:
            return hospital in rank
        return rank[hospital] < rank[over]


@dataclass(frozen=True)
class Matching:
    """A partial assignment of residents to hospitals.

    Built via :func:`make_matching` (or by the solvers), the assignment dict
    iterates in resident-index order, which keeps downstream output
    deterministic.
    """

    assignment: Mapping[str, str]

    def hospital_of(self, resident: str) -> str | None:
        return self.assignment.get(resident)

    def pairs(self) -> tuple[Pair, ...]:
        return tuple(self.assignment.items())

    def occupancy(self) -> dict[str, tuple[str, ...]]:
        occ: dict[str, list[str]] = {}
        for r, h in self.assignment.items():
            occ.setdefault(h, []).append(r)
        return {h: tuple(rs) for h, rs in occ.items()}

    def __len__(self) -> int:
        return len(self.assignment)


EMPTY_MATCHING = Matching({})


@dataclass(frozen=True)
class EnvyReport:
    """Envy, blocking, and feasibility verdicts for one (instance, matching) pair.

    `envy_residents` has set semantics but is stored sorted by resident index.
    Every envy-pair is also a blocking pair.
    """

    envy_pairs: tuple[Pair, ...]
    envy_residents: tuple[str, ...]
    blocking_pairs: tuple[Pair, ...]
    deficient_hospitals: tuple[str, ...]
    over_subscribed_hospitals: tuple[str, ...]
    feasible: bool


def validate_instance(
    residents: Iterable[str],
    hospitals: Iterable[str],
    resident_prefs: Mapping[str, Iterable[str]],
    hospital_prefs: Mapping[str, Iterable[str]],
    quotas: Mapping[str, tuple[int, int]],
) -> Instance:
    """Build a canonical Instance from a loose description.

    Raises InvalidInstanceError carrying the complete violation list when the
    description is inconsistent; each violation names the offending vertex or
    pair.
    """
    return Instance(
        tuple(residents),
        tuple(hospitals),
        {r: tuple(v) for r, v in resident_prefs.items()},
        {h: tuple(v) for h, v in hospital_prefs.items()},
        dict(quotas),
    )


def make_matching(instance: Instance, pairs: Iterable[Pair]) -> Matching:
    """Build a Matching from (resident, hospital) pairs, validated against the instance."""
    errors: list[str] = []
    assignment: dict[str, str] = {}
    for r, h in pairs:
        if r not in instance.resident_index:
            errors.append(f"unknown resident {r}")
            continue
        if h not in instance.hospital_index:
            errors.append(f"unknown hospital {h}")
            continue
        if h not in instance.resident_rank[r]:
            errors.append(f"unacceptable pair ({r},{h})")
            continue
        if r in assignment:
            errors.append(f"resident {r} assigned more than once")
            continue
        assignment[r] = h
    if errors:
        raise InvalidMatchingError("; ".join(errors))
    ordered = dict(sorted(assignment.items(), key=lambda kv: instance.resident_index[kv[0]]))
    return Matching(ordered)


def _occupancy_counts(matching: Matching) -> dict[str, int]:
    counts: dict[str, int] = {}
    for h in matching.assignment.values():
        counts[h] = counts.get(h, 0) + 1
    return counts


def _worst_occupant_rank(instance: Instance, matching: Matching) -> dict[str, int]:
    # Per occupied hospital, the rank of its least-preferred current occupant.
    worst: dict[str, int] = {}
    for r, h in matching.assignment.items():
        rank = instance.hospital_rank[h][r]
        if h not in worst or rank > worst[h]:
            worst[h] = rank
    return worst


def is_feasible(instance: Instance, matching: Matching) -> bool:
    """True iff every hospital's occupancy lies in its quota interval."""
    counts = _occupancy_counts(matching)
    for h, (low, up) in instance.quotas.items():
        if not low <= counts.get(h, 0) <= up:
            return False
    return True


def envy_pairs(instance: Instance, matching: Matching) -> tuple[Pair, ...]:
    """All pairs (r, h) where r prefers h to its assignment and h holds someone it likes less.

    Unmatched residents prefer every acceptable hospital to staying
    unmatched.  Output is sorted by (resident index, hospital index).
    """
    worst = _worst_occupant_rank(instance, matching)
    out: list[Pair] = []
    for r, h in instance.edges:
        if not instance.prefers(r, h, matching.assignment.get(r)):
            continue
        if h in worst and instance.hospital_rank[h][r] < worst[h]:
            out.append((r, h))
    return tuple(out)


def envy_residents(instance: Instance, matching: Matching) -> tuple[str, ...]:
    """Residents involved in at least one envy-pair, sorted by index (set semantics)."""
    return tuple(dict.fromkeys(r for r, _ in envy_pairs(instance, matching)))


def blocking_pairs(instance: Instance, matching: Matching) -> tuple[Pair, ...]:
    """Classical blocking pairs: envy-pairs plus wasteful pairs at under-subscribed hospitals."""
    counts = _occupancy_counts(matching)
    worst = _worst_occupant_rank(instance, matching)
    out: list[Pair] = []
    for r, h in instance.edges:
        if not instance.prefers(r, h, matching.assignment.get(r)):
            continue
        if counts.get(h, 0) < instance.quotas[h][1]:
            out.append((r, h))
        elif h in worst and instance.hospital_rank[h][r] < worst[h]:
            out.append((r, h))
    return tuple(out)


def is_envy_free(instance: Instance, matching: Matching) -> bool:
    return not envy_pairs(instance, matching)


def analyze(instance: Instance, matching: Matching) -> EnvyReport:
    """Full envy/blocking/feasibility report for a matching."""
    counts = _occupancy_counts(matching)
    deficient = tuple(h for h in instance.hospitals if counts.get(h, 0) < instance.quotas[h][0])
    over = tuple(h for h in instance.hospitals if counts.get(h, 0) > instance.quotas[h][1])
    eps = envy_pairs(instance, matching)
    return EnvyReport(
        envy_pairs=eps,
        envy_residents=tuple(dict.fromkeys(r for r, _ in eps)),
        blocking_pairs=blocking_pairs(instance, matching),
        deficient_hospitals=deficient,
        over_subscribed_hospitals=over,
        feasible=not deficient and not over,
    )


def without_edges(instance: Instance, pairs: Iterable[Pair]) -> Instance:
    """A copy of the instance with the given acceptable pairs deleted.

    Each pair is removed from both preference lists; the relative order of
    the remaining entries is preserved.
    """
    drop = {tuple(p) for p in pairs}
    unknown = drop - set(instance.edges)
    if unknown:
        names = ", ".join(f"({r},{h})" for r, h in sorted(unknown))
        raise ValueError(f"cannot delete pairs outside the instance: {names}")
    return Instance(
        instance.residents,
        instance.hospitals,
        {r: tuple(h for h in prefs if (r, h) not in drop)
         for r, prefs in instance.resident_prefs.items()},
        {h: tuple(r for r in prefs if (r, h) not in drop)
         for h, prefs in instance.hospital_prefs.items()},
        dict(instance.quotas),
    )
