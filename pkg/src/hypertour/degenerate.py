"""From a strong k-tournament to a strong tournament generated by it.

A tournament ``T`` on V(H) is generated by ``H`` when each arc ``u -> v`` of
``T`` can be charged to its own hyperarc of ``H`` containing ``u`` before
``v``. The construction here takes a Hamiltonian hypercycle of ``H``, orients
the cycle pairs along it, and matches every remaining vertex pair to a
distinct unused hyperarc containing it; the matched hyperarc then decides the
direction of the pair. Because ``T`` contains the Hamiltonian cycle, it is
strong.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterator

from .connectivity import HyperCycle, is_strong, is_strong_digraph, is_valid_cycle
from .errors import (
    BadCycle,
    BudgetExceeded,
    InternalGuaranteeViolated,
    NotStrong,
    RangeUnsupported,
)
from .hamiltonian import hamiltonian_cycle
from .hypercore import (
    MASK64,
    HyperArc,
    HyperTournament,
    Tournament,
    _shuffle,
    canonical_subsets,
    random_tournament,
)
from .matching import HopMatcher, hopcroft_karp

Pair = tuple[int, int]


@dataclass(frozen=True)
class BipartiteInstance:
    """Pairs off the cycle (side A) against hyperarcs off the cycle (side B).

    ``adjacency[p]`` lists, in canonical order, the indices into ``H.arcs`` of
    the side-B hyperarcs whose vertex set contains pair ``p``.
    """

    H: HyperTournament
    cycle: HyperCycle
    pairs: tuple[Pair, ...]
    hyperarcs: tuple[int, ...]
    adjacency: dict[Pair, tuple[int, ...]]

    def pair_degree(self, p: Pair) -> int:
        return len(self.adjacency[p])

    def arc_degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(self.hyperarcs, 0)
        for nbrs in self.adjacency.values():
            for b in nbrs:
                deg[b] += 1
        return deg

    def degree_bounds(self) -> "DegreeReport":
        k, n = self.H.k, self.H.n
        slack = 4 if k == 3 else n
        arc_deg = self.arc_degrees()
        return DegreeReport(
            max_arc_degree=max(arc_deg.values(), default=0),
            arc_bound=comb(k, 2),
            min_pair_degree=min((len(v) for v in self.adjacency.values()), default=0),
            pair_bound=comb(n - 2, k - 2) - slack,
        )


@dataclass(frozen=True)
class DegreeReport:
    max_arc_degree: int
    arc_bound: int
    min_pair_degree: int
    pair_bound: int

    @property
    def ok(self) -> bool:
        return self.max_arc_degree <= self.arc_bound and self.min_pair_degree >= self.pair_bound


@dataclass(frozen=True)
class Matching:
    pairs: dict[Pair, HyperArc]
    covers: bool

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class GenerationCertificate:
    """Maps every arc ``(u, v)`` of a tournament to the hyperarc generating it."""

    assignment: dict[tuple[int, int], HyperArc] = field(default_factory=dict)

    def __len__(self):
        return len(self.assignment)


@dataclass(frozen=True)
class MembershipVerdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def _normalize(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def cycle_pairs(C: HyperCycle) -> set[Pair]:
    return {_normalize(x, y) for x, _, y in C.hops()}


def build_bipartite(H: HyperTournament, C: HyperCycle) -> BipartiteInstance:
    if H.k < 3:
        raise RangeUnsupported("the bipartite construction needs k >= 3")
    if len(C.vertices) != H.n or not is_valid_cycle(H, C):
        raise BadCycle("not a Hamiltonian cycle of H")
    on_cycle = cycle_pairs(C)
    used = {H.arc_index[a] for a in C.arcs}
    pairs = tuple(p for p in combinations(H.vertices, 2) if p not in on_cycle)
    free = tuple(i for i in range(len(H.arcs)) if i not in used)
    adjacency: dict[Pair, list[int]] = {p: [] for p in pairs}
    for i in free:
        for p in combinations(H.arcs[i].key, 2):
            if p in adjacency:
                adjacency[p].append(i)
    return BipartiteInstance(H, C, pairs, free, {p: tuple(v) for p, v in adjacency.items()})


def maximum_matching(B: BipartiteInstance) -> Matching:
    matched = hopcroft_karp({p: B.adjacency[p] for p in B.pairs})
    pairs = {p: B.H.arcs[matched[p]] for p in B.pairs if p in matched}
    return Matching(pairs, covers=len(pairs) == len(B.pairs))


def max_matching(B: BipartiteInstance) -> Matching | None:
    """A matching saturating the pair side, or None if Hall's condition fails."""
    m = maximum_matching(B)
    return m if m.covers else None


def orient(H: HyperTournament, C: HyperCycle, M: Matching) -> tuple[Tournament, GenerationCertificate]:
    assignment: dict[tuple[int, int], HyperArc] = {}
    for x, a, y in C.hops():
        assignment[(x, y)] = a
    for (u, v), a in M.pairs.items():
        arc = (u, v) if a.precedes(u, v) else (v, u)
        assignment[arc] = a
    assignment = dict(sorted(assignment.items()))
    return Tournament(H.n, frozenset(assignment)), GenerationCertificate(assignment)


def in_guaranteed_range(k: int, n: int) -> bool:
    return 3 <= k <= n - 3 and n >= 7


def degenerate_tournament(H: HyperTournament) -> tuple[Tournament, GenerationCertificate]:
    """Strong tournament generated by a strong k-tournament, 3 <= k <= n-3, n >= 7."""
    if not in_guaranteed_range(H.k, H.n):
        raise RangeUnsupported(f"need 3 <= k <= n-3 and n >= 7, got k={H.k}, n={H.n}")
    if not H.is_tournament():
        raise RangeUnsupported("input is not a k-tournament")
    if not is_strong(H):
        raise NotStrong("input k-tournament is not strong")
    C = hamiltonian_cycle(H)
    if C is None:
        raise InternalGuaranteeViolated(f"strong {H!r} without Hamiltonian cycle")
    M = max_matching(build_bipartite(H, C))
    if M is None:
        raise InternalGuaranteeViolated(f"no matching covering the pair side for {H!r}")
    T, cert = orient(H, C, M)
    if not is_strong_digraph(T):
        raise InternalGuaranteeViolated("tournament through a Hamiltonian cycle is not strong")
    return T, cert


def verify_membership(T: Tournament, H: HyperTournament, cert: GenerationCertificate) -> MembershipVerdict:
    if T.n != H.n:
        return MembershipVerdict(False, "vertex-count-mismatch")
    arcs = cert.assignment
    if set(arcs) != set(T.arcs):
        return MembershipVerdict(False, "certificate-does-not-cover-arcs")
    if len(set(arcs.values())) != len(arcs):
        return MembershipVerdict(False, "hyperarc-reused")
    for (u, v), a in arcs.items():
        if H.by_key.get(a.key) != a:
            return MembershipVerdict(False, f"hyperarc-not-in-H:{a!r}")
        if not a.precedes(u, v):
            return MembershipVerdict(False, f"wrong-direction:{u}->{v}")
    return MembershipVerdict(True)


def enumerate_TH(H: HyperTournament, limit: int | None = None) -> Iterator[tuple[Tournament, GenerationCertificate]]:
    """Every tournament generated by ``H``, each exactly once.

    Pairs are oriented in canonical order, lower-to-higher first, and a
    branch is cut as soon as the oriented arcs lack distinct generators.
    Raises ``BudgetExceeded`` when asked for more than ``limit`` members.
    """
    pairs = list(combinations(H.vertices, 2))
    matcher = HopMatcher()
    chosen: list[tuple[int, int]] = []
    produced = 0
    if limit is not None and limit <= 0:
        raise BudgetExceeded("enumeration limit is 0")

    def walk(i: int):
        nonlocal produced
        if i == len(pairs):
            if limit is not None and produced >= limit:
                raise BudgetExceeded(f"more than {limit} members")
            produced += 1
            assignment = {arc: H.arcs[r] for arc, r in zip(chosen, matcher.assignment())}
            assignment = dict(sorted(assignment.items()))
            yield Tournament(H.n, frozenset(assignment)), GenerationCertificate(assignment)
            return
        u, v = pairs[i]
        for arc in ((u, v), (v, u)):
            cands = H.pair_arcs.get(arc)
            if cands and matcher.push(cands):
                chosen.append(arc)
                yield from walk(i + 1)
                chosen.pop()
                matcher.pop()

    yield from walk(0)


def tournament_through_cycle(H: HyperTournament, order: tuple[int, ...]) -> tuple[Tournament, GenerationCertificate] | None:
    """A generated tournament containing the directed Hamiltonian cycle ``order``, if any.

    One matching decides it: cycle arcs need a hyperarc with the right
    precedence, every other pair any hyperarc containing it.
    """
    n = H.n
    cyc = {(order[i], order[(i + 1) % n]) for i in range(n)}
    wanted: dict[tuple[int, int], list[int]] = {}
    for u, v in combinations(H.vertices, 2):
        if (u, v) in cyc or (v, u) in cyc:
            arc = (u, v) if (u, v) in cyc else (v, u)
            wanted[arc] = list(H.pair_arcs.get(arc, ()))
        else:
            wanted[(u, v)] = sorted(H.pair_arcs.get((u, v), ()) + H.pair_arcs.get((v, u), ()))
    matched = hopcroft_karp(wanted)
    if len(matched) != len(wanted):
        return None
    assignment = {}
    for (u, v), r in matched.items():
        a = H.arcs[r]
        assignment[(u, v) if a.precedes(u, v) else (v, u)] = a
    assignment = dict(sorted(assignment.items()))
    return Tournament(n, frozenset(assignment)), GenerationCertificate(assignment)


def directed_hamiltonian_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """Every directed Hamiltonian cycle of K_n once, as a sequence starting at 1."""
    for rest in permutations(range(2, n + 1)):
        yield (1,) + rest


def strong_member(H: HyperTournament) -> tuple[Tournament, GenerationCertificate] | None:
    """Some strong tournament in T_H, or None after trying every Hamiltonian cycle.

    A tournament is strong iff it has a Hamiltonian cycle, so scanning all
    directed Hamiltonian cycles of K_n is exhaustive.
    """
    for order in directed_hamiltonian_cycles(H.n):
        found = tournament_through_cycle(H, order)
        if found is not None:
            return found
    return None


def count_strong_cycles(H: HyperTournament, cap: int | None = None) -> int:
    """Number of directed Hamiltonian cycles realisable inside some member of T_H."""
    count = 0
    for order in directed_hamiltonian_cycles(H.n):
        if tournament_through_cycle(H, order) is not None:
            count += 1
            if cap is not None and count >= cap:
                break
    return count


def has_no_strong_member(H: HyperTournament) -> bool:
    """Exhaustive check through the member enumeration itself."""
    return not any(is_strong_digraph(T) for T, _ in enumerate_TH(H))


def search_no_strong_witness(k: int, n: int, budget: int, seed: int, restart_every: int = 400) -> HyperTournament:
    """Randomized local search for a strong H whose T_H has no strong member.

    Starting from random strong k-tournaments, one subset's permutation is
    re-drawn at a time, and moves that keep H strong without increasing the
    number of realisable Hamiltonian cycles are kept. ``budget`` counts
    candidate evaluations; when it runs out ``BudgetExceeded`` is raised.
    Any candidate is verified by full enumeration before it is returned.
    """
    if budget <= 0:
        raise BudgetExceeded("search budget is 0")
    rng = random.Random(seed & MASK64)
    subsets = list(canonical_subsets(n, k))
    spent = 0
    restart = 0
    while spent < budget:
        H = random_tournament(k, n, rng.getrandbits(64))
        restart += 1
        spent += 1
        if spent >= budget or not is_strong(H):
            continue
        score = count_strong_cycles(H)
        steps = 0
        while score > 0 and steps < restart_every and spent < budget:
            steps += 1
            spent += 1
            i = rng.randrange(len(subsets))
            arcs = list(H.arcs)
            arcs[i] = HyperArc(_shuffle(rng, subsets[i]))
            cand = HyperTournament(n, k, tuple(arcs))
            if not is_strong(cand):
                continue
            cand_score = count_strong_cycles(cand, cap=score + 1)
            if cand_score <= score:
                H, score = cand, cand_score
        if score == 0 and n <= 6 and has_no_strong_member(H):
            return H
        if score == 0 and n > 6 and strong_member(H) is None:
            return H
    raise BudgetExceeded(f"no witness within {budget} evaluations")
