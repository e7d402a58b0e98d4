"""Instance-level checks of the counting lemmas behind the degeneration.

Cycle positions are 1-based and taken mod n: the cycle
``v_1 a_1 v_2 ... v_n a_n v_1`` has hop ``i`` from ``v_i`` to ``v_{i+1}``.
A pair is nonconsecutive when its cyclic distance on the cycle is at least 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .connectivity import HyperCycle
from .errors import BadCycle, RangeUnsupported

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairProfile:
    counts: dict[Pair, int]
    consecutive: frozenset[Pair]

    def nonconsecutive(self) -> dict[Pair, int]:
        return {p: c for p, c in self.counts.items() if p not in self.consecutive}

    def __getitem__(self, pair) -> int:
        u, v = pair
        return self.counts[(min(u, v), max(u, v))]


def _check_shape(C: HyperCycle) -> None:
    m = len(C.vertices)
    if m < 3 or m != len(C.arcs) or len(set(C.vertices)) != m:
        raise BadCycle("malformed cycle")
    for x, a, y in C.hops():
        if not a.precedes(x, y):
            raise BadCycle(f"hop {x}->{y} not witnessed by {a!r}")
    if len(set(C.arcs)) != m:
        raise BadCycle("cycle repeats a hyperarc")


def pair_occurrence_profile(C: HyperCycle) -> PairProfile:
    """How many hyperarcs of ``C`` contain each unordered pair of cycle vertices."""
    _check_shape(C)
    on_cycle = set(C.vertices)
    counts = {p: 0 for p in combinations(sorted(on_cycle), 2)}
    for a in C.arcs:
        inside = sorted(v for v in a.seq if v in on_cycle)
        for p in combinations(inside, 2):
            counts[p] += 1
    consecutive = frozenset((min(x, y), max(x, y)) for x, _, y in C.hops())
    return PairProfile(counts, consecutive)


@dataclass(frozen=True)
class CycleVerdict:
    k: int
    n: int
    ok: bool
    failures: tuple[str, ...] = field(default=())
    max_count: int = 0
    pairs_at_four: int = 0
    pairs_at_least_three: int = 0


def check_cycle_bounds(C: HyperCycle) -> CycleVerdict:
    """Check the pair-occurrence bounds for a Hamiltonian cycle.

    k=3, any n: each nonconsecutive pair lies in at most 4 arcs of C; for
    n=8 at most two pairs reach 4; for n=7 no two pairs reach 4, at most two
    reach 3, and when one pair sits at 4 and another at 3 every other pair
    lies in at most one arc.
    k=4, n=7: two distinct nonconsecutive pairs share at most 4 arcs of C.
    """
    _check_shape(C)
    n = len(C.vertices)
    k = len(C.arcs[0])
    if not (k == 3 or (k == 4 and n == 7)):
        raise RangeUnsupported(f"no cycle bound for k={k}, n={n}")
    if any(len(a) != k for a in C.arcs):
        raise BadCycle("mixed arities")
    profile = pair_occurrence_profile(C)
    far = profile.nonconsecutive()
    failures = []
    if k == 4:
        keys = sorted(far)
        arcsets = [frozenset(a.seq) for a in C.arcs]
        worst = 0
        for p, q in combinations(keys, 2):
            shared = sum(1 for s in arcsets if set(p) <= s and set(q) <= s)
            worst = max(worst, shared)
            if shared > 4:
                failures.append(f"pairs {p},{q} share {shared} arcs")
        return CycleVerdict(k, n, not failures, tuple(failures), max_count=worst)

    four = [p for p, c in far.items() if c == 4]
    three = [p for p, c in far.items() if c == 3]
    top = max(far.values(), default=0)
    if top > 4:
        failures.append(f"a nonconsecutive pair lies in {top} arcs")
    if n == 8 and len(four) > 2:
        failures.append(f"{len(four)} pairs lie in four arcs (n=8 allows 2)")
    if n == 7:
        if len(four) >= 2:
            failures.append("two pairs lie in four arcs (n=7 allows 1)")
        if len(four) + len(three) > 2:
            failures.append(f"{len(four) + len(three)} pairs lie in >= 3 arcs (n=7 allows 2)")
        if four and three:
            special = {four[0], three[0]}
            crowded = [p for p, c in profile.counts.items() if p not in special and c > 1]
            if crowded:
                failures.append(f"pairs {crowded} exceed one arc beside the 4/3 pairs")
    return CycleVerdict(
        k, n, not failures, tuple(failures),
        max_count=top, pairs_at_four=len(four), pairs_at_least_three=len(four) + len(three),
    )


def check_matching_inequality(k: int, n: int) -> tuple[bool, int, int]:
    """``C(k,2) <= C(n-2,k-2) - 4`` for k=3, ``C(k,2) <= C(n-2,k-2) - n`` for k>=4."""
    if k < 3 or n < k:
        raise RangeUnsupported(f"need k >= 3 and n >= k, got k={k}, n={n}")
    lhs = comb(k, 2)
    rhs = comb(n - 2, k - 2) - (4 if k == 3 else n)
    return lhs <= rhs, lhs, rhs


def inequality_expected(k: int, n: int) -> bool:
    """Whether (k, n) lies in the range where the inequality is claimed."""
    return (k == 3 and n >= 9) or (k == 4 and n >= 8) or (k >= 5 and n >= k + 3)
