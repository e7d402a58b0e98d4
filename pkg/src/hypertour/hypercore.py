"""Core data model: hyperarcs, k-hyperdigraphs, k-tournaments and digraphs.

Vertices are the integers ``1..n``. Every collection of hyperarcs is kept in
canonical order, i.e. sorted by the lexicographic order of their sorted
vertex sets, and all iteration, serialization and random generation follow
that order.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import BadTuple, DuplicateSubset, MissingSubset

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class HyperArc:
    """A hyperarc ``(x_1 x_2 ... x_k)``; ``x_i`` precedes ``x_j`` iff ``i < j``."""

    seq: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(int(v) for v in self.seq))
        if len(set(self.seq)) != len(self.seq):
            raise BadTuple(f"repeated vertex in hyperarc {self.seq}")

    @cached_property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.seq))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.seq)}

    def __contains__(self, v) -> bool:
        return v in self.position

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def precedes(self, u: int, v: int) -> bool:
        pos = self.position
        return u in pos and v in pos and pos[u] < pos[v]

    def ordered_pairs(self) -> Iterator[tuple[int, int]]:
        """All ``(u, v)`` with ``u`` preceding ``v``, in sequence order."""
        return combinations(self.seq, 2)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self.seq)) + ")"


def precedes(a: HyperArc, u: int, v: int) -> bool:
    return a.precedes(u, v)


def subset_rank(key: Sequence[int], n: int) -> int:
    """0-based rank of a sorted k-subset of ``1..n`` in lexicographic order."""
    k = len(key)
    rank = 0
    prev = 0
    for i, v in enumerate(key):
        for w in range(prev + 1, v):
            rank += comb(n - w, k - i - 1)
        prev = v
    return rank


def canonical_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(1, n + 1), k)


def _check_tuple(t: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    try:
        t = tuple(int(v) for v in t)
    except (TypeError, ValueError):
        raise BadTuple(f"non-integer entry in {t!r}") from None
    if len(t) != k:
        raise BadTuple(f"tuple {t} has arity {len(t)}, expected {k}")
    if len(set(t)) != k:
        raise BadTuple(f"tuple {t} repeats a vertex")
    for v in t:
        if not 1 <= v <= n:
            raise BadTuple(f"vertex {v} out of range 1..{n}")
    return t


def _check_kn(k: int, n: int) -> None:
    if not 2 <= k <= n:
        raise BadTuple(f"need 2 <= k <= n, got k={k}, n={n}")


@dataclass(frozen=True, eq=False)
class HyperDigraph:
    """A k-hyperdigraph: at most one hyperarc per k-subset of ``1..n``.

    ``labels`` is only set on induced sub-hyperdigraphs; ``labels[i - 1]`` is
    the vertex of the parent that local vertex ``i`` stands for.
    """

    n: int
    k: int
    arcs: tuple[HyperArc, ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __eq__(self, other):
        if not isinstance(other, HyperDigraph):
            return NotImplemented
        return (self.n, self.k, self.arcs) == (other.n, other.k, other.arcs)

    def __hash__(self):
        return hash((self.n, self.k, self.arcs))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def by_key(self) -> dict[tuple[int, ...], HyperArc]:
        return {a.key: a for a in self.arcs}

    @cached_property
    def arc_index(self) -> dict[HyperArc, int]:
        return {a: i for i, a in enumerate(self.arcs)}

    @cached_property
    def pair_arcs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map ``(u, v)`` to the indices (canonical order) of arcs with ``u`` before ``v``."""
        table: dict[tuple[int, int], list[int]] = {}
        for i, a in enumerate(self.arcs):
            for pair in a.ordered_pairs():
                table.setdefault(pair, []).append(i)
        return {p: tuple(ix) for p, ix in table.items()}

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """``out_neighbors[u]``: vertices ``v`` with some arc where ``u`` precedes ``v``."""
        out: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.pair_arcs:
            out[u].add(v)
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def arc_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in a.seq) for a in self.arcs)

    def hyperarc_of(self, subset: Iterable[int]) -> HyperArc | None:
        key = tuple(sorted(_check_tuple(tuple(subset), self.n, self.k)))
        return self.by_key.get(key)

    def is_tournament(self) -> bool:
        return len(self.arcs) == comb(self.n, self.k)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, k={self.k}, arcs={len(self.arcs)})"


class HyperTournament(HyperDigraph):
    """A k-tournament: exactly one hyperarc on every k-subset."""


def _collect(k: int, n: int, arcs: Iterable[Sequence[int]]) -> tuple[HyperArc, ...]:
    _check_kn(k, n)
    seen: dict[tuple[int, ...], HyperArc] = {}
    for t in arcs:
        a = HyperArc(_check_tuple(t, n, k))
        if a.key in seen:
            raise DuplicateSubset(f"two hyperarcs on subset {set(a.key)}: {seen[a.key]} and {a}")
        seen[a.key] = a
    return tuple(seen[key] for key in sorted(seen))


def build_hyperdigraph(k: int, n: int, arcs: Iterable[Sequence[int]] = ()) -> HyperDigraph:
    return HyperDigraph(n, k, _collect(k, n, arcs))


def build_hypertournament(k: int, n: int, arcs: Iterable[Sequence[int]]) -> HyperTournament:
    collected = _collect(k, n, arcs)
    expected = comb(n, k)
    if len(collected) != expected:
        missing = next(s for s in canonical_subsets(n, k) if s not in {a.key for a in collected})
        raise MissingSubset(
            f"{len(collected)} hyperarcs given, {expected} needed; first missing subset {set(missing)}"
        )
    return HyperTournament(n, k, collected)


def as_tournament(H: HyperDigraph) -> HyperTournament:
    """Re-validate ``H`` as a k-tournament (e.g. after parsing a generic file)."""
    if isinstance(H, HyperTournament):
        return H
    return build_hypertournament(H.k, H.n, (a.seq for a in H.arcs))


def hyperarc_of(H: HyperDigraph, subset: Iterable[int]) -> HyperArc | None:
    return H.hyperarc_of(subset)


def induced(H: HyperDigraph, S: Iterable[int]) -> HyperDigraph:
    """Sub-hyperdigraph on ``S``, relabelled ``1..|S|`` preserving vertex order."""
    S = sorted(set(S))
    for v in S:
        if not 1 <= v <= H.n:
            raise BadTuple(f"vertex {v} out of range 1..{H.n}")
    local = {v: i + 1 for i, v in enumerate(S)}
    inside = [a for a in H.arcs if all(v in local for v in a.seq)]
    arcs = tuple(HyperArc(tuple(local[v] for v in a.seq)) for a in inside)
    cls = HyperTournament if isinstance(H, HyperTournament) and len(S) >= H.k else HyperDigraph
    # k may exceed |S|; the result then simply has no arcs
    return cls(len(S), H.k, arcs, labels=tuple(S))


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on ``1..n``: no loops, no parallel arcs, antiparallel allowed."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise BadTuple(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise BadTuple(f"arc ({u},{v}) out of range 1..{self.n}")
        object.__setattr__(self, "arcs", arcs)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


class Tournament(Digraph):
    """Orientation of the complete graph: one arc per unordered pair."""

    def __post_init__(self):
        super().__post_init__()
        pairs = {frozenset(a) for a in self.arcs}
        if len(pairs) != len(self.arcs):
            raise BadTuple("tournament has both orientations of some pair")
        if len(self.arcs) != comb(self.n, 2):
            raise MissingSubset(f"tournament on {self.n} vertices needs {comb(self.n, 2)} arcs")


def generated_digraph(H: HyperDigraph, mode: str = "closure") -> Digraph:
    """Digraph on V(H) generated by the hyperarcs of ``H``.

    ``mode="closure"`` keeps every precedence pair of every hyperarc.
    ``mode="leading"`` lets each hyperarc generate the single arc from its
    first to its second vertex. Parallel arcs are merged in both modes.
    """
    if mode == "closure":
        return Digraph(H.n, frozenset(H.pair_arcs))
    if mode == "leading":
        return Digraph(H.n, frozenset((a.seq[0], a.seq[1]) for a in H.arcs))
    raise ValueError(f"unknown mode {mode!r}")


def tournament_as_hyper(T: Tournament) -> HyperTournament:
    return build_hypertournament(2, T.n, T.sorted_arcs())


# -- random generation -------------------------------------------------------
#
# Generator: Python's ``random.Random`` (MT19937) seeded with ``seed & MASK64``.
# Each subset, in canonical order, consumes exactly k-1 calls to
# ``getrandbits(64)`` for a Fisher-Yates shuffle (draw mod (i+1)); random
# hyperdigraphs first spend one more 64-bit draw on the inclusion test.


def derive_seed(*parts: int) -> int:
    """Stable 64-bit seed from integer parts (e.g. master seed and trial index)."""
    payload = ",".join(str(int(p)) for p in parts).encode()
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


def _shuffle(rng: random.Random, subset: tuple[int, ...]) -> tuple[int, ...]:
    seq = list(subset)
    for i in range(len(seq) - 1, 0, -1):
        j = rng.getrandbits(64) % (i + 1)
        seq[i], seq[j] = seq[j], seq[i]
    return tuple(seq)


def random_tournament(k: int, n: int, seed: int) -> HyperTournament:
    _check_kn(k, n)
    rng = random.Random(seed & MASK64)
    arcs = tuple(HyperArc(_shuffle(rng, s)) for s in canonical_subsets(n, k))
    return HyperTournament(n, k, arcs)


def random_hyperdigraph(k: int, n: int, density: float, seed: int) -> HyperDigraph:
    """Each k-subset carries a uniformly oriented hyperarc with probability ``density``."""
    _check_kn(k, n)
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    threshold = int(density * (1 << 64))
    rng = random.Random(seed & MASK64)
    arcs = []
    for s in canonical_subsets(n, k):
        keep = rng.getrandbits(64) < threshold
        seq = _shuffle(rng, s)
        if keep:
            arcs.append(HyperArc(seq))
    return HyperDigraph(n, k, tuple(arcs))
