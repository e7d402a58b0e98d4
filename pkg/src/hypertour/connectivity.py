"""Hyperpaths and hypercycles, strong connectivity and 2-kings."""
from __future__ import annotations

from dataclasses import dataclass

from ._search import PathSearch, bfs_dist, full_mask, reach_mask
from .errors import BadTuple, BudgetExceeded
from .hypercore import Digraph, HyperArc, HyperDigraph, HyperTournament, derive_seed, random_tournament


@dataclass(frozen=True)
class HyperPath:
    """``vertices[i] --arcs[i]--> vertices[i+1]``; a lone vertex is a length-0 path."""

    vertices: tuple[int, ...]
    arcs: tuple[HyperArc, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arcs)

    def __str__(self):
        parts = [str(self.vertices[0])]
        for a, v in zip(self.arcs, self.vertices[1:]):
            parts.append(f"-{a!r}->")
            parts.append(str(v))
        return " ".join(parts)


@dataclass(frozen=True)
class HyperCycle:
    """``vertices[i] --arcs[i]--> vertices[i+1 mod m]``; the closing vertex is not repeated."""

    vertices: tuple[int, ...]
    arcs: tuple[HyperArc, ...]

    @property
    def length(self) -> int:
        return len(self.arcs)

    def hops(self):
        m = len(self.vertices)
        for i in range(m):
            yield self.vertices[i], self.arcs[i], self.vertices[(i + 1) % m]

    def __str__(self):
        return " ".join(f"{x} -{a!r}->" for x, a, _ in self.hops()) + f" {self.vertices[0]}"


def _arcs_belong(H: HyperDigraph, arcs) -> bool:
    return all(H.by_key.get(a.key) == a for a in arcs)


def is_valid_path(H: HyperDigraph, P: HyperPath) -> bool:
    vs, arcs = P.vertices, P.arcs
    if not vs or len(vs) != len(arcs) + 1:
        return False
    if len(set(vs)) != len(vs) or len(set(arcs)) != len(arcs):
        return False
    if not all(1 <= v <= H.n for v in vs) or not _arcs_belong(H, arcs):
        return False
    return all(a.precedes(vs[i], vs[i + 1]) for i, a in enumerate(arcs))


def is_valid_cycle(H: HyperDigraph, C: HyperCycle) -> bool:
    vs, arcs = C.vertices, C.arcs
    if len(vs) < 2 or len(vs) != len(arcs):
        return False
    if len(set(vs)) != len(vs) or len(set(arcs)) != len(arcs):
        return False
    if not all(1 <= v <= H.n for v in vs) or not _arcs_belong(H, arcs):
        return False
    return all(a.precedes(x, y) for x, a, y in C.hops())


def path_from_search(H: HyperDigraph, search: PathSearch) -> HyperPath:
    return HyperPath(tuple(search.path), tuple(H.arcs[i] for i in search.hops()))


def cycle_from_search(H: HyperDigraph, search: PathSearch) -> HyperCycle:
    return HyperCycle(tuple(search.path), tuple(H.arcs[i] for i in search.hops()))


def _check_vertex(H: HyperDigraph, v: int) -> None:
    if not 1 <= v <= H.n:
        raise BadTuple(f"vertex {v} out of range 1..{H.n}")


def find_path(H: HyperDigraph, u: int, v: int, max_len: int | None = None) -> HyperPath | None:
    """Shortest hyperpath from ``u`` to ``v`` of length at most ``max_len``.

    Lengths are tried in increasing order, and neighbours in ascending id
    order within a length, so the answer is deterministic.
    """
    _check_vertex(H, u)
    _check_vertex(H, v)
    if u == v:
        raise BadTuple("find_path needs distinct endpoints")
    limit = H.n - 1 if max_len is None else min(max_len, H.n - 1)
    direct = H.pair_arcs.get((u, v))
    if direct and limit >= 1:
        return HyperPath((u, v), (H.arcs[direct[0]],))
    # reusing a hyperarc is never required to merely reach v, so this is a sound cut
    if not reach_mask(H, u, full_mask(H.n)) >> v & 1:
        return None

    def too_far(s: PathSearch) -> bool:
        d = bfs_dist(H, s.path[-1], s.visited & ~(1 << v), v)
        return d < 0 or d > s.need - len(s.path)

    for length in range(2, limit + 1):
        search = PathSearch(H, length + 1, full_mask(H.n), end=v, prune=too_far)
        if search.run([u]):
            return path_from_search(H, search)
    return None


def strongly_connected(n: int, out_neighbors) -> bool:
    """Plain digraph strong connectivity by forward and backward reachability."""
    if n <= 1:
        return True
    back: list[list[int]] = [[] for _ in range(n + 1)]
    for u in range(1, n + 1):
        for w in out_neighbors[u]:
            back[w].append(u)
    for adj in (out_neighbors, back):
        seen = {1}
        stack = [1]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def is_strong_digraph(D: Digraph) -> bool:
    return strongly_connected(D.n, D.out_neighbors)


def is_strong(H: HyperDigraph | Digraph) -> bool:
    """True iff every ordered pair of distinct vertices is joined by a hyperpath."""
    if isinstance(H, Digraph):
        return is_strong_digraph(H)
    if not strongly_connected(H.n, H.out_neighbors):
        return False
    return all(
        find_path(H, u, v) is not None
        for u in H.vertices for v in H.vertices
        if u != v and (u, v) not in H.pair_arcs
    )


def reaches_within_two(H: HyperDigraph, u: int, v: int) -> bool:
    if (u, v) in H.pair_arcs:
        return True
    for w in H.out_neighbors[u]:
        first = H.pair_arcs[(u, w)]
        second = H.pair_arcs.get((w, v))
        # two hops fail only when both are pinned to one and the same hyperarc
        if second and not (len(first) == 1 and first == second):
            return True
    return False


def two_kings(H: HyperDigraph | Digraph) -> set[int]:
    """Vertices reaching every other vertex along a path of length at most 2."""
    if isinstance(H, Digraph):
        out = H.out_neighbors
        kings = set()
        for u in H.vertices:
            reach = set(out[u]) | {x for w in out[u] for x in out[w]}
            if reach | {u} == set(H.vertices):
                kings.add(u)
        return kings
    return {
        u for u in H.vertices
        if all(reaches_within_two(H, u, v) for v in H.vertices if v != u)
    }


def random_strong_tournament(k: int, n: int, seed: int, max_attempts: int = 10_000) -> tuple[HyperTournament, int]:
    """First strong k-tournament among ``random_tournament(k, n, derive_seed(seed, i))``.

    Returns the tournament and the attempt index ``i`` that produced it.
    """
    for attempt in range(max_attempts):
        H = random_tournament(k, n, derive_seed(seed, attempt))
        if is_strong(H):
            return H, attempt
    raise BudgetExceeded(f"no strong {k}-tournament on {n} vertices in {max_attempts} draws")
