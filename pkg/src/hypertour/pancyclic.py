"""Vertex- and hyperarc-pancyclicity.

A vertex (hyperarc) is pancyclic when it lies on a hypercycle of every
length ``3..n``. Cycle searches reuse the hyperpath backtracking with the
anchor pinned at the start; when a cycle is found, every vertex and
hyperarc on it is credited for that length, so later anchors skip it.
"""
from __future__ import annotations

from ._search import PathSearch, bfs_dist, full_mask
from .connectivity import HyperCycle, cycle_from_search, is_valid_cycle
from .errors import BadCycle, BadTuple
from .hypercore import HyperArc, HyperDigraph


def _closing_prune(anchor: int):
    def prune(s: PathSearch) -> bool:
        left = s.need - len(s.path) + 1
        d = bfs_dist(s.H, s.path[-1], s.visited & ~(1 << anchor), anchor)
        return d < 0 or d > left
    return prune


def cycle_through(H: HyperDigraph, anchor: int | HyperArc, l: int) -> HyperCycle | None:
    """An ``l``-cycle through a vertex, or using a given hyperarc as one of its hops."""
    if not 3 <= l <= H.n:
        raise BadTuple(f"cycle length {l} outside 3..{H.n}")
    if isinstance(anchor, HyperArc):
        idx = H.arc_index.get(anchor)
        if idx is None:
            raise BadTuple(f"hyperarc {anchor!r} is not in H")
        for x, y in anchor.ordered_pairs():
            search = PathSearch(H, l, full_mask(H.n), close=x, prune=_closing_prune(x))
            if search.run([x, y], pinned=[(idx,)]):
                return cycle_from_search(H, search)
        return None
    if not 1 <= anchor <= H.n:
        raise BadTuple(f"vertex {anchor} out of range 1..{H.n}")
    search = PathSearch(H, l, full_mask(H.n), close=anchor, prune=_closing_prune(anchor))
    if search.run([anchor]):
        return cycle_from_search(H, search)
    return None


def non_pancyclic_vertices(H: HyperDigraph, stop_early: bool = False) -> list[tuple[int, int]]:
    """``(vertex, length)`` pairs with no cycle, lengths checked in increasing order."""
    missing = []
    for l in range(3, H.n + 1):
        covered: set[int] = set()
        for v in H.vertices:
            if v in covered:
                continue
            C = cycle_through(H, v, l)
            if C is None:
                missing.append((v, l))
                if stop_early:
                    return missing
            else:
                covered.update(C.vertices)
    return missing


def is_vertex_pancyclic(H: HyperDigraph) -> bool:
    if H.n < 3:
        return False
    return not non_pancyclic_vertices(H, stop_early=True)


def pancyclic_hyperarcs_on_cycle(H: HyperDigraph, C: HyperCycle) -> set[HyperArc]:
    if len(C.vertices) != H.n or not is_valid_cycle(H, C):
        raise BadCycle("not a Hamiltonian cycle of H")
    candidates = set(C.arcs)
    for l in range(3, H.n + 1):
        credited: set[HyperArc] = set()
        for a in C.arcs:
            if a not in candidates or a in credited:
                continue
            found = cycle_through(H, a, l)
            if found is None:
                candidates.discard(a)
            else:
                credited.update(found.arcs)
    return candidates
