"""Backtracking over hyperpaths.

A hyperpath is a sequence of distinct vertices where every hop ``x -> y`` is
witnessed by its own hyperarc containing ``x`` before ``y``. The search walks
simple paths of the generated digraph and keeps a ``HopMatcher`` over the
hops so that the distinct-hyperarc condition is decided exactly at every
node; an infeasible prefix can never become feasible, so it is cut.
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Sequence

from .hypercore import HyperDigraph
from .matching import HopMatcher


def bfs_dist(H: HyperDigraph, src: int, blocked: int, dst: int) -> int:
    """Hop distance from ``src`` to ``dst`` in the generated digraph, avoiding ``blocked``."""
    if src == dst:
        return 0
    out = H.out_neighbors
    seen = blocked | (1 << src)
    frontier = deque([(src, 0)])
    while frontier:
        u, d = frontier.popleft()
        for w in out[u]:
            if w == dst:
                return d + 1
            if not seen >> w & 1:
                seen |= 1 << w
                frontier.append((w, d + 1))
    return -1


def reach_mask(H: HyperDigraph, src: int, allowed: int) -> int:
    out = H.out_neighbors
    seen = 1 << src
    stack = [src]
    while stack:
        u = stack.pop()
        for w in out[u]:
            if allowed >> w & 1 and not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen


class PathSearch:
    """Depth-first search for one hyperpath of a fixed number of vertices.

    ``allowed`` restricts which vertices may appear. If ``end`` is given the
    path must finish there; if ``close`` is given one more hop from the last
    vertex back to ``close`` is required (used for cycles). Neighbours are
    tried in ascending id order unless ``constrained`` asks for fewest
    onward options first.
    """

    def __init__(
        self,
        H: HyperDigraph,
        need: int,
        allowed: int,
        end: int | None = None,
        close: int | None = None,
        constrained: bool = False,
        prune: Callable[["PathSearch"], bool] | None = None,
    ):
        self.H = H
        self.need = need
        self.allowed = allowed
        self.end = end
        self.close = close
        self.constrained = constrained
        self.prune = prune
        self.matcher = HopMatcher()
        self.path: list[int] = []
        self.visited = 0
        self.nodes = 0

    def run(self, prefix: Sequence[int], pinned: Sequence[Sequence[int]] = ()) -> bool:
        """Search from ``prefix``; ``pinned[i]`` fixes the candidate arcs of hop ``i``."""
        self.matcher = HopMatcher()
        self.path = list(prefix)
        self.visited = 0
        for v in prefix:
            self.visited |= 1 << v
        for i in range(len(prefix) - 1):
            cands = pinned[i] if i < len(pinned) else self.H.pair_arcs.get((prefix[i], prefix[i + 1]), ())
            if not self.matcher.push(cands):
                return False
        return self._dfs()

    def hops(self) -> list[int]:
        return self.matcher.assignment()

    def _dfs(self) -> bool:
        self.nodes += 1
        H = self.H
        cur = self.path[-1]
        if len(self.path) == self.need:
            if self.end is not None and cur != self.end:
                return False
            if self.close is not None:
                cands = H.pair_arcs.get((cur, self.close))
                return bool(cands) and self.matcher.push(cands)
            return True
        if self.prune is not None and self.prune(self):
            return False
        options = [
            w for w in H.out_neighbors[cur]
            if self.allowed >> w & 1 and not self.visited >> w & 1
            and (w != self.end or len(self.path) + 1 == self.need)
        ]
        if self.constrained and len(options) > 1:
            free = self.allowed & ~self.visited
            options.sort(key=lambda w: (sum(1 for x in H.out_neighbors[w] if free >> x & 1), w))
        for w in options:
            if not self.matcher.push(H.pair_arcs[(cur, w)]):
                continue
            self.path.append(w)
            self.visited |= 1 << w
            if self._dfs():
                return True
            self.path.pop()
            self.visited &= ~(1 << w)
            self.matcher.pop()
        return False


def spanning_prune(search: PathSearch) -> bool:
    """Cut when some still-unvisited allowed vertex is unreachable from the tip."""
    free = search.allowed & ~search.visited
    if not free:
        return False
    cur = search.path[-1]
    reach = reach_mask(search.H, cur, free)
    if free & ~reach:
        return True
    if search.close is not None:
        # the tour has to get back to the start from somewhere unvisited
        back = search.close
        return not any(back in search.H.out_neighbors[w] for w in _bits(free))
    return False


def _bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def full_mask(n: int) -> int:
    return ((1 << (n + 1)) - 1) & ~1
