"""Bipartite matching.

Two tools live here:

* ``HopMatcher`` keeps a matching of a growing stack of "hops" to distinct
  resources. Searches push a hop with its candidate resources, and the push
  succeeds iff the hops on the stack still have a system of distinct
  representatives. Popping the last hop always leaves a valid matching of
  the rest, so backtracking is free.
* ``hopcroft_karp`` computes a maximum matching of a static bipartite graph.

Both scan vertices and candidates in the order given, so results are
deterministic.
"""
from __future__ import annotations

from collections import deque
from typing import Hashable, Mapping, Sequence

INF = float("inf")


class HopMatcher:
    def __init__(self):
        self.candidates: list[Sequence[int]] = []
        self.assigned: list[int] = []
        self.owner: dict[int, int] = {}

    def __len__(self):
        return len(self.candidates)

    def push(self, candidates: Sequence[int]) -> bool:
        """Add a hop; on failure the stack is left unchanged."""
        h = len(self.candidates)
        self.candidates.append(candidates)
        self.assigned.append(-1)
        for r in candidates:
            if r not in self.owner:
                self._take(h, r)
                return True
        if self._augment(h, set()):
            return True
        self.candidates.pop()
        self.assigned.pop()
        return False

    def pop(self) -> None:
        h = len(self.candidates) - 1
        r = self.assigned.pop()
        del self.owner[r]
        self.candidates.pop()
        assert h == len(self.assigned)

    def _take(self, h: int, r: int) -> None:
        self.assigned[h] = r
        self.owner[r] = h

    def _augment(self, h: int, seen: set[int]) -> bool:
        for r in self.candidates[h]:
            if r in seen:
                continue
            seen.add(r)
            other = self.owner.get(r)
            if other is None or self._augment(other, seen):
                self._take(h, r)
                return True
        return False

    def assignment(self) -> list[int]:
        return list(self.assigned)


def hopcroft_karp(adjacency: Mapping[Hashable, Sequence[Hashable]]) -> dict:
    """Maximum matching of a bipartite graph given as ``left -> [right, ...]``.

    Returns a dict mapping matched left vertices to their partner.
    """
    left = list(adjacency)
    match_l: dict = {}
    match_r: dict = {}
    dist: dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if u in match_l:
                dist[u] = INF
            else:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                v = match_r.get(w)
                if v is None:
                    found = True
                elif dist[v] == INF:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return found

    def dfs(u) -> bool:
        for w in adjacency[u]:
            v = match_r.get(w)
            if v is None or (dist[v] == dist[u] + 1 and dfs(v)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if u not in match_l:
                dfs(u)
    return match_l
