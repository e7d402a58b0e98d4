"""Path covers, independence numbers and the Gallai-Milgram chain.

All quantities are computed exactly by exhaustive search, which keeps them
usable for testing the inequality ``pc(H) <= pc(D) <= alpha(D) <= alpha(H)``
but restricts them to small vertex counts (``bound``, default 16).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from ._search import PathSearch
from .connectivity import HyperPath, path_from_search
from .errors import BudgetExceeded, InternalGuaranteeViolated
from .hamiltonian import find_hamiltonian_path
from .hypercore import Digraph, HyperDigraph, generated_digraph
from .matching import HopMatcher

DEFAULT_BOUND = 16


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering every vertex; singletons are length-0 paths."""

    paths: tuple

    @property
    def size(self) -> int:
        return len(self.paths)

    def vertex_lists(self) -> list[tuple[int, ...]]:
        return [p.vertices if isinstance(p, HyperPath) else tuple(p) for p in self.paths]


@dataclass(frozen=True)
class CoverReport:
    pc_H: int
    pc_D: int
    alpha_D: int
    alpha_H: int
    cover_H: PathCover
    cover_D: PathCover
    independent_D: frozenset[int]
    independent_H: frozenset[int]
    mode: str = "closure"
    violations: tuple[str, ...] = field(default=())

    @property
    def chain(self) -> tuple[int, int, int, int]:
        return (self.pc_H, self.pc_D, self.alpha_D, self.alpha_H)

    @property
    def chain_holds(self) -> bool:
        return not self.violations


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BudgetExceeded(f"n={n} exceeds the exhaustive bound {bound}")


def _edge_masks(G: HyperDigraph | Digraph) -> list[int]:
    if isinstance(G, Digraph):
        return [(1 << u) | (1 << v) for u, v in G.sorted_arcs()]
    return list(G.arc_masks)


def independence_number(G: HyperDigraph | Digraph, bound: int = DEFAULT_BOUND) -> tuple[int, frozenset[int]]:
    """Largest vertex set containing no hyperarc (no arc, for a digraph), with a witness."""
    n = G.n
    _check_bound(n, bound)
    through: list[list[int]] = [[] for _ in range(n + 1)]
    for m in _edge_masks(G):
        for v in range(1, n + 1):
            if m >> v & 1:
                through[v].append(m)
    best = [0, 0]

    def grow(v: int, chosen: int, size: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, chosen
        if v > n or size + (n - v + 1) <= best[0]:
            return
        with_v = chosen | (1 << v)
        if all(m & with_v != m for m in through[v]):
            grow(v + 1, with_v, size + 1)
        grow(v + 1, chosen, size)

    grow(1, 0, 0)
    witness = frozenset(v for v in range(1, n + 1) if best[1] >> v & 1)
    return best[0], witness


def _digraph_path_sets(n: int, out: Sequence[Sequence[int]]) -> dict[int, tuple[int, ...]]:
    """Vertex set -> one path (vertex order) realising it, for every pathable set."""
    ends: dict[int, dict[int, int]] = {}
    for v in range(1, n + 1):
        ends[1 << v] = {v: 0}
    full = 1 << (n + 1)
    for mask in range(2, full, 2):
        here = ends.get(mask)
        if not here:
            continue
        for v in list(here):
            for w in out[v]:
                if mask >> w & 1:
                    continue
                nxt = ends.setdefault(mask | (1 << w), {})
                nxt.setdefault(w, v)
    paths = {}
    for mask, here in ends.items():
        v = min(here)
        seq = [v]
        m = mask
        while here[v]:
            prev = here[v]
            m &= ~(1 << v)
            v = prev
            seq.append(v)
            here = ends[m]
        paths[mask] = tuple(reversed(seq))
    return paths


def _min_partition(n: int, pieces: dict[int, object]) -> list[int]:
    """Fewest pathable sets partitioning ``1..n`` (exhaustive memoised search)."""
    by_low: dict[int, list[int]] = {}
    for m in pieces:
        low = (m & -m).bit_length() - 1
        by_low.setdefault(low, []).append(m)
    for low in by_low:
        by_low[low].sort(key=lambda m: (-bin(m).count("1"), m))

    @lru_cache(maxsize=None)
    def best(rest: int) -> tuple[int, tuple[int, ...]]:
        if not rest:
            return 0, ()
        low = (rest & -rest).bit_length() - 1
        choice = None
        for m in by_low[low]:
            if m & rest != m:
                continue
            count, used = best(rest & ~m)
            if choice is None or count + 1 < choice[0]:
                choice = (count + 1, (m,) + used)
        return choice

    full = ((1 << (n + 1)) - 1) & ~1
    result = best(full)[1]
    best.cache_clear()
    return list(result)


def _digraph_cover(D: Digraph) -> PathCover:
    paths = _digraph_path_sets(D.n, D.out_neighbors)
    chosen = _min_partition(D.n, paths)
    return PathCover(tuple(paths[m] for m in chosen))


def _hyper_cover(H: HyperDigraph) -> PathCover:
    # any hyperpath is a path of the closure digraph, so only those vertex sets can qualify
    shadow = _digraph_path_sets(H.n, H.out_neighbors)
    paths: dict[int, HyperPath] = {}
    for mask in shadow:
        if mask & (mask - 1) == 0:
            paths[mask] = HyperPath((mask.bit_length() - 1,))
            continue
        P = find_hamiltonian_path(H, allowed=mask)
        if P is not None:
            paths[mask] = P
    chosen = _min_partition(H.n, paths)
    return PathCover(tuple(paths[m] for m in chosen))


def min_path_cover(G: HyperDigraph | Digraph, bound: int = DEFAULT_BOUND) -> PathCover:
    """A minimum vertex-disjoint path cover.

    For a hyperdigraph each path must use pairwise distinct hyperarcs;
    different paths may share hyperarcs since they only need to be
    vertex-disjoint.
    """
    _check_bound(G.n, bound)
    if isinstance(G, Digraph):
        return _digraph_cover(G)
    return _hyper_cover(G)


def lift_path(H: HyperDigraph, vertices: Sequence[int]) -> HyperPath:
    """Turn a path of a generated digraph into a hyperpath of ``H``.

    Hops are first charged to distinct generating hyperarcs in their given
    order. If the generators collide, any hyperpath of ``H`` between the same
    endpoints through the same vertex set is accepted instead; failing that,
    ``InternalGuaranteeViolated`` is raised.
    """
    vertices = tuple(vertices)
    matcher = HopMatcher()
    if all(matcher.push(H.pair_arcs.get((x, y), ())) for x, y in zip(vertices, vertices[1:])):
        return HyperPath(vertices, tuple(H.arcs[i] for i in matcher.assignment()))
    mask = sum(1 << v for v in vertices)
    search = PathSearch(H, len(vertices), mask, end=vertices[-1])
    if search.run([vertices[0]]):
        return path_from_search(H, search)
    raise InternalGuaranteeViolated(f"path {vertices} of the generated digraph does not lift to {H!r}")


def gallai_milgram_chain(H: HyperDigraph, mode: str = "closure", bound: int = DEFAULT_BOUND) -> CoverReport:
    """Exact ``pc(H), pc(D), alpha(D), alpha(H)`` for the digraph ``D`` generated in ``mode``."""
    _check_bound(H.n, bound)
    D = generated_digraph(H, mode)
    cover_H = min_path_cover(H, bound)
    cover_D = min_path_cover(D, bound)
    alpha_D, ind_D = independence_number(D, bound)
    alpha_H, ind_H = independence_number(H, bound)
    violations = []
    if cover_H.size > cover_D.size:
        violations.append(f"pc(H)={cover_H.size} > pc(D)={cover_D.size}")
    if cover_D.size > alpha_D:
        violations.append(f"pc(D)={cover_D.size} > alpha(D)={alpha_D}")
    if alpha_D > alpha_H:
        violations.append(f"alpha(D)={alpha_D} > alpha(H)={alpha_H}")
    return CoverReport(
        cover_H.size, cover_D.size, alpha_D, alpha_H, cover_H, cover_D,
        ind_D, ind_H, mode, tuple(violations),
    )
