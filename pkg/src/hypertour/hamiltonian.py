"""Hamiltonian hyperpaths and hypercycles in k-tournaments.

Every k-tournament with k >= 3 and n >= k+1 has a Hamiltonian path, and every
strong one with n >= k+2 has a Hamiltonian cycle (Gutin and Yeo). The search
below is complete, so a miss inside that range raises
``InternalGuaranteeViolated``.
"""
from __future__ import annotations

from ._search import PathSearch, full_mask, spanning_prune
from .connectivity import (
    HyperCycle,
    HyperPath,
    cycle_from_search,
    is_strong,
    path_from_search,
    strongly_connected,
)
from .errors import InternalGuaranteeViolated, RangeUnsupported
from .hypercore import HyperDigraph


def _path_guaranteed(H: HyperDigraph) -> bool:
    return H.is_tournament() and (H.k == 2 or H.n >= H.k + 1)


def find_hamiltonian_path(H: HyperDigraph, allowed: int | None = None) -> HyperPath | None:
    """Hyperpath through every vertex of ``allowed`` (a bitmask; default all)."""
    allowed = full_mask(H.n) if allowed is None else allowed
    need = bin(allowed).count("1")
    for s in H.vertices:
        if not allowed >> s & 1:
            continue
        search = PathSearch(H, need, allowed, constrained=True, prune=spanning_prune)
        if search.run([s]):
            return path_from_search(H, search)
    return None


def hamiltonian_path(H: HyperDigraph) -> HyperPath:
    path = find_hamiltonian_path(H)
    if path is not None:
        return path
    if _path_guaranteed(H):
        raise InternalGuaranteeViolated(f"no Hamiltonian path in {H!r}")
    raise RangeUnsupported(f"no Hamiltonian path, and none is guaranteed for k={H.k}, n={H.n}")


def find_hamiltonian_cycle(H: HyperDigraph) -> HyperCycle | None:
    if H.n < 2 or not strongly_connected(H.n, H.out_neighbors):
        return None
    search = PathSearch(H, H.n, full_mask(H.n), close=1, constrained=True, prune=spanning_prune)
    if search.run([1]):
        return cycle_from_search(H, search)
    return None


def hamiltonian_cycle(H: HyperDigraph) -> HyperCycle | None:
    """First Hamiltonian hypercycle in canonical search order, or None."""
    cycle = find_hamiltonian_cycle(H)
    if cycle is None and H.is_tournament() and H.k >= 3 and H.n >= H.k + 2 and is_strong(H):
        raise InternalGuaranteeViolated(f"strong {H!r} has no Hamiltonian cycle")
    return cycle
