"""Brute-force reference procedures for small instances.

Nothing here calls into the search code under test: precedence is read
straight off the hyperarc tuples and every object is enumerated with
itertools.
"""
from itertools import combinations, permutations, product


def before(seq, u, v):
    return u in seq and v in seq and seq.index(u) < seq.index(v)


def arcs_of(H):
    return [a.seq for a in H.arcs]


def hop_choices(arcs, seq_vertices, closed=False):
    hops = list(zip(seq_vertices, seq_vertices[1:]))
    if closed:
        hops.append((seq_vertices[-1], seq_vertices[0]))
    return [[a for a in arcs if before(a, x, y)] for x, y in hops]


def distinct_choice(choices):
    """Some choice of pairwise distinct items, one per list, or None."""
    for pick in product(*choices):
        if len(set(pick)) == len(pick):
            return pick
    return None


def is_hyperpath(arcs, vertices):
    return distinct_choice(hop_choices(arcs, vertices)) is not None


def is_hypercycle(arcs, vertices):
    return distinct_choice(hop_choices(arcs, vertices, closed=True)) is not None


def has_path(H, u, v, max_len=None):
    arcs = arcs_of(H)
    others = [w for w in range(1, H.n + 1) if w not in (u, v)]
    top = H.n - 1 if max_len is None else max_len
    for length in range(1, top + 1):
        for mid in permutations(others, length - 1):
            if is_hyperpath(arcs, (u,) + mid + (v,)):
                return True
    return False


def strong(H):
    return all(has_path(H, u, v) for u in range(1, H.n + 1) for v in range(1, H.n + 1) if u != v)


def kings(H):
    return {
        u for u in range(1, H.n + 1)
        if all(has_path(H, u, v, max_len=2) for v in range(1, H.n + 1) if v != u)
    }


def cycles_of_length(H, l):
    """All l-cycles as (vertex tuple starting at its minimum, chosen arcs)."""
    arcs = arcs_of(H)
    out = []
    for vs in permutations(range(1, H.n + 1), l):
        if vs[0] != min(vs):
            continue
        for pick in product(*hop_choices(arcs, vs, closed=True)):
            if len(set(pick)) == len(pick):
                out.append((vs, pick))
    return out


def has_hamiltonian_path(H):
    arcs = arcs_of(H)
    return any(is_hyperpath(arcs, p) for p in permutations(range(1, H.n + 1)))


def vertex_pancyclic(H):
    for l in range(3, H.n + 1):
        on = {v for vs, _ in cycles_of_length(H, l) for v in vs}
        if on != set(range(1, H.n + 1)):
            return False
    return True


def pancyclic_arcs(H, cycle_arcs):
    good = set(cycle_arcs)
    for l in range(3, H.n + 1):
        used = {a for _, pick in cycles_of_length(H, l) for a in pick}
        good &= used
    return good


def alpha(n, edge_sets):
    for size in range(n, -1, -1):
        for S in combinations(range(1, n + 1), size):
            s = set(S)
            if not any(e <= s for e in edge_sets):
                return size
    return 0


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def path_cover_number(n, pathable):
    best = n
    for part in set_partitions(list(range(1, n + 1))):
        if len(part) < best and all(pathable(block) for block in part):
            best = len(part)
    return best


def hyper_pathable(H):
    arcs = arcs_of(H)
    return lambda block: any(is_hyperpath(arcs, p) for p in permutations(block))


def digraph_pathable(D):
    return lambda block: any(
        all((p[i], p[i + 1]) in D.arcs for i in range(len(p) - 1)) for p in permutations(block)
    )
