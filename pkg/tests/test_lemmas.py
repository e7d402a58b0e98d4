import random
from itertools import combinations
from math import comb

import pytest

from hypertour.connectivity import HyperCycle, random_strong_tournament
from hypertour.errors import BadCycle, RangeUnsupported
from hypertour.hamiltonian import hamiltonian_cycle
from hypertour.hypercore import HyperArc
from hypertour.lemmas import (
    check_cycle_bounds,
    check_matching_inequality,
    inequality_expected,
    pair_occurrence_profile,
)


def _cycle(seqs):
    n = len(seqs)
    return HyperCycle(tuple(range(1, n + 1)), tuple(HyperArc(s) for s in seqs))


def _sliding(n):
    return _cycle([(i, i % n + 1, (i + 1) % n + 1) for i in range(1, n + 1)])


def test_profile_examples():
    p = pair_occurrence_profile(_sliding(7))
    assert p[(1, 3)] == 1
    assert p[(1, 4)] == 0
    assert p[(1, 2)] == 2 and (1, 2) in p.consecutive
    assert (1, 3) in p.nonconsecutive()


def test_profile_k2():
    C = _cycle([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    assert set(pair_occurrence_profile(C).nonconsecutive().values()) == {0}


@pytest.mark.parametrize("k,n,seed", [(3, 7, 0), (3, 9, 1), (4, 8, 2), (5, 9, 3)])
def test_profile_total(k, n, seed):
    H, _ = random_strong_tournament(k, n, seed)
    C = hamiltonian_cycle(H)
    assert sum(pair_occurrence_profile(C).counts.values()) == n * comb(k, 2)


def test_profile_rejects_bad_cycle():
    with pytest.raises(BadCycle):
        pair_occurrence_profile(_cycle([(2, 1, 3), (2, 3, 4), (3, 1, 4)]))


def test_count_four_pair_n8():
    C = _cycle([(1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 1), (5, 6, 2), (6, 7, 2), (7, 8, 3), (8, 1, 4)])
    p = pair_occurrence_profile(C)
    assert p[(1, 4)] == 4
    v = check_cycle_bounds(C)
    assert v.ok and v.max_count == 4 and v.pairs_at_four <= 2


def test_range_guard():
    H, _ = random_strong_tournament(4, 8, 0)
    with pytest.raises(RangeUnsupported):
        check_cycle_bounds(hamiltonian_cycle(H))


def _random_cycle_structure(rng, n, k):
    """Random arc sets of a Hamiltonian cycle 1..n with distinct keys."""
    while True:
        seqs = []
        for i in range(1, n + 1):
            x, y = i, i % n + 1
            rest = rng.sample([v for v in range(1, n + 1) if v not in (x, y)], k - 2)
            seqs.append((x, y, *rest))
        if len({frozenset(s) for s in seqs}) == n:
            return _cycle(seqs)


@pytest.mark.parametrize("n", [7, 8, 9, 12])
def test_random_structures_k3(n):
    rng = random.Random(n)
    for _ in range(3000):
        assert check_cycle_bounds(_random_cycle_structure(rng, n, 3)).ok


def test_random_structures_k4_n7():
    rng = random.Random(4)
    for _ in range(3000):
        assert check_cycle_bounds(_random_cycle_structure(rng, 7, 4)).ok


def test_exhaustive_k3_n7():
    # every way to give each hop of 1..7 a third vertex with distinct triples
    n = 7
    options = [[v for v in range(1, n + 1) if v not in (i, i % n + 1)] for i in range(1, n + 1)]
    checked = 0

    def walk(i, seqs, keys):
        nonlocal checked
        if i > n:
            v = check_cycle_bounds(_cycle(seqs))
            assert v.ok, (seqs, v.failures)
            checked += 1
            return
        x, y = i, i % n + 1
        for z in options[i - 1]:
            key = frozenset((x, y, z))
            if key not in keys:
                walk(i + 1, seqs + [(x, y, z)], keys | {key})

    walk(1, [], frozenset())
    assert checked > 50000


def test_inequality_examples():
    assert check_matching_inequality(3, 9) == (True, 3, 3)
    assert check_matching_inequality(4, 8) == (True, 6, 7)
    assert check_matching_inequality(3, 5) == (False, 3, -1)
    assert not check_matching_inequality(3, 6)[0]
    with pytest.raises(RangeUnsupported):
        check_matching_inequality(2, 5)


def test_inequality_grid():
    for k in range(3, 16):
        for n in range(k, k + 41):
            holds, lhs, rhs = check_matching_inequality(k, n)
            assert lhs == comb(k, 2)
            if inequality_expected(k, n):
                assert holds, (k, n)
    assert not inequality_expected(3, 8) and not check_matching_inequality(3, 8)[0]
    assert not inequality_expected(4, 7) and not check_matching_inequality(4, 7)[0]
