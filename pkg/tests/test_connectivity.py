import pytest

import oracles
from hypertour.connectivity import (
    HyperPath,
    find_path,
    is_strong,
    is_valid_path,
    random_strong_tournament,
    two_kings,
)
from hypertour.errors import BadTuple
from hypertour.hypercore import HyperArc, generated_digraph, random_hyperdigraph, random_tournament


def test_find_path_h4(H4):
    P = find_path(H4, 1, 4)
    assert P is not None and P.vertices[0] == 1 and P.vertices[-1] == 4
    assert is_valid_path(H4, P) and oracles.is_hyperpath(oracles.arcs_of(H4), P.vertices)
    assert P.length == 2


def test_find_path_absent(H_asc):
    assert find_path(H_asc, 4, 1) is None


def test_find_path_max_len(H4):
    P = find_path(H4, 2, 4, max_len=1)
    assert P.vertices == (2, 4) and P.arcs == (HyperArc((2, 4, 1)),)


def test_find_path_rejects_bad_endpoints(H4):
    with pytest.raises(BadTuple):
        find_path(H4, 1, 1)
    with pytest.raises(BadTuple):
        find_path(H4, 1, 9)


def test_is_strong_examples(H4, H_asc, C3):
    assert is_strong(H4)
    assert not is_strong(H_asc)
    assert is_strong(C3)


def test_two_kings_examples(H4, H_asc, C3):
    assert two_kings(C3) == {1, 2, 3}
    assert two_kings(H4) == {1, 2, 3, 4}
    assert two_kings(H_asc) == {1}


def test_valid_path_rejects_reused_arc():
    H = random_hyperdigraph(3, 3, 1.0, 0)
    a = H.arcs[0]
    x, y, z = a.seq
    assert not is_valid_path(H, HyperPath((x, y, z), (a, a)))


@pytest.mark.parametrize("k,n,density", [(3, 4, 0.5), (3, 5, 0.3), (3, 5, 0.6), (4, 5, 0.8), (2, 5, 0.5), (3, 5, 1.0)])
def test_against_brute_force(k, n, density):
    for seed in range(12):
        H = random_hyperdigraph(k, n, density, seed)
        for u in H.vertices:
            for v in H.vertices:
                if u == v:
                    continue
                P = find_path(H, u, v)
                assert (P is not None) == oracles.has_path(H, u, v)
                if P is not None:
                    assert is_valid_path(H, P)
                    assert oracles.is_hyperpath(oracles.arcs_of(H), P.vertices)
                    # shortest length is what the search promises
                    assert not oracles.has_path(H, u, v, max_len=P.length - 1)
        assert is_strong(H) == oracles.strong(H)
        assert two_kings(H) == oracles.kings(H)


def test_kings_length_two_agrees_with_search():
    for seed in range(20):
        H = random_hyperdigraph(3, 6, 0.4, seed)
        for u in H.vertices:
            for v in H.vertices:
                if u != v:
                    from hypertour.connectivity import reaches_within_two
                    assert reaches_within_two(H, u, v) == (find_path(H, u, v, max_len=2) is not None)


def test_strong_implies_generated_digraph_strong():
    for seed in range(60):
        H = random_hyperdigraph(3, 6, 0.3 + (seed % 5) / 10, seed)
        if is_strong(H):
            assert is_strong(generated_digraph(H))


def test_random_strong_tournament_is_strong_and_reproducible():
    H, attempt = random_strong_tournament(3, 7, 11)
    assert is_strong(H)
    assert random_strong_tournament(3, 7, 11) == (H, attempt)


def test_three_kings_in_strong_tournaments():
    for seed in range(30):
        H, _ = random_strong_tournament(3, 7, seed)
        assert len(two_kings(H)) >= 3


def test_two_kings_on_plain_tournament(C3):
    from hypertour.hypercore import Tournament
    T = Tournament(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    assert two_kings(T) == {1, 2, 3}
    assert is_strong(T)
    assert two_kings(random_tournament(2, 6, 1)) == two_kings(
        Tournament(6, frozenset(a.seq for a in random_tournament(2, 6, 1).arcs))
    )
