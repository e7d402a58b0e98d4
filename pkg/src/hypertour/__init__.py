"""Hypertournament algorithms.

The headline operation is :func:`degenerate_tournament`: given a strong
k-tournament with 3 <= k <= n-3 and n >= 7 it returns a strong tournament on
the same vertices whose arcs are generated by pairwise distinct hyperarcs,
together with a certificate of that.
"""
from .connectivity import (
    HyperCycle,
    HyperPath,
    find_path,
    is_strong,
    is_valid_cycle,
    is_valid_path,
    random_strong_tournament,
    two_kings,
)
from .covers import gallai_milgram_chain, independence_number, min_path_cover
from .degenerate import (
    build_bipartite,
    degenerate_tournament,
    enumerate_TH,
    max_matching,
    search_no_strong_witness,
    verify_membership,
)
from .errors import *  # noqa: F401,F403
from .formats import parse_kht, serialize_kht
from .hamiltonian import hamiltonian_cycle, hamiltonian_path
from .hypercore import (
    Digraph,
    HyperArc,
    HyperDigraph,
    HyperTournament,
    Tournament,
    build_hyperdigraph,
    build_hypertournament,
    generated_digraph,
    hyperarc_of,
    induced,
    precedes,
    random_hyperdigraph,
    random_tournament,
)
from .lemmas import check_cycle_bounds, check_matching_inequality, pair_occurrence_profile
from .pancyclic import cycle_through, is_vertex_pancyclic, pancyclic_hyperarcs_on_cycle

__version__ = "0.1.0"
