import random

import networkx as nx
from hypothesis import given, settings

from sgcrit.census import connected_graphs
from sgcrit.coloring import (
    four_color_via_C4, is_proper, is_x2k_coloring, k_coloring, x2k_coloring,
)
from sgcrit.constructions import complete, cycle, t_subdivide, tilde
from sgcrit.homsolver import hom_to_target
from sgcrit.sgraph import SignedGraph, SignedMultiGraph

import gen
import oracles


def positive(n, pairs):
    return SignedGraph(n, [(u, v, 1) for u, v in pairs])


def test_k_coloring_examples():
    assert k_coloring(complete(5), 4) is None
    c = k_coloring(cycle(5), 3)
    assert c is not None and is_proper(cycle(5), c)
    P = nx.petersen_graph()
    G = positive(10, P.edges())
    assert is_proper(G, k_coloring(G, 3)) and k_coloring(G, 2) is None


@given(gen.signed_graphs(max_n=6))
def test_k_coloring_matches_brute_force(G):
    for k in (1, 2, 3):
        c = k_coloring(G, k)
        assert (c is not None) == oracles.chromatic_at_most(G.n, G.underlying_pairs(), k)
        if c is not None:
            assert is_proper(G, c) and max(c, default=0) < k


def test_x2k_examples():
    assert x2k_coloring(SignedGraph(2, [(0, 1, 1)]), 1) == (1, -1)
    assert x2k_coloring(SignedMultiGraph(2, [(0, 1, 1), (0, 1, -1)]), 1) is None
    assert x2k_coloring(tilde(complete(5)), 4) is None
    assert x2k_coloring(tilde(complete(4)), 4) is not None


@settings(max_examples=100)
@given(gen.signed_graphs(max_n=5, multi=True))
def test_x2k_matches_brute_force(G):
    for k in (1, 2):
        c = x2k_coloring(G, k)
        assert (c is not None) == oracles.x2k_brute(G.n, G.edges, k)
        if c is not None:
            assert is_x2k_coloring(G, c)


def test_four_color_examples():
    assert four_color_via_C4(complete(5)) is None
    c = four_color_via_C4(complete(4))
    assert sorted(c) == [0, 1, 2, 3]


def _random_planar(rng, n):
    """Insert random pairs in random order, keeping the graph planar."""
    H = nx.empty_graph(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        H.add_edge(u, v)
        if not nx.check_planarity(H)[0]:
            H.remove_edge(u, v)
    return positive(n, H.edges())


def test_random_planar_graphs_are_four_colorable():
    rng = random.Random(14)
    for _ in range(25):
        G = _random_planar(rng, rng.randint(4, 14))
        assert G.m == 3 * G.n - 6  # maximal planar
        c = four_color_via_C4(G)
        assert c is not None and is_proper(G, c)


def test_lifted_bridge_for_six_cycle_target():
    target = cycle(6, -1)
    for n in range(1, 6):
        for pairs in connected_graphs(n):
            G = positive(n, pairs)
            direct = k_coloring(G, 6) is not None
            assert direct == hom_to_target(t_subdivide(G, 4), target).mapped


def test_tilde_bridge():
    for n in range(1, 6):
        for pairs in connected_graphs(n):
            G = positive(n, pairs)
            for k in (2, 3):
                T = t_subdivide(tilde(G), 2 * k - 2)
                assert (k_coloring(G, k) is not None) == hom_to_target(T, cycle(2 * k, -1)).mapped
