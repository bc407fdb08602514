"""Random graph generators (seeded ``random.Random``) and hypothesis strategies."""

import random

from hypothesis import strategies as st

from sgcrit.sgraph import SignedGraph, SignedMultiGraph


def random_signed_graph(rng: random.Random, n: int, density: float) -> SignedGraph:
    edges = [(u, v, rng.choice((1, -1))) for u in range(n) for v in range(u + 1, n)
             if rng.random() < density]
    return SignedGraph(n, edges)


def random_signed_bipartite(rng: random.Random, n: int, density: float) -> SignedGraph:
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v, rng.choice((1, -1))) for u in range(n) for v in range(u + 1, n)
             if side[u] != side[v] and rng.random() < density]
    return SignedGraph(n, edges)


def random_signed_multigraph(rng: random.Random, n: int, density: float) -> SignedMultiGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                kind = rng.randrange(3)
                if kind != 1:
                    edges.append((u, v, 1))
                if kind != 0:
                    edges.append((u, v, -1))
    return SignedMultiGraph(n, edges)


@st.composite
def signed_graphs(draw, min_n=1, max_n=7, bipartite=False, multi=False):
    n = draw(st.integers(min_n, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
             if not bipartite or side[u] != side[v]]
    choice = [0, 1, -1, 2] if multi else [0, 1, -1]
    picks = draw(st.lists(st.sampled_from(choice), min_size=len(pairs), max_size=len(pairs)))
    edges = []
    for (u, v), c in zip(pairs, picks):
        if c == 2:
            edges += [(u, v, 1), (u, v, -1)]
        elif c:
            edges.append((u, v, c))
    return SignedMultiGraph(n, edges) if multi else SignedGraph(n, edges)


@st.composite
def graph_and_subset(draw, **kw):
    G = draw(signed_graphs(**kw))
    X = draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    return G, X


@st.composite
def graph_and_perm(draw, **kw):
    G = draw(signed_graphs(**kw))
    perm = draw(st.permutations(list(range(G.n))))
    return G, list(perm)
