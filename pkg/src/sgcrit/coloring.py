"""Proper colorings, X_2k-colorings, and 4-coloring through homomorphisms
to the negative 4-cycle."""

from __future__ import annotations

import sys
from typing import Optional

from .constructions import t_subdivide
from .homsolver import U1, U2, U3, U4, C4, Homomorphism, hom_C4, verify_hom
from .errors import InternalAssertion
from .sgraph import SignedGraph


def _order(G) -> list[int]:
    deg = G.degrees()
    return sorted(range(G.n), key=lambda v: (-deg[v], v))


def _deep(n: int) -> None:
    if sys.getrecursionlimit() < n + 100:
        sys.setrecursionlimit(n + 100)


def k_coloring(G, k: int) -> Optional[tuple[int, ...]]:
    """Colors ``0..k-1`` with adjacent vertices distinct, or None. Signs are
    ignored. A vertex may open at most one new color, which removes color
    permutations from the search."""
    if k < 1:
        return () if G.n == 0 else None
    order = _order(G)
    nbr = G.neighbor_sets
    color = [-1] * G.n
    _deep(G.n)

    def go(i: int, used: int) -> bool:
        if i == G.n:
            return True
        v = order[i]
        taken = {color[w] for w in nbr[v]}
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return tuple(color) if go(0, 0) else None


def is_proper(G, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in G.underlying_pairs())


def x2k_coloring(G, k: int) -> Optional[tuple[int, ...]]:
    """Values in ``{±1..±k}`` with ``c(x) != s * c(y)`` on every edge of sign
    ``s``, or None. The first vertex is only tried with positive values,
    since negating a solution gives a solution."""
    if k < 1:
        return () if G.n == 0 else None
    order = _order(G)
    adj = G.adjacency
    values = [c for i in range(1, k + 1) for c in (i, -i)]
    c = [0] * G.n
    _deep(G.n)

    def go(i: int) -> bool:
        if i == G.n:
            return True
        v = order[i]
        bad = {s * c[w] for w, s in adj[v] if c[w]}
        for val in (values[::2] if i == 0 else values):
            if val not in bad:
                c[v] = val
                if go(i + 1):
                    return True
        c[v] = 0
        return False

    return tuple(c) if go(0) else None


def is_x2k_coloring(G, c) -> bool:
    return all(c[x] != 0 for x in range(G.n)) and all(c[x] != s * c[y] for x, y, s in G.edges)


_ROTATE = (U2, U3, U4, U1)


def _branch_side(T: SignedGraph, n: int, hom: Homomorphism) -> Homomorphism:
    """Move every component whose branch vertices sit on {u2, u4} over to
    {u1, u3}. Rotating C4 by one step is an automorphism once the vertices
    landing on u1 are switched, so the result is again a homomorphism."""
    X = set(hom.switch)
    image = list(hom.map)
    for comp in T.components():
        branch = [v for v in comp if v < n]
        if not branch or image[branch[0]] in (U1, U3):
            continue
        for v in comp:
            image[v] = _ROTATE[image[v]]
            if image[v] == U1:
                X ^= {v}
    return Homomorphism(frozenset(X), tuple(image))


def four_color_via_C4(G) -> Optional[tuple[int, ...]]:
    """Decide 4-colorability through ``T2(G, +) -> C4``.

    Color of a vertex = 2 * (switched?) + (0 if sent to u1 else 1). Two
    adjacent vertices with the same color would close a negative 2-path on
    a single target vertex, which is impossible.
    """
    positive = SignedGraph(G.n, [(u, v, 1) for u, v in G.underlying_pairs()])
    T = t_subdivide(positive, 2)
    verdict = hom_C4(T)
    if not verdict.mapped:
        return None
    hom = _branch_side(T, G.n, verdict.hom)
    if not verify_hom(T, C4, hom):
        raise InternalAssertion("normalised homomorphism does not verify")
    colors = tuple(2 * (v in hom.switch) + (0 if hom.map[v] == U1 else 1) for v in range(G.n))
    if not is_proper(G, colors):
        raise InternalAssertion("decoded coloring is not proper")
    return colors


__all__ = ["k_coloring", "x2k_coloring", "four_color_via_C4", "is_proper", "is_x2k_coloring"]
