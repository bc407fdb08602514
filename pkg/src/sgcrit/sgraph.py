"""Signed graphs, switching, balance, parity girths and density measures.

Vertices are dense integer ids ``0..n-1``. Signs are the integers ``+1`` and
``-1``; the strings ``"+"`` and ``"-"`` are accepted wherever a sign is read.
Edge lists are stored canonically (``u < v``, sorted) so two graphs are equal
exactly when their ``n`` and edge tuples are equal.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    LoopEdge,
    SignedGraphError,
    VertexOutOfRange,
)

Edge = tuple[int, int, int]
SwitchSet = frozenset

INF = math.inf


def as_sign(s) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise SignedGraphError(f"not a sign: {s!r}")


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _normalize_edges(n: int, edges: Iterable) -> list[Edge]:
    out = []
    for e in edges:
        u, v, s = e
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        out.append((u, v, as_sign(s)))
    out.sort()
    return out


class _SignedBase:
    """Behaviour shared by simple and multi signed graphs."""

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, sign)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(w for w, _ in a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> frozenset:
        return self.neighbor_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def underlying_pairs(self) -> list[tuple[int, int]]:
        return sorted({(u, v) for u, v, _ in self.edges})

    def negative_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[2] < 0]

    def positive_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[2] > 0]

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for r in range(self.n):
            if seen[r]:
                continue
            seen[r] = True
            comp = [r]
            queue = deque([r])
            while queue:
                x = queue.popleft()
                for y, _ in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def relabel(self, perm):
        """Image under the vertex bijection ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise SignedGraphError("relabel needs a permutation of 0..n-1")
        return type(self)(self.n, [(perm[u], perm[v], s) for u, v, s in self.edges])

    def delete_edge(self, index: int):
        """Remove the edge at ``index`` of the canonical edge list; keeps n."""
        edges = list(self.edges)
        del edges[index]
        return type(self)(self.n, edges)

    def delete_vertices(self, vs: Iterable[int]):
        """Induced subgraph on the remaining vertices, relabelled in order."""
        drop = set(vs)
        for v in drop:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in drop]
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v], s) for u, v, s in self.edges if u in pos and v in pos]
        return type(self)(len(keep), edges)

    def induced(self, vs: Iterable[int]):
        keep = set(vs)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)

    def add_vertex(self, links: Iterable[tuple[int, object]]):
        """Append one vertex joined to each ``(target, sign)`` in ``links``."""
        x = self.n
        return type(self)(x + 1, list(self.edges) + [(x, t, s) for t, s in links])


@dataclass(frozen=True)
class SignedGraph(_SignedBase):
    """Undirected simple graph with a sign on every edge."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise SignedGraphError("negative vertex count")
        edges = _normalize_edges(self.n, self.edges)
        for a, b in zip(edges, edges[1:]):
            if a[:2] == b[:2]:
                raise DuplicateEdge(f"edge {a[:2]} given twice")
        object.__setattr__(self, "edges", tuple(edges))

    @cached_property
    def _sign_map(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    def sign(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._sign_map[(u, v)]

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        for i, e in enumerate(self.edges):
            if e[0] == u and e[1] == v:
                return i
        raise SignedGraphError(f"no edge ({u}, {v})")

    def with_signs(self, signs: Iterable[int]) -> "SignedGraph":
        """Same underlying graph, new signs in canonical edge order."""
        return SignedGraph(self.n, [(u, v, s) for (u, v, _), s in zip(self.edges, signs)])


@dataclass(frozen=True)
class SignedMultiGraph(_SignedBase):
    """Signed graph allowing a parallel pair of opposite signs; no loops."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise SignedGraphError("negative vertex count")
        edges = _normalize_edges(self.n, self.edges)
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise DuplicateEdge(f"parallel edges {a[:2]} of the same sign")
        object.__setattr__(self, "edges", tuple(edges))

    def is_simple(self) -> bool:
        return len(self.underlying_pairs()) == self.m

    def to_simple(self) -> SignedGraph:
        return SignedGraph(self.n, self.edges)


def new_signed_graph(n: int, edges: Iterable = ()) -> SignedGraph:
    return SignedGraph(n, tuple(edges))


def switch(G, X: Iterable[int]):
    """Negate every edge with exactly one endpoint in ``X``."""
    X = frozenset(X)
    for v in X:
        G._check_vertex(v)
    return type(G)(G.n, [(u, v, -s if (u in X) != (v in X) else s) for u, v, s in G.edges])


def _balancing_labels(n: int, edges: Iterable[Edge]) -> Optional[list[int]]:
    """Labels ``l`` with ``s(uv) = l(u) l(v)`` on every edge, or None."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, s in edges:
        adj[u].append((v, s))
        adj[v].append((u, s))
    label = [0] * n
    for r in range(n):
        if label[r]:
            continue
        label[r] = 1
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y, s in adj[x]:
                want = label[x] * s
                if not label[y]:
                    label[y] = want
                    queue.append(y)
                elif label[y] != want:
                    return None
    return label


def is_balanced(G) -> Optional[frozenset]:
    """A switching set making every edge positive, or None if G has a negative cycle.

    The labels come from a BFS spanning forest; non-tree edges are checked
    against them.
    """
    label = _balancing_labels(G.n, G.edges)
    if label is None:
        return None
    return frozenset(v for v in range(G.n) if label[v] < 0)


def switching_equivalent(G1, G2) -> bool:
    if G1.n != G2.n or [e[:2] for e in G1.edges] != [e[:2] for e in G2.edges]:
        return False
    product = [(u, v, s1 * e2[2]) for (u, v, s1), e2 in zip(G1.edges, G2.edges)]
    return _balancing_labels(G1.n, product) is not None


@dataclass(frozen=True)
class GirthVector:
    """Shortest closed-walk lengths per (sign parity, length parity) class."""

    g00: float
    g01: float
    g10: float
    g11: float

    CLASSES = ("00", "01", "10", "11")

    def __getitem__(self, ij: str) -> float:
        return getattr(self, "g" + ij)

    def __iter__(self):
        return iter((self.g00, self.g01, self.g10, self.g11))

    def dominates(self, other: "GirthVector") -> bool:
        """Componentwise ``self >= other`` (the no-homomorphism condition)."""
        return all(a >= b for a, b in zip(self, other))

    def first_violation(self, other: "GirthVector") -> Optional[str]:
        for ij in self.CLASSES:
            if self[ij] < other[ij]:
                return ij
        return None

    def as_dict(self) -> dict[str, object]:
        return {"g" + ij: _fmt_len(self[ij]) for ij in self.CLASSES}

    def __str__(self) -> str:
        return " ".join(f"g{ij}={_fmt_len(self[ij])}" for ij in self.CLASSES)


def _fmt_len(x):
    return "inf" if x == INF else int(x)


def girth_vector(G) -> GirthVector:
    """BFS from every ``(v, +, even)`` state of the 4-fold parity cover.

    A shortest closed walk through ``v`` in class ``ij`` is a shortest path
    from ``(v, 0, 0)`` to ``(v, i, j)`` in the cover; ``g00`` is 2 as soon as
    an edge exists (walk an edge there and back).
    """
    best = {"01": INF, "10": INF, "11": INF}
    adj = [[(w, 0 if s > 0 else 1) for w, s in a] for a in G.adjacency]
    for start in range(G.n):
        if not adj[start]:
            continue
        dist = {(start, 0, 0): 0}
        queue = deque([(start, 0, 0)])
        while queue:
            state = queue.popleft()
            x, sp, lp = state
            d = dist[state]
            for y, neg in adj[x]:
                nxt = (y, sp ^ neg, lp ^ 1)
                if nxt not in dist:
                    dist[nxt] = d + 1
                    queue.append(nxt)
        for ij, key in (("01", (start, 0, 1)), ("10", (start, 1, 0)), ("11", (start, 1, 1))):
            if key in dist and dist[key] < best[ij]:
                best[ij] = dist[key]
    g00 = 2 if G.m else INF
    return GirthVector(g00, best["01"], best["10"], best["11"])


def negative_girth(G) -> float:
    gv = girth_vector(G)
    return min(gv.g10, gv.g11)


def bipartition(G) -> Optional[tuple[frozenset, frozenset]]:
    """Two-colouring of the underlying graph; side A holds each component's
    smallest vertex."""
    side = [-1] * G.n
    for r in range(G.n):
        if side[r] >= 0:
            continue
        side[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for y, _ in G.adjacency[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = frozenset(v for v in range(G.n) if side[v] == 0)
    return a, frozenset(range(G.n)) - a


def potential(G) -> int:
    return 4 * G.n - 3 * G.m


# -- maximum average degree ---------------------------------------------------

ENUMERATION_LIMIT = 20


def _max_density_enumerate(G) -> Fraction:
    n = G.n
    nbr = [0] * n
    for u, v, _ in G.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    # edges[S] built one top bit at a time: edges[S | 1<<k] = edges[S] + |N(k) & S|
    counts = np.zeros(1, dtype=np.int64)
    for k in range(n):
        low = np.arange(1 << k, dtype=np.int64)
        counts = np.concatenate([counts, counts + np.bitwise_count(low & nbr[k])])
    sizes = np.bitwise_count(np.arange(1 << n, dtype=np.int64))
    best = Fraction(0)
    for size in range(1, n + 1):
        top = int(counts[sizes == size].max())
        if Fraction(top, size) > best:
            best = Fraction(top, size)
    return best


def _max_density_flow(G) -> Fraction:
    """Dinkelbach iteration; each step is a max-closure min cut with integer
    capacities ``q`` per edge node and ``p`` per vertex for density ``p/q``."""
    import networkx as nx

    pairs = G.underlying_pairs()
    best = Fraction(len(pairs), G.n)
    while True:
        p, q = best.numerator, best.denominator
        net = nx.DiGraph()
        for i, (u, v) in enumerate(pairs):
            net.add_edge("s", ("e", i), capacity=q)
            net.add_edge(("e", i), ("v", u))
            net.add_edge(("e", i), ("v", v))
        for v in range(G.n):
            net.add_edge(("v", v), "t", capacity=p)
        cut, (src_side, _) = nx.minimum_cut(net, "s", "t")
        gain = q * len(pairs) - cut
        if gain <= 0:
            return best
        verts = {x[1] for x in src_side if isinstance(x, tuple) and x[0] == "v"}
        inner = sum(1 for u, v in pairs if u in verts and v in verts)
        best = Fraction(inner, len(verts))


def max_average_degree(G, method: str = "auto") -> Fraction:
    """Exact ``max 2|E(H)|/|V(H)|`` over nonempty subgraphs H."""
    if G.n == 0:
        raise EmptyGraph("max average degree of the empty graph")
    if not G.m:
        return Fraction(0)
    if method == "auto":
        method = "enumerate" if G.n <= ENUMERATION_LIMIT else "flow"
    if method == "enumerate":
        return 2 * _max_density_enumerate(G)
    if method == "flow":
        return 2 * _max_density_flow(G)
    raise ValueError(f"unknown method {method!r}")


def average_degree(G) -> Fraction:
    if G.n == 0:
        raise EmptyGraph("average degree of the empty graph")
    return Fraction(2 * G.m, G.n)


from .canon import switching_isomorphic  # noqa: E402,F401  (re-exported)
