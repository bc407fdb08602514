"""Named signed graphs and the operations that build critical graphs.

Gallery ids are short strings: ``gamma``, ``what``, ``omega1``, ``omega2``,
``theta1``, ``theta2``, ``dualpath``, ``cminus:<l>``, ``cplus:<l>``,
``g2k1:<k>`` and ``gprime:<k>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .criticality import is_critical_C4
from .errors import (
    BadParameter,
    CreatesNegativeDigon,
    InternalAssertion,
    PreconditionFailed,
    SimplicityViolated,
)
from .homsolver import hom_C4
from .sgraph import SignedGraph, SignedMultiGraph, switch

P, N = 1, -1


def cycle(l: int, sign: int = P) -> SignedGraph:
    """Cycle ``0 1 .. l-1``; every edge positive, except that ``sign`` sits on
    the closing edge ``(0, l-1)``."""
    if l < 3:
        raise BadParameter("a simple cycle needs length at least 3")
    return SignedGraph(l, [(i, i + 1, P) for i in range(l - 1)] + [(0, l - 1, sign)])


def complete(n: int) -> SignedGraph:
    return SignedGraph(n, [(u, v, P) for u in range(n) for v in range(u + 1, n)])


def _bip(nx: int, pos, neg) -> SignedGraph:
    # x_i -> i, y_j -> nx + j
    return SignedGraph(nx + 4, [(x, nx + y, P) for x, y in pos] + [(x, nx + y, N) for x, y in neg])


# a b c d p q = 0..5: K4 with ab subdivided by p and cd by q
GAMMA = SignedGraph(6, [(0, 2, P), (0, 3, P), (1, 2, P), (1, 3, P),
                        (0, 4, P), (1, 4, N), (2, 5, P), (3, 5, N)])

# x1..x4 = 0..3, y1..y3 = 4..6
W_HAT = SignedGraph(7, [(0, 4, P), (0, 5, P), (0, 6, P), (1, 5, P), (2, 6, P), (3, 4, P),
                        (1, 4, N), (2, 5, N), (3, 6, N)])

# x0..x4 = 0..4, y0..y3 = 5..8
OMEGA1 = _bip(5, [(0, 0), (1, 0), (1, 1), (1, 2), (2, 1), (3, 2), (3, 3), (4, 1), (4, 3)],
              [(2, 2), (0, 3)])
OMEGA2 = _bip(5, [(0, 0), (0, 1), (1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3)],
              [(4, 0), (1, 2)])

# underlying graphs, all positive; x0..x4 and x1..x6 renumbered from 0
THETA1 = SignedGraph(5, [(2, 1, P), (1, 4, P), (2, 3, P), (3, 4, P), (2, 0, P), (0, 4, P)])
THETA2 = SignedGraph(6, [(a - 1, b - 1, P) for a, b in
                         [(3, 6), (1, 2), (4, 5), (2, 3), (1, 6), (3, 4), (5, 6)]])

DUAL_PATH = SignedGraph(4, [(0, 1, N), (1, 2, P), (2, 3, N)])


@dataclass(frozen=True)
class GalleryId:
    tag: str
    param: Optional[int] = None

    FIXED = ("gamma", "what", "omega1", "omega2", "theta1", "theta2", "dualpath")
    PARAM = ("cminus", "cplus", "g2k1", "gprime")

    @classmethod
    def parse(cls, text: str) -> "GalleryId":
        tag, _, arg = text.strip().lower().partition(":")
        if tag in cls.FIXED and not arg:
            return cls(tag)
        if tag in cls.PARAM and arg:
            try:
                return cls(tag, int(arg))
            except ValueError:
                pass
        raise BadParameter(f"unknown gallery id {text!r}")

    def __str__(self) -> str:
        return self.tag if self.param is None else f"{self.tag}:{self.param}"


def gallery(gid) -> SignedGraph:
    if isinstance(gid, str):
        gid = GalleryId.parse(gid)
    fixed = {"gamma": GAMMA, "what": W_HAT, "omega1": OMEGA1, "omega2": OMEGA2,
             "theta1": THETA1, "theta2": THETA2, "dualpath": DUAL_PATH}
    if gid.tag in fixed:
        return fixed[gid.tag]
    p = gid.param
    if gid.tag == "cminus":
        return cycle(p, N)
    if gid.tag == "cplus":
        return cycle(p, P)
    if p is None or p < 1:
        raise BadParameter(f"{gid.tag} needs k >= 1")
    if gid.tag == "g2k1":
        return g2k1(p)
    if gid.tag == "gprime":
        return g_prime(p)
    raise BadParameter(f"unknown gallery id {gid}")


# -- elementary operations ------------------------------------------------------

def t_subdivide(G, l: int) -> SignedGraph:
    """Replace every edge by a path of ``l`` edges whose sign is the negated
    edge sign. The negative sign (if any) goes on the first path edge, the
    one at the smaller endpoint. New vertices are appended edge by edge."""
    if l < 1:
        raise BadParameter("path length must be at least 1")
    if l == 1:
        if isinstance(G, SignedMultiGraph) and not G.is_simple():
            raise SimplicityViolated("parallel edges stay parallel when l = 1")
        return SignedGraph(G.n, [(u, v, -s) for u, v, s in G.edges])
    edges = []
    nxt = G.n
    for u, v, s in G.edges:
        path = [u] + list(range(nxt, nxt + l - 1)) + [v]
        nxt += l - 1
        edges.append((path[0], path[1], -s))
        edges += [(a, b, P) for a, b in zip(path[1:], path[2:])]
    return SignedGraph(nxt, edges)


def tilde(G) -> SignedMultiGraph:
    """Each edge of the underlying graph becomes a positive/negative pair."""
    return SignedMultiGraph(G.n, [(u, v, s) for u, v in G.underlying_pairs() for s in (P, N)])


def p2_extend(H: SignedGraph, a: int, b: int, s1: int, s2: int) -> SignedGraph:
    H._check_vertex(a)
    H._check_vertex(b)
    if a == b:
        raise BadParameter("the two ends must differ")
    return H.add_vertex([(a, s1), (b, s2)])


def _merge(n: int, edges) -> SignedGraph:
    """Collapse equal parallel edges; opposite parallel signs are an error."""
    seen: dict[tuple[int, int], int] = {}
    for u, v, s in edges:
        key = (min(u, v), max(u, v))
        if key in seen and seen[key] != s:
            raise CreatesNegativeDigon(f"edges {key} of both signs")
        seen[key] = s
    return SignedGraph(n, [(u, v, s) for (u, v), s in seen.items()])


def identify(G: SignedGraph, a: int, b: int) -> SignedGraph:
    """Merge ``b`` into ``a``; vertices above ``b`` shift down by one."""
    G._check_vertex(a)
    G._check_vertex(b)
    if a == b or G.has_edge(a, b):
        raise BadParameter("identified vertices must be distinct and non-adjacent")

    def f(x):
        x = a if x == b else x
        return x - 1 if x > b else x

    return _merge(G.n - 1, [(f(u), f(v), s) for u, v, s in G.edges])


# -- combining critical graphs --------------------------------------------------

def _require_critical(G, what: str) -> None:
    verdict = is_critical_C4(G)
    if not verdict.is_critical:
        raise PreconditionFailed(f"{what} is not C4-critical: {verdict}")


def _splice_side(G: SignedGraph, x: int) -> tuple[SignedGraph, int, int]:
    """Switch G so the 2-path through ``x`` is negative; return the switched
    graph and the two neighbours of ``x``."""
    x1, x2 = sorted(G.neighbors(x))
    rest = G.delete_vertices([x])
    verdict = hom_C4(rest)
    if not verdict.mapped:
        raise PreconditionFailed(f"deleting vertex {x} leaves no homomorphism")
    lift = [v if v < x else v + 1 for v in range(rest.n)]
    H = switch(G, [lift[v] for v in verdict.hom.switch])
    m = verdict.hom.map
    if m[x1 if x1 < x else x1 - 1] != m[x2 if x2 < x else x2 - 1]:
        raise InternalAssertion("the two neighbours were not sent to the same vertex")
    if H.sign(x1, x) * H.sign(x, x2) != N:
        raise InternalAssertion(f"path {x1}-{x}-{x2} is positive after switching")
    return H, x1, x2


def splice_F(G1: SignedGraph, u: int, G2: SignedGraph, v: int, verify: bool = True) -> SignedGraph:
    """Remove a degree-2 vertex from each graph and reconnect the loose ends
    with one positive and one negative edge. G2's vertices follow G1's."""
    for G, x, name in ((G1, u, "G1"), (G2, v, "G2")):
        G._check_vertex(x)
        if G.degree(x) != 2:
            raise PreconditionFailed(f"vertex {x} of {name} has degree {G.degree(x)}, not 2")
        if verify:
            _require_critical(G, name)
    H1, u1, u2 = _splice_side(G1, u)
    H2, v1, v2 = _splice_side(G2, v)
    A = H1.delete_vertices([u])
    B = H2.delete_vertices([v])
    fa = lambda y: y if y < u else y - 1  # noqa: E731
    fb = lambda y: A.n + (y if y < v else y - 1)  # noqa: E731
    edges = list(A.edges) + [(A.n + a, A.n + b, s) for a, b, s in B.edges]
    edges +=[(fa(u1), fb(v1), P), (fa(u2), fb(v2), N)]
    return SignedGraph(A.n + B.n, edges)


def hajos_H(G1: SignedGraph, e1, G2: SignedGraph, e2, verify: bool = True) -> SignedGraph:
    """Delete the positive edge ``e1 = x1y1`` of G1 and the negative edge
    ``e2 = x2y2`` of G2, then glue x1 to x2 and y1 to y2. G2's other vertices
    are appended after G1's in their original order."""
    x1, y1 = e1[0], e1[1]
    x2, y2 = e2[0], e2[1]
    if not G1.has_edge(x1, y1) or G1.sign(x1, y1) != P:
        raise PreconditionFailed(f"{(x1, y1)} is not a positive edge of G1")
    if not G2.has_edge(x2, y2) or G2.sign(x2, y2) != N:
        raise PreconditionFailed(f"{(x2, y2)} is not a negative edge of G2")
    if verify:
        _require_critical(G1, "G1")
        _require_critical(G2, "G2")
    image = {x2: x1, y2: y1}
    nxt = G1.n
    for w in range(G2.n):
        if w not in image:
            image[w] = nxt
            nxt += 1
    edges = [e for e in G1.edges if {e[0], e[1]} != {x1, y1}]
    edges += [(image[a], image[b], s) for a, b, s in G2.edges if {a, b} != {x2, y2}]
    return _merge(nxt, edges)


def first_edge(G: SignedGraph, sign: int) -> tuple[int, int]:
    for u, v, s in G.edges:
        if s == sign:
            return (u, v)
    raise PreconditionFailed("no edge of the requested sign")


def hajos(G1: SignedGraph, G2: SignedGraph, verify: bool = True) -> SignedGraph:
    """:func:`hajos_H` on the first positive edge of G1 and the first negative
    edge of G2."""
    return hajos_H(G1, first_edge(G1, P), G2, first_edge(G2, N), verify)


# -- families -------------------------------------------------------------------

def g2k1(k: int) -> SignedGraph:
    """T2 applied to the doubled odd cycle of length 2k+1."""
    if k < 1:
        raise BadParameter("k must be at least 1")
    return t_subdivide(tilde(cycle(2 * k + 1)), 2)


def g_prime_pair(G: SignedGraph) -> tuple[int, int]:
    """First pair of degree-2 vertices at distance two whose common
    neighbour joins both of them positively and whose identification keeps
    the graph simple."""
    deg = G.degrees()
    two = [v for v in range(G.n) if deg[v] == 2]
    for i, a in enumerate(two):
        for b in two[i + 1:]:
            for w in sorted(G.neighbors(a) & G.neighbors(b)):
                if G.sign(w, a) == P and G.sign(w, b) == P:
                    try:
                        identify(G, a, b)
                    except CreatesNegativeDigon:
                        continue
                    return a, b
    raise PreconditionFailed("no identifiable pair")


def g_prime(k: int) -> SignedGraph:
    G = g2k1(k)
    a, b = g_prime_pair(G)
    return identify(G, a, b)


def _cube_family(n: int) -> SignedGraph:
    # n = 3(2k+1)
    return g2k1((n // 3 - 1) // 2)


def build_critical(n: int, verify: bool = False) -> SignedGraph:
    """A C4-critical signed graph on ``n >= 9`` vertices with ceil(4n/3) or
    ceil(4n/3)+1 edges.

    Orders 9..12 use the small constructions; larger orders combine one
    member of the odd-cycle family with at most two small critical graphs,
    chosen by ``n mod 6`` so that the edge excess stays inside the window.
    ``verify`` re-checks criticality of every Hajós input (slow).
    """
    if n < 9:
        raise BadParameter("critical constructions start at 9 vertices")
    r = n % 6
    if n == 10:
        return hajos(GAMMA, GAMMA, verify)
    if n == 11:
        return hajos(GAMMA, W_HAT, verify)
    if n == 12:
        return splice_F(W_HAT, 1, W_HAT, 1, verify)
    if r == 3:
        return _cube_family(n)
    if r == 1:
        return hajos(_cube_family(n - 4), GAMMA, verify)
    if r == 2:
        return hajos(_cube_family(n - 5), W_HAT, verify)
    if r == 4:
        return hajos(_cube_family(n - 7), _cube_family(9), verify)
    if r == 5:
        return hajos(hajos(_cube_family(n - 8), GAMMA, verify), GAMMA, verify)
    return hajos(hajos(_cube_family(n - 9), GAMMA, verify), W_HAT, verify)
