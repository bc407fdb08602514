"""Homomorphisms of signed graphs, with certificates.

A homomorphism is a pair ``(switch, map)``: switch the source at ``switch``,
then ``map`` must send every edge onto a target edge of the same sign. The
target ``C4`` below is the negative 4-cycle with vertices ``u1..u4 = 0..3``,
edges ``u1u2, u2u3, u3u4`` positive and ``u4u1`` negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import kernels
from .errors import (
    BadParameter,
    BudgetExceeded,
    InternalAssertion,
    NotBipartite,
    SimplicityViolated,
    VertexOutOfRange,
)
from .sgraph import (
    SignedGraph,
    SignedMultiGraph,
    bipartition,
    girth_vector,
    switch,
)

U1, U2, U3, U4 = 0, 1, 2, 3
C4 = SignedGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, -1)))

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """``switch`` is the set of switched source vertices, ``map[v]`` the image
    of ``v``. Complementing the switch set gives the same homomorphism."""

    switch: frozenset
    map: tuple

    def canonical(self) -> "Homomorphism":
        if 0 in self.switch:
            return Homomorphism(frozenset(range(len(self.map))) - self.switch, self.map)
        return self

    def __eq__(self, other):
        if not isinstance(other, Homomorphism):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.switch == b.switch and a.map == b.map

    def __hash__(self):
        c = self.canonical()
        return hash((c.switch, c.map))

    def to_json(self) -> dict:
        return {"verdict": "mapped", "switch": sorted(self.switch), "map": list(self.map)}


@dataclass(frozen=True)
class SpWitness:
    """A path ``e1 e2 e3`` with signs (-, +, -), edges as vertex pairs."""

    path: tuple

    def to_json(self) -> dict:
        return {"verdict": "nohom", "witness": {"path": [list(e) for e in self.path]}}


@dataclass(frozen=True)
class GirthViolation:
    ij: str

    def to_json(self) -> dict:
        return {"verdict": "nohom", "reason": "girth", "class": self.ij}


@dataclass(frozen=True)
class ExhaustedSearch:
    def to_json(self) -> dict:
        return {"verdict": "nohom", "reason": "exhausted"}


@dataclass(frozen=True)
class Mapped:
    hom: Homomorphism
    mapped = True

    def to_json(self) -> dict:
        return self.hom.to_json()


@dataclass(frozen=True)
class NoHom:
    reason: Union[SpWitness, GirthViolation, ExhaustedSearch]
    mapped = False

    def to_json(self) -> dict:
        return self.reason.to_json()


HomVerdict = Union[Mapped, NoHom]


def verdict_from_json(data: dict) -> HomVerdict:
    if data["verdict"] == "mapped":
        return Mapped(Homomorphism(frozenset(data["switch"]), tuple(data["map"])))
    if "witness" in data:
        return NoHom(SpWitness(tuple(tuple(e) for e in data["witness"]["path"])))
    if data.get("reason") == "girth":
        return NoHom(GirthViolation(data["class"]))
    return NoHom(ExhaustedSearch())


def verify_hom(G, H: SignedGraph, phi: Homomorphism) -> bool:
    if len(phi.map) != G.n:
        raise VertexOutOfRange("map length differs from the source order")
    for t in phi.map:
        if not 0 <= t < H.n:
            raise VertexOutOfRange(f"image {t} outside target")
    for v in phi.switch:
        G._check_vertex(v)
    for u, v, s in switch(G, phi.switch).edges:
        a, b = phi.map[u], phi.map[v]
        if a == b or not H.has_edge(a, b) or H.sign(a, b) != s:
            return False
    return True


def _as_simple(G) -> SignedGraph:
    if isinstance(G, SignedMultiGraph):
        if not G.is_simple():
            raise SimplicityViolated("parallel edges present")
        return G.to_simple()
    return G


def find_sp_witness(G: SignedGraph) -> Optional[SpWitness]:
    """First (-, +, -) path in canonical edge order, or None."""
    G = _as_simple(G)
    neg_nbr = [min((w for w, s in a if s < 0), default=-1) for a in G.adjacency]
    for u, v, s in G.edges:
        if s > 0 and neg_nbr[u] >= 0 and neg_nbr[v] >= 0:
            return SpWitness(((neg_nbr[u], u), (u, v), (v, neg_nbr[v])))
    return None


def sp_hom_C4(G) -> HomVerdict:
    """Edge-sign preserving homomorphism to C4 for a bipartite signed graph.

    Without a (-, +, -) path the map is: side A with a negative edge to u1,
    rest of A to u3, side B with a negative edge to u4, rest of B to u2
    (side A holds each component's smallest vertex).
    """
    G = _as_simple(G)
    parts = bipartition(G)
    if parts is None:
        raise NotBipartite("sp_hom_C4 needs a bipartite graph")
    witness = find_sp_witness(G)
    if witness is not None:
        return NoHom(witness)
    side_a = parts[0]
    has_neg = [any(s < 0 for _, s in a) for a in G.adjacency]
    image = []
    for v in range(G.n):
        if v in side_a:
            image.append(U1 if has_neg[v] else U3)
        else:
            image.append(U4 if has_neg[v] else U2)
    return Mapped(Homomorphism(frozenset(), tuple(image)))


def _local(G, comp):
    pos = {v: i for i, v in enumerate(comp)}
    eu, ev, eneg = [], [], []
    for u, v, s in G.edges:
        if u in pos:
            eu.append(pos[u])
            ev.append(pos[v])
            eneg.append(1 if s < 0 else 0)
    return pos, eu, ev, eneg


def _compat_tables(H: SignedGraph):
    ns = 2 * H.n
    compat = [[0] * ns, [0] * ns]
    for ng in (0, 1):
        for t in range(H.n):
            for ba in (0, 1):
                mask = 0
                for t2, sh in H.adjacency[t]:
                    hneg = 1 if sh < 0 else 0
                    mask |= 1 << (2 * t2 + (ba ^ ng ^ hneg))
                compat[ng][2 * t + ba] = mask
    return compat


def hom_to_target(G, H: SignedGraph, budget: int = DEFAULT_BUDGET,
                  stats: Optional[dict] = None) -> HomVerdict:
    """Complete constraint search for a homomorphism ``G -> H``.

    Each source vertex takes a state (switch bit, target vertex); the first
    vertex of every component only tries unswitched states. Arc consistency
    is maintained after every choice. Raises :class:`BudgetExceeded` when
    more than ``budget`` values are tried, so a NoHom is always exhaustive.
    """
    if H.n == 0:
        raise BadParameter("target must have at least one vertex")
    compat = _compat_tables(H)
    full = (1 << (2 * H.n)) - 1
    unswitched = sum(1 << (2 * t) for t in range(H.n))
    states = [0] * G.n
    nodes = 0
    for comp in G.components():
        if len(comp) == 1:
            continue
        pos, eu, ev, eneg = _local(G, comp)
        domains = [full] * len(comp)
        domains[0] = unswitched
        status, local, used = kernels.hom_search(
            len(comp), eu, ev, eneg, compat, domains, budget - nodes)
        nodes += used
        if status < 0:
            if stats is not None:
                stats["nodes"] = nodes
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        if status == 0:
            if stats is not None:
                stats["nodes"] = nodes
            return NoHom(ExhaustedSearch())
        for v, i in pos.items():
            states[v] = local[i]
    if stats is not None:
        stats["nodes"] = nodes
    hom = Homomorphism(frozenset(v for v in range(G.n) if states[v] & 1),
                       tuple(s >> 1 for s in states))
    return Mapped(hom)


C4_GIRTH = girth_vector(C4)


def hom_C4(G, stats: Optional[dict] = None) -> HomVerdict:
    """Decide ``G -> C4``.

    Girth conditions first (this catches non-bipartite inputs and negative
    digons), then a search over switch bits only, per component, branching on
    vertices by descending degree and forcing bits whenever a positive edge
    already has a negative edge at one end. A switching without a (-, +, -)
    path is turned into a map by :func:`sp_hom_C4`.
    """
    violated = girth_vector(G).first_violation(C4_GIRTH)
    if violated is not None:
        return NoHom(GirthViolation(violated))
    G = _as_simple(G)
    deg = G.degrees()
    switched = set()
    nodes = 0
    for comp in G.components():
        if len(comp) == 1:
            continue
        pos, eu, ev, eneg = _local(G, comp)
        order = sorted(range(len(comp)), key=lambda i: (-deg[comp[i]], comp[i]))
        bits, used = kernels.c4_switch_search(len(comp), eu, ev, eneg, order)
        nodes += used
        if bits is None:
            if stats is not None:
                stats["nodes"] = nodes
            return NoHom(ExhaustedSearch())
        switched.update(v for v, i in pos.items() if bits[i])
    if stats is not None:
        stats["nodes"] = nodes
    X = frozenset(switched)
    verdict = sp_hom_C4(switch(G, X))
    if not verdict.mapped:
        raise InternalAssertion(f"switch search left a (-,+,-) path: {verdict.reason}")
    return Mapped(Homomorphism(X, verdict.hom.map))
