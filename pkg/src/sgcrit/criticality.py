"""C4-criticality certification and the structural necessary conditions.

A signed graph is C4-critical when it meets the girth conditions of the
negative 4-cycle, does not map to it, and every proper subgraph does. Only
edge deletions need checking: every proper subgraph lies inside some ``G - e``
(or is ``G`` minus isolated vertices, which never matters since an isolated
vertex maps anywhere), and homomorphisms restrict to subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .homsolver import C4_GIRTH, ExhaustedSearch, GirthViolation, Homomorphism, SpWitness, hom_C4
from .sgraph import Edge, girth_vector


@dataclass(frozen=True)
class Critical:
    is_critical = True

    def to_json(self) -> dict:
        return {"verdict": "critical"}


@dataclass(frozen=True)
class MapsToC4:
    hom: Homomorphism
    is_critical = False

    def to_json(self) -> dict:
        return {"verdict": "maps", "certificate": self.hom.to_json()}


@dataclass(frozen=True)
class FailsGirth:
    ij: str
    is_critical = False

    def to_json(self) -> dict:
        return {"verdict": "fails_girth", "class": self.ij}


@dataclass(frozen=True)
class NonCriticalEdge:
    """Deleting ``edge`` (at ``index``) still leaves no homomorphism."""

    index: int
    edge: Edge
    reason: Union[SpWitness, GirthViolation, ExhaustedSearch]
    is_critical = False

    def to_json(self) -> dict:
        u, v, _ = self.edge
        return {"verdict": "noncritical_edge", "edge": [u, v], "index": self.index,
                "certificate": self.reason.to_json()}


CriticalVerdict = Union[Critical, MapsToC4, FailsGirth, NonCriticalEdge]


def is_critical_C4(G) -> CriticalVerdict:
    violated = girth_vector(G).first_violation(C4_GIRTH)
    if violated is not None:
        return FailsGirth(violated)
    whole = hom_C4(G)
    if whole.mapped:
        return MapsToC4(whole.hom)
    for i, e in enumerate(G.edges):
        sub = hom_C4(G.delete_edge(i))
        if not sub.mapped:
            return NonCriticalEdge(i, e, sub.reason)
    return Critical()


# -- structural conditions ------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # "not_2_connected" | "three_thread" | "degree2_on_positive_c4"
    where: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "where": list(self.where)}


def cut_vertices(G) -> list[int]:
    out = []
    base = len(G.components())
    for v in range(G.n):
        rest = G.delete_vertices([v])
        # removing an isolated vertex lowers the count; anything else raising it is a cut
        if len(rest.components()) > base - (1 if G.degree(v) == 0 else 0):
            out.append(v)
    return out


def is_2_connected(G) -> bool:
    return G.n >= 3 and G.is_connected() and not cut_vertices(G)


def three_threads(G) -> list[tuple[int, int, int, int]]:
    """Paths ``a x y b`` with ``deg x = deg y = 2``."""
    deg = G.degrees()
    out = []
    for x, y, _ in G.edges:
        if deg[x] == 2 and deg[y] == 2:
            (a,) = G.neighbors(x) - {y}
            (b,) = G.neighbors(y) - {x}
            if a != b:
                out.append((a, x, y, b))
    return out


def degree2_on_positive_c4(G) -> list[tuple[int, int, int, int]]:
    """4-cycles ``v a w b`` of positive sign through a degree-2 vertex ``v``."""
    out = []
    for v in range(G.n):
        if G.degree(v) != 2:
            continue
        a, b = sorted(G.neighbors(v))
        for w in sorted((G.neighbors(a) & G.neighbors(b)) - {v}):
            if G.sign(v, a) * G.sign(a, w) * G.sign(w, b) * G.sign(b, v) > 0:
                out.append((v, a, w, b))
    return out


def structural_check(G) -> list[Violation]:
    """Necessary conditions for criticality; an empty list proves nothing."""
    found = []
    if not is_2_connected(G):
        found.append(Violation("not_2_connected", tuple(cut_vertices(G))))
    found += [Violation("three_thread", t) for t in three_threads(G)]
    found += [Violation("degree2_on_positive_c4", c) for c in degree2_on_positive_c4(G)]
    return found


def degree3_with_two_degree2(G) -> list[int]:
    """Degree-3 vertices with two degree-2 neighbours.

    Informational only: this configuration is excluded just for a minimum
    counterexample to the density bound, and Ŵ itself has it.
    """
    deg = G.degrees()
    return [v for v in range(G.n)
            if deg[v] == 3 and sum(1 for w in G.neighbors(v) if deg[w] == 2) >= 2]
