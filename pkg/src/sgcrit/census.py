"""Exhaustive search for C4-critical signed bipartite graphs on few vertices.

Underlying graphs come from vertex extension: every connected graph on n
vertices has a vertex whose removal keeps it connected, so extending each
connected graph on n-1 vertices by a new vertex with every nonempty
neighbourhood (inside one colour class, for bipartite graphs) and keeping one
representative per canonical form reaches every class exactly once.

Signatures are handled up to switching by fixing a spanning tree positive:
a switching class is then a sign vector on the non-tree edges (one bit per
fundamental cycle). Automorphisms act on those vectors linearly over GF(2),
so classes up to switching and automorphism are orbits of bit vectors.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import automorphisms, canonical_labeling, switching_isomorphic
from .criticality import degree2_on_positive_c4, is_2_connected, is_critical_C4, three_threads
from .errors import BadParameter, CapExceeded
from .sgio import dumps, loads
from .sgraph import SignedGraph, bipartition, potential

DEFAULT_CAP = 8
LONG_RUN_CAP = 9


def _canonical(n: int, pairs) -> tuple:
    return canonical_labeling(n, pairs)[1]


def _subsets(items) -> Iterator[tuple]:
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


@lru_cache(maxsize=None)
def connected_graphs(n: int, bipartite: bool = False) -> tuple[tuple, ...]:
    """Canonical edge lists of the connected (bipartite) graphs on ``n``
    vertices, one per isomorphism class, sorted."""
    if n < 1:
        raise BadParameter("n must be positive")
    if n == 1:
        return ((),)
    found = set()
    for pairs in connected_graphs(n - 1, bipartite):
        x = n - 1
        if bipartite:
            sides = bipartition(SignedGraph(x, [(u, v, 1) for u, v in pairs]))
            pools = [sorted(s) for s in sides if s]
        else:
            pools = [list(range(x))]
        for pool in pools:
            for nbrs in _subsets(pool):
                found.add(_canonical(n, list(pairs) + [(v, x) for v in nbrs]))
    return tuple(sorted(found))


def _tree_and_cycles(n: int, pairs) -> tuple[list[int], list[int]]:
    """Indices of BFS-tree edges and of the remaining (chord) edges."""
    index = {p: i for i, p in enumerate(pairs)}
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    queue = [0]
    tree = []
    for x in queue:
        for y in sorted(adj[x]):
            if not seen[y]:
                seen[y] = True
                queue.append(y)
                tree.append(index[(min(x, y), max(x, y))])
    chords = [i for i in range(len(pairs)) if i not in set(tree)]
    return sorted(tree), chords


def _fundamental_cycle(n: int, pairs, tree: list[int], chord: int) -> set[int]:
    """Edge indices of the cycle closed by ``chord`` in the tree."""
    adj = [[] for _ in range(n)]
    for i in tree:
        u, v = pairs[i]
        adj[u].append((v, i))
        adj[v].append((u, i))
    a, b = pairs[chord]
    parent = {a: None}
    queue = [a]
    for x in queue:
        for y, i in adj[x]:
            if y not in parent:
                parent[y] = (x, i)
                queue.append(y)
    cyc = {chord}
    x = b
    while parent[x] is not None:
        x, i = parent[x]
        cyc.add(i)
    return cyc


def signature_classes(n: int, pairs) -> list[SignedGraph]:
    """One signature per class up to switching and automorphism, for the
    graph with edge list ``pairs`` (connected, sorted, u < v)."""
    pairs = [tuple(p) for p in pairs]
    tree, chords = _tree_and_cycles(n, pairs)
    pos = {e: j for j, e in enumerate(chords)}
    edge_of = {p: i for i, p in enumerate(pairs)}
    cycles = [_fundamental_cycle(n, pairs, tree, c) for c in chords]
    # image of cycle j under an automorphism, written in the chord basis
    actions = []
    for perm in automorphisms(SignedGraph(n, [(u, v, 1) for u, v in pairs])):
        row = []
        for cyc in cycles:
            mask = 0
            for i in cyc:
                u, v = pairs[i]
                e = edge_of[(min(perm[u], perm[v]), max(perm[u], perm[v]))]
                if e in pos:
                    mask |= 1 << pos[e]
            row.append(mask)
        actions.append(row)
    seen = bytearray(1 << len(chords))
    out = []
    for x in range(1 << len(chords)):
        if seen[x]:
            continue
        for row in actions:
            y = 0
            for j, mask in enumerate(row):
                if (x & mask).bit_count() & 1:
                    y |= 1 << j
            seen[y] = 1
        signs = [1] * len(pairs)
        for j, c in enumerate(chords):
            if x >> j & 1:
                signs[c] = -1
        out.append(SignedGraph(n, [(u, v, s) for (u, v), s in zip(pairs, signs)]))
    return out


def _underlying_ok(G: SignedGraph) -> bool:
    return min(G.degrees()) >= 2 and is_2_connected(G) and not three_threads(G)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise BadParameter("n must be positive")
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the census cap {cap}")


def _graph_candidates(n: int, pairs, prefilter: bool) -> list[SignedGraph]:
    base = SignedGraph(n, [(u, v, 1) for u, v in pairs])
    if prefilter and not _underlying_ok(base):
        return []
    out = []
    for G in signature_classes(n, pairs):
        if prefilter and degree2_on_positive_c4(G):
            continue
        out.append(G)
    return out


def enumerate_candidates(n: int, cap: int = DEFAULT_CAP, prefilter: bool = True) -> Iterator[SignedGraph]:
    """Connected bipartite signed graphs on ``n`` vertices, one per class
    up to switching and isomorphism. With ``prefilter`` only graphs passing
    the proven necessary conditions for criticality are produced."""
    _check_cap(n, cap)
    for pairs in connected_graphs(n, True):
        yield from _graph_candidates(n, pairs, prefilter)


@dataclass
class CriticalClass:
    graph: SignedGraph
    edges: int
    potential: int

    def to_json(self) -> dict:
        return {"graph": dumps(self.graph), "edges": self.edges, "potential": self.potential}


@dataclass
class CensusReport:
    n: int
    underlying_graphs: int = 0
    classes_examined: int = 0
    critical_found: list = field(default_factory=list)
    exceptions: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "underlying_graphs": self.underlying_graphs,
            "classes_examined": self.classes_examined,
            "critical_found": [c.to_json() for c in self.critical_found],
            "exceptions": [c.to_json() for c in self.exceptions],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _census_one(args) -> tuple[int, list[tuple[str, int, int]]]:
    n, pairs, prefilter = args
    cands = _graph_candidates(n, pairs, prefilter)
    found = []
    for G in cands:
        if is_critical_C4(G).is_critical:
            found.append((dumps(G), G.m, potential(G)))
    return len(cands), found


def run_census(n: int, jobs: int = 1, cap: int = DEFAULT_CAP, prefilter: bool = True) -> CensusReport:
    """Certify every candidate on ``n`` vertices; the report is sorted by
    (edge count, serialized graph) and does not depend on ``jobs``."""
    _check_cap(n, cap)
    work = [(n, pairs, prefilter) for pairs in connected_graphs(n, True)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_census_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_census_one(w) for w in work]
    report = CensusReport(n, underlying_graphs=len(work))
    rows = []
    for count, found in results:
        report.classes_examined += count
        rows.extend(found)
    rows.sort(key=lambda r: (r[1], r[0]))
    for text, m, p in rows:
        entry = CriticalClass(loads(text), m, p)
        report.critical_found.append(entry)
        if 3 * m < 4 * n:
            report.exceptions.append(entry)
    return report


def is_w_hat(G: SignedGraph) -> bool:
    from .constructions import W_HAT
    return switching_isomorphic(G, W_HAT) is not None


def distinct_up_to_switching_isomorphism(graphs) -> bool:
    graphs = list(graphs)
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            if switching_isomorphic(a, b) is not None:
                return False
    return True


__all__ = [
    "CensusReport", "CriticalClass", "DEFAULT_CAP", "LONG_RUN_CAP", "connected_graphs",
    "distinct_up_to_switching_isomorphism", "enumerate_candidates", "is_w_hat", "run_census",
    "signature_classes",
]

