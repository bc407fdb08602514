"""Partition refinement, canonical labelling and switching isomorphism.

Everything here works on small graphs (tens of vertices). The canonical
labelling explores the whole individualise-refine tree without automorphism
pruning, which keeps it short and obviously label-invariant; the leaves whose
certificate is optimal give the full automorphism group for free.
"""

from __future__ import annotations

from collections import deque
from typing import Optional


def _masks(n: int, pairs) -> list[int]:
    nbr = [0] * n
    for u, v in pairs:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def refine(nbr: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by neighbour counts into each splitter cell; sub-cells are
    ordered by count so the result depends only on the graph structure.
    """
    cells = [list(c) for c in cells]
    while True:
        split = False
        for w in range(len(cells)):
            wmask = 0
            for x in cells[w]:
                wmask |= 1 << x
            new = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for x in cell:
                    groups.setdefault((nbr[x] & wmask).bit_count(), []).append(x)
                if len(groups) > 1:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
                else:
                    new.append(cell)
            if split:
                cells = new
                break
        if not split:
            return cells


def _leaves(nbr, cells, out):
    cells = refine(nbr, cells)
    target = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (target is None or len(c) < len(cells[target])):
            target = i
    if target is None:
        out.append([c[0] for c in cells])
        return
    cell = cells[target]
    for v in cell:
        rest = [x for x in cell if x != v]
        _leaves(nbr, cells[:target] + [[v], rest] + cells[target + 1:], out)


def _certificate(pairs, lab) -> tuple:
    return tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in pairs))


def canonical_labeling(n: int, pairs, colors: Optional[list[int]] = None):
    """Return ``(lab, certificate, automorphisms)`` for an unsigned graph.

    ``lab[v]`` is the canonical position of ``v``; ``certificate`` is the
    sorted relabelled edge list (equal for isomorphic inputs). Optional
    ``colors`` restrict the labelling to colour-preserving maps.
    """
    pairs = list(pairs)
    nbr = _masks(n, pairs)
    if n == 0:
        return [], (), [()]
    if colors is None:
        cells = [list(range(n))]
    else:
        cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    orders: list[list[int]] = []
    _leaves(nbr, cells, orders)
    best = None
    best_labs = []
    for order in orders:
        lab = [0] * n
        for pos, v in enumerate(order):
            lab[v] = pos
        cert = _certificate(pairs, lab)
        if best is None or cert < best:
            best, best_labs = cert, [lab]
        elif cert == best:
            best_labs.append(lab)
    lab0 = best_labs[0]
    inv0 = [0] * n
    for v, p in enumerate(lab0):
        inv0[p] = v
    autos = sorted({tuple(inv0[lab[v]] for v in range(n)) for lab in best_labs})
    return lab0, best, autos


def automorphisms(G) -> list[tuple[int, ...]]:
    """All automorphisms of the underlying graph of G."""
    return canonical_labeling(G.n, G.underlying_pairs())[2]


def switching_isomorphic(G1, G2) -> Optional[tuple[int, ...]]:
    """A bijection ``f`` with ``G1.relabel(f)`` switching equivalent to G2.

    Backtracking over vertices of G1 in BFS order, candidates pruned by a joint
    equitable refinement of both graphs. The product signature is labelled
    incrementally, so a partial map is abandoned as soon as it forces an
    unbalanced cycle.
    """
    n = G1.n
    if n != G2.n or G1.m != G2.m or sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    if n == 0:
        return ()
    pairs = [(u, v) for u, v, _ in G1.edges] + [(u + n, v + n) for u, v, _ in G2.edges]
    joint = _masks(2 * n, pairs)
    cells = refine(joint, [list(range(2 * n))])
    color = [0] * (2 * n)
    for i, c in enumerate(cells):
        if sum(1 for x in c if x < n) * 2 != len(c):
            return None
        for x in c:
            color[x] = i
    nbr2 = _masks(n, G2.underlying_pairs())

    # BFS order per component, each started at a vertex of the rarest colour
    size = {i: len(c) for i, c in enumerate(cells)}
    order, seen = [], [False] * n
    for r in sorted(range(n), key=lambda v: (size[color[v]], v)):
        if seen[r]:
            continue
        seen[r] = True
        queue = deque([r])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(G1.neighbor_sets[x]):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)

    f = [-1] * n
    label = [0] * n
    used = [False] * n
    adj1 = G1.adjacency

    def extend(k: int, image_mask: int) -> bool:
        if k == n:
            return True
        v = order[k]
        want = 0
        mapped = []
        for u, s in adj1[v]:
            if f[u] >= 0:
                want |= 1 << f[u]
                mapped.append((u, s))
        for w in range(n):
            if used[w] or color[w + n] != color[v]:
                continue
            if nbr2[w] & image_mask != want:
                continue
            lv = 0
            ok = True
            for u, s in mapped:
                need = label[u] * s * G2.sign(f[u], w)
                if lv == 0:
                    lv = need
                elif lv != need:
                    ok = False
                    break
            if not ok:
                continue
            f[v], label[v], used[w] = w, lv or 1, True
            if extend(k + 1, image_mask | (1 << w)):
                return True
            f[v], used[w] = -1, False
        return False

    if extend(0, 0):
        return tuple(f)
    return None


def switching_copy(H, G) -> Optional[tuple[int, ...]]:
    """An injection ``f`` of H into G (not necessarily induced) whose image,
    restricted to the image edges, is switching equivalent to H; or None.

    Same incremental product-signature labelling as :func:`switching_isomorphic`,
    here per component of H with the first vertex relabelled freely.
    """
    if H.n > G.n or H.m > G.m:
        return None
    degG = G.degrees()
    degH = H.degrees()
    order, seen = [], [False] * H.n
    for r in sorted(range(H.n), key=lambda v: (-degH[v], v)):
        if seen[r]:
            continue
        seen[r] = True
        queue = deque([r])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(H.neighbor_sets[x], key=lambda y: (-degH[y], y)):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    f = [-1] * H.n
    label = [0] * H.n
    used = [False] * G.n
    nbrG = G.neighbor_sets

    def extend(k: int) -> bool:
        if k == H.n:
            return True
        v = order[k]
        mapped = [(u, s) for u, s in H.adjacency[v] if f[u] >= 0]
        if mapped:
            pool = nbrG[f[mapped[0][0]]]
        else:
            pool = range(G.n)
        for w in sorted(pool):
            if used[w] or degG[w] < degH[v]:
                continue
            lv = 0
            ok = True
            for u, s in mapped:
                if w not in nbrG[f[u]]:
                    ok = False
                    break
                need = label[u] * s * G.sign(f[u], w)
                if lv == 0:
                    lv = need
                elif lv != need:
                    ok = False
                    break
            if not ok:
                continue
            f[v], label[v], used[w] = w, lv or 1, True
            if extend(k + 1):
                return True
            f[v], used[w] = -1, False
        return False

    return tuple(f) if extend(0) else None
