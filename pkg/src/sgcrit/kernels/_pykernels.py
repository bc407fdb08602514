"""Pure-Python search kernels.

Reference implementations; ``_ckernels.pyx`` mirrors them step for step so
both backends explore the same tree and report the same node counts.
"""

import sys

NAME = "python"


def c4_switch_search(n, eu, ev, eneg, order):
    """Find switch bits so that no positive edge joins two vertices that both
    carry a negative edge (the (-,+,-) path pattern).

    ``eneg[i]`` is 1 when edge ``(eu[i], ev[i])`` is negative. ``order`` lists
    every vertex; it is the branching order. The first branching decision
    only tries bit 0 (switching everything is the same map).

    Returns ``(bits or None, nodes)``.
    """
    adj = [[] for _ in range(n)]
    for i in range(len(eu)):
        adj[eu[i]].append((ev[i], eneg[i]))
        adj[ev[i]].append((eu[i], eneg[i]))
    bits = [-1] * n
    negc = [0] * n
    trail = []
    nodes = [0]

    def check(z, queue):
        # every decided positive edge zw: not both endpoints negative-incident
        bz = bits[z]
        for w, ng in adj[z]:
            bw = bits[w]
            if bw < 0 or (ng ^ bz ^ bw):
                continue
            if negc[z] and negc[w]:
                return False
            if negc[z]:
                for t, ng2 in adj[w]:
                    if bits[t] < 0:
                        queue.append((t, ng2 ^ bw))
            if negc[w]:
                for t, ng2 in adj[z]:
                    if bits[t] < 0:
                        queue.append((t, ng2 ^ bz))
        return True

    def propagate(v, b):
        queue = [(v, b)]
        while queue:
            x, bx = queue.pop()
            if bits[x] >= 0:
                if bits[x] != bx:
                    return False
                continue
            bits[x] = bx
            trail.append(x)
            touched = [x]
            for y, ng in adj[x]:
                if bits[y] >= 0 and (ng ^ bx ^ bits[y]):
                    negc[x] += 1
                    negc[y] += 1
                    if negc[y] == 1:
                        touched.append(y)
            for z in touched:
                if not check(z, queue):
                    return False
        return True

    def undo(mark):
        while len(trail) > mark:
            x = trail.pop()
            bx = bits[x]
            for y, ng in adj[x]:
                if bits[y] >= 0 and (ng ^ bx ^ bits[y]):
                    negc[x] -= 1
                    negc[y] -= 1
            bits[x] = -1

    def search(k, first):
        while k < n and bits[order[k]] >= 0:
            k += 1
        if k == n:
            return True
        v = order[k]
        for b in ((0,) if first else (0, 1)):
            nodes[0] += 1
            mark = len(trail)
            if propagate(v, b) and search(k + 1, False):
                return True
            undo(mark)
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    found = search(0, True)
    return (list(bits) if found else None), nodes[0]


def hom_search(n, eu, ev, eneg, compat, domains, budget):
    """Maintained-arc-consistency search for a signed homomorphism.

    Variables are source vertices; a value is a state ``2*t + b`` (target
    vertex ``t``, switch bit ``b``). ``compat[neg][a]`` is the bitmask of
    states compatible with state ``a`` across an edge whose sign bit is
    ``neg``. ``domains`` are the initial bitmasks. Branching picks the
    smallest domain (ties: larger degree, then smaller id) and tries values
    in increasing order; each tried value counts as one node.

    Returns ``(status, states, nodes)`` with status 1 = found, 0 = exhausted,
    -1 = budget exceeded.
    """
    adj = [[] for _ in range(n)]
    for i in range(len(eu)):
        adj[eu[i]].append((ev[i], eneg[i]))
        adj[ev[i]].append((eu[i], eneg[i]))
    deg = [len(a) for a in adj]
    dom = list(domains)
    nodes = [0]

    def support(mask, ng):
        table = compat[ng]
        out = 0
        while mask:
            low = mask & -mask
            out |= table[low.bit_length() - 1]
            mask ^= low
        return out

    def propagate(queue):
        while queue:
            x = queue.pop()
            for y, ng in adj[x]:
                new = dom[y] & support(dom[x], ng)
                if new != dom[y]:
                    if not new:
                        return False
                    dom[y] = new
                    queue.append(y)
        return True

    class Budget(Exception):
        pass

    def search():
        best, bsize, bdeg = -1, 0, 0
        for v in range(n):
            size = dom[v].bit_count()
            if size > 1 and (best < 0 or size < bsize or (size == bsize and deg[v] > bdeg)):
                best, bsize, bdeg = v, size, deg[v]
        if best < 0:
            return True
        mask = dom[best]
        while mask:
            low = mask & -mask
            mask ^= low
            nodes[0] += 1
            if nodes[0] > budget:
                raise Budget
            saved = dom[:]
            dom[best] = low
            if propagate([best]) and search():
                return True
            dom[:] = saved
        return False

    if any(d == 0 for d in dom) or not propagate(list(range(n))):
        return 0, None, 0
    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = search()
    except Budget:
        return -1, None, nodes[0]
    if not found:
        return 0, None, nodes[0]
    return 1, [d.bit_length() - 1 for d in dom], nodes[0]
