# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the search kernels in ``_pykernels``.

Same contracts, same branching order, same node counts.
"""

from libc.stdlib cimport malloc, free, calloc
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)
    int __builtin_clzll(unsigned long long)

NAME = "cython"


cdef class _Adj:
    cdef int n
    cdef int *start
    cdef int *nbr
    cdef int *neg

    def __cinit__(self, int n, eu, ev, eneg):
        cdef int m = len(eu)
        cdef int i, u, v
        cdef int *fill
        self.n = n
        self.start = <int *> calloc(n + 1, sizeof(int))
        self.nbr = <int *> malloc((2 * m + 1) * sizeof(int))
        self.neg = <int *> malloc((2 * m + 1) * sizeof(int))
        fill = <int *> calloc(n + 1, sizeof(int))
        for i in range(m):
            self.start[<int> eu[i] + 1] += 1
            self.start[<int> ev[i] + 1] += 1
        for i in range(n):
            self.start[i + 1] += self.start[i]
        # same per-vertex neighbour order as the Python lists (edge order)
        for i in range(m):
            u = eu[i]
            v = ev[i]
            self.nbr[self.start[u] + fill[u]] = v
            self.neg[self.start[u] + fill[u]] = eneg[i]
            fill[u] += 1
            self.nbr[self.start[v] + fill[v]] = u
            self.neg[self.start[v] + fill[v]] = eneg[i]
            fill[v] += 1
        free(fill)

    def __dealloc__(self):
        free(self.start)
        free(self.nbr)
        free(self.neg)


cdef class _C4Search:
    cdef _Adj g
    cdef int n
    cdef int *bits
    cdef int *negc
    cdef int *trail
    cdef int tlen
    cdef int *qv
    cdef int *qb
    cdef int qcap
    cdef int *order
    cdef long nodes

    def __cinit__(self, _Adj g, order):
        cdef int i
        self.g = g
        self.n = g.n
        self.bits = <int *> malloc((g.n + 1) * sizeof(int))
        self.negc = <int *> calloc(g.n + 1, sizeof(int))
        self.trail = <int *> malloc((g.n + 1) * sizeof(int))
        self.order = <int *> malloc((g.n + 1) * sizeof(int))
        # per propagate: at most n + 2m touched vertices, each pushing at
        # most 4m forced assignments
        self.qcap = (g.n + g.start[g.n] + 1) * (2 * g.start[g.n] + 1) + 1
        self.qv = <int *> malloc(self.qcap * sizeof(int))
        self.qb = <int *> malloc(self.qcap * sizeof(int))
        for i in range(g.n):
            self.bits[i] = -1
            self.order[i] = order[i]
        self.tlen = 0
        self.nodes = 0

    def __dealloc__(self):
        free(self.bits)
        free(self.negc)
        free(self.trail)
        free(self.order)
        free(self.qv)
        free(self.qb)

    cdef bint check(self, int z, int *qlen):
        cdef int i, j, w, t, bz, bw
        cdef int *start = self.g.start
        cdef int *nbr = self.g.nbr
        cdef int *neg = self.g.neg
        bz = self.bits[z]
        for i in range(start[z], start[z + 1]):
            w = nbr[i]
            bw = self.bits[w]
            if bw < 0 or (neg[i] ^ bz ^ bw):
                continue
            if self.negc[z] and self.negc[w]:
                return False
            if self.negc[z]:
                for j in range(start[w], start[w + 1]):
                    t = nbr[j]
                    if self.bits[t] < 0:
                        self.qv[qlen[0]] = t
                        self.qb[qlen[0]] = neg[j] ^ bw
                        qlen[0] += 1
            if self.negc[w]:
                for j in range(start[z], start[z + 1]):
                    t = nbr[j]
                    if self.bits[t] < 0:
                        self.qv[qlen[0]] = t
                        self.qb[qlen[0]] = neg[j] ^ bz
                        qlen[0] += 1
        return True

    cdef bint propagate(self, int v, int b):
        cdef int qlen = 1
        cdef int x, bx, i, y, k, ntouched
        cdef int *start = self.g.start
        cdef int *nbr = self.g.nbr
        cdef int *neg = self.g.neg
        cdef int *touched = <int *> malloc((self.n + 1) * sizeof(int))
        self.qv[0] = v
        self.qb[0] = b
        while qlen > 0:
            qlen -= 1
            x = self.qv[qlen]
            bx = self.qb[qlen]
            if self.bits[x] >= 0:
                if self.bits[x] != bx:
                    free(touched)
                    return False
                continue
            self.bits[x] = bx
            self.trail[self.tlen] = x
            self.tlen += 1
            touched[0] = x
            ntouched = 1
            for i in range(start[x], start[x + 1]):
                y = nbr[i]
                if self.bits[y] >= 0 and (neg[i] ^ bx ^ self.bits[y]):
                    self.negc[x] += 1
                    self.negc[y] += 1
                    if self.negc[y] == 1:
                        touched[ntouched] = y
                        ntouched += 1
            for k in range(ntouched):
                if not self.check(touched[k], &qlen):
                    free(touched)
                    return False
        free(touched)
        return True

    cdef void undo(self, int mark):
        cdef int x, bx, i, y
        cdef int *start = self.g.start
        cdef int *nbr = self.g.nbr
        cdef int *neg = self.g.neg
        while self.tlen > mark:
            self.tlen -= 1
            x = self.trail[self.tlen]
            bx = self.bits[x]
            for i in range(start[x], start[x + 1]):
                y = nbr[i]
                if self.bits[y] >= 0 and (neg[i] ^ bx ^ self.bits[y]):
                    self.negc[x] -= 1
                    self.negc[y] -= 1
            self.bits[x] = -1

    cdef bint search(self, int k, bint first):
        cdef int v, b, mark, nb
        while k < self.n and self.bits[self.order[k]] >= 0:
            k += 1
        if k == self.n:
            return True
        v = self.order[k]
        nb = 1 if first else 2
        for b in range(nb):
            self.nodes += 1
            mark = self.tlen
            if self.propagate(v, b) and self.search(k + 1, False):
                return True
            self.undo(mark)
        return False


def c4_switch_search(int n, eu, ev, eneg, order):
    cdef _Adj g = _Adj(n, eu, ev, eneg)
    cdef _C4Search s = _C4Search(g, order)
    cdef int i
    if s.search(0, True):
        return [s.bits[i] for i in range(n)], s.nodes
    return None, s.nodes


cdef inline int _popcount(uint64_t x):
    return __builtin_popcountll(x)


cdef class _HomSearch:
    cdef _Adj g
    cdef int n
    cdef uint64_t *dom
    cdef uint64_t *compat0
    cdef uint64_t *compat1
    cdef int *deg
    cdef int *queue
    cdef long nodes
    cdef long budget
    cdef bint over

    def __cinit__(self, _Adj g, compat, domains, long budget):
        cdef int i, ns
        self.g = g
        self.n = g.n
        ns = len(compat[0])
        self.dom = <uint64_t *> malloc((g.n + 1) * sizeof(uint64_t))
        self.compat0 = <uint64_t *> malloc((ns + 1) * sizeof(uint64_t))
        self.compat1 = <uint64_t *> malloc((ns + 1) * sizeof(uint64_t))
        self.deg = <int *> malloc((g.n + 1) * sizeof(int))
        # a vertex is pushed once initially and once per domain shrink
        self.queue = <int *> malloc((66 * g.n + 1) * sizeof(int))
        for i in range(ns):
            self.compat0[i] = compat[0][i]
            self.compat1[i] = compat[1][i]
        for i in range(g.n):
            self.dom[i] = domains[i]
            self.deg[i] = g.start[i + 1] - g.start[i]
        self.nodes = 0
        self.budget = budget
        self.over = False

    def __dealloc__(self):
        free(self.dom)
        free(self.compat0)
        free(self.compat1)
        free(self.deg)
        free(self.queue)

    cdef inline uint64_t support(self, uint64_t mask, int ng):
        cdef uint64_t out = 0
        cdef uint64_t *table = self.compat1 if ng else self.compat0
        while mask:
            out |= table[__builtin_ctzll(mask)]
            mask &= mask - 1
        return out

    cdef bint propagate(self, int qlen):
        cdef int x, y, i
        cdef uint64_t new
        cdef int *start = self.g.start
        cdef int *nbr = self.g.nbr
        cdef int *neg = self.g.neg
        while qlen > 0:
            qlen -= 1
            x = self.queue[qlen]
            for i in range(start[x], start[x + 1]):
                y = nbr[i]
                new = self.dom[y] & self.support(self.dom[x], neg[i])
                if new != self.dom[y]:
                    if not new:
                        return False
                    self.dom[y] = new
                    self.queue[qlen] = y
                    qlen += 1
        return True

    cdef bint search(self):
        cdef int v, best = -1, bsize = 0, bdeg = 0, size
        cdef uint64_t mask, low
        cdef uint64_t *saved
        for v in range(self.n):
            size = _popcount(self.dom[v])
            if size > 1 and (best < 0 or size < bsize or (size == bsize and self.deg[v] > bdeg)):
                best = v
                bsize = size
                bdeg = self.deg[v]
        if best < 0:
            return True
        saved = <uint64_t *> malloc((self.n + 1) * sizeof(uint64_t))
        mask = self.dom[best]
        while mask:
            low = mask & (~mask + 1)
            mask ^= low
            self.nodes += 1
            if self.nodes > self.budget:
                self.over = True
                free(saved)
                return False
            for v in range(self.n):
                saved[v] = self.dom[v]
            self.dom[best] = low
            self.queue[0] = best
            if self.propagate(1) and self.search():
                free(saved)
                return True
            if self.over:
                free(saved)
                return False
            for v in range(self.n):
                self.dom[v] = saved[v]
        free(saved)
        return False


def hom_search(int n, eu, ev, eneg, compat, domains, budget):
    if len(compat[0]) > 64:
        raise ValueError("compiled hom_search handles at most 32 target vertices")
    cdef _Adj g = _Adj(n, eu, ev, eneg)
    cdef long b = min(budget, 2 ** 62)
    cdef _HomSearch s = _HomSearch(g, compat, domains, b)
    cdef int i
    for i in range(n):
        if s.dom[i] == 0:
            return 0, None, 0
    # the Python twin seeds its stack with range(n) and pops from the end
    for i in range(n):
        s.queue[i] = i
    if not s.propagate(n):
        return 0, None, 0
    found = s.search()
    if s.over:
        return -1, None, s.nodes
    if not found:
        return 0, None, s.nodes
    return 1, [63 - __builtin_clzll(s.dom[i]) for i in range(n)], s.nodes

