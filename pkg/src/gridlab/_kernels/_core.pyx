# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact treewidth kernel; same algorithm and tie-breaking as
the pure-Python fallback in _pure."""

from libc.stdint cimport uint32_t

IMPLEMENTATION = "cython"


cdef inline int _popcount(uint32_t x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _ctz(uint32_t x):
    cdef int i = 0
    while not (x & 1u):
        x >>= 1
        i += 1
    return i


cdef class _Solver:
    cdef int n
    cdef uint32_t full
    cdef uint32_t masks[32]
    cdef int best_width
    cdef list best_order
    cdef list order
    cdef dict memo

    def __init__(self, int n, masks):
        cdef int i
        self.n = n
        self.full = <uint32_t>((1 << n) - 1)
        for i in range(n):
            self.masks[i] = <uint32_t>masks[i]
        self.order = []
        self.memo = {}

    cdef uint32_t q_set(self, uint32_t eliminated, int v):
        cdef uint32_t reach = 1u << v
        cdef uint32_t nb, new, m, bit
        while True:
            nb = 0
            m = reach
            while m:
                bit = m & (~m + 1)
                nb |= self.masks[_ctz(bit)]
                m ^= bit
            new = reach | (nb & eliminated)
            if new == reach:
                return nb & ~eliminated & ~(1u << v)
            reach = new

    cdef void search(self, uint32_t eliminated, int cost):
        cdef uint32_t rem, q, bit, m, b, vbit
        cdef int v, qn, u, nxt_cost
        cdef bint simplicial
        if cost >= self.best_width:
            return
        if eliminated == self.full:
            self.best_width = cost
            self.best_order = list(self.order)
            return
        seen = self.memo.get(eliminated)
        if seen is not None and <int>seen <= cost:
            return
        self.memo[eliminated] = cost

        cand = []
        rem = self.full & ~eliminated
        while rem:
            vbit = rem & (~rem + 1)
            v = _ctz(vbit)
            rem ^= vbit
            q = self.q_set(eliminated, v)
            qn = _popcount(q)
            nxt_cost = cost if cost > qn else qn
            if nxt_cost >= self.best_width:
                continue
            # simplicial vertex: eliminating it first is always optimal
            simplicial = True
            m = q
            while m:
                b = m & (~m + 1)
                u = _ctz(b)
                m ^= b
                if q & ~(1u << u) & ~self.q_set(eliminated, u):
                    simplicial = False
                    break
            if simplicial:
                self.order.append(v)
                self.search(eliminated | vbit, nxt_cost)
                self.order.pop()
                return
            cand.append((qn, v))
        cand.sort()
        for qn, v in cand:
            nxt_cost = cost if cost > qn else qn
            if nxt_cost >= self.best_width:
                break
            self.order.append(v)
            self.search(eliminated | (1u << v), nxt_cost)
            self.order.pop()


def min_fill_order(int n, masks):
    """Greedy min-fill elimination: (width, order).  Ties to smaller id."""
    cdef uint32_t adj[32]
    cdef uint32_t alive, nb, m, bit
    cdef int v, u, fill, width, best_v, best_fill
    cdef int i
    for i in range(n):
        adj[i] = <uint32_t>masks[i]
    alive = <uint32_t>((1 << n) - 1)
    order = []
    width = 0
    while alive:
        best_v = -1
        best_fill = -1
        m = alive
        while m:
            bit = m & (~m + 1)
            v = _ctz(bit)
            m ^= bit
            nb = adj[v] & alive
            fill = 0
            b = nb
            while b:
                bit2 = b & (~b + 1)
                u = _ctz(bit2)
                b ^= bit2
                fill += _popcount(nb & ~adj[u] & ~(1u << u))
            fill //= 2
            if best_fill < 0 or fill < best_fill:
                best_v = v
                best_fill = fill
        nb = adj[best_v] & alive
        if _popcount(nb) > width:
            width = _popcount(nb)
        b = nb
        while b:
            bit2 = b & (~b + 1)
            u = _ctz(bit2)
            b ^= bit2
            adj[u] |= nb & ~(1u << u)
        alive &= ~(1u << best_v)
        order.append(best_v)
    return width, order


def degeneracy(int n, masks):
    """Max removed degree under min-degree elimination; a lower bound."""
    cdef uint32_t adj[32]
    cdef uint32_t alive, m, bit
    cdef int v, best, deg, min_deg, min_v, i
    for i in range(n):
        adj[i] = <uint32_t>masks[i]
    alive = <uint32_t>((1 << n) - 1)
    best = 0
    while alive:
        min_v = -1
        min_deg = n + 1
        m = alive
        while m:
            bit = m & (~m + 1)
            v = _ctz(bit)
            m ^= bit
            deg = _popcount(adj[v] & alive)
            if deg < min_deg:
                min_deg = deg
                min_v = v
        if min_deg > best:
            best = min_deg
        alive &= ~(1u << min_v)
    return best


def treewidth_order(int n, masks):
    """Exact treewidth and an optimal elimination order."""
    if n == 0:
        return -1, []
    ub, ub_order = min_fill_order(n, masks)
    lb = degeneracy(n, masks)
    if lb >= ub:
        return ub, ub_order
    solver = _Solver(n, masks)
    solver.best_width = ub
    solver.best_order = list(ub_order)
    solver.search(0, lb)
    return solver.best_width, solver.best_order
