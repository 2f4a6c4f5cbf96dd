# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels for graphs of order <= 64.

Mirrors ``_kernels_py`` exactly: same arguments, same return tuples, same
search order, so both backends return identical masks and node counts.
"""

import time

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    CHECK_EVERY = 4096


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowest(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef uint64_t _full_mask(int n):
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


def brute_force(adj, int n, int k, int start, deadline):
    if n > MAXN:
        raise ValueError("compiled kernel supports order <= 64")
    cdef uint64_t a[MAXN]
    cdef int idx[MAXN + 1]
    cdef int i, j, v, size, ok
    cdef uint64_t mask
    cdef long long explored = 0
    cdef double limit = float("inf") if deadline is None else deadline
    cdef bint check = deadline is not None
    for i in range(n):
        a[i] = <uint64_t>adj[i]
    if start < 0:
        start = 0
    for size in range(start, n + 1):
        for i in range(size):
            idx[i] = i
        while True:
            explored += 1
            if check and explored % CHECK_EVERY == 0 and time.perf_counter() > limit:
                return -1, explored, size, True
            mask = 0
            for i in range(size):
                mask |= (<uint64_t>1) << idx[i]
            ok = 1
            for v in range(n):
                if popcount(a[v] & mask) < k:
                    ok = 0
                    break
            if ok:
                return int(mask), explored, size, False
            # next combination in lexicographic order
            i = size - 1
            while i >= 0 and idx[i] == n - size + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, size):
                idx[j] = idx[j - 1] + 1
    return -1, explored, n + 1, False


cdef struct Ctx:
    uint64_t adj[MAXN]
    int cov[MAXN]
    int n
    int k
    int lb
    int delta
    int deficit
    int best_size
    uint64_t best_mask
    uint64_t full
    long long nodes
    bint timed_out
    bint check
    double deadline


cdef inline void _add(Ctx* c, int v) nogil:
    cdef uint64_t w = c.adj[v]
    cdef int u
    while w:
        u = lowest(w)
        if c.cov[u] < c.k:
            c.deficit -= 1
        c.cov[u] += 1
        w &= w - 1


cdef inline void _remove(Ctx* c, int v) nogil:
    cdef uint64_t w = c.adj[v]
    cdef int u
    while w:
        u = lowest(w)
        c.cov[u] -= 1
        if c.cov[u] < c.k:
            c.deficit += 1
        w &= w - 1


cdef void _run(Ctx* c, uint64_t chosen, uint64_t excluded, int size):
    cdef uint64_t free_, cand, banned, low
    cdef int u, need, slack, pick, pick_slack, v
    c.nodes += 1
    if c.check and c.nodes % CHECK_EVERY == 0 and time.perf_counter() > c.deadline:
        c.timed_out = True
        return
    if c.deficit == 0:
        if size < c.best_size:
            c.best_size = size
            c.best_mask = chosen
        return
    if size + (c.deficit + c.delta - 1) // c.delta >= c.best_size:
        return

    free_ = c.full & ~chosen & ~excluded
    pick = -1
    pick_slack = c.n + 1
    for u in range(c.n):
        need = c.k - c.cov[u]
        if need <= 0:
            continue
        slack = popcount(c.adj[u] & free_) - need
        if slack < 0:
            return
        if slack < pick_slack:
            pick = u
            pick_slack = slack

    cand = c.adj[pick] & free_
    banned = excluded
    while cand:
        low = cand & (~cand + 1)
        v = lowest(cand)
        cand ^= low
        _add(c, v)
        _run(c, chosen | low, banned, size + 1)
        _remove(c, v)
        if c.timed_out or c.best_size <= c.lb:
            return
        banned |= low


def branch_and_bound(adj, int n, int k, forced, int lb, deadline):
    if n > MAXN:
        raise ValueError("compiled kernel supports order <= 64")
    cdef Ctx c
    cdef int i, size = 0
    cdef uint64_t w, f = <uint64_t>forced
    c.n = n
    c.k = k
    c.lb = lb
    c.full = _full_mask(n)
    c.delta = 0
    for i in range(n):
        c.adj[i] = <uint64_t>adj[i]
        c.cov[i] = 0
        if popcount(c.adj[i]) > c.delta:
            c.delta = popcount(c.adj[i])
    c.deficit = k * n
    c.best_mask = c.full
    c.best_size = n
    c.nodes = 0
    c.timed_out = False
    c.check = deadline is not None
    c.deadline = float("inf") if deadline is None else deadline
    w = f
    while w:
        _add(&c, lowest(w))
        size += 1
        w &= w - 1
    if c.best_size > lb:
        _run(&c, f, 0, size)
    return int(c.best_mask), c.nodes, bool(c.timed_out)
