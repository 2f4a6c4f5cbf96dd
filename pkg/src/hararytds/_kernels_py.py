"""Pure-Python search kernels. Same contract as the compiled ``_kernels`` module.

Vertex sets are integer bit masks; ``adj[v]`` is the neighbourhood mask of v.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Sequence

_CHECK_EVERY = 4096


def brute_force(adj: Sequence[int], n: int, k: int, start: int, deadline: float | None):
    """First kTDS in (size ascending, lexicographic) order.

    Returns ``(mask, explored, size_reached, timed_out)``. ``mask`` is -1 on
    timeout; all sizes below ``size_reached`` have then been ruled out.
    """
    adj = list(adj)
    bits = [1 << v for v in range(n)]
    explored = 0
    for size in range(max(start, 0), n + 1):
        for combo in combinations(range(n), size):
            explored += 1
            if deadline is not None and explored % _CHECK_EVERY == 0 and time.perf_counter() > deadline:
                return -1, explored, size, True
            mask = 0
            for v in combo:
                mask |= bits[v]
            for a in adj:
                if (a & mask).bit_count() < k:
                    break
            else:
                return mask, explored, size, False
    return -1, explored, n + 1, False


class _Search:
    def __init__(self, adj, n, k, lb, deadline):
        self.adj = list(adj)
        self.n = n
        self.k = k
        self.lb = lb
        self.deadline = deadline
        self.full = (1 << n) - 1
        self.delta = max(a.bit_count() for a in self.adj)
        self.cov = [0] * n
        self.deficit = k * n
        self.best_mask = self.full
        self.best_size = n
        self.nodes = 0
        self.timed_out = False

    def add(self, c: int) -> None:
        k, cov = self.k, self.cov
        w = self.adj[c]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            if cov[u] < k:
                self.deficit -= 1
            cov[u] += 1
            w ^= low

    def remove(self, c: int) -> None:
        k, cov = self.k, self.cov
        w = self.adj[c]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            cov[u] -= 1
            if cov[u] < k:
                self.deficit += 1
            w ^= low

    def done(self) -> bool:
        return self.timed_out or self.best_size <= self.lb

    def run(self, chosen: int, excluded: int, size: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0 and time.perf_counter() > self.deadline:
            self.timed_out = True
            return
        if self.deficit == 0:
            if size < self.best_size:
                self.best_size = size
                self.best_mask = chosen
            return
        if size + -(-self.deficit // self.delta) >= self.best_size:
            return

        free = self.full & ~chosen & ~excluded
        k, cov, adj = self.k, self.cov, self.adj
        pick, pick_slack = -1, self.n + 1
        for u in range(self.n):
            need = k - cov[u]
            if need <= 0:
                continue
            slack = (adj[u] & free).bit_count() - need
            if slack < 0:
                return
            if slack < pick_slack:
                pick, pick_slack = u, slack

        cand = adj[pick] & free
        banned = excluded
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            self.add(c)
            self.run(chosen | low, banned, size + 1)
            self.remove(c)
            if self.done():
                return
            banned |= low


def branch_and_bound(adj: Sequence[int], n: int, k: int, forced: int, lb: int, deadline: float | None):
    """Minimum kTDS by branching on the most constrained under-covered vertex.

    ``forced`` seeds the partial solution. Returns
    ``(best_mask, nodes, timed_out)``; ``best_mask`` is the incumbent, which is
    optimal unless ``timed_out``.
    """
    s = _Search(adj, n, k, lb, deadline)
    size = 0
    w = forced
    while w:
        low = w & -w
        s.add(low.bit_length() - 1)
        size += 1
        w ^= low
    if s.best_size > lb:
        s.run(forced, 0, size)
    return s.best_mask, s.nodes, s.timed_out
