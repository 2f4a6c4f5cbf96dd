"""Shared fixtures and independent oracles.

The oracles here rebuild Harary graphs from the circular-distance rule and
search subsets with plain Python sets, so they share no code with the
bitmask kernels they check.
"""

from __future__ import annotations

import contextlib
from itertools import combinations

import pytest

from hararytds import kernels

_ACCEPTANCE: list[tuple[str, str, str]] = []


def naive_harary_edges(d: int, n: int) -> set[frozenset[int]]:
    """Edge set of H(d, n) on positions, straight from the placement rule."""
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            dist = min(j - i, n - (j - i))
            if dist <= d // 2:
                edges.add(frozenset((i, j)))
    if d % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                edges.add(frozenset((i, i + n // 2)))
        else:
            h = (n - 1) // 2
            for i in range(h + 1):
                edges.add(frozenset((i, (i + h) % n)))
    return edges


def naive_neighbourhoods(order: int, edges) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(order)]
    for e in edges:
        u, v = tuple(e)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def naive_is_ktds(nbrs: list[set[int]], s: set[int], k: int) -> bool:
    return all(len(nb & s) >= k for nb in nbrs)


def naive_gamma(nbrs: list[set[int]], k: int) -> int | None:
    order = len(nbrs)
    for size in range(order + 1):
        for combo in combinations(range(order), size):
            if naive_is_ktds(nbrs, set(combo), k):
                return size
    return None


@pytest.fixture(params=kernels.available_backends())
def backend(request) -> str:
    return request.param


@pytest.fixture
def criterion():
    """Context manager recording a PASS/FAIL line for an acceptance criterion."""

    @contextlib.contextmanager
    def _record(label: str, description: str):
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append((label, "FAIL", description))
            raise
        _ACCEPTANCE.append((label, "PASS", description))

    return _record


def record_info(label: str, description: str) -> None:
    _ACCEPTANCE.append((label, "INFO", description))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, description in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {label}: {description}")
