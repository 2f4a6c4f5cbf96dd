"""Exact k-tuple total domination number by enumeration or branch-and-bound."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from . import kernels
from .domination import forced_vertices, lower_bounds
from .errors import InfeasibleError, ParameterError
from .harary import Graph, VertexSet

__all__ = ["Method", "SolveResult", "solve_exact", "cross_check"]


class Method(str, enum.Enum):
    BRUTE = "BRUTE"
    BNB = "BNB"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one exact solve.

    When the budget runs out, ``gamma`` is None and the true value lies in
    ``[lo, hi]``; ``witness`` is then the best set found (size ``hi``).
    """

    gamma: int | None
    witness: VertexSet
    method: Method
    lo: int
    hi: int
    nodes: int
    elapsed: float
    backend: str = "python"

    @property
    def solved(self) -> bool:
        return self.gamma is not None


def solve_exact(
    g: Graph,
    k: int = 2,
    method: Method | str = Method.BNB,
    budget: float | None = None,
    backend: str | None = None,
) -> SolveResult:
    method = Method(method.upper() if isinstance(method, str) else method)
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    if g.min_degree < k:
        raise InfeasibleError(f"minimum degree {g.min_degree} < k={k}")
    if method is Method.BRUTE and g.order > kernels.WORD_BITS:
        raise ParameterError(f"brute force is limited to order <= {kernels.WORD_BITS}")

    mod = kernels.backend_for(g.order, backend)
    name = "cython" if mod.__name__.endswith("._kernels") else "python"
    lb = lower_bounds(g, k).best
    start = time.perf_counter()
    deadline = None if budget is None else start + budget

    if method is Method.BRUTE:
        mask, nodes, reached, timed_out = mod.brute_force(g.adjacency, g.order, k, lb, deadline)
        elapsed = time.perf_counter() - start
        if timed_out:
            full = VertexSet(tuple(range(g.order)))
            return SolveResult(None, full, method, max(lb, reached), g.order, nodes, elapsed, name)
        witness = VertexSet.from_mask(mask)
        return SolveResult(len(witness), witness, method, len(witness), len(witness), nodes, elapsed, name)

    forced = forced_vertices(g, k)
    mask, nodes, timed_out = mod.branch_and_bound(g.adjacency, g.order, k, forced.mask, lb, deadline)
    elapsed = time.perf_counter() - start
    witness = VertexSet.from_mask(mask)
    if timed_out:
        return SolveResult(None, witness, method, max(lb, len(forced)), len(witness), nodes, elapsed, name)
    return SolveResult(len(witness), witness, method, len(witness), len(witness), nodes, elapsed, name)


def cross_check(g: Graph, k: int = 2, backend: str | None = None) -> bool:
    """True iff enumeration and branch-and-bound agree on the optimum."""
    brute = solve_exact(g, k, Method.BRUTE, backend=backend)
    bnb = solve_exact(g, k, Method.BNB, backend=backend)
    return brute.gamma == bnb.gamma
