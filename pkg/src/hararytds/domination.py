"""k-tuple total domination: verification, forced vertices and lower bounds.

Everything here works on an arbitrary :class:`~hararytds.harary.Graph`, not only
on Harary graphs, so the same code can serve as an oracle for the closed-form
constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InfeasibleError, ParameterError
from .harary import Graph, VertexSet

__all__ = [
    "BoundsRecord",
    "coverage",
    "is_ktds",
    "forced_vertices",
    "lower_bounds",
    "degree_sum_bound",
    "parse_set_file",
    "format_set_line",
]


@dataclass(frozen=True)
class BoundsRecord:
    lb_trivial: int
    lb_degree: int
    lb_degree_sum: int
    ub_trivial: int

    @property
    def best(self) -> int:
        return max(self.lb_trivial, self.lb_degree, self.lb_degree_sum)


def coverage(g: Graph, s: VertexSet) -> list[int]:
    """Per-vertex count ``|N(v) & S|``."""
    s.check_range(g.order)
    mask = s.mask
    return [(adj & mask).bit_count() for adj in g.adjacency]


def is_ktds(g: Graph, s: VertexSet, k: int) -> bool:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    return min(coverage(g, s)) >= k


def forced_vertices(g: Graph, k: int) -> VertexSet:
    """Union of the neighbourhoods of all degree-``k`` vertices.

    Every such neighbour lies in every kTDS, because a vertex of degree exactly
    ``k`` needs its whole neighbourhood inside the set.
    """
    mask = 0
    for adj in g.adjacency:
        if adj.bit_count() == k:
            mask |= adj
    return VertexSet.from_mask(mask)


def degree_sum_bound(degrees: Iterable[int], need: int) -> int:
    """Smallest ``s`` whose ``s`` largest degrees sum to at least ``need``."""
    total = 0
    for count, deg in enumerate(sorted(degrees, reverse=True), 1):
        total += deg
        if total >= need:
            return count
    raise InfeasibleError(f"degree sum {total} cannot reach {need}")


def lower_bounds(g: Graph, k: int) -> BoundsRecord:
    if k < 1:
        raise ParameterError(f"k must be at least 1, got {k}")
    degrees = g.degrees
    if min(degrees) < k:
        raise InfeasibleError(f"minimum degree {min(degrees)} < k={k}")
    need = k * g.order
    delta_max = max(degrees)
    return BoundsRecord(
        lb_trivial=k + 1,
        lb_degree=-(-need // delta_max),
        lb_degree_sum=degree_sum_bound(degrees, need),
        ub_trivial=g.order,
    )


# Set files: one set per line as whitespace-separated 1-based labels; '#' comments.

def parse_set_file(text: str, order: int) -> list[VertexSet]:
    sets = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        labels = [int(tok) for tok in body.split()]
        bad = [lab for lab in labels if not 1 <= lab <= order]
        if bad:
            raise IndexError(f"labels {bad} out of range for order {order}")
        sets.append(VertexSet.of(lab - 1 for lab in labels))
    return sets


def format_set_line(s: VertexSet, comment: str | None = None) -> str:
    line = " ".join(str(lab) for lab in s.labels())
    if comment:
        line = f"{line} # {comment}" if line else f"# {comment}"
    return line
