"""Harary graphs H(d, n) stored as circulant offsets plus an optional chord list.

Vertices are 0-based positions. The usual 1-based vertex labels used when
writing sets by hand map to positions via ``label -> (label - 1) % order``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .errors import ParameterError, UnsupportedDegreeError

__all__ = [
    "ParityClass",
    "HararyParams",
    "Graph",
    "CirculantGraph",
    "VertexSet",
    "build_harary",
    "neighbors",
    "degree_profile",
    "graph_from_edges",
    "write_edge_list",
    "format_edge_list",
    "read_edge_list",
]


class ParityClass(str, enum.Enum):
    EVEN_D = "EVEN_D"
    ODD_D_EVEN_N = "ODD_D_EVEN_N"
    ODD_D_ODD_N = "ODD_D_ODD_N"


@dataclass(frozen=True)
class HararyParams:
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise UnsupportedDegreeError(f"degree parameter d={self.d} must be at least 2")
        if self.d >= self.n:
            raise ParameterError(f"need d < n, got d={self.d}, n={self.n}")

    @property
    def parity_class(self) -> ParityClass:
        if self.d % 2 == 0:
            return ParityClass.EVEN_D
        if self.n % 2 == 0:
            return ParityClass.ODD_D_EVEN_N
        return ParityClass.ODD_D_ODD_N


@dataclass(frozen=True)
class VertexSet:
    """Sorted distinct vertex positions."""

    positions: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        pos = tuple(self.positions)
        if any(p < 0 for p in pos):
            raise IndexError(f"negative vertex position in {pos}")
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions must be sorted and distinct: {pos}")
        object.__setattr__(self, "positions", pos)

    @classmethod
    def of(cls, positions: Iterable[int]) -> VertexSet:
        return cls(tuple(sorted(set(positions))))

    @classmethod
    def from_labels(cls, labels: Iterable[int], order: int) -> VertexSet:
        return cls.of((lab - 1) % order for lab in labels)

    @classmethod
    def from_mask(cls, mask: int) -> VertexSet:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return cls(tuple(out))

    @property
    def mask(self) -> int:
        m = 0
        for p in self.positions:
            m |= 1 << p
        return m

    def labels(self) -> list[int]:
        return [p + 1 for p in self.positions]

    def check_range(self, order: int) -> None:
        if self.positions and self.positions[-1] >= order:
            raise IndexError(f"vertex position {self.positions[-1]} out of range for order {order}")

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __contains__(self, v: object) -> bool:
        return v in self.positions


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on positions ``0..order-1``.

    ``adjacency[v]`` is the neighbourhood of ``v`` as an integer bit mask.
    """

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self) -> None:
        adj = tuple(self.adjacency)
        if len(adj) != self.order:
            raise ParameterError("adjacency length must equal order")
        for v, mask in enumerate(adj):
            if mask >> v & 1:
                raise ParameterError(f"self-loop at position {v}")
            if mask >> self.order:
                raise ParameterError(f"neighbour out of range at position {v}")
            w = mask
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise ParameterError(f"asymmetric adjacency between {u} and {v}")
                w ^= low
        object.__setattr__(self, "adjacency", adj)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex position {v} out of range for order {self.order}")

    def neighbors(self, v: int) -> VertexSet:
        self._check(v)
        return VertexSet.from_mask(self.adjacency[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adjacency[v].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adjacency]

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, mask in enumerate(self.adjacency):
            for v in VertexSet.from_mask(mask >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adjacency[u] >> v & 1)


@dataclass(frozen=True)
class CirculantGraph(Graph):
    offsets: tuple[int, ...] = ()
    chords: tuple[tuple[int, int], ...] = ()
    params: HararyParams | None = field(default=None, compare=False)


def _circulant_adjacency(order: int, offsets: Iterable[int], chords: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    adj = [0] * order
    seen: set[tuple[int, int]] = set()
    for v in range(order):
        for o in offsets:
            u = (v + o) % order
            seen.add((min(u, v), max(u, v)))
            adj[v] |= 1 << u
            adj[u] |= 1 << v
    for a, b in chords:
        e = (min(a, b), max(a, b))
        if e in seen:
            raise AssertionError(f"chord {e} duplicates an offset edge")
        seen.add(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return tuple(adj)


def build_harary(p: HararyParams) -> CirculantGraph:
    """Build H(d, n) for any parity combination."""
    d, n = p.d, p.n
    half = d // 2
    chords: tuple[tuple[int, int], ...] = ()
    if p.parity_class is ParityClass.EVEN_D:
        offsets = tuple(range(1, half + 1))
    elif p.parity_class is ParityClass.ODD_D_EVEN_N:
        offsets = tuple(sorted(set(range(1, half + 1)) | {n // 2}))
    else:
        offsets = tuple(range(1, half + 1))
        h = (n - 1) // 2
        chords = tuple((i, (i + h) % n) for i in range(h + 1))
    return CirculantGraph(
        order=n,
        adjacency=_circulant_adjacency(n, offsets, chords),
        offsets=offsets,
        chords=chords,
        params=p,
    )


def neighbors(g: Graph, v: int) -> VertexSet:
    return g.neighbors(v)


def degree_profile(g: Graph) -> dict[int, int]:
    """Map each degree occurring in ``g`` to the number of vertices having it."""
    return dict(sorted(Counter(g.degrees).items()))


def graph_from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * order
    for u, v in edges:
        if u == v:
            raise ParameterError(f"self-loop at {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise IndexError(f"edge ({u}, {v}) out of range for order {order}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


# Edge-list text format: "p tds <order> <edges>" then "e <u> <v>" (1-based, u < v).

def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p tds {g.order} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, fh: TextIO) -> None:
    fh.write(format_edge_list(g))


def read_edge_list(text: str) -> Graph:
    order = None
    declared = None
    edges = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip() or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "tds":
                raise ParameterError(f"line {lineno}: bad problem line {line!r}")
            order, declared = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if order is None:
                raise ParameterError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]), int(parts[2])
            edges.append((u - 1, v - 1))
        else:
            raise ParameterError(f"line {lineno}: unknown record {line!r}")
    if order is None:
        raise ParameterError("missing problem line")
    if len(edges) != declared:
        raise ParameterError(f"declared {declared} edges, found {len(edges)}")
    return graph_from_edges(order, edges)
