"""Immutable simple graphs over dense integer vertices with bitset adjacency.

Vertex sets are Python ints used as bit masks (bit ``v`` set means vertex
``v`` is a member).  :class:`VertexSet` wraps a mask together with the
graph order for the public API; hot loops work on raw masks.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

MAX_ORDER = 512


class GraphError(ValueError):
    """Raised for malformed graphs or graph files."""


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | "VertexSet" | int) -> int:
    if isinstance(vertices, VertexSet):
        return vertices.bits
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` stored as a bit mask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} exceeds capacity {self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for order {n}")
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits, self.n)

    def __le__(self, other: VertexSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: VertexSet) -> bool:
        return self <= other and self.bits != other.bits

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


@dataclass(frozen=True)
class GridInfo:
    """Coordinates of a grid-like product: vertex ``r * cols + c`` is row r, column c."""

    rows: int
    cols: int
    wrap_rows: bool = False  # rows index a cycle (north/south wrap)
    wrap_cols: bool = False  # columns index a cycle (east/west wrap)

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.cols)

    def vertex(self, r: int, c: int) -> int | None:
        if self.wrap_rows:
            r %= self.rows
        if self.wrap_cols:
            c %= self.cols
        if 0 <= r < self.rows and 0 <= c < self.cols:
            return r * self.cols + c
        return None


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bit mask of the open neighborhood of ``v``.  Build
    instances through :func:`build_graph`; the constructor trusts its input.
    """

    n: int
    adj: tuple[int, ...]
    name: str = ""
    labels: tuple[str, ...] | None = None
    grid: GridInfo | None = None
    _edges: tuple[tuple[int, int], ...] = field(default=(), repr=False)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v], self.n)

    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    @property
    def m(self) -> int:
        return len(self._edges)

    def vset(self, vertices: Iterable[int] | VertexSet | int = ()) -> VertexSet:
        if isinstance(vertices, int):
            return VertexSet(vertices, self.n)
        if isinstance(vertices, VertexSet):
            return VertexSet(vertices.bits, self.n)
        return VertexSet.of(self.n, vertices)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def relabeled(self, name: str = "", labels: tuple[str, ...] | None = None,
                  grid: GridInfo | None = None) -> Graph:
        return Graph(self.n, self.adj, name or self.name, labels, grid, self._edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str = "",
                labels: Iterable[str] | None = None, grid: GridInfo | None = None) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    canon = tuple((u, v) for u in range(n) for v in iter_bits(adj[u] >> (u + 1) << (u + 1)))
    lab = tuple(labels) if labels is not None else None
    if lab is not None and len(lab) != n:
        raise GraphError("label count does not match order")
    return Graph(n, tuple(adj), name, lab, grid, canon)


def closed_neighborhood(G: Graph, S: Iterable[int] | VertexSet | int) -> VertexSet:
    return VertexSet(closed_nbhd_mask(G.adj, to_mask(S)), G.n)


def closed_nbhd_mask(adj: tuple[int, ...], mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= adj[v]
    return out


def degree(G: Graph, v: int) -> int:
    return popcount(G.adj[v])


def degrees(G: Graph) -> list[int]:
    return [popcount(a) for a in G.adj]


def max_degree(G: Graph) -> int:
    return max(degrees(G), default=0)


def min_degree(G: Graph) -> int:
    return min(degrees(G), default=0)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.full


def require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise GraphError(f"{G!r} is not connected")


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered in the given order."""
    order = list(vertices)
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in G.edges() if u in index and v in index]
    return build_graph(len(order), edges)


def graph_hash(G: Graph) -> str:
    """Digest of the sorted edge list; equal for identically numbered graphs."""
    text = f"{G.n};" + ";".join(f"{u},{v}" for u, v in G.edges())
    return hashlib.sha256(text.encode()).hexdigest()[:20]


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    Duplicate edges are merged.  Blank lines and ``#`` comments are ignored.
    """
    lines = [
        (i, line.split("#", 1)[0].strip())
        for i, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise GraphError("empty graph file")
    lineno, header = lines[0]
    try:
        n, m = (int(tok) for tok in header.split())
    except ValueError:
        raise GraphError(f"line {lineno}: expected header 'n m', got {header!r}") from None
    edges = []
    for lineno, s in lines[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {s!r}") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {lineno}: invalid edge ({u}, {v}) for order {n}")
        edges.append((u, v))
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def format_edge_list(G: Graph) -> str:
    rows = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(rows) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())
