"""Named graph families and the fixed example graphs.

Every constructor documents its vertex numbering; the numbering is part of
the contract because regression tests quote witness sets verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, GridInfo, build_graph


def path(n: int) -> Graph:
    """P_n numbered 0..n-1 along the path."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    """C_n numbered 0..n-1 around the cycle."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return build_graph(n, [(0, i) for i in range(1, n)], name=f"K1,{n - 1}")


def spider(legs: list[int]) -> Graph:
    """Spider with center 0 and pendant paths of the given lengths.

    Legs are numbered in order of nondecreasing length (ties keep input
    order), each leg consecutively outward from the center.  For
    ``spider([7, 2, 2, 2, 2, 2])`` this gives legs 1-2, 3-4, 5-6, 7-8, 9-10
    and 11..17, the numbering of the standard drawing of S(7,2,2,2,2,2).
    """
    if not legs:
        raise GraphError("spider needs at least one leg")
    if any(length < 1 for length in legs):
        raise GraphError("spider legs must have length >= 1")
    edges = []
    nxt = 1
    for length in sorted(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    name = "S(" + ",".join(map(str, legs)) + ")"
    return build_graph(nxt, edges, name=name)


def corona(H: Graph) -> Graph:
    """H o K_1: vertex i of H keeps index i, its new leaf is |V(H)| + i."""
    if H.n == 0:
        raise GraphError("corona of the empty graph")
    n = H.n
    edges = H.edges() + [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges, name=f"({H.name or 'H'})oK1")


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """G box H with vertex (x, y) at index x * |V(H)| + y.

    When both factors are paths or cycles the result carries
    :class:`GridInfo` (rows indexed by G, columns by H).
    """
    m = H.n
    edges = []
    for x in range(G.n):
        for y1, y2 in H.edges():
            edges.append((x * m + y1, x * m + y2))
    for x1, x2 in G.edges():
        for y in range(m):
            edges.append((x1 * m + y, x2 * m + y))
    grid = None
    kinds = (_path_or_cycle(G), _path_or_cycle(H))
    if None not in kinds:
        grid = GridInfo(G.n, m, wrap_rows=kinds[0] == "C", wrap_cols=kinds[1] == "C")
    return build_graph(G.n * m, edges, name=f"{G.name or 'G'}x{H.name or 'H'}", grid=grid)


def _path_or_cycle(G: Graph) -> str | None:
    """'P' or 'C' when G is exactly the canonically numbered path or cycle."""
    n = G.n
    if G.edges() == [(i, i + 1) for i in range(n - 1)]:
        return "P"
    if n >= 3 and sorted(G.edges()) == sorted(
        (min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)
    ):
        return "C"
    return None


def grid(n: int, m: int, wrap_rows: bool = False, wrap_cols: bool = False) -> Graph:
    """J_n box J_m where J is a path, or a cycle when the wrap flag is set."""
    rows = cycle(n) if wrap_rows else path(n)
    cols = cycle(m) if wrap_cols else path(m)
    return cartesian_product(rows, cols)


def g_d_construction(d: int) -> Graph:
    """d disjoint copies of K_{1,d} with corresponding leaves joined across copies.

    Star i has center i*(d+1) and leaves i*(d+1)+j for j = 1..d; leaf j of
    every star is adjacent to leaf j of every other star.
    """
    if d < 2:
        raise GraphError("g_d_construction needs d >= 2")
    b = d + 1
    edges = [(i * b, i * b + j) for i in range(d) for j in range(1, b)]
    for j in range(1, b):
        for i in range(d):
            for i2 in range(i + 1, d):
                edges.append((i * b + j, i2 * b + j))
    return build_graph(d * b, edges, name=f"G_{d}")


@dataclass(frozen=True)
class Annotated:
    graph: Graph
    designated: frozenset[int]


def family_a() -> list[Annotated]:
    """The seven exceptional minimum-degree-two graphs, in drawing order.

    Each entry carries its designated single-vertex power dominating set.
    Vertices 0..6 follow the drawing's node order A..G.
    """
    c7 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]
    wheelish = [(1, 2), (1, 6), (2, 3), (3, 6), (4, 6), (5, 4), (6, 0), (5, 0)]
    specs = [
        ("A1", 7, c7, 6),
        ("A2", 7, c7 + [(5, 1)], 5),
        ("A3", 7, c7 + [(2, 5), (1, 4)], 5),
        ("A4", 7, c7 + [(1, 5), (2, 5), (1, 4)], 5),
        ("A5=C4", 4, [(0, 1), (1, 2), (2, 3), (3, 0)], 3),
        ("A6", 7, wheelish, 6),
        ("A7", 7, wheelish + [(0, 1)], 6),
    ]
    return [
        Annotated(build_graph(n, edges, name=name), frozenset({green}))
        for name, n, edges, green in specs
    ]


def example_h() -> Graph:
    """Order-12 graph whose unique minimum dominating set is {x, y, z} = {2, 3, 9}."""
    labels = ("a", "b", "x", "y", "e", "f", "g", "h", "i", "z", "k", "l")
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (2, 6), (2, 7), (0, 5), (5, 3),
             (0, 8), (8, 9), (9, 10), (9, 11)]
    return build_graph(12, edges, name="H", labels=labels)


def example_w() -> Graph:
    """8-cycle u1..u8 with leaves v2..v8 and the path u1-v1-w.

    Numbering: u_i -> i-1, v_i -> 7+i, w -> 16.
    """
    labels = tuple(f"u{i}" for i in range(1, 9)) + tuple(f"v{i}" for i in range(1, 9)) + ("w",)
    edges = [(i, (i + 1) % 8) for i in range(8)]
    edges += [(i, 8 + i) for i in range(8)]
    edges.append((8, 16))
    return build_graph(17, edges, name="W", labels=labels)


def fig7_interval_graph():
    """Six-vertex interval graph with a claw; labels 1..6 map to 0..5.

    Returns the graph and its (non-unit) interval representation.
    """
    from .unit_interval import IntervalRepresentation

    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
    G = build_graph(6, edges, name="interval-claw", labels=tuple("123456"))
    rep = IntervalRepresentation.from_pairs(
        [(0, 3), (2, 5), (4, 9), (8, 11), (10, 13), (6, 7)]
    )
    return G, rep


def half_order_construction(H: Graph) -> Graph:
    """(H o K_1) o K_1 built by hanging y_u - x_u and z_u off each vertex u.

    With n = |V(H)|: u keeps index u, y_u = n+u, z_u = 2n+u, x_u = 3n+u.
    This coincides with ``corona(corona(H))``.
    """
    if H.n == 0:
        raise GraphError("half_order_construction of the empty graph")
    n = H.n
    edges = list(H.edges())
    for u in range(n):
        edges += [(u, n + u), (u, 2 * n + u), (n + u, 3 * n + u)]
    return build_graph(4 * n, edges, name=f"(({H.name or 'H'})oK1)oK1")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    edges = G.edges() + [(u + G.n, v + G.n) for u, v in H.edges()]
    return build_graph(G.n + H.n, edges)


FAMILIES = {
    "path": (path, "n"),
    "cycle": (cycle, "n"),
    "complete": (complete, "n"),
    "star": (star, "n"),
    "spider": (spider, "legs..."),
    "corona-path": (lambda n: corona(path(n)), "n"),
    "corona-cycle": (lambda n: corona(cycle(n)), "n"),
    "half-order-path": (lambda n: half_order_construction(path(n)), "n"),
    "grid": (lambda n, m: grid(n, m), "n m"),
    "cylinder": (lambda n, m: grid(n, m, wrap_cols=True), "n m"),
    "torus": (lambda n, m: grid(n, m, True, True), "n m"),
    "rook": (lambda n, m: cartesian_product(complete(n), complete(m)), "n m"),
    "g-d": (g_d_construction, "d"),
    "example-h": (example_h, ""),
    "example-w": (example_w, ""),
    "example-w-prism": (lambda: cartesian_product(example_w(), path(2)), ""),
    "spider-prism": (lambda: cartesian_product(spider([7, 2, 2, 2, 2, 2]), path(2)), ""),
    "interval-claw": (lambda: fig7_interval_graph()[0], ""),
}


def generate(family: str, params: list[str]) -> Graph:
    """Build a family member from string parameters (CLI entry point)."""
    if family == "family-a":
        if len(params) != 1:
            raise GraphError("family-a takes one index 0..6")
        return family_a()[int(params[0])].graph
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; choose from "
                         + ", ".join(sorted([*FAMILIES, "family-a"])))
    fn, sig = FAMILIES[family]
    ints = [int(p) for p in params]
    if family == "spider":
        return fn(ints)
    expected = len(sig.split())
    if len(ints) != expected:
        raise GraphError(f"{family} expects parameters: {sig or '(none)'}")
    return fn(*ints)


def leaves(G: Graph) -> list[int]:
    return [v for v in range(G.n) if G.adj[v] and not G.adj[v] & (G.adj[v] - 1)]


def unit_interval_path(n: int, step: Fraction = Fraction(9, 10)):
    """Unit representation of P_n with left endpoints 0, step, 2*step, ..."""
    from .unit_interval import IntervalRepresentation

    return IntervalRepresentation.unit([step * i for i in range(n)])


__all__ = [
    "path", "cycle", "complete", "star", "spider", "corona", "cartesian_product",
    "grid", "g_d_construction", "family_a", "example_h", "example_w",
    "fig7_interval_graph", "half_order_construction", "generate", "leaves",
]
