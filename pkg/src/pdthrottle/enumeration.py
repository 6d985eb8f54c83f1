"""Connected graphs up to isomorphism for small orders.

Every connected graph on n vertices has a non-cut vertex, so extending
each connected (n-1)-vertex graph by one vertex with a nonempty
neighborhood reaches every isomorphism class.  Candidates are bucketed by
a Weisfeiler-Lehman hash and compared exactly inside a bucket.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx

from .graph import Graph, build_graph

# connected graphs up to isomorphism, orders 1..8
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def to_networkx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def _edges_key(edges) -> tuple:
    return tuple(sorted(edges))


@lru_cache(maxsize=None)
def _connected_edge_lists(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n < 1:
        return ()
    if n == 1:
        return ((),)
    out: list[tuple] = []
    buckets: dict[str, list[nx.Graph]] = {}
    for base in _connected_edge_lists(n - 1):
        for size in range(1, n):
            for nbrs in combinations(range(n - 1), size):
                edges = list(base) + [(v, n - 1) for v in nbrs]
                g = nx.Graph()
                g.add_nodes_from(range(n))
                g.add_edges_from(edges)
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
                seen = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(g, h) for h in seen):
                    continue
                seen.append(g)
                out.append(_edges_key(edges))
    return tuple(out)


def _stored_edge_lists(n: int) -> tuple:
    """Edge lists for order n, read from or written to the cache directory."""
    if n <= 6:
        return _connected_edge_lists(n)
    from .store import default_cache_dir

    path = Path(default_cache_dir()) / f"connected-{n}.json"
    try:
        data = json.loads(path.read_text())
        if len(data) == KNOWN_COUNTS.get(n, len(data)):
            return tuple(tuple(tuple(e) for e in edges) for edges in data)
    except (OSError, ValueError):
        pass
    lists = _connected_edge_lists(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps([list(map(list, e)) for e in lists]))
        tmp.replace(path)
    except OSError:
        pass
    return lists


def connected_graphs(n: int, use_store: bool = True) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    lists = _stored_edge_lists(n) if use_store else _connected_edge_lists(n)
    return [build_graph(n, edges, name=f"conn{n}#{i}") for i, edges in enumerate(lists)]


def all_connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def labeled_graphs(n: int):
    """Every labeled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
