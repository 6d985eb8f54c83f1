"""Interval representations, the induced vertex order and its consequences.

Endpoints are :class:`fractions.Fraction` values so intersection and
distinctness tests are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .graph import Graph, GraphError, VertexSet, build_graph, closed_nbhd_mask, is_connected, iter_bits, popcount
from .propagation import PropagationTrace, forcing_chains


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        ends = [x for iv in self.intervals for x in iv]
        if len(set(ends)) != len(ends):
            raise GraphError("interval endpoints must be pairwise distinct")
        for left, right in self.intervals:
            if not left < right:
                raise GraphError(f"degenerate interval [{left}, {right}]")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> IntervalRepresentation:
        return cls(tuple((Fraction(a), Fraction(b)) for a, b in pairs))

    @classmethod
    def unit(cls, lefts: Iterable) -> IntervalRepresentation:
        return cls(tuple((Fraction(a), Fraction(a) + 1) for a in lefts))

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def is_unit(self) -> bool:
        return all(r - l == 1 for l, r in self.intervals)

    def left(self, v: int) -> Fraction:
        return self.intervals[v][0]

    def right(self, v: int) -> Fraction:
        return self.intervals[v][1]

    def order(self) -> list[int]:
        """Vertices sorted by left endpoint."""
        return sorted(range(self.n), key=lambda v: self.intervals[v][0])

    def positions(self) -> list[int]:
        pos = [0] * self.n
        for i, v in enumerate(self.order()):
            pos[v] = i
        return pos


def graph_from_intervals(rep: IntervalRepresentation) -> tuple[Graph, list[int]]:
    """Intersection graph of the intervals and the induced vertex order."""
    edges = []
    iv = rep.intervals
    for a in range(rep.n):
        for b in range(a + 1, rep.n):
            if iv[a][0] <= iv[b][1] and iv[b][0] <= iv[a][1]:
                edges.append((a, b))
    return build_graph(rep.n, edges, name="interval"), rep.order()


def _require_unit(rep: IntervalRepresentation) -> None:
    if not rep.is_unit:
        raise GraphError("a unit interval representation is required")


def greedy_domination(rep: IntervalRepresentation) -> VertexSet:
    """Greedy dominating set read off a unit representation.

    Take the least remaining vertex v in the induced order, add the
    greatest remaining vertex whose interval meets I(v), delete it with its
    neighbors, and repeat.
    """
    _require_unit(rep)
    G, order = graph_from_intervals(rep)
    if not is_connected(G):
        raise GraphError("greedy domination expects a connected representation")
    remaining = G.full
    chosen = 0
    while remaining:
        first = next(v for v in order if remaining >> v & 1)
        reach = [v for v in order if remaining >> v & 1 and (v == first or G.adj[first] >> v & 1)]
        pick = reach[-1]
        chosen |= 1 << pick
        remaining &= ~(G.adj[pick] | 1 << pick)
    return VertexSet(chosen, G.n)


def t_of_s(rep: IntervalRepresentation, G: Graph, S) -> VertexSet:
    """Least and greatest neighbor (in the induced order) of every vertex of S."""
    _require_unit(rep)
    pos = rep.positions()
    mask = S.bits if isinstance(S, VertexSet) else S if isinstance(S, int) else sum(1 << v for v in S)
    out = 0
    for s in iter_bits(mask):
        nbrs = list(iter_bits(G.adj[s]))
        if nbrs:
            out |= 1 << min(nbrs, key=pos.__getitem__)
            out |= 1 << max(nbrs, key=pos.__getitem__)
    return VertexSet(out, G.n)


def hat_s(rep: IntervalRepresentation, G: Graph, trace: PropagationTrace) -> VertexSet:
    """Dominating set of size at most |S| * t built from the rounds of a run.

    Even t: T(S) with rounds 3, 5, ..., t-1.  Odd t: S with rounds
    2, 4, ..., t-1.
    """
    _require_unit(rep)
    if not trace.total:
        raise GraphError("hat_s needs a power dominating set")
    t = trace.propagation_time
    if t < 2:
        raise GraphError("propagation time 1: the source already dominates")
    rounds = trace.rounds
    if t % 2 == 0:
        out = t_of_s(rep, G, trace.source).bits
        picks = range(3, t, 2)
    else:
        out = trace.source
        picks = range(2, t, 2)
    for i in picks:
        out |= rounds[i]
    return VertexSet(out, G.n)


def check_lemma_roundwidth(rep: IntervalRepresentation, trace: PropagationTrace) -> bool:
    """Every round k >= 2 has at most 2|S| vertices."""
    _require_unit(rep)
    cap = 2 * popcount(trace.source)
    return all(popcount(r) <= cap for r in trace.rounds[2:])


def check_lemma_backadjacency(rep: IntervalRepresentation, G: Graph, trace: PropagationTrace) -> bool:
    """Every vertex first observed in round k >= 1 has a neighbor observed in round k-1."""
    _require_unit(rep)
    rounds = trace.rounds
    for k in range(1, len(rounds)):
        prev = rounds[k - 1]
        for v in iter_bits(rounds[k]):
            if not G.adj[v] & prev:
                return False
    return True


def check_chain_monotone(rep: IntervalRepresentation, trace: PropagationTrace) -> bool:
    """Forcing chains run monotonically in the induced order after their first step.

    For a chain v_0 -> ... -> v_i with i >= 2 and rd(v_i) = k, every u
    between v_0 (inclusive) and v_i (exclusive) must have rd(u) <= k-1;
    the mirrored statement is checked for decreasing chains.
    """
    _require_unit(rep)
    pos = rep.positions()
    order = rep.order()
    rd = trace.round_of
    for chain in forcing_chains(trace):
        if len(chain) < 3:
            continue
        p = [pos[v] for v in chain]
        step = 1 if p[1] > p[0] else -1
        for i in range(2, len(chain)):
            if (p[i] - p[i - 1]) * step <= 0:
                return False
            k = rd[chain[i]]
            lo, hi = (p[0], p[i]) if step > 0 else (p[i] + 1, p[0] + 1)
            for q in range(lo, hi):
                r = rd[order[q]]
                if r is None or r > k - 1:
                    return False
    return True


def lemma_dominates_early_rounds(rep: IntervalRepresentation, G: Graph, trace: PropagationTrace) -> bool:
    """T(S) dominates the source and the first two rounds."""
    T = t_of_s(rep, G, trace.source).bits
    target = trace.source
    for r in trace.rounds[1:3]:
        target |= r
    return target & ~closed_nbhd_mask(G.adj, T) == 0


def random_unit_representation(n: int, rng: random.Random, denominator: int = 64,
                               max_tries: int = 10000) -> IntervalRepresentation:
    """Connected unit representation with n distinct rational lefts in [0, n/2].

    Vertex i is the i-th interval in the induced order.
    """
    span = n * denominator // 2
    for _ in range(max_tries):
        lefts = sorted(rng.sample(range(span + 1), n))
        if any(b - a >= denominator for a, b in zip(lefts, lefts[1:])):
            continue  # gap of a full unit disconnects or touches
        lset = set(lefts)
        if any(a + denominator in lset for a in lefts):
            continue
        return IntervalRepresentation.unit(Fraction(a, denominator) for a in lefts)
    raise RuntimeError("could not sample a connected unit representation")


def parse_intervals(text: str) -> IntervalRepresentation:
    """One interval per line: ``left right`` where each is an integer or ``p/q``."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'left right', got {s!r}")
        try:
            pairs.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise GraphError(f"line {lineno}: bad rational in {s!r}") from None
    return IntervalRepresentation.from_pairs(pairs)


def format_intervals(rep: IntervalRepresentation) -> str:
    def fmt(x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator}"

    return "".join(f"{fmt(l)} {fmt(r)}\n" for l, r in rep.intervals)


def read_intervals(path: str | Path) -> IntervalRepresentation:
    return parse_intervals(Path(path).read_text())


def has_induced_claw(G: Graph, vertices: Sequence[int]) -> bool:
    """True when the four given vertices induce K_{1,3}."""
    sub = set(vertices)
    for c in vertices:
        others = [v for v in vertices if v != c]
        if all(G.adj[c] >> v & 1 for v in others) and not any(
            G.adj[a] >> b & 1 for i, a in enumerate(others) for b in others[i + 1:]
        ):
            return len(sub) == 4
    return False
