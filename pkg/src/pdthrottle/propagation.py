"""Power domination and zero forcing as synchronous round processes.

The round partition is computed set-algebraically and does not depend on
which vertex is credited with a force.  Force records are an annotation
layer with a fixed tie-break: the lowest-indexed eligible forcer wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from .graph import Graph, GraphError, VertexSet, iter_bits, popcount, to_mask

INFINITY = math.inf


class ForceKind(str, Enum):
    DOMINATION = "domination"
    ZERO = "zero"


@dataclass(frozen=True)
class ForceEvent:
    forcer: int
    forced: int
    round: int
    kind: ForceKind


@dataclass(frozen=True)
class PropagationTrace:
    """Complete record of one run from a source set.

    ``rounds[i]`` holds the vertices first observed in round ``i`` (round 0
    is the source).  ``round_of[v]`` is None for vertices never observed.
    """

    n: int
    source: int
    rounds: tuple[int, ...]
    forces: tuple[ForceEvent, ...]
    total: bool
    domination_step: bool = True

    @property
    def observed_prefix(self) -> list[int]:
        out, acc = [], 0
        for r in self.rounds:
            acc |= r
            out.append(acc)
        return out

    @property
    def observed(self) -> int:
        acc = 0
        for r in self.rounds:
            acc |= r
        return acc

    @property
    def round_of(self) -> list[int | None]:
        rd: list[int | None] = [None] * self.n
        for i, r in enumerate(self.rounds):
            for v in iter_bits(r):
                rd[v] = i
        return rd

    @property
    def terminal(self) -> str:
        return "total" if self.total else "stalled"

    @property
    def propagation_time(self) -> float | int:
        if not self.total:
            return INFINITY
        return max(1, len(self.rounds) - 1) if self.domination_step else len(self.rounds) - 1

    def round_sets(self) -> list[VertexSet]:
        return [VertexSet(r, self.n) for r in self.rounds]

    def to_dict(self) -> dict:
        pt = self.propagation_time
        return {
            "source": sorted(iter_bits(self.source)),
            "rounds": [sorted(iter_bits(r)) for r in self.rounds],
            "terminal": self.terminal,
            "propagation_time": pt if pt != INFINITY else "inf",
            "forces": [
                {"forcer": f.forcer, "forced": f.forced, "round": f.round, "kind": f.kind.value}
                for f in self.forces
            ],
        }


def _zero_force_round(adj: tuple[int, ...], obs: int, active: int) -> tuple[int, int]:
    """One synchronous zero forcing round.

    ``active`` holds observed vertices that may still have unobserved
    neighbors.  Returns the newly observed set and the updated active set.
    """
    new = 0
    still = 0
    m = active
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        white = adj[u] & ~obs
        if white:
            still |= low
            if not white & (white - 1):
                new |= white
    return new, still


def _round_masks(adj, full, source, dominate=True):
    rounds = [source]
    obs = source
    if dominate:
        nb = source
        for v in iter_bits(source):
            nb |= adj[v]
        rounds.append(nb & ~source)
        obs = nb
    active = obs
    while obs != full:
        new, active = _zero_force_round(adj, obs, active)
        if not new:
            break
        rounds.append(new)
        obs |= new
        active |= new
    return rounds, obs == full


def _assign_forces(adj, rounds, dominate=True) -> list[ForceEvent]:
    forces = []
    start = 1
    obs = rounds[0]
    if dominate:
        src = rounds[0]
        for w in iter_bits(rounds[1]):
            x = (adj[w] & src & -(adj[w] & src)).bit_length() - 1
            forces.append(ForceEvent(x, w, 1, ForceKind.DOMINATION))
        obs |= rounds[1]
        start = 2
    for i in range(start, len(rounds)):
        pending = rounds[i]
        for u in iter_bits(obs):
            white = adj[u] & ~obs
            if white and not white & (white - 1) and white & pending:
                w = white.bit_length() - 1
                forces.append(ForceEvent(u, w, i, ForceKind.ZERO))
                pending &= ~white
                if not pending:
                    break
        obs |= rounds[i]
    forces.sort(key=lambda f: (f.round, f.forced))
    return forces


def _check_source(G: Graph, S) -> int:
    mask = to_mask(S)
    if mask >> G.n:
        raise GraphError("source set has vertices outside the graph")
    return mask


def propagate(G: Graph, S: Iterable[int] | VertexSet | int) -> PropagationTrace:
    """Run power domination from ``S``: domination step, then zero forcing rounds."""
    mask = _check_source(G, S)
    if not mask:
        raise GraphError("power domination needs a nonempty source set")
    rounds, total = _round_masks(G.adj, G.full, mask)
    forces = _assign_forces(G.adj, rounds)
    return PropagationTrace(G.n, mask, tuple(rounds), tuple(forces), total)


def zero_forcing_propagate(G: Graph, B: Iterable[int] | VertexSet | int) -> PropagationTrace:
    """Synchronous zero forcing from the blue set ``B`` (no domination step)."""
    mask = _check_source(G, B)
    rounds, total = _round_masks(G.adj, G.full, mask, dominate=False)
    forces = _assign_forces(G.adj, rounds, dominate=False)
    return PropagationTrace(G.n, mask, tuple(rounds), tuple(forces), total, domination_step=False)


def power_propagation_time(G: Graph, S) -> int | float:
    mask = _check_source(G, S)
    if not mask:
        raise GraphError("power domination needs a nonempty source set")
    return pt_mask(G.adj, G.full, mask)


def pt_mask(adj: tuple[int, ...], full: int, source: int, limit: int | float = INFINITY):
    """Propagation time of ``source``; INFINITY when it stalls.

    With a finite ``limit`` the run is abandoned as soon as the time is
    known to be at least ``limit``, and ``limit`` is returned.
    """
    obs = source
    for v in iter_bits(source):
        obs |= adj[v]
    if obs == full:
        return 1
    t = 1
    active = obs
    while True:
        if t + 1 >= limit:
            return limit
        new, active = _zero_force_round(adj, obs, active)
        if not new:
            return INFINITY
        obs |= new
        active |= new
        t += 1
        if obs == full:
            return t


def is_power_dominating(G: Graph, S) -> bool:
    return pt_mask(G.adj, G.full, _check_source(G, S)) != INFINITY


def forcing_chains(trace: PropagationTrace) -> list[list[int]]:
    """Maximal chains of the recorded forces, one per source vertex that starts one.

    Each chain begins at a vertex of the starting set; every other vertex
    lies on exactly one chain.  In power domination a source vertex may
    perform several domination forces, so it can start several chains.
    """
    if not trace.total:
        raise GraphError("forcing chains are defined only for a complete run")
    children: dict[int, list[int]] = {}
    for f in trace.forces:
        children.setdefault(f.forcer, []).append(f.forced)
    chains = []

    def walk(v: int, chain: list[int]) -> None:
        kids = children.get(v, [])
        if not kids:
            chains.append(chain)
        else:
            # only a source vertex can force more than once
            walk(kids[0], chain + [kids[0]])

    for s in iter_bits(trace.source):
        kids = children.get(s, [])
        if not kids:
            chains.append([s])
        for k in kids:
            walk(k, [s, k])
    return chains


def q_sets(trace: PropagationTrace) -> dict[int, int]:
    """Group round-2 vertices by the source vertex starting their chain.

    Returns a map from source vertex ``x`` to the mask of ``Q_x``.  Only
    sources with nonempty ``Q_x`` appear.
    """
    f0, _ = second_round_origins(trace)
    out: dict[int, int] = {}
    for w, x in f0.items():
        out[x] = out.get(x, 0) | (1 << w)
    return out


def second_round_origins(trace: PropagationTrace) -> tuple[dict[int, int], dict[int, int]]:
    """Maps f0 (chain start in S) and f1 (chain middle in round 1) on round-2 vertices."""
    if not trace.total:
        raise GraphError("Q-sets are defined only for a complete run")
    forcer = {f.forced: f.forcer for f in trace.forces}
    f0, f1 = {}, {}
    if len(trace.rounds) > 2:
        for w in iter_bits(trace.rounds[2]):
            mid = forcer[w]
            f1[w] = mid
            f0[w] = forcer[mid]
    return f0, f1


def reassign_forces_grid(G: Graph, trace: PropagationTrace) -> PropagationTrace:
    """Move domination forces so every source starts at most three length-2 chains.

    For a source x whose Q-set has four members, take a chain
    x -> y -> w with y a grid neighbor of x.  A diagonal neighbor of x that
    is adjacent to y and lies in S takes over the force onto y; it is chosen
    so its own Q-set stays within three.  The round partition is untouched.
    """
    info = G.grid
    if info is None:
        raise GraphError("reassign_forces_grid needs a grid graph (J_n box J_m)")
    if not trace.total:
        raise GraphError("cannot reassign forces of a stalled run")
    forces = {f.forced: f for f in trace.forces}
    source = trace.source

    def qsizes() -> dict[int, list[int]]:
        q: dict[int, list[int]] = {}
        if len(trace.rounds) > 2:
            for w in iter_bits(trace.rounds[2]):
                mid = forces[w].forcer
                q.setdefault(forces[mid].forcer, []).append(w)
        return q

    changed = True
    guard = 0
    while changed:
        changed = False
        guard += 1
        if guard > 4 * G.n + 4:
            raise RuntimeError("force reassignment did not settle")
        q = qsizes()
        for x in sorted(q):
            if len(q[x]) <= 3:
                continue
            for w in sorted(q[x]):
                y = forces[w].forcer
                cand = _diagonal_takers(G, x, y) + sorted(
                    iter_bits(G.adj[y] & source & ~(1 << x))
                )
                for s in dict.fromkeys(cand):
                    if not source >> s & 1 or not G.adj[y] >> s & 1:
                        continue
                    if len(q.get(s, [])) + 1 <= 3:
                        forces[y] = replace(forces[y], forcer=s)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    new_forces = sorted(forces.values(), key=lambda f: (f.round, f.forced))
    return replace(trace, forces=tuple(new_forces))


def credit_domination(G: Graph, trace: PropagationTrace, priority) -> PropagationTrace:
    """Re-credit every domination force to the first S-neighbor in ``priority``.

    ``priority`` lists source vertices; sources missing from it rank last
    in index order.  Rounds and zero forces are untouched.
    """
    rank = {v: i for i, v in enumerate(priority)}
    src = trace.source
    out = []
    for f in trace.forces:
        if f.kind is ForceKind.DOMINATION:
            cands = list(iter_bits(G.adj[f.forced] & src))
            best = min(cands, key=lambda v: (rank.get(v, len(rank)), v))
            f = replace(f, forcer=best)
        out.append(f)
    return replace(trace, forces=tuple(out))


def _diagonal_takers(G: Graph, x: int, y: int) -> list[int]:
    """Vertices diagonal to x that are grid neighbors of y, in west/east order."""
    info = G.grid
    rx, cx = info.coords(x)
    ry, cy = info.coords(y)
    dr, dc = ry - rx, cy - cx
    if info.wrap_rows and abs(dr) > 1:
        dr = -1 if dr > 0 else 1
    if info.wrap_cols and abs(dc) > 1:
        dc = -1 if dc > 0 else 1
    if dr:
        offsets = [(dr, -1), (dr, 1)]
    else:
        offsets = [(-1, dc), (1, dc)]
    out = []
    for a, b in offsets:
        v = info.vertex(rx + a, cx + b)
        if v is not None:
            out.append(v)
    return out


def check_trace(G: Graph, trace: PropagationTrace) -> list[str]:
    """Replay a trace and list violated invariants (empty when sound)."""
    problems = []
    rounds = trace.rounds
    if rounds[0] != trace.source:
        problems.append("round 0 differs from source")
    acc = 0
    for i, r in enumerate(rounds):
        if acc & r:
            problems.append(f"round {i} overlaps earlier rounds")
        acc |= r
    if trace.total and acc != G.full:
        problems.append("total run does not cover V(G)")
    if trace.domination_step and len(rounds) > 1:
        width = popcount(rounds[1])
        for i in range(2, len(rounds)):
            if popcount(rounds[i]) > width:
                problems.append(f"round {i} wider than round 1")
            if not rounds[i]:
                problems.append(f"empty intermediate round {i}")
    rd = trace.round_of
    obs_before = {}
    acc = 0
    for i, r in enumerate(rounds):
        obs_before[i] = acc
        acc |= r
    for f in trace.forces:
        if rd[f.forcer] is None or rd[f.forced] != f.round or rd[f.forcer] >= f.round:
            problems.append(f"force {f} is not propagating")
            continue
        if f.kind is ForceKind.DOMINATION:
            if f.round != 1 or not trace.source >> f.forcer & 1 or not G.adj[f.forcer] >> f.forced & 1:
                problems.append(f"bad domination force {f}")
        else:
            white = G.adj[f.forcer] & ~obs_before[f.round]
            if white != 1 << f.forced:
                problems.append(f"zero force {f} is not a unique-neighbor force")
    keys = [(f.round, f.forced) for f in trace.forces]
    if keys != sorted(keys):
        problems.append("force list not in propagating order")
    return problems
