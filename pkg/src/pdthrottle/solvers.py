"""Exact solvers for domination, power domination and power throttling.

All searches enumerate vertex subsets by cardinality and, within a
cardinality, in lexicographic order of sorted vertex tuples.  Witnesses are
the first optimum met in that order, so results are reproducible and the
serial and pooled searches agree.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    is_connected,
    iter_bits,
    max_degree,
    min_degree,
    popcount,
    require_connected,
)
from .propagation import INFINITY, pt_mask


class BudgetExceeded(RuntimeError):
    """A solver ran past its wall-clock deadline."""


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


@dataclass(frozen=True)
class KEntry:
    """Best propagation time found at one cardinality.

    ``exact`` is False when every k-set was cut by the incumbent; ``pt`` is
    then only a lower bound on pt_pd(G, k).
    """

    k: int
    pt: int | float
    exact: bool

    @property
    def product(self) -> int | float:
        return self.k * self.pt

    @property
    def total(self) -> int | float:
        return self.k + self.pt


@dataclass
class ThrottlingResult:
    mode: str  # "product" or "sum"
    value: int
    witness: VertexSet
    witness_time: int
    per_k: dict[int, KEntry] = field(default_factory=dict)
    pruning_log: list[str] = field(default_factory=list)
    gamma: int | None = None
    gamma_p: int | None = None

    def to_dict(self) -> dict:
        def num(x):
            return "inf" if x == INFINITY else x

        return {
            "mode": self.mode,
            "value": self.value,
            "witness": self.witness.sorted(),
            "witness_time": self.witness_time,
            "gamma": self.gamma,
            "gamma_p": self.gamma_p,
            "per_k": {
                str(k): {"pt": num(e.pt), "exact": e.exact,
                         "value": num(e.product if self.mode == "product" else e.total)}
                for k, e in sorted(self.per_k.items())
            },
            "pruning_log": list(self.pruning_log),
        }


# -- domination -------------------------------------------------------------

def delta_lower_bound(G: Graph) -> int:
    return -(-G.n // (max_degree(G) + 1))


def _greedy_dominating(closed: list[int], full: int) -> int:
    undom = full
    chosen = 0
    while undom:
        best_v, best_c = -1, -1
        for v, c in enumerate(closed):
            cov = (c & undom).bit_count()
            if cov > best_c:
                best_v, best_c = v, cov
        chosen |= 1 << best_v
        undom &= ~closed[best_v]
    return chosen


def is_dominating(G: Graph, S) -> bool:
    mask = S.bits if isinstance(S, VertexSet) else S if isinstance(S, int) else sum(1 << v for v in S)
    obs = mask
    for v in iter_bits(mask):
        obs |= G.adj[v]
    return obs == G.full


def domination_number(G: Graph, deadline: float | None = None) -> tuple[int, VertexSet]:
    """Exact domination number by branch and bound.

    Branches on the undominated vertex with the fewest admissible
    dominators; a vertex rejected in one branch is forbidden in the later
    ones.  The bound counts how many of the largest remaining coverages
    are needed to reach the undominated count.
    """
    require_connected(G)
    n = G.n
    closed = [G.adj[v] | 1 << v for v in range(n)]
    incumbent = _greedy_dominating(closed, G.full)
    best = [popcount(incumbent), incumbent]
    if best[0] == delta_lower_bound(G):
        return best[0], VertexSet(incumbent, n)
    dominators = [closed[v] for v in range(n)]  # u dominates v iff u in N[v]
    calls = [0]

    def bound(undom: int, allowed: int) -> int:
        need = undom.bit_count()
        covs = sorted(((closed[u] & undom).bit_count() for u in iter_bits(allowed)), reverse=True)
        k = 0
        for c in covs:
            if need <= 0 or c == 0:
                break
            need -= c
            k += 1
        return k if need <= 0 else n + 1

    def search(undom: int, chosen: int, count: int, forbidden: int) -> None:
        calls[0] += 1
        if not calls[0] & 1023:
            _check_deadline(deadline)
        if not undom:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        if count + 1 >= best[0]:
            return
        allowed = ~forbidden & G.full & ~chosen
        if count + bound(undom, allowed) >= best[0]:
            return
        pick, pick_opts = -1, None
        for v in iter_bits(undom):
            opts = dominators[v] & allowed
            c = opts.bit_count()
            if pick_opts is None or c < pick_opts.bit_count():
                pick, pick_opts = v, opts
                if c <= 1:
                    break
        if not pick_opts:
            return
        order = sorted(iter_bits(pick_opts), key=lambda u: (-(closed[u] & undom).bit_count(), u))
        for u in order:
            search(undom & ~closed[u], chosen | 1 << u, count + 1, forbidden)
            forbidden |= 1 << u

    search(G.full, 0, 0, 0)
    return best[0], VertexSet(best[1], n)


# -- power domination -------------------------------------------------------

def _masks(n: int, k: int):
    bits = [1 << i for i in range(n)]
    for combo in combinations(bits, k):
        yield sum(combo)


def power_domination_number(G: Graph, deadline: float | None = None) -> tuple[int, VertexSet]:
    """Smallest k admitting a power dominating k-set, with the first such set."""
    require_connected(G)
    adj, full = G.adj, G.full
    for k in range(1, G.n + 1):
        for i, mask in enumerate(_masks(G.n, k)):
            if not i & 1023:
                _check_deadline(deadline)
            if pt_mask(adj, full, mask) != INFINITY:
                return k, VertexSet(mask, G.n)
    raise GraphError("no power dominating set found")  # unreachable for n >= 1


def pt_pd_k(G: Graph, k: int, deadline: float | None = None) -> tuple[int | float, VertexSet | None]:
    """Minimum propagation time over all k-sets and the first set attaining it."""
    if not 1 <= k <= G.n:
        raise GraphError(f"cardinality {k} outside 1..{G.n}")
    adj, full = G.adj, G.full
    best, witness = INFINITY, None
    for i, mask in enumerate(_masks(G.n, k)):
        if not i & 1023:
            _check_deadline(deadline)
        t = pt_mask(adj, full, mask, best)
        if t < best:
            best, witness = t, mask
            if t == 1:
                break
    return best, (VertexSet(witness, G.n) if witness is not None else None)


def pt_pd(G: Graph) -> int:
    """Power propagation time of G: best time among minimum power dominating sets."""
    gp, _ = power_domination_number(G)
    return pt_pd_k(G, gp)[0]


def product_throttling_k(G: Graph, k: int) -> int | float:
    return k * pt_pd_k(G, k)[0]


# -- throttling core --------------------------------------------------------

def _unrank(n: int, k: int, rank: int) -> list[int]:
    """The rank-th k-subset of range(n) in lexicographic order."""
    out, x = [], 0
    for slot in range(k, 0, -1):
        while True:
            c = comb(n - x - 1, slot - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return out


def _scan_range(adj, full, n, k, start, count, limit_of, deadline=None):
    """Scan k-subsets of ranks [start, start+count) for times below the limit.

    ``limit_of()`` returns the current pruning limit on the propagation
    time; it may shrink while scanning.  Returns (pt, rank, mask) of the
    first strict improvement chain's final element, or None.
    """
    best = None
    combo = _unrank(n, k, start)
    for i in range(count):
        if not i & 1023:
            _check_deadline(deadline)
        mask = 0
        for v in combo:
            mask |= 1 << v
        lim = limit_of()
        if best is not None and best[0] < lim:
            lim = best[0]
        if lim > 1:
            t = pt_mask(adj, full, mask, lim)
            if t < lim:
                best = (t, start + i, mask)
        # advance to the next combination in lexicographic order
        j = k - 1
        while j >= 0 and combo[j] == n - k + j:
            j -= 1
        if j < 0:
            break
        combo[j] += 1
        for r in range(j + 1, k):
            combo[r] = combo[r - 1] + 1
    return best


# process-pool plumbing; the shared incumbent lives in a multiprocessing.Value
_SHARED = {}


def _pool_init(shared_best, adj, full, n):
    _SHARED.update(best=shared_best, adj=adj, full=full, n=n)


def _pool_task(args):
    mode, k, start, count, deadline = args
    shared = _SHARED["best"]
    adj, full, n = _SHARED["adj"], _SHARED["full"], _SHARED["n"]

    # ties are kept (strict '>' pruning) so the merge can pick the earliest rank
    def limit_of():
        b = shared.value
        return b // k + 1 if mode == "product" else b - k + 1

    hit = _scan_range(adj, full, n, k, start, count, limit_of, deadline)
    if hit is not None:
        value = k * hit[0] if mode == "product" else k + hit[0]
        with shared.get_lock():
            if value < shared.value:
                shared.value = value
    return hit


def _throttle(G: Graph, mode: str, workers: int = 1, deadline: float | None = None,
              chunk: int = 20000) -> ThrottlingResult:
    require_connected(G)
    n, adj, full = G.n, G.adj, G.full
    gamma, dom = domination_number(G, deadline)
    gamma_p, _ = power_domination_number(G, deadline)
    seed_time = 1
    best_val = gamma * seed_time if mode == "product" else gamma + seed_time
    best_set, best_time = dom.bits, seed_time
    log = [f"seed: minimum dominating set gives {best_val}"]
    per_k: dict[int, KEntry] = {gamma: KEntry(gamma, 1, True)}
    floor_val = delta_lower_bound(G) if mode == "product" else 2
    pool = None
    shared = None
    if workers > 1:
        import multiprocessing as mp

        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        shared = ctx.Value("q", best_val)
        pool = ctx.Pool(workers, initializer=_pool_init, initargs=(shared, adj, full, n))
    try:
        k = gamma_p
        while True:
            if best_val <= floor_val:
                log.append(f"stop: incumbent {best_val} meets the lower bound {floor_val}")
                break
            if k >= gamma:
                log.append(f"stop: k={k} reaches the domination number")
                break
            # k < gamma, so every k-set needs at least two rounds
            if (mode == "product" and 2 * k >= best_val) or (mode == "sum" and k + 2 >= best_val):
                log.append(f"stop: k={k} cannot beat {best_val} with two or more rounds")
                break
            limit = -(-best_val // k) if mode == "product" else best_val - k
            total = comb(n, k)
            if pool is None:
                def limit_of(k=k):
                    return -(-best_val // k) if mode == "product" else best_val - k
                hit = _scan_range(adj, full, n, k, 0, total, limit_of, deadline)
            else:
                shared.value = best_val
                tasks = [(mode, k, s, min(chunk, total - s), deadline)
                         for s in range(0, total, chunk)]
                hits = [h for h in pool.map(_pool_task, tasks) if h is not None]
                hit = None
                for h in hits:
                    if hit is None or (h[0], h[1]) < (hit[0], hit[1]):
                        hit = h
                if hit is not None and not hit[0] < limit:
                    hit = None
            if hit is None:
                per_k[k] = KEntry(k, limit, False)
                log.append(f"k={k}: all {total} sets cut at time >= {limit}")
            else:
                t, _, mask = hit
                per_k[k] = KEntry(k, t, True)
                best_val = k * t if mode == "product" else k + t
                best_set, best_time = mask, t
                log.append(f"k={k}: improved to {best_val} (time {t})")
            k += 1
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return ThrottlingResult(mode, best_val, VertexSet(best_set, n), best_time, per_k, log,
                            gamma=gamma, gamma_p=gamma_p)


def product_throttling(G: Graph, workers: int = 1, deadline: float | None = None) -> ThrottlingResult:
    """Exact th_pd^x(G) = min |S| * pt_pd(G; S), seeded with a minimum dominating set."""
    return _throttle(G, "product", workers, deadline)


def sum_throttling(G: Graph, workers: int = 1, deadline: float | None = None) -> ThrottlingResult:
    """Exact th_pd(G) = min |S| + pt_pd(G; S)."""
    return _throttle(G, "sum", workers, deadline)


def naive_throttling(G: Graph, mode: str = "product") -> tuple[int, int]:
    """Unpruned minimum over every nonempty subset; returns (value, mask).

    Independent reference for small graphs only.
    """
    from .propagation import propagate

    best = (math.inf, 0)
    for mask in range(1, 1 << G.n):
        t = propagate(G, mask).propagation_time
        size = popcount(mask)
        value = size * t if mode == "product" else size + t
        if value < best[0]:
            best = (value, mask)
    return best


# -- structural reports -----------------------------------------------------

@dataclass
class ConditionReport:
    n: int
    gamma: int
    gamma_p: int
    min_degree: int
    max_degree: int
    fired: dict[str, bool]
    thpdx: int | None = None

    @property
    def any_fired(self) -> bool:
        return any(self.fired.values())


def equality_conditions(G: Graph, compute_throttling: bool = True) -> ConditionReport:
    """Evaluate the sufficient conditions for th_pd^x(G) = gamma(G).

    When any condition fires and ``compute_throttling`` is set, the exact
    throttling number is computed and checked against gamma.
    """
    require_connected(G)
    n = G.n
    gamma, _ = domination_number(G)
    gp, _ = power_domination_number(G)
    dmin, dmax = min_degree(G), max_degree(G)
    fired = {
        "gamma_meets_degree_bound": gamma == -(-n // (dmax + 1)),
        "gamma_p_equals_gamma": gp == gamma,
        "gamma_p_at_least_half_gamma": 2 * gp >= gamma,
        "gamma_p_at_least_quarter_order": n >= 2 and 4 * gp >= n,
        "mindeg2_gamma_p_at_least_fifth_order": dmin >= 2 and 5 * gp >= n,
        "mindeg3_gamma_p_at_least_3n_over_16": dmin >= 3 and 16 * gp >= 3 * n,
    }
    report = ConditionReport(n, gamma, gp, dmin, dmax, fired)
    if compute_throttling and report.any_fired:
        report.thpdx = product_throttling(G).value
        if report.thpdx != gamma:
            raise AssertionError(
                f"{G!r}: conditions {[k for k, v in fired.items() if v]} fired "
                f"but th_pd^x = {report.thpdx} != gamma = {gamma}"
            )
    return report


@dataclass
class LowReport:
    gamma_is_two: bool
    single_vertex_time_two: bool
    thpdx: int

    @property
    def predicts_two(self) -> bool:
        return self.gamma_is_two or self.single_vertex_time_two

    @property
    def consistent(self) -> bool:
        return (self.thpdx == 2) == self.predicts_two


def characterize_low(G: Graph) -> LowReport:
    """Test the two routes to th_pd^x(G) = 2 and compare with the exact value."""
    require_connected(G)
    gamma, _ = domination_number(G)
    gp, _ = power_domination_number(G)
    cond_b = gp == 1 and pt_pd_k(G, 1)[0] == 2
    th = product_throttling(G).value
    return LowReport(gamma == 2, cond_b, th)


def corona_core(G: Graph) -> list[int] | None:
    """Vertices of H when G = H o K_1 for a connected H, else None.

    P_2 is K_1 o K_1; its core is taken to be vertex 0.
    """
    if G.n < 2 or G.n % 2 or not is_connected(G):
        return None
    if G.n == 2:
        return [0]
    deg = [popcount(a) for a in G.adj]
    leaf_mask = sum(1 << v for v in range(G.n) if deg[v] == 1)
    core = [v for v in range(G.n) if deg[v] != 1]
    if 2 * len(core) != G.n:
        return None
    for v in core:
        if popcount(G.adj[v] & leaf_mask) != 1:
            return None
    return core


def recognize_half_order(G: Graph) -> str | None:
    """Classify G among the graphs whose throttling number is half the order.

    Returns "double-corona" for (H o K_1) o K_1 with H connected,
    "c4-corona" for C_4 o K_1, "c4" for C_4, "k1-corona" for P_2 (the
    order-two case K_1 o K_1), or None.
    """
    from .graph import induced_subgraph

    if G.n == 2 and G.m == 1:
        return "k1-corona"
    if _is_c4(G):
        return "c4"
    core = corona_core(G)
    if core is None:
        return None
    inner = induced_subgraph(G, core)
    if _is_c4(inner):
        return "c4-corona"
    if inner.n >= 2 and corona_core(inner) is not None:
        return "double-corona"
    return None


def _is_c4(G: Graph) -> bool:
    return G.n == 4 and G.m == 4 and all(popcount(a) == 2 for a in G.adj) and is_connected(G)
