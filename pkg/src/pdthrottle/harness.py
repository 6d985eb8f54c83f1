"""Verification suites and parameter tables.

A suite expands into case specifications.  Each case names a task (a
module-level function, so cases can be shipped to worker processes), the
expected value and where that value comes from:

* ``published``: a value stated in the literature; disagreement is a
  *mismatch*, reported with both values and never patched.
* ``derived``: a value computed independently here (formula, oracle or
  structural check); disagreement is a *fail*.
* ``trivial``: follows from definitions; disagreement is a *fail*.

Cases that run past the per-case budget are reported as *skipped*.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable

from . import generators as gen
from .enumeration import connected_graphs
from .graph import Graph, GraphError, iter_bits, max_degree, min_degree, popcount
from .propagation import (
    INFINITY,
    check_trace,
    credit_domination,
    is_power_dominating,
    propagate,
    pt_mask,
    q_sets,
    reassign_forces_grid,
)
from .solvers import (
    BudgetExceeded,
    characterize_low,
    domination_number,
    equality_conditions,
    is_dominating,
    naive_throttling,
    power_domination_number,
    product_throttling,
    pt_pd_k,
    recognize_half_order,
    sum_throttling,
)
from .store import ResultsStore

PUBLISHED, DERIVED, TRIVIAL = "published", "derived", "trivial"
DEFAULT_BUDGET = 600.0

FINITE_RANGE_NOTE = (
    "Statements quantified over all orders (for example th_pd^x = gamma on every "
    "grid, cylinder and torus) are verified here only on the finite ranges listed "
    "in this report; exact search does not reach the general case."
)


# -- report types -----------------------------------------------------------

@dataclass(frozen=True)
class CaseSpec:
    instance: str
    quantity: str
    source: str
    expected: Any
    citation: str
    task: str
    args: tuple = ()


@dataclass
class Case:
    instance: str
    quantity: str
    source: str
    expected: Any
    computed: Any
    status: str
    citation: str = ""
    seconds: float = 0.0
    note: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "instance": self.instance,
            "quantity": self.quantity,
            "source": self.source,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
        }
        if self.citation:
            d["citation"] = self.citation
        if self.note:
            d["note"] = self.note
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[Case]
    notes: list[str] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "mismatch": 0, "skipped": 0}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["mismatch"] == 0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "summary": self.summary,
            "notes": list(self.notes),
            "cases": [c.to_dict(timing) for c in self.cases],
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def format_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.cases:
            tag = c.status.upper()
            line = f"  [{tag}] {c.instance} :: {c.quantity} expected={_short(c.expected)}"
            if c.status != "pass":
                line += f" computed={_short(c.computed)}"
            if c.status == "mismatch" and c.citation:
                line += f" ({c.citation})"
            lines.append(line)
        s = self.summary
        lines.append(
            f"  summary: {s['pass']} pass, {s['fail']} fail, {s['mismatch']} mismatch, "
            f"{s['skipped']} skipped"
        )
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _short(x: Any, width: int = 80) -> str:
    text = json.dumps(x, sort_keys=True)
    return text if len(text) <= width else text[: width - 3] + "..."


def _plain(x: Any) -> Any:
    """JSON-shaped copy: tuples become lists, infinity becomes "inf"."""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


# -- execution context --------------------------------------------------------

_CTX: dict[str, Any] = {"store": None, "deadline": None}


def _deadline() -> float | None:
    return _CTX["deadline"]


def _solve(G: Graph, param: str) -> Any:
    dl = _deadline()
    if param == "gamma":
        return domination_number(G, dl)[0]
    if param == "gammap":
        return power_domination_number(G, dl)[0]
    if param == "pt":
        return _plain(pt_pd_k(G, measure(G, "gammap"), dl)[0])
    if param.startswith("pt_k="):
        return _plain(pt_pd_k(G, int(param[5:]), dl)[0])
    if param in ("thpdx", "thpd"):
        fn = product_throttling if param == "thpdx" else sum_throttling
        res = fn(G, deadline=dl)
        return {"value": res.value, "witness": res.witness.sorted(), "time": res.witness_time}
    raise GraphError(f"unknown parameter {param!r}")


def measure(G: Graph, param: str) -> Any:
    """Solver value through the results store when one is active."""
    store: ResultsStore | None = _CTX["store"]
    if store is None:
        return _solve(G, param)
    return store.fetch(G, param, lambda: _solve(G, param))


def value(G: Graph, param: str) -> Any:
    v = measure(G, param)
    return v["value"] if isinstance(v, dict) else v


def _check_time() -> None:
    dl = _deadline()
    if dl is not None and time.monotonic() > dl:
        raise BudgetExceeded("time budget exhausted")


# -- tasks --------------------------------------------------------------------

TASKS: dict[str, Callable[..., Any]] = {}


def task(fn: Callable[..., Any]) -> Callable[..., Any]:
    TASKS[fn.__name__] = fn
    return fn


@dataclass(frozen=True)
class Detailed:
    """Task result carrying a human-readable note alongside the value."""

    value: Any
    note: str


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def path_sum_formula(n: int) -> int:
    """Least t with t >= sqrt(2n) - 1/2, in integer arithmetic: (2t+1)^2 >= 8n."""
    t = 0
    while (2 * t + 1) ** 2 < 8 * n:
        t += 1
    return t


def grid_gammap_formula(n: int, m: int) -> int:
    """Power domination number of P_n box P_m for 1 <= n <= m."""
    n = min(n, m)
    return _ceil_div(n + 1, 4) if n % 8 == 4 else _ceil_div(n, 4)


@task
def param_value(G: Graph, param: str) -> Any:
    return value(G, param)


@task
def witness_of(G: Graph, param: str) -> list[int]:
    return measure(G, param)["witness"]


@task
def set_time(G: Graph, S: tuple[int, ...]) -> Any:
    return _plain(propagate(G, S).propagation_time)


@task
def set_product(G: Graph, S: tuple[int, ...]) -> Any:
    return _plain(len(S) * propagate(G, S).propagation_time)


@task
def thpdx_k(G: Graph, k: int) -> Any:
    pt = measure(G, f"pt_k={k}")
    return "inf" if pt == "inf" else k * pt


@task
def graph_stat(G: Graph, stat: str) -> Any:
    if stat == "order":
        return G.n
    if stat == "max_degree":
        return max_degree(G)
    if stat == "min_degree":
        return min_degree(G)
    if stat == "regular_degree":
        degs = {popcount(a) for a in G.adj}
        return degs.pop() if len(degs) == 1 else sorted(degs)
    raise GraphError(stat)


@task
def is_pd_set(G: Graph, S: tuple[int, ...]) -> bool:
    return is_power_dominating(G, S)


@task
def minimum_dominating_sets(G: Graph) -> list[list[int]]:
    g = value(G, "gamma")
    out = []
    for combo in combinations(range(G.n), g):
        _check_time()
        if is_dominating(G, combo):
            out.append(list(combo))
    return out


@task
def sandwich(G: Graph) -> list[str]:
    """Violations among gamma_P <= th <= gamma, th <= gamma_P * pt, th >= n/(Delta+1)."""
    th, g, gp, pt = value(G, "thpdx"), value(G, "gamma"), value(G, "gammap"), value(G, "pt")
    bad = []
    if not gp <= th <= g:
        bad.append(f"gamma_P={gp} <= th={th} <= gamma={g} fails")
    if th > gp * pt:
        bad.append(f"th={th} exceeds gamma_P*pt={gp * pt}")
    if th < _ceil_div(G.n, max_degree(G) + 1):
        bad.append("degree lower bound fails")
    return bad


@task
def low_profile(G: Graph) -> list[bool]:
    rep = characterize_low(G)
    return [rep.gamma_is_two, rep.single_vertex_time_two, rep.thpdx]


@task
def half_order_class(G: Graph) -> Any:
    return recognize_half_order(G)


@task
def conditions_fired(G: Graph) -> list[str]:
    rep = equality_conditions(G, compute_throttling=False)
    return sorted(k for k, v in rep.fired.items() if v)


def _name(G: Graph) -> str:
    return f"{G.name}:{sorted(G.edges())}"


def _exhaustive(n: int, check: Callable[[Graph], str | None], limit: int = 10) -> Detailed:
    bad, count = [], 0
    for G in connected_graphs(n):
        _check_time()
        count += 1
        msg = check(G)
        if msg:
            bad.append(f"{_name(G)}: {msg}")
    return Detailed(bad[:limit] + ([f"... {len(bad) - limit} more"] if len(bad) > limit else []),
                    f"{count} connected graphs of order {n}")


@task
def exhaustive_low(n: int) -> Detailed:
    """th = 2 iff (gamma = 2 or a single vertex propagates in time 2); th = 1 iff gamma = 1."""
    def check(G: Graph) -> str | None:
        th, g, gp = value(G, "thpdx"), value(G, "gamma"), value(G, "gammap")
        single2 = gp == 1 and value(G, "pt") == 2
        if (th == 2) != (g == 2 or single2):
            return f"th={th} gamma={g} single-vertex-time-2={single2}"
        if (th == 1) != (g == 1):
            return f"th={th} gamma={g}"
        return None
    return _exhaustive(n, check)


@task
def exhaustive_half(n: int) -> Detailed:
    def check(G: Graph) -> str | None:
        th = value(G, "thpdx")
        half = 2 * th == G.n
        cls = recognize_half_order(G) if G.n >= 2 else None
        if half != (cls is not None):
            return f"th={th} class={cls}"
        return None
    return _exhaustive(n, check)


@task
def exhaustive_gamma_p(n: int) -> Detailed:
    def check(G: Graph) -> str | None:
        eq = value(G, "gammap") == value(G, "gamma")
        if eq != (value(G, "pt") == 1):
            return "gamma_P = gamma does not match pt_pd = 1"
        return None
    return _exhaustive(n, check)


@task
def exhaustive_bounds(n: int) -> Detailed:
    def check(G: Graph) -> str | None:
        bad = sandwich(G)
        if bad:
            return "; ".join(bad)
        rep = equality_conditions(G, compute_throttling=False)
        if rep.any_fired and value(G, "thpdx") != rep.gamma:
            return f"conditions {sorted(k for k, v in rep.fired.items() if v)} fired but th != gamma"
        return None
    return _exhaustive(n, check)


@task
def exhaustive_oracle(n: int) -> Detailed:
    def check(G: Graph) -> str | None:
        for mode, param in (("product", "thpdx"), ("sum", "thpd")):
            fast = _solve(G, param)["value"]
            slow = naive_throttling(G, mode)[0]
            if fast != slow:
                return f"{mode}: pruned {fast} != naive {slow}"
        return None
    return _exhaustive(n, check)


@task
def corona_order(h: int) -> Detailed:
    """th(H o K_1) = 2 gamma(H) and gamma(H o K_1) = |V(H)| for connected H of order h."""
    def check(H: Graph) -> str | None:
        C = gen.corona(H)
        th, gh, gc = value(C, "thpdx"), value(H, "gamma"), value(C, "gamma")
        if th != 2 * gh:
            return f"th={th} but 2*gamma(H)={2 * gh}"
        if gc != H.n:
            return f"gamma(corona)={gc} != {H.n}"
        return None
    return _exhaustive(h, check)


@task
def corona_core_sets(h: int) -> Detailed:
    """Power dominating sets of H o K_1 inside V(H) dominate H."""
    def check(H: Graph) -> str | None:
        C = gen.corona(H)
        core_full = H.full
        for mask in range(1, 1 << H.n):
            if pt_mask(C.adj, C.full, mask) != INFINITY:
                obs = mask
                for v in iter_bits(mask):
                    obs |= H.adj[v]
                if obs != core_full:
                    return f"set {list(iter_bits(mask))} power dominates but does not dominate H"
        return None
    return _exhaustive(h, check)


@task
def unit_instance(n: int, seed: int, max_set: int = 3) -> Detailed:
    """All unit-interval checks on one random representation."""
    from .unit_interval import (
        check_chain_monotone,
        check_lemma_backadjacency,
        check_lemma_roundwidth,
        graph_from_intervals,
        greedy_domination,
        hat_s,
        lemma_dominates_early_rounds,
        random_unit_representation,
        t_of_s,
    )

    rng = random.Random(seed)
    rep = random_unit_representation(n, rng)
    G, _ = graph_from_intervals(rep)
    bad: list[str] = []
    g = value(G, "gamma")
    th = value(G, "thpdx")
    if th != g:
        bad.append(f"th={th} != gamma={g}")
    greedy = greedy_domination(rep)
    if len(greedy) != g or not is_dominating(G, greedy):
        bad.append(f"greedy set {greedy.sorted()} is not a minimum dominating set")
    checked = 0
    for k in range(1, min(max_set, n) + 1):
        for S in combinations(range(n), k):
            _check_time()
            trace = propagate(G, S)
            if not trace.total:
                continue
            checked += 1
            if not check_lemma_roundwidth(rep, trace):
                bad.append(f"S={list(S)}: a round exceeds 2|S|")
            if not check_lemma_backadjacency(rep, G, trace):
                bad.append(f"S={list(S)}: back-adjacency fails")
            if not check_chain_monotone(rep, trace):
                bad.append(f"S={list(S)}: chain not monotone")
            if len(t_of_s(rep, G, S)) > 2 * k:
                bad.append(f"S={list(S)}: |T(S)| > 2|S|")
            if not lemma_dominates_early_rounds(rep, G, trace):
                bad.append(f"S={list(S)}: T(S) misses rounds 0..2")
            t = trace.propagation_time
            if t >= 2:
                H = hat_s(rep, G, trace)
                if not is_dominating(G, H) or len(H) > k * t:
                    bad.append(f"S={list(S)}: hat set {H.sorted()} fails (t={t})")
    return Detailed(bad[:10], f"n={n}, {G.m} edges, {checked} power dominating sets checked")


@task
def hat_size(rep_lefts: tuple, S: tuple[int, ...]) -> list:
    from .unit_interval import IntervalRepresentation, graph_from_intervals, hat_s

    rep = IntervalRepresentation.unit(rep_lefts)
    G, _ = graph_from_intervals(rep)
    trace = propagate(G, S)
    H = hat_s(rep, G, trace)
    return [trace.propagation_time, is_dominating(G, H), len(H) <= len(S) * trace.propagation_time]


@task
def fig7_claw() -> bool:
    from .unit_interval import has_induced_claw

    G, _ = gen.fig7_interval_graph()
    return has_induced_claw(G, [1, 2, 3, 5])


@task
def product_bounds(G: Graph, H: Graph) -> list[str]:
    P = gen.cartesian_product(G, H)
    tp, tg, th = value(P, "thpdx"), value(G, "thpdx"), value(H, "thpdx")
    bad = []
    if tp > tg * H.n:
        bad.append(f"upper bound via G: {tp} > {tg}*{H.n}")
    if tp > th * G.n:
        bad.append(f"upper bound via H: {tp} > {th}*{G.n}")
    if tp < tg or tp < th:
        bad.append(f"lower bound: {tp} < max({tg}, {th})")
    if max_degree(P) != max_degree(G) + max_degree(H):
        bad.append("maximum degree is not additive")
    if tp < _ceil_div(P.n, max_degree(G) + max_degree(H) + 1):
        bad.append("degree lower bound fails")
    bad.extend(sandwich(P))
    return bad


@task
def projection(G: Graph, H: Graph, samples: int, seed: int) -> Detailed:
    """Random power dominating sets of G box H project to power dominating sets of G and H."""
    P = gen.cartesian_product(G, H)
    rng = random.Random(seed)
    gp = value(P, "gammap")
    bad, found, tries = [], 0, 0
    while found < samples and tries < 200 * samples:
        tries += 1
        _check_time()
        k = rng.randint(gp, min(P.n, gp + 3))
        S = rng.sample(range(P.n), k)
        mask = sum(1 << v for v in S)
        tP = pt_mask(P.adj, P.full, mask)
        if tP == INFINITY:
            continue
        found += 1
        for factor, proj in ((G, {v // H.n for v in S}), (H, {v % H.n for v in S})):
            pmask = sum(1 << v for v in proj)
            tF = pt_mask(factor.adj, factor.full, pmask)
            if tF == INFINITY or tF > tP:
                bad.append(f"S={sorted(S)} projects to {sorted(proj)} with time {tF} > {tP}")
    if found < samples:
        bad.append(f"only {found} power dominating sets sampled")
    return Detailed(bad[:10], f"{found} sets sampled in {tries} draws")


@task
def qx_reassignment(n: int, m: int, wrap_rows: bool, wrap_cols: bool,
                    samples: int, seed: int) -> Detailed:
    """Force reassignment leaves every source with at most three round-2 chain ends.

    Traces come from every 2-set, random sets of sizes 3..6, and a source
    plus its four diagonals around every vertex.  Each trace is also
    re-credited adversarially before reassignment.
    """
    G = gen.grid(n, m, wrap_rows, wrap_cols)
    info = G.grid
    rng = random.Random(seed)
    # (source set, vertex to credit first)
    sets: list[tuple[tuple[int, ...], int | None]] = [
        (S, None) for S in combinations(range(G.n), 2)
    ]
    for _ in range(samples):
        sets.append((tuple(sorted(rng.sample(range(G.n), rng.randint(3, 6)))), None))
    for x in range(G.n):
        r, c = info.coords(x)
        diag = [info.vertex(r + a, c + b) for a in (-1, 1) for b in (-1, 1)]
        sets.append((tuple(sorted({x, *[d for d in diag if d is not None]})), x))
    bad: list[str] = []
    traces = four = 0
    for S, center in dict.fromkeys(sets):
        _check_time()
        trace = propagate(G, S)
        if not trace.total or trace.propagation_time < 2:
            continue
        prios = [sorted(S), sorted(S, reverse=True), _hub_first(G, S)]
        if center is not None:
            prios.append([center] + [v for v in S if v != center])
        for prio in prios:
            traces += 1
            base = credit_domination(G, trace, prio)
            if any(popcount(q) == 4 for q in q_sets(base).values()):
                four += 1
            fixed = reassign_forces_grid(G, base)
            worst = max((popcount(q) for q in q_sets(fixed).values()), default=0)
            problems = check_trace(G, fixed)
            if worst > 3 or problems:
                bad.append(f"S={list(S)} priority={prio}: max |Q|={worst} {problems[:2]}")
    return Detailed(bad[:10], f"{traces} traces with pt >= 2, {four} started with some |Q_x| = 4")


def _hub_first(G: Graph, S: tuple[int, ...]) -> list[int]:
    """Sources with the most neighbors outside S first, so forces concentrate."""
    src = sum(1 << v for v in S)
    return sorted(S, key=lambda v: (-popcount(G.adj[v] & ~src), v))


# -- suites -------------------------------------------------------------------

def _spec(G: Graph, quantity: str, source: str, expected: Any, citation: str,
          task_name: str, *args, instance: str | None = None) -> CaseSpec:
    return CaseSpec(instance or G.name, quantity, source, _plain(expected), citation,
                    task_name, (G, *args))


def _suite_paths_cycles(p: dict) -> tuple[list[CaseSpec], list[str]]:
    N = p["max_n"]
    out = []
    for n in range(1, N + 1):
        P = gen.path(n)
        out.append(_spec(P, "thpdx", PUBLISHED, _ceil_div(n, 3),
                         "paths: th_pd^x(P_n) = ceil(n/3)", "param_value", "thpdx"))
        out.append(_spec(P, "gamma", PUBLISHED, _ceil_div(n, 3),
                         "paths: gamma(P_n) = ceil(n/3)", "param_value", "gamma"))
        out.append(_spec(P, "gammap", PUBLISHED, 1, "paths: gamma_P(P_n) = 1",
                         "param_value", "gammap"))
        if n == 1:
            out.append(_spec(P, "thpd", TRIVIAL, 2,
                             "|S| >= 1 and pt >= 1; the closed form gives 1 at n = 1",
                             "param_value", "thpd"))
        else:
            out.append(_spec(P, "thpd", PUBLISHED, path_sum_formula(n),
                             "paths: th_pd(P_n) = ceil(sqrt(2n) - 1/2)", "param_value", "thpd"))
    for n in range(3, N + 1):
        C = gen.cycle(n)
        out.append(_spec(C, "thpdx", PUBLISHED, _ceil_div(n, 3),
                         "cycles: th_pd^x(C_n) = ceil(n/3)", "param_value", "thpdx"))
    return out, []


def _suite_spiders(p: dict) -> tuple[list[CaseSpec], list[str]]:
    G = gen.spider([7, 2, 2, 2, 2, 2])
    cite = "spider S(7,2,2,2,2,2)"
    out = [
        _spec(G, "thpdx", PUBLISHED, 4, f"{cite}: th_pd^x = 4", "param_value", "thpdx"),
        _spec(G, "thpdx witness", DERIVED, [0, 15], "first optimum in canonical order",
              "witness_of", "thpdx"),
        _spec(G, "pt({0,15})", PUBLISHED, 2, f"{cite}: {{0,15}} propagates in 2 rounds",
              "set_time", (0, 15)),
        _spec(G, "gamma", PUBLISHED, 8, f"{cite}: gamma = 8", "param_value", "gamma"),
        _spec(G, "gammap", PUBLISHED, 1, f"{cite}: gamma_P = 1", "param_value", "gammap"),
        _spec(G, "pt", PUBLISHED, 7, f"{cite}: pt_pd = 7", "param_value", "pt"),
        _spec(G, "thpdx(G,1)", PUBLISHED, 7, f"{cite}: th_pd^x(G,1) = 7", "thpdx_k", 1),
    ]
    for legs in ((1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 3), (4, 1, 1)):
        S = gen.spider(list(legs))
        out.append(_spec(S, "bounds", DERIVED, [], "gamma_P <= th <= min(gamma, gamma_P pt)",
                         "sandwich"))
    return out, []


def _suite_coronas(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for h in range(2, p["max_h"] + 1):
        out.append(CaseSpec(f"corona of every connected H, |V(H)|={h}", "th = 2 gamma(H)",
                            PUBLISHED, [], "coronas: th_pd^x(H o K_1) = 2 gamma(H)",
                            "corona_order", (h,)))
    for h in range(2, min(p["max_h"], p["max_sub"]) + 1):
        out.append(CaseSpec(f"corona of every connected H, |V(H)|={h}",
                            "power dominating subsets of V(H) dominate H", PUBLISHED, [],
                            "coronas: such sets dominate H", "corona_core_sets", (h,)))
    for H in [gen.path(k) for k in range(2, 6)] + [gen.cycle(k) for k in range(3, 6)]:
        C = gen.corona(H)
        out.append(_spec(C, "gamma", PUBLISHED, H.n, "coronas: gamma(H o K_1) = |V(H)|",
                         "param_value", "gamma"))
    return out, []


def _suite_half_order(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for h in range(1, p["max_h"] + 1):
        for H in connected_graphs(h):
            G = gen.half_order_construction(H)
            name = f"double corona of {sorted(H.edges()) or 'K1'} (order {G.n})"
            out.append(_spec(G, "thpdx", PUBLISHED, G.n // 2,
                             "double coronas: th_pd^x = n/2", "param_value", "thpdx",
                             instance=name))
            out.append(_spec(G, "class", DERIVED, "double-corona",
                             "structural recognition", "half_order_class", instance=name))
    c4 = gen.cycle(4)
    c4c = gen.corona(c4)
    out += [
        _spec(c4, "thpdx", PUBLISHED, 2, "C_4: th_pd^x = 2 = gamma", "param_value", "thpdx"),
        _spec(c4, "class", PUBLISHED, "c4", "C_4 attains n/2", "half_order_class"),
        _spec(c4c, "thpdx", PUBLISHED, 4, "C_4 o K_1 attains n/2", "param_value", "thpdx"),
        _spec(c4c, "class", PUBLISHED, "c4-corona", "C_4 o K_1 attains n/2",
              "half_order_class"),
        _spec(gen.cycle(6), "thpdx", TRIVIAL, 2, "gamma(C_6) = 2", "param_value", "thpdx"),
        _spec(gen.cycle(6), "class", DERIVED, None, "C_6 is not exceptional",
              "half_order_class"),
    ]
    for n in range(2, p["max_n"] + 1):
        out.append(CaseSpec(f"every connected graph of order {n}",
                            "th = n/2 iff recognized structure", PUBLISHED, [],
                            "half-order characterization", "exhaustive_half", (n,)))
    return out, []


def _suite_low(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for n in range(1, 9):
        K = gen.complete(n)
        out.append(_spec(K, "thpdx", PUBLISHED, 1, "complete graphs: th_pd^x(K_n) = 1",
                         "param_value", "thpdx"))
        out.append(_spec(K, "thpd", PUBLISHED, 2, "complete graphs: th_pd(K_n) = 2",
                         "param_value", "thpd"))
    for G in (gen.path(5), gen.cycle(5)):
        out.append(_spec(G, "(gamma=2, single vertex time 2, th)", PUBLISHED, [True, True, 2],
                         "P_5 and C_5 satisfy both conditions", "low_profile"))
    out.append(_spec(gen.path(7), "(gamma=2, single vertex time 2, th)", DERIVED,
                     [False, False, 3], "gamma(P_7) = 3, pt_pd(P_7) = 3", "low_profile"))
    for n in range(1, p["max_n"] + 1):
        out.append(CaseSpec(f"every connected graph of order {n}",
                            "th = 2 iff conditions; th = 1 iff gamma = 1", PUBLISHED, [],
                            "low-value characterizations", "exhaustive_low", (n,)))
    return out, []


def _suite_unit_interval(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    lo, hi = 3, p["max_unit_n"]
    for i in range(p["samples_unit"]):
        n = lo + i % (hi - lo + 1)
        seed = p["seed"] * 100003 + i
        out.append(CaseSpec(f"random unit representation #{i} (n={n}, seed={seed})",
                            "unit-interval checks", PUBLISHED, [],
                            "unit interval graphs: th_pd^x = gamma", "unit_instance", (n, seed)))
    G, _ = gen.fig7_interval_graph()
    out += [
        _spec(G, "thpdx", PUBLISHED, 2, "interval graph with a claw: th_pd^x = 2",
              "param_value", "thpdx"),
        _spec(G, "gamma", PUBLISHED, 3, "interval graph with a claw: gamma = 3",
              "param_value", "gamma"),
        _spec(G, "pt({label 3})", PUBLISHED, 2, "interval graph with a claw: pt(G;{3}) = 2",
              "set_time", (2,)),
        CaseSpec("interval-claw", "induced claw", DERIVED, True, "not a unit interval graph",
                 "fig7_claw", ()),
    ]
    lefts = tuple(f"{9 * i}/10" for i in range(9))
    out.append(CaseSpec("P_9 unit path, S={v_1}", "(t, hat set dominates, size <= |S| t)",
                        DERIVED, [8, True, True], "hat-set construction", "hat_size",
                        (lefts, (0,))))
    return out, []


_PRODUCT_FACTORS = [
    ("P2", lambda: gen.path(2)), ("P3", lambda: gen.path(3)), ("P4", lambda: gen.path(4)),
    ("C3", lambda: gen.cycle(3)), ("C4", lambda: gen.cycle(4)),
    ("K2", lambda: gen.complete(2)), ("K3", lambda: gen.complete(3)),
]


def _suite_cartesian(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    facs = [(name, make()) for name, make in _PRODUCT_FACTORS]
    for i, (a, G) in enumerate(facs):
        for b, H in facs[i:]:
            G2, H2 = G.relabeled(name=a), H.relabeled(name=b)
            inst = f"{a} x {b}"
            out.append(CaseSpec(inst, "product bounds", PUBLISHED, [],
                                "th(G box H) between max(th(G), th(H)) and min(th(G)|V(H)|, th(H)|V(G)|)",
                                "product_bounds", (G2, H2)))
            out.append(CaseSpec(inst, "projection", PUBLISHED, [],
                                "projections of power dominating sets power dominate",
                                "projection", (G2, H2, p["samples_proj"], p["seed"] + i)))
    sp = gen.cartesian_product(gen.spider([7, 2, 2, 2, 2, 2]), gen.path(2))
    c = "spider S(7,2,2,2,2,2) box P_2"
    out += [
        _spec(sp, "thpdx", PUBLISHED, 8, f"{c}: th_pd^x = 8", "param_value", "thpdx"),
        _spec(sp, "gamma", PUBLISHED, 10, f"{c}: gamma = 10 (external computation)",
              "param_value", "gamma"),
        _spec(sp, "gammap", PUBLISHED, 2, f"{c}: gamma_P = 2 (external computation)",
              "param_value", "gammap"),
        _spec(sp, "pt(G,2)", PUBLISHED, 7, f"{c}: pt_pd(G,2) = 7 (external computation)",
              "param_value", "pt_k=2"),
        _spec(sp, "pt(G,3)", PUBLISHED, 4, f"{c}: pt_pd(G,3) = 4 (external computation)",
              "param_value", "pt_k=3"),
        _spec(sp, "thpdx(G,3)", PUBLISHED, 12, f"{c}: th_pd^x(G,3) = 12", "thpdx_k", 3),
    ]
    W = gen.example_w()
    wp = gen.cartesian_product(W, gen.path(2))
    c = "cycle-with-pendants W box P_2"
    s5 = (0, 1, 5, 8, 13)  # u1, u1', u3', u5, u7'
    out += [
        _spec(W, "gammap", PUBLISHED, 3, "W: gamma_P = 3", "param_value", "gammap"),
        _spec(W, "pt", PUBLISHED, 2, "W: pt_pd = 2", "param_value", "pt"),
        _spec(W, "gamma", PUBLISHED, 8, "W: gamma = 8", "param_value", "gamma"),
        _spec(W, "thpdx", PUBLISHED, 6, "W: th_pd^x = 6", "param_value", "thpdx"),
        _spec(wp, "pt(five-vertex set)", PUBLISHED, 2,
              f"{c}: {{u1,u5,u1',u3',u7'}} propagates in 2 rounds", "set_time", s5),
        _spec(wp, "thpdx", PUBLISHED, 10, f"{c}: th_pd^x = 10", "param_value", "thpdx"),
        _spec(wp, "gamma", PUBLISHED, 11, f"{c}: gamma = 11 (external computation)",
              "param_value", "gamma"),
        _spec(wp, "gammap", PUBLISHED, 3, f"{c}: gamma_P = 3 (external computation)",
              "param_value", "gammap"),
        _spec(wp, "pt(G,3)", PUBLISHED, 7, f"{c}: pt_pd(G,3) = 7", "param_value", "pt_k=3"),
        _spec(wp, "pt(G,4)", PUBLISHED, 3, f"{c}: pt_pd(G,4) = 3", "param_value", "pt_k=4"),
    ]
    return out, [FINITE_RANGE_NOTE]


TABLE_ONE = [
    ((4, 5, False, False), 6, 6), ((4, 6, False, False), 7, 7),
    ((4, 9, False, False), 10, 10), ((4, 5, False, True), 6, 6),
    ((4, 9, False, True), 10, 10), ((5, 8, False, False), 11, 11),
    ((6, 6, False, False), 10, 10),
]


def _grid_name(n: int, m: int, wr: bool, wc: bool) -> str:
    return f"{'C' if wr else 'P'}{n} x {'C' if wc else 'P'}{m}"


def _suite_grids(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for (n, m, wr, wc), th, g in TABLE_ONE:
        G = gen.grid(n, m, wr, wc).relabeled(name=_grid_name(n, m, wr, wc))
        out.append(_spec(G, "thpdx", PUBLISHED, th, "table of grid values", "param_value", "thpdx"))
        out.append(_spec(G, "gamma", PUBLISHED, g, "table of grid values", "param_value", "gamma"))
    M = p["max_grid"]
    for n in range(1, M + 1):
        for m in range(n, M + 1):
            G = gen.grid(n, m).relabeled(name=_grid_name(n, m, False, False))
            out.append(_spec(G, "gammap", PUBLISHED, grid_gammap_formula(n, m),
                             "grid power domination: ceil(n/4), or ceil((n+1)/4) when n = 4 mod 8",
                             "param_value", "gammap"))
    for n in range(1, M + 1):
        for m in range(n, M + 1):
            for wr in ((False, True) if n >= 3 else (False,)):
                for wc in ((False, True) if m >= 3 else (False,)):
                    G = gen.grid(n, m, wr, wc).relabeled(name=_grid_name(n, m, wr, wc))
                    out.append(CaseSpec(G.name, "thpdx = gamma", DERIVED, True,
                                        "finite-range check of th_pd^x = gamma on J_n x J_m",
                                        "th_equals_gamma", (G,)))
    Q = p["max_q_grid"]
    shapes = [(n, m) for n in range(4, Q + 1) for m in range(n, Q + 1)]
    if (8, 8) not in shapes:
        shapes.append((8, 8))  # interior room for four same-direction chains
    for n, m in shapes:
        for wr in (False, True):
            for wc in (False, True):
                out.append(CaseSpec(_grid_name(n, m, wr, wc), "max |Q_x| <= 3 after reassignment",
                                    PUBLISHED, [], "forces can be chosen with |Q_x| <= 3",
                                    "qx_reassignment",
                                    (n, m, wr, wc, p["samples_q"], p["seed"] + 7 * n + m)))
    return out, [FINITE_RANGE_NOTE]


@task
def th_equals_gamma(G: Graph) -> bool:
    return value(G, "thpdx") == value(G, "gamma")


def _suite_kn_km(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    M = p["max_km"]
    for n in range(1, M + 1):
        for m in range(n, M + 1):
            G = gen.cartesian_product(gen.complete(n), gen.complete(m)).relabeled(name=f"K{n} x K{m}")
            if n >= 2:
                out.append(_spec(G, "gammap", PUBLISHED, n - 1, "gamma_P(K_n x K_m) = n - 1",
                                 "param_value", "gammap"))
            out.append(_spec(G, "thpdx", PUBLISHED, n, "th_pd^x(K_n x K_m) = n",
                             "param_value", "thpdx"))
            out.append(_spec(G, "gamma", PUBLISHED, n, "gamma(K_n x K_m) = n",
                             "param_value", "gamma"))
    # H box K_m with m >= Delta(H)(|V(H)| - 1) + 1
    for H, m in ((gen.path(2), 2), (gen.path(3), 5), (gen.cycle(3), 5), (gen.path(4), 7),
                 (gen.cycle(4), 7)):
        G = gen.cartesian_product(H, gen.complete(m)).relabeled(name=f"{H.name} x K{m}")
        cite = "H x K_m with m >= Delta(H)(n-1)+1: th_pd^x = n = gamma"
        out.append(_spec(G, "thpdx", PUBLISHED, H.n, cite, "param_value", "thpdx"))
        out.append(_spec(G, "gamma", PUBLISHED, H.n, cite, "param_value", "gamma"))
    return out, []


def _suite_family_a(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for i, entry in enumerate(gen.family_a()):
        G = entry.graph
        out.append(_spec(G, "order", TRIVIAL, 4 if i == 4 else 7, "drawing", "graph_stat", "order"))
        out.append(_spec(G, "min_degree >= 2", DERIVED, True, "family members have minimum degree two",
                         "min_degree_at_least", 2))
        out.append(_spec(G, "designated vertex power dominates", PUBLISHED, True,
                         "the marked vertex is a power dominating set", "is_pd_set",
                         tuple(sorted(entry.designated))))
        out.append(_spec(G, "gammap", PUBLISHED, 1, "gamma_P = 1 for the exceptional family",
                         "param_value", "gammap"))
        out.append(_spec(G, "bounds", DERIVED, [], "gamma_P <= th <= gamma", "sandwich"))
    c4 = gen.family_a()[4].graph
    out.append(_spec(c4, "thpdx", PUBLISHED, 2, "C_4: th_pd^x = 2 = gamma", "param_value", "thpdx"))
    out.append(_spec(c4, "gamma", PUBLISHED, 2, "C_4: th_pd^x = 2 = gamma", "param_value", "gamma"))
    return out, []


@task
def min_degree_at_least(G: Graph, d: int) -> bool:
    return min_degree(G) >= d


def _suite_g_d(p: dict) -> tuple[list[CaseSpec], list[str]]:
    out = []
    for d in range(2, p["max_d"] + 1):
        G = gen.g_d_construction(d)
        cite = "d stars with matched leaves: th_pd^x = d = gamma"
        out += [
            _spec(G, "order", TRIVIAL, d * (d + 1), "d copies of K_{1,d}", "graph_stat", "order"),
            _spec(G, "regular degree", DERIVED, d, "every vertex has degree d",
                  "graph_stat", "regular_degree"),
            _spec(G, "gamma", PUBLISHED, d, cite, "param_value", "gamma"),
            _spec(G, "thpdx", PUBLISHED, d, cite, "param_value", "thpdx"),
            _spec(G, "degree bound fires", DERIVED, True, "gamma = ceil(n/(Delta+1))",
                  "condition_fires", "gamma_meets_degree_bound"),
        ]
    return out, []


@task
def condition_fires(G: Graph, key: str) -> bool:
    return key in conditions_fired(G)


def _suite_conditions(p: dict) -> tuple[list[CaseSpec], list[str]]:
    H = gen.example_h()
    out = [
        _spec(H, "order", TRIVIAL, 12, "drawing", "graph_stat", "order"),
        _spec(H, "max_degree", PUBLISHED, 4, "H: Delta = 4", "graph_stat", "max_degree"),
        _spec(H, "minimum dominating sets", PUBLISHED, [[2, 3, 9]],
              "H: {x, y, z} is the unique minimum dominating set", "minimum_dominating_sets"),
        _spec(H, "thpdx", DERIVED, 3, "gamma meets the degree bound", "param_value", "thpdx"),
        _spec(gen.g_d_construction(3), "degree bound fires", PUBLISHED, True,
              "gamma = 12/4 = 3", "condition_fires", "gamma_meets_degree_bound"),
        _spec(gen.cycle(4), "mindeg2 fifth-order condition fires", PUBLISHED, True,
              "C_4 meets gamma_P >= n/5 with minimum degree two", "condition_fires",
              "mindeg2_gamma_p_at_least_fifth_order"),
        _spec(gen.half_order_construction(gen.path(3)), "quarter-order condition fires", DERIVED,
              True, "gamma_P = 3 = n/4", "condition_fires", "gamma_p_at_least_quarter_order"),
    ]
    for G in (gen.cycle(4), gen.g_d_construction(3), H, gen.half_order_construction(gen.path(3)),
              gen.grid(3, 3), gen.corona(gen.cycle(5))):
        out.append(_spec(G, "bounds", DERIVED, [], "gamma_P <= th <= gamma", "sandwich"))
    for n in range(1, p["max_n"] + 1):
        out.append(CaseSpec(f"every connected graph of order {n}",
                            "gamma_P = gamma iff pt_pd = 1", PUBLISHED, [],
                            "equal domination numbers characterized by time one",
                            "exhaustive_gamma_p", (n,)))
        out.append(CaseSpec(f"every connected graph of order {n}",
                            "bounds and sufficient conditions", DERIVED, [],
                            "sandwich bounds; fired conditions force th = gamma",
                            "exhaustive_bounds", (n,)))
    for n in range(1, p["max_oracle_n"] + 1):
        out.append(CaseSpec(f"every connected graph of order {n}", "pruned = naive oracle",
                            DERIVED, [], "all nonempty subsets", "exhaustive_oracle", (n,)))
    return out, []


SUITES: dict[str, Callable[[dict], tuple[list[CaseSpec], list[str]]]] = {
    "paths-cycles": _suite_paths_cycles,
    "spiders": _suite_spiders,
    "coronas": _suite_coronas,
    "half-order": _suite_half_order,
    "low-thpdx": _suite_low,
    "unit-interval": _suite_unit_interval,
    "cartesian-bounds": _suite_cartesian,
    "grids-table": _suite_grids,
    "kn-km": _suite_kn_km,
    "family-a": _suite_family_a,
    "g-d": _suite_g_d,
    "conditions": _suite_conditions,
}

DEFAULT_PARAMS = {
    "max_n": 8,
    "max_h": 7,
    "max_sub": 6,
    "max_unit_n": 14,
    "samples_unit": 200,
    "samples_proj": 100,
    "samples_q": 100,
    "max_grid": 6,
    "max_q_grid": 6,
    "max_km": 5,
    "max_d": 5,
    "max_oracle_n": 7,
    "seed": 0,
}

SUITE_DEFAULTS = {"paths-cycles": {"max_n": 20}, "half-order": {"max_h": 4}}


class UnknownSuite(KeyError):
    def __str__(self) -> str:
        return f"unknown suite {self.args[0]!r}; valid suites: {', '.join(SUITES)}"


def suite_params(suite: str, params: dict | None = None) -> dict:
    if suite not in SUITES:
        raise UnknownSuite(suite)
    merged = dict(DEFAULT_PARAMS)
    merged.update(SUITE_DEFAULTS.get(suite, {}))
    for k, v in (params or {}).items():
        if v is not None:
            if k not in merged:
                raise KeyError(f"unknown suite parameter {k!r}")
            merged[k] = v
    return merged


def _status(spec: CaseSpec, computed: Any) -> str:
    if computed == spec.expected:
        return "pass"
    return "mismatch" if spec.source == PUBLISHED else "fail"


def _run_case(spec: CaseSpec, budget: float | None) -> Case:
    start = time.monotonic()
    _CTX["deadline"] = start + budget if budget else None
    note = ""
    try:
        result = TASKS[spec.task](*spec.args)
        if isinstance(result, Detailed):
            result, note = result.value, result.note
        computed = _plain(result)
        status = _status(spec, computed)
    except BudgetExceeded:
        computed, status, note = None, "skipped", f"budget of {budget} s exhausted"
    finally:
        _CTX["deadline"] = None
    return Case(spec.instance, spec.quantity, spec.source, spec.expected, computed, status,
                spec.citation, time.monotonic() - start, note)


def _worker_init(cache_dir: str | None) -> None:
    _CTX["store"] = ResultsStore(cache_dir) if cache_dir is not None else None


def _worker_run(args: tuple[CaseSpec, float | None]) -> Case:
    case = _run_case(*args)
    if _CTX["store"] is not None:
        _CTX["store"].flush()
    return case


def verify(suite: str, params: dict | None = None, workers: int = 1,
           budget: float | None = DEFAULT_BUDGET, cache_dir: str | None = None,
           progress: Callable[[Case], None] | None = None) -> VerificationReport:
    """Run one registered suite and return its report.

    Cases are independent; with ``workers > 1`` they run in a process
    pool.  The case list is sorted canonically before it is returned.
    """
    p = suite_params(suite, params)
    specs, notes = SUITES[suite](p)
    cases: list[Case] = []
    if workers > 1:
        with ProcessPoolExecutor(workers, initializer=_worker_init, initargs=(cache_dir,)) as ex:
            for case in ex.map(_worker_run, [(s, budget) for s in specs]):
                cases.append(case)
                if progress:
                    progress(case)
    else:
        saved = _CTX["store"]
        _CTX["store"] = ResultsStore(cache_dir) if cache_dir is not None else saved
        try:
            for s in specs:
                case = _run_case(s, budget)
                cases.append(case)
                if progress:
                    progress(case)
        finally:
            if cache_dir is not None:
                _CTX["store"].close()
            _CTX["store"] = saved
    cases.sort(key=lambda c: (c.instance, c.quantity))
    return VerificationReport(suite, p, cases, notes)


# -- tables -------------------------------------------------------------------

TABLE_COLUMNS = ("graph", "n", "gammap", "gamma", "pt", "thpdx", "thpd", "witness", "status")


def _range(text: str) -> range:
    if "-" in text:
        a, b = text.split("-", 1)
        return range(int(a), int(b) + 1)
    return range(int(text), int(text) + 1)


def expand_spec(spec: str) -> list[Graph]:
    """Graphs named by a range spec.

    Forms: ``path:1-12``, ``cycle:3-10``, ``complete:1-8``, ``star:2-6``,
    ``corona-path:1-5``, ``corona-cycle:3-5``, ``half-order-path:1-3``,
    ``g-d:2-4``, ``grid:2-6`` (and ``cylinder``, ``torus``, ``rook``, all
    pairs n <= m in the range), ``connected:1-6`` and ``family-a``.
    """
    fam, _, rng = spec.partition(":")
    if fam == "family-a":
        return [e.graph for e in gen.family_a()]
    if not rng:
        raise GraphError(f"range spec {spec!r} needs a range, e.g. {fam}:1-10")
    r = _range(rng)
    singles = {
        "path": gen.path, "cycle": gen.cycle, "complete": gen.complete, "star": gen.star,
        "g-d": gen.g_d_construction,
        "corona-path": lambda n: gen.corona(gen.path(n)),
        "corona-cycle": lambda n: gen.corona(gen.cycle(n)),
        "half-order-path": lambda n: gen.half_order_construction(gen.path(n)),
    }
    pairs = {"grid", "cylinder", "torus", "rook"}
    if fam in singles:
        out = []
        for n in r:
            G = singles[fam](n)
            out.append(G.relabeled(name=f"{fam}-{n}"))
        return out
    if fam in pairs:
        out = []
        for n in r:
            for m in r:
                if m >= n:
                    out.append(gen.generate(fam, [str(n), str(m)]).relabeled(name=f"{fam}-{n}x{m}"))
        return out
    if fam == "connected":
        return [G for n in r for G in connected_graphs(n)]
    raise GraphError(f"unknown table family {fam!r}")


@dataclass
class TableResult:
    rows: list[dict]
    solver_calls: int
    cache_hits: int

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in self.rows:
            w.writerow({**row, "witness": " ".join(map(str, row["witness"]))})
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.rows, indent=2, sort_keys=True)


def table(specs: list[str], cache_dir: str | None = None, budget: float | None = DEFAULT_BUDGET,
          store: ResultsStore | None = None) -> TableResult:
    """One row per graph with every parameter; rows sorted by (n, name)."""
    graphs = [G for s in specs for G in expand_spec(s)]
    own = store is None
    if own:
        store = ResultsStore(cache_dir)
    saved = _CTX["store"]
    _CTX["store"] = store
    calls0, hits0 = store.solver_calls, store.hits
    rows = []
    try:
        for G in graphs:
            row = {"graph": G.name, "n": G.n}
            _CTX["deadline"] = time.monotonic() + budget if budget else None
            try:
                row["gammap"] = value(G, "gammap")
                row["gamma"] = value(G, "gamma")
                row["pt"] = value(G, "pt")
                th = measure(G, "thpdx")
                row["thpdx"] = th["value"]
                row["thpd"] = value(G, "thpd")
                row["witness"] = th["witness"]
                row["status"] = "ok"
            except BudgetExceeded:
                row = {"graph": G.name, "n": G.n, "gammap": None, "gamma": None, "pt": None,
                       "thpdx": None, "thpd": None, "witness": [], "status": "skipped"}
            finally:
                _CTX["deadline"] = None
            rows.append(row)
    finally:
        _CTX["store"] = saved
        store.flush()
        calls, hits = store.solver_calls - calls0, store.hits - hits0
        if own:
            store.close()
    rows.sort(key=lambda r: (r["n"], r["graph"]))
    return TableResult(rows, calls, hits)
