import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from pdthrottle import generators as gen
from pdthrottle.graph import GraphError, closed_neighborhood, iter_bits, popcount
from pdthrottle.propagation import (
    INFINITY,
    ForceKind,
    check_trace,
    credit_domination,
    forcing_chains,
    is_power_dominating,
    power_propagation_time,
    propagate,
    pt_mask,
    q_sets,
    reassign_forces_grid,
    second_round_origins,
    zero_forcing_propagate,
)


def rounds(trace):
    return [sorted(iter_bits(r)) for r in trace.rounds]


def brute_rounds(G, S):
    """Reference simulator on Python sets: domination step, then synchronous forcing."""
    obs = set(S)
    out = [sorted(obs)]
    step = set()
    for v in S:
        step |= {u for u in range(G.n) if G.adj[v] >> u & 1}
    step -= obs
    out.append(sorted(step))
    obs |= step
    while True:
        new = set()
        for u in obs:
            white = [w for w in range(G.n) if G.adj[u] >> w & 1 and w not in obs]
            if len(white) == 1:
                new.add(white[0])
        if not new:
            return out, obs
        out.append(sorted(new))
        obs |= new


def test_path_examples():
    t = propagate(gen.path(4), [1])
    assert rounds(t) == [[1], [0, 2], [3]] and t.propagation_time == 2 and t.total
    assert power_propagation_time(gen.path(4), [0]) == 3
    assert power_propagation_time(gen.path(5), [2]) == 2
    assert power_propagation_time(gen.complete(5), [0]) == 1


def test_cycle_and_spider():
    t = propagate(gen.cycle(6), [0])
    assert rounds(t) == [[0], [1, 5], [2, 4], [3]] and t.propagation_time == 3
    sp = gen.spider([7, 2, 2, 2, 2, 2])
    assert propagate(sp, [0]).propagation_time == 7
    assert propagate(sp, [0, 15]).propagation_time == 2


def test_stalled_run():
    C = gen.corona(gen.cycle(4))
    for v in range(C.n):
        t = propagate(C, [v])
        assert t.terminal == "stalled" and t.propagation_time == INFINITY
    with pytest.raises(GraphError):
        forcing_chains(propagate(C, [0]))
    with pytest.raises(GraphError):
        q_sets(propagate(C, [0]))


def test_whole_vertex_set_takes_one_round():
    G = gen.path(3)
    assert propagate(G, [0, 1, 2]).propagation_time == 1
    assert propagate(gen.path(1), [0]).propagation_time == 1


def test_empty_source_rejected():
    with pytest.raises(GraphError):
        propagate(gen.path(3), [])
    with pytest.raises(GraphError):
        propagate(gen.path(3), [5])


def test_zero_forcing_examples():
    z = zero_forcing_propagate(gen.path(4), [0])
    assert z.total and z.propagation_time == 3
    assert not zero_forcing_propagate(gen.cycle(4), [0]).total


def test_forcing_chains_examples():
    assert forcing_chains(propagate(gen.path(4), [0])) == [[0, 1, 2, 3]]
    assert sorted(forcing_chains(propagate(gen.path(5), [2]))) == [[2, 1, 0], [2, 3, 4]]
    assert q_sets(propagate(gen.path(4), [0])) == {0: 1 << 2}


def test_force_tie_break():
    # 1 and 3 are both in S and adjacent to 2; the lower index is credited
    t = propagate(gen.path(5), [1, 3])
    dom = {f.forced: f.forcer for f in t.forces if f.kind is ForceKind.DOMINATION}
    assert dom == {0: 1, 2: 1, 4: 3}


def test_reassign_examples():
    G = gen.grid(8, 8)
    x = 3 * 8 + 3
    S = sorted({x, x - 9, x - 7, x + 7, x + 9, 0, 2})  # diamond around x plus two corners
    t = credit_domination(G, propagate(G, S), [x])
    assert max(popcount(q) for q in q_sets(t).values()) == 4
    fixed = reassign_forces_grid(G, t)
    assert max(popcount(q) for q in q_sets(fixed).values()) <= 3
    assert fixed.rounds == t.rounds and check_trace(G, fixed) == []
    plain = propagate(G, [0, 27])
    if plain.total:
        assert reassign_forces_grid(G, plain) == plain
    with pytest.raises(GraphError):
        reassign_forces_grid(gen.cycle(5), propagate(gen.cycle(5), [0]))


def test_reassign_identity_when_bound_holds():
    G = gen.grid(5, 5)
    t = propagate(G, [0, 3])
    assert t.total and t.propagation_time >= 2
    assert all(popcount(q) <= 3 for q in q_sets(t).values())
    assert reassign_forces_grid(G, t) == t


def test_trace_json_shape():
    d = propagate(gen.spider([7, 2, 2, 2, 2, 2]), [0, 15]).to_dict()
    assert d["propagation_time"] == 2 and d["terminal"] == "total"
    assert d["rounds"][0] == [0, 15]
    assert propagate(gen.corona(gen.cycle(4)), [0]).to_dict()["propagation_time"] == "inf"


sources = st.data()


@given(graphs(max_n=9), sources)
def test_trace_invariants(G, data):
    S = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, unique=True))
    t = propagate(G, S)
    assert check_trace(G, t) == []
    ref_rounds, ref_obs = brute_rounds(G, S)
    assert rounds(t) == ref_rounds
    assert t.observed == sum(1 << v for v in ref_obs)
    assert t.total == (len(ref_obs) == G.n)
    if t.total:
        assert sum(popcount(r) for r in t.rounds) == G.n
        for chain in forcing_chains(t):
            rd = t.round_of
            assert all(rd[v] >= i for i, v in enumerate(chain))
        f0, f1 = second_round_origins(t)
        assert len(set(f1.values())) == len(f1)
        union = 0
        for q in q_sets(t).values():
            union |= q
        assert union == (t.rounds[2] if len(t.rounds) > 2 else 0)
    assert propagate(G, S) == t  # deterministic


@given(graphs(max_n=9), sources)
def test_zero_forcing_equivalence(G, data):
    S = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, unique=True))
    N = closed_neighborhood(G, S)
    assert propagate(G, S).total == zero_forcing_propagate(G, N).total


@given(graphs(max_n=9), sources, st.integers(1, 6))
def test_pt_mask_agrees_with_trace(G, data, limit):
    S = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, unique=True))
    mask = sum(1 << v for v in S)
    t = propagate(G, S).propagation_time
    assert pt_mask(G.adj, G.full, mask) == t
    capped = pt_mask(G.adj, G.full, mask, limit)
    assert capped == t if t < limit else capped >= limit
    assert is_power_dominating(G, S) == (t != INFINITY)


@given(graphs(max_n=9), sources)
def test_observed_closure_is_monotone(G, data):
    S = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, unique=True))
    T = data.draw(st.lists(st.integers(0, G.n - 1), unique=True))
    small, big = propagate(G, S), propagate(G, sorted(set(S) | set(T)))
    assert small.observed & ~big.observed == 0


@given(st.integers(4, 7), st.integers(4, 7), st.booleans(), st.booleans(), st.data())
def test_reassign_bound_on_random_grids(n, m, wr, wc, data):
    G = gen.grid(n, m, wr, wc)
    S = data.draw(st.lists(st.integers(0, G.n - 1), min_size=1, max_size=8, unique=True))
    t = propagate(G, S)
    if not t.total or t.propagation_time < 2:
        return
    prio = data.draw(st.permutations(sorted(S)))
    base = credit_domination(G, t, list(prio))
    fixed = reassign_forces_grid(G, base)
    assert all(popcount(q) <= 3 for q in q_sets(fixed).values())
    assert fixed.rounds == t.rounds and check_trace(G, fixed) == []
