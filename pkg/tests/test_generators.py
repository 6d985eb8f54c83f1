import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdthrottle import generators as gen
from pdthrottle.graph import GraphError, degrees, is_connected, max_degree, min_degree
from pdthrottle.solvers import domination_number, product_throttling


def test_basic_families():
    assert gen.path(1).n == 1 and gen.path(1).m == 0
    assert gen.cycle(4).m == 4
    assert max_degree(gen.star(5)) == 4
    with pytest.raises(GraphError):
        gen.cycle(2)


def test_spider_numbering():
    G = gen.spider([7, 2, 2, 2, 2, 2])
    assert G.n == 18
    assert sorted(gen.leaves(G)) == [2, 4, 6, 8, 10, 17]
    # long leg runs 11..17 outward from the center
    assert G.adj[0] >> 11 & 1 and all(G.adj[v] >> (v + 1) & 1 for v in range(11, 17))
    assert gen.spider([1, 1]).edges() == [(0, 1), (0, 2)]  # P_3 centered at 0
    assert gen.spider([4, 1, 1]).n == 7
    with pytest.raises(GraphError):
        gen.spider([])


def test_corona_examples():
    assert gen.corona(gen.path(1)) == gen.path(2)
    C = gen.corona(gen.cycle(4))
    assert C.n == 8 and sorted(gen.leaves(C)) == [4, 5, 6, 7]
    CC = gen.corona(gen.corona(gen.path(2)))
    assert CC.n == 8
    assert product_throttling(CC).value == 4


def test_cartesian_product_examples():
    assert gen.cartesian_product(gen.path(2), gen.path(2)).m == 4
    G = gen.cartesian_product(gen.path(4), gen.path(5))
    assert G.n == 20 and max_degree(G) == 4
    R = gen.cartesian_product(gen.complete(3), gen.complete(4))
    assert R.n == 12 and set(degrees(R)) == {5}
    assert G.grid is not None and G.grid.coords(7) == (1, 2)
    assert R.grid is None


def test_grid_wrap_information():
    T = gen.grid(4, 5, True, True)
    assert set(degrees(T)) == {4}
    assert T.grid.vertex(-1, 0) == 15 and T.grid.vertex(0, 5) == 0
    P = gen.grid(4, 5)
    assert P.grid.vertex(-1, 0) is None


def test_g_d_construction():
    for d in range(2, 7):
        G = gen.g_d_construction(d)
        assert G.n == d * (d + 1) and set(degrees(G)) == {d}
    assert domination_number(gen.g_d_construction(3))[0] == 3
    with pytest.raises(GraphError):
        gen.g_d_construction(1)


def test_family_a():
    fam = gen.family_a()
    assert len(fam) == 7
    assert fam[4].graph == gen.cycle(4)
    for i, entry in enumerate(fam):
        assert entry.graph.n == (4 if i == 4 else 7)
        assert min_degree(entry.graph) >= 2 and is_connected(entry.graph)
        assert len(entry.designated) == 1


def test_fixed_examples():
    H = gen.example_h()
    assert H.n == 12 and max_degree(H) == 4
    assert [H.label(v) for v in (2, 3, 9)] == ["x", "y", "z"]
    W = gen.example_w()
    assert W.n == 17
    cyc = [v for v in range(8) if all(W.adj[v] >> ((v + s) % 8) & 1 for s in (1, 7))]
    assert cyc == list(range(8))
    assert W.adj[16] == 1 << 8  # w hangs off v1
    G, rep = gen.fig7_interval_graph()
    assert not rep.is_unit and domination_number(G)[0] == 3


def test_half_order_construction():
    assert gen.half_order_construction(gen.path(1)).n == 4
    G = gen.half_order_construction(gen.path(2))
    assert G.n == 8 and product_throttling(G).value == 4
    for H in (gen.path(3), gen.cycle(4), gen.star(4)):
        G = gen.half_order_construction(H)
        assert G.n % 4 == 0 and G == gen.corona(gen.corona(H))


def test_generate_dispatch():
    assert gen.generate("spider", ["7", "2", "2", "2", "2", "2"]).n == 18
    assert gen.generate("family-a", ["4"]) == gen.cycle(4)
    assert gen.generate("torus", ["3", "4"]).n == 12
    with pytest.raises(GraphError, match="unknown family"):
        gen.generate("nope", [])
    with pytest.raises(GraphError, match="expects"):
        gen.generate("grid", ["3"])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_spider_shape(legs):
    G = gen.spider(legs)
    assert G.n == 1 + sum(legs)
    assert bin(G.adj[0]).count("1") == len(legs)


@given(st.integers(1, 8), st.integers(0, 3))
def test_corona_leaves(n, kind):
    H = [gen.path, gen.complete, gen.star, lambda k: gen.cycle(max(k, 3))][kind](n)
    C = gen.corona(H)
    lv = gen.leaves(C) if H.n > 1 else [1]
    assert sorted(lv) == list(range(H.n, 2 * H.n))
    assert sorted((C.adj[v] & -C.adj[v]).bit_length() - 1 for v in lv) == list(range(H.n))


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2), st.integers(0, 2))
def test_product_order_and_degree(a, b, ka, kb):
    mk = [gen.path, gen.complete, gen.star]
    G, H = mk[ka](a), mk[kb](b)
    P = gen.cartesian_product(G, H)
    assert P.n == G.n * H.n
    assert max_degree(P) == max_degree(G) + max_degree(H)
    assert P.m == G.m * H.n + H.m * G.n
