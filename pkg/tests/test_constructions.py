import pytest

from planar_ramsey import constructions as C
from planar_ramsey.graph import GraphError, SizeLimitError, check_triangulation

from corpus import c4_witness_alternating


def _inner_faces(pg):
    return len(pg.faces) - 1


@pytest.mark.parametrize("n,v,e,faces", [(0, 3, 3, 1), (1, 4, 6, 3), (2, 7, 15, 9), (3, 16, 42, 27)])
def test_iterated_triangulation_sizes(n, v, e, faces):
    pg = C.iterated_triangulation(n)
    assert (pg.n, pg.m, _inner_faces(pg)) == (v, e, faces)
    pg.check_faces()
    assert check_triangulation(pg)


def test_iterated_triangulation_nests_and_ranks():
    for n in range(1, 5):
        big, small = C.iterated_triangulation(n), C.iterated_triangulation(n - 1)
        assert big.rank_subgraph(n) == small.graph
        # each rank-n vertex sits in one round-(n-1) face: its three neighbours are older
        for v, r in big.rank.items():
            if r == n:
                assert big.graph.degree(v) == 3
                assert all(big.rank[u] < n for u in big.graph.adj[v])
    assert sum(1 for r in C.iterated_triangulation(3).rank.values() if r == 3) == 9


def test_iterated_triangulation_size_cap():
    with pytest.raises(SizeLimitError):
        C.iterated_triangulation(20)


@pytest.mark.parametrize("n,v,e", [(1, 3, 3), (2, 6, 9), (5, 48, 93)])
def test_universal_outerplanar_sizes(n, v, e):
    pg = C.universal_outerplanar(n)
    assert (pg.n, pg.m) == (v, e)
    pg.check_faces()
    assert set(pg.outer_face) == set(range(pg.n))
    assert pg.m == 2 * pg.n - 3


def test_universal_outerplanar_nesting_and_outer_edges():
    assert len(C.outer_edges(C.universal_outerplanar(2))) == 6
    for n in range(2, 7):
        big, small = C.universal_outerplanar(n), C.universal_outerplanar(n - 1)
        assert big.rank_subgraph(n) == small.graph
        # every outer edge of round n-1 gains exactly one new vertex
        new = [v for v, r in big.rank.items() if r == n]
        assert len(new) == len(C.outer_edges(small))
        hung = {tuple(sorted(big.graph.adj[v])) for v in new}
        assert hung == {tuple(sorted(e)) for e in C.outer_edges(small)}


def test_triangulated_grid_examples():
    g2 = C.triangulated_grid(2)
    assert (g2.n, g2.m) == (4, 5)
    g3 = C.triangulated_grid(3)
    assert (g3.n, g3.m) == (9, 16)
    assert g3.graph.degree(g3.graph.vertex_by_label("(2,2)")) == 6
    top = [g3.graph.labels[v] for v in C.grid_side(3, "top")]
    assert top == ["(1,1)", "(1,2)", "(1,3)"]
    for n in range(2, 8):
        pg = C.triangulated_grid(n)
        pg.check_faces()
        assert pg.m == 2 * n * (n - 1) + (n - 1) ** 2
        assert pg.graph.max_degree() <= 6
    with pytest.raises(ValueError):
        C.triangulated_grid(1)


def test_grid_edges_follow_definition():
    n = 4
    g = C.triangulated_grid(n).graph
    lab = {s: v for v, s in g.labels.items()}
    want = set()
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            for dk, dj in ((0, 1), (1, 0), (1, 1)):
                if k + dk <= n and j + dj <= n:
                    a, b = lab[f"({k},{j})"], lab[f"({k + dk},{j + dj})"]
                    want.add((min(a, b), max(a, b)))
    assert set(g.edges) == want


@pytest.mark.parametrize("k,v,e", [(1, 3, 3), (2, 4, 6), (15, 17, 45)])
def test_fish_sizes(k, v, e):
    pg = C.fish(k)
    assert (pg.n, pg.m) == (v, e)
    pg.check_faces()


def test_fish_structure():
    pg = C.fish(6)
    g = pg.graph
    x, y = g.vertex_by_label("x"), g.vertex_by_label("y")
    spine = [g.vertex_by_label(f"s{i}") for i in range(1, 7)]
    assert g.has_edge(x, y)
    # double ribs x - s - y are exactly the common neighbours of x and y
    assert sorted(g.adj[x] & g.adj[y]) == sorted(spine)
    assert all(g.has_edge(a, b) for a, b in zip(spine, spine[1:]))
    assert C.fish(2).graph.edges == C.complete_graph(4).edges


def test_c4_witness_structure():
    pg = C.c4_witness()
    pg.check_faces()
    assert (pg.n, pg.m) == (45, 129)
    added = range(17, 45)
    assert all(pg.graph.degree(v) == 3 for v in added)
    alt = c4_witness_alternating()
    assert (alt.n, alt.m) == (31, 87)
    assert all(alt.degree(v) == 3 for v in range(17, 31))


def test_trees():
    b = C.generalized_broom(5, 2)
    assert b.n == 7 and b.graph.degree(b.root) == 4
    star = C.generalized_broom(1, 4)
    assert star.graph == C.star_graph(4)
    k = 3
    h = C.generalized_broom(2 * k + 1, k)
    assert h.n == 3 * k + 1 and h.graph.degree(h.root) == k + 2
    assert C.perfect_kary_tree(2, 2).n == 7
    assert C.perfect_kary_tree(3, 1).graph == C.star_graph(3)
    t = C.perfect_kary_tree(4, 2)
    assert t.n == 21 and set(t.depth[v] for v in range(t.n) if t.graph.degree(v) == 1) == {2}
    with pytest.raises(ValueError):
        C.perfect_kary_tree(1, 2)


def test_paper_trees():
    sizes = {name: C.paper_tree(name).n for name in ("T1", "T2", "T3", "T4")}
    assert sizes == {"T1": 106, "T2": 21, "T3": 10, "T4": 6}
    t1 = C.paper_tree("T1")
    assert t1.radius == 3
    assert all(t1.graph.degree(v) == 5 for v in range(t1.n) if t1.depth[v] <= 2)
    t4 = C.paper_tree("T4").graph
    assert sorted((t4.degree(v) for v in range(6)), reverse=True) == [3, 3, 1, 1, 1, 1]
    assert C.paper_tree("T3").radius == 2
    with pytest.raises(ValueError):
        C.paper_tree("T9")


def test_tree_spec_validation():
    with pytest.raises(GraphError):
        C.TreeSpec((-1, -1), 0)
    with pytest.raises(GraphError):
        C.TreeSpec((-1, 2, 1), 0)


def test_random_stacked_triangulation():
    assert C.random_stacked_triangulation(4, 11).graph == C.complete_graph(4)
    pg = C.random_stacked_triangulation(100, 7)
    pg.check_faces()
    assert check_triangulation(pg)
    assert C.random_stacked_triangulation(60, 3) == C.random_stacked_triangulation(60, 3)
    assert C.random_stacked_triangulation(60, 3).graph != C.random_stacked_triangulation(60, 4).graph
    with pytest.raises(ValueError):
        C.random_stacked_triangulation(2, 0)


def test_small_graphs():
    assert C.complete_graph(6).m == 15
    assert C.path_graph(4).m == 3 and C.path_graph(4).n == 4
    c4 = C.cycle_graph(4)
    assert c4.n == 4 and all(c4.degree(v) == 2 for v in range(4))
    with pytest.raises(ValueError):
        C.cycle_graph(2)


def test_generators_are_deterministic():
    for make in (C.iterated_triangulation, C.universal_outerplanar, C.triangulated_grid, C.fish):
        assert make(3) == make(3)
    assert C.c4_witness() == C.c4_witness()
