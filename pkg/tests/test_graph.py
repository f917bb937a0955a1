import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planar_ramsey.constructions import complete_graph, cycle_graph, iterated_triangulation, path_graph, universal_outerplanar
from planar_ramsey.graph import (
    EdgeColoring,
    Embedding,
    Graph,
    GraphError,
    Orientation,
    PlaneGraph,
    SizeLimitError,
    VertexPartition,
    check_size,
    check_triangulation,
    coloring_problems,
    is_linear_forest,
    set_size_cap,
    size_cap,
    validate_coloring,
)

from corpus import plane_from_networkx


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(-1, [])


def test_graph_basics():
    g = Graph(4, [(1, 0), (2, 1), (3, 2)], {0: "a"})
    assert g.edge_list == ((0, 1), (1, 2), (2, 3))
    assert g.degree(1) == 2 and g.max_degree() == 2
    assert g.is_forest() and g.is_connected() and g.is_bipartite()
    assert g.vertex_by_label("a") == 0
    assert g == Graph(4, [(0, 1), (1, 2), (2, 3)], {0: "a"})
    assert not cycle_graph(5).is_bipartite()
    sub = cycle_graph(5).subgraph([0, 1, 3])
    assert sub.n == 3 and sub.edge_list == ((0, 1),)


def test_is_linear_forest_examples():
    tri = complete_graph(3)
    assert not is_linear_forest(tri, [0, 1, 2])
    assert is_linear_forest(path_graph(4), range(4))
    assert not is_linear_forest(complete_graph(4), [0, 1, 2])
    with pytest.raises(GraphError):
        is_linear_forest(tri, [0, 5])


def _brute_linear_forest(g, part):
    s = set(part)
    es = [e for e in g.edge_list if e[0] in s and e[1] in s]
    deg = {v: 0 for v in s}
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
    if any(d > 2 for d in deg.values()):
        return False
    # look for a cycle by trying every vertex subset of size >= 3 as a cycle vertex set
    for r in range(3, len(s) + 1):
        for sub in itertools.combinations(sorted(s), r):
            ss = set(sub)
            inner = [e for e in es if e[0] in ss and e[1] in ss]
            if len(inner) == r and all(sum(1 for e in inner if v in e) == 2 for v in sub):
                return False
    return True


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])),
    st.sets(st.integers(0, n - 1)),
)))
def test_is_linear_forest_matches_brute_force(data):
    n, edges, part = data
    g = Graph(n, edges)
    assert is_linear_forest(g, part) == _brute_linear_forest(g, part)


def test_validate_coloring_examples():
    tri = complete_graph(3)
    assert validate_coloring(tri, EdgeColoring(2, {(0, 1): 0, (0, 2): 0, (1, 2): 0}))
    missing = EdgeColoring(2, {(0, 1): 0, (0, 2): 0})
    assert not validate_coloring(tri, missing)
    assert "missing edges: 1-2" in coloring_problems(tri, missing)
    assert not validate_coloring(tri, EdgeColoring(2, {(0, 1): 0, (0, 2): 2, (1, 2): 0}))
    extra = EdgeColoring(2, {(0, 1): 0, (0, 2): 0, (1, 2): 0, (2, 5): 1})
    assert any("extra" in p for p in coloring_problems(tri, extra))


def test_coloring_keys_are_normalised():
    c = EdgeColoring(2, {(2, 1): 1})
    assert c[(1, 2)] == 1 and c[(2, 1)] == 1


def test_check_triangulation_examples():
    assert check_triangulation(iterated_triangulation(2))
    assert not check_triangulation(universal_outerplanar(2))
    k4 = PlaneGraph(complete_graph(4), [(0, 2, 1), (0, 1, 3), (1, 2, 3), (2, 0, 3)], 0)
    k4.check_faces()
    assert check_triangulation(k4)
    with pytest.raises(GraphError):
        check_triangulation(PlaneGraph(complete_graph(4)))


def test_check_faces_catches_bad_embeddings():
    tri = complete_graph(3)
    with pytest.raises(GraphError):
        PlaneGraph(tri, [(0, 1, 2)], 0).check_faces()
    with pytest.raises(GraphError):
        PlaneGraph(tri, [(0, 1), (0, 1, 2)], 0).check_faces()
    with pytest.raises(GraphError):
        PlaneGraph(tri, [(0, 1, 2)], 3)


def test_networkx_faces_satisfy_euler():
    pg = plane_from_networkx(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    pg.check_faces()


def test_orientation_and_partition_checks():
    tri = complete_graph(3)
    o = Orientation({(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (2, 0)}, 1)
    assert o.is_valid_for(tri)
    assert not Orientation({(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (0, 2)}, 1).is_valid_for(tri)
    assert VertexPartition([[0, 1], [2]]).is_valid_for(tri, linear_forest=True)
    assert not VertexPartition([[0, 1, 2], []]).is_valid_for(tri, linear_forest=True)
    assert not VertexPartition([[0, 1], [1, 2]]).is_valid_for(tri)
    assert not VertexPartition([[0], [2]]).is_valid_for(tri)


def test_embedding_validity():
    tri = complete_graph(3)
    p3 = path_graph(3)
    c = EdgeColoring(2, {(0, 1): 0, (1, 2): 0, (0, 2): 1})
    assert Embedding((0, 1, 2)).is_valid(tri, p3, c, 0)
    assert not Embedding((1, 0, 2)).is_valid(tri, p3, c, 0)
    assert not Embedding((0, 0, 2)).is_valid(tri, p3)


def test_size_cap_is_configurable():
    old = size_cap()
    try:
        set_size_cap(10)
        with pytest.raises(SizeLimitError):
            check_size(11)
        with pytest.raises(SizeLimitError):
            iterated_triangulation(3)
    finally:
        set_size_cap(old)
    with pytest.raises(ValueError):
        set_size_cap(0)
