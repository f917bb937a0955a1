import random

import pytest

from planar_ramsey import constructions as C
from planar_ramsey.avoid.partition import (
    EmbeddingRequired,
    NotOuterplanarError,
    outerplanar_linear_forest_partition,
    poh_linear_forest_partition,
)
from planar_ramsey.graph import Graph, PlaneGraph, is_linear_forest

from corpus import plane_from_networkx


def _ok(pg, part, count):
    assert len(part.parts) == count
    assert part.is_valid_for(pg.graph, linear_forest=True)
    for p in part.parts:
        assert is_linear_forest(pg.graph, p)


def _k4():
    return PlaneGraph(C.complete_graph(4), [(0, 2, 1), (0, 1, 3), (1, 2, 3), (2, 0, 3)], 0)


@pytest.mark.parametrize("make", [
    _k4,
    lambda: C.iterated_triangulation(4),
    C.octahedron,
    lambda: C.triangulated_grid(6),
    lambda: C.fish(9),
    lambda: C.universal_outerplanar(5),
    lambda: C.random_stacked_triangulation(500, 2),
])
def test_poh_partition_examples(make):
    pg = make()
    _ok(pg, poh_linear_forest_partition(pg), 3)


def test_poh_partition_tiny_graphs():
    for n, edges in ((2, [(0, 1)]), (3, [(0, 1), (1, 2)]), (3, [(0, 1), (1, 2), (0, 2)])):
        pg = plane_from_networkx(n, edges)
        _ok(pg, poh_linear_forest_partition(pg), 3)


def _connected_sample(g, rng, p):
    """A random edge subset that keeps a BFS spanning tree, so the faces stay Euler-consistent."""
    tree, seen, queue = set(), {0}, [0]
    for x in queue:
        for y in sorted(g.adj[x]):
            if y not in seen:
                seen.add(y)
                queue.append(y)
                tree.add((min(x, y), max(x, y)))
    return [e for e in g.edge_list if e in tree or rng.random() < p]


def test_poh_partition_fuzz_on_planar_subgraphs():
    rng = random.Random(11)
    for trial in range(200):
        n = rng.randint(4, 40)
        base = C.random_stacked_triangulation(n, rng.randint(0, 10**6)).graph
        edges = _connected_sample(base, rng, 0.7)
        pg = plane_from_networkx(n, edges)
        _ok(pg, poh_linear_forest_partition(pg), 3)


def test_poh_partition_needs_faces():
    with pytest.raises(EmbeddingRequired):
        poh_linear_forest_partition(PlaneGraph(C.complete_graph(4)))


def test_outerplanar_triangle():
    pg = plane_from_networkx(3, [(0, 1), (1, 2), (0, 2)])
    part = outerplanar_linear_forest_partition(pg)
    assert [sorted(p) for p in part.parts] == [[0, 1], [2]]


def test_outerplanar_path_is_one_part():
    pg = plane_from_networkx(10, [(i, i + 1) for i in range(9)])
    part = outerplanar_linear_forest_partition(pg)
    assert sorted(part.parts[0]) == list(range(10)) and not part.parts[1]


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
def test_outerplanar_uop(n):
    pg = C.universal_outerplanar(n)
    _ok(pg, outerplanar_linear_forest_partition(pg), 2)


def test_outerplanar_fuzz():
    rng = random.Random(4)
    ran = 0
    for _ in range(200):
        pg = C.universal_outerplanar(rng.randint(2, 5))
        cycle = {(min(e), max(e)) for e in C.outer_edges(pg)}
        # drop chords only, so the outer cycle survives
        edges = [e for e in pg.graph.edge_list if e in cycle or rng.random() < 0.6]
        sub = plane_from_networkx(pg.n, edges)
        outer = [i for i, f in enumerate(sub.faces) if len(f) == pg.n]
        if not outer:
            continue
        cand = PlaneGraph(sub.graph, sub.faces, outer[0])
        _ok(cand, outerplanar_linear_forest_partition(cand), 2)
        ran += 1
    assert ran >= 40


def test_outerplanar_rejects_interior_vertices():
    with pytest.raises(NotOuterplanarError):
        outerplanar_linear_forest_partition(C.iterated_triangulation(2))
    with pytest.raises(EmbeddingRequired):
        outerplanar_linear_forest_partition(PlaneGraph(C.path_graph(3)))
