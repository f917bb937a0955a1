"""Shared fixtures: the small-host corpus and pattern sets used by several test files."""

from __future__ import annotations

from planar_ramsey import constructions as C


def small_hosts(max_edges: int = 20):
    """Every generated host with at most ``max_edges`` edges, as ``(name, Graph)`` pairs."""
    out = []
    for n in range(0, 3):
        out.append((f"tr{n}", C.iterated_triangulation(n).graph))
    for n in range(1, 4):
        out.append((f"uop{n}", C.universal_outerplanar(n).graph))
    for n in range(2, 5):
        out.append((f"grid{n}", C.triangulated_grid(n).graph))
    for k in range(1, 8):
        out.append((f"fish{k}", C.fish(k).graph))
    out.append(("octahedron", C.octahedron().graph))
    for n in range(2, 8):
        out.append((f"complete{n}", C.complete_graph(n)))
    for n in (2, 3, 4, 5, 6, 8, 12, 21):
        out.append((f"path{n}", C.path_graph(n)))
    for n in (3, 4, 5, 6, 7, 10, 20):
        out.append((f"cycle{n}", C.cycle_graph(n)))
    for p, q in [(1, 3), (3, 2), (5, 2), (5, 4), (7, 3), (9, 4)]:
        out.append((f"broom{p}_{q}", C.generalized_broom(p, q).graph))
    for k, r in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 2)]:
        out.append((f"kary{k}_{r}", C.perfect_kary_tree(k, r).graph))
    for t in ("T2", "T3", "T4"):
        out.append((t, C.paper_tree(t).graph))
    for n in (4, 5, 6, 7, 8):
        for seed in range(3):
            out.append((f"random{n}_{seed}", C.random_stacked_triangulation(n, seed).graph))
    return [(name, g) for name, g in out if 0 < g.m <= max_edges]


def corpus_patterns():
    return [
        ("P3", C.path_graph(3)),
        ("P4", C.path_graph(4)),
        ("C4", C.cycle_graph(4)),
        ("K13", C.star_graph(3)),
        ("K3", C.complete_graph(3)),
    ]


def c4_witness_alternating():
    """Fish(15) plus one degree-3 vertex per spine edge, sides alternating x, y, x, ...

    This is the 31-vertex, 87-edge reading of the C4 witness; it does not arrow C4.
    """
    from planar_ramsey.graph import Graph

    base = C.fish(15)
    edges = list(base.graph.edge_list)
    nv = base.n
    for i in range(14):
        a, b = 2 + i, 3 + i
        anchor = 0 if i % 2 == 0 else 1
        edges += [(a, nv), (b, nv), (anchor, nv)]
        nv += 1
    return Graph(nv, edges)


def plane_from_networkx(n, edges):
    """Face lists for an arbitrary planar graph, via networkx (test helper only)."""
    import networkx as nx

    from planar_ramsey.graph import Graph, PlaneGraph

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    ok, emb = nx.check_planarity(G)
    assert ok
    seen = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) not in seen:
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return PlaneGraph(Graph(n, edges), faces, 0)


def random_coloring(g, k, seed):
    import random

    from planar_ramsey.graph import EdgeColoring

    rng = random.Random(seed)
    return EdgeColoring.from_list(g, k, [rng.randrange(k) for _ in range(g.m)])


def outerplanar_by_circle_orders(g):
    """Brute force: some cyclic vertex order draws every edge as a non-crossing chord."""
    import itertools

    if g.n <= 3:
        return True
    edges = g.edge_list
    for rest in itertools.permutations(range(1, g.n)):
        pos = {0: 0}
        pos.update({v: i + 1 for i, v in enumerate(rest)})
        chords = [tuple(sorted((pos[u], pos[v]))) for u, v in edges]
        ok = True
        for (a, b), (c, d) in itertools.combinations(chords, 2):
            if a < c < b < d or c < a < d < b:
                ok = False
                break
        if ok:
            return True
    return False
