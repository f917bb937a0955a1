"""Deterministic generators for the graph families used throughout the package.

Every plane graph produced here stores its faces with a consistent
orientation: each directed edge appears on exactly one face, inner faces run
counter-clockwise and the outer face runs clockwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .graph import Graph, GraphError, PlaneGraph, check_size


@dataclass(frozen=True)
class TreeSpec:
    """Rooted tree stored as a parent array (``-1`` marks the root)."""

    parent: Tuple[int, ...]
    root: int
    name: str = ""
    labels: Optional[Dict[int, str]] = None

    def __post_init__(self):
        roots = [v for v, p in enumerate(self.parent) if p < 0]
        if roots != [self.root]:
            raise GraphError("parent array must have exactly one root")
        for v in range(len(self.parent)):
            # Walking up must reach the root without revisiting.
            seen = set()
            x = v
            while x != self.root:
                if x in seen:
                    raise GraphError("parent array contains a cycle")
                seen.add(x)
                x = self.parent[x]

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def depth(self) -> Tuple[int, ...]:
        d = [-1] * self.n
        d[self.root] = 0

        def get(v: int) -> int:
            path = []
            while d[v] < 0:
                path.append(v)
                v = self.parent[v]
            base = d[v]
            for u in reversed(path):
                base += 1
                d[u] = base
            return d[path[0]] if path else d[v]

        for v in range(self.n):
            get(v)
        return tuple(d)

    @property
    def radius(self) -> int:
        """Height of the tree measured from its designated root."""
        return max(self.depth, default=0)

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.n, [(v, p) for v, p in enumerate(self.parent) if p >= 0], self.labels)

    def children(self, v: int) -> List[int]:
        return [u for u, p in enumerate(self.parent) if p == v]


# --------------------------------------------------------------------------
# stacked triangulations


def _tr_vertex_count(n: int) -> int:
    return 3 + (3 ** n - 1) // 2


def iterated_triangulation(n: int) -> PlaneGraph:
    """Tr(n): a triangle refined ``n`` times by stacking into every inner face.

    Faces are processed in creation order, so vertex ids are stable and
    Tr(n-1) is exactly the subgraph on vertices of rank ``< n``.
    """
    if n < 0:
        raise ValueError("round count must be non-negative")
    check_size(3 * _tr_vertex_count(n) - 6, f"Tr({n})")
    edges = [(0, 1), (1, 2), (0, 2)]
    rank = {0: 0, 1: 0, 2: 0}
    faces = [(0, 1, 2)]
    nv = 3
    for r in range(1, n + 1):
        new_faces = []
        for a, b, c in faces:
            v = nv
            nv += 1
            rank[v] = r
            edges += [(a, v), (b, v), (c, v)]
            new_faces += [(a, b, v), (b, c, v), (c, a, v)]
        faces = new_faces
    g = Graph(nv, edges)
    return PlaneGraph(g, [(0, 2, 1)] + faces, 0, rank)


def random_stacked_triangulation(n_vertices: int, seed: int = 0) -> PlaneGraph:
    """Stack vertices one at a time into uniformly chosen inner faces."""
    if n_vertices < 3:
        raise ValueError("a stacked triangulation needs at least 3 vertices")
    check_size(3 * n_vertices - 6, "stacked triangulation")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    rank = {0: 0, 1: 0, 2: 0}
    faces = [(0, 1, 2)]
    for v in range(3, n_vertices):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        rank[v] = v - 2
        edges += [(a, v), (b, v), (c, v)]
        faces[i] = (a, b, v)
        faces += [(b, c, v), (c, a, v)]
    return PlaneGraph(Graph(n_vertices, edges), [(0, 2, 1)] + faces, 0, rank)


def universal_outerplanar(n: int) -> PlaneGraph:
    """UOP(n): a triangle grown by hanging a new vertex on every outer edge.

    Ranks start at 1 for the initial triangle, so UOP(n-1) is the subgraph on
    ranks ``< n``.  Face 0 is the outer cycle.
    """
    if n < 1:
        raise ValueError("UOP needs n >= 1")
    nv_final = 3 * 2 ** (n - 1)
    check_size(2 * nv_final - 3, f"UOP({n})")
    edges = [(0, 1), (1, 2), (0, 2)]
    rank = {0: 1, 1: 1, 2: 1}
    inner = [(0, 1, 2)]
    outer = [0, 2, 1]
    nv = 3
    for r in range(2, n + 1):
        new_outer = []
        for i, x in enumerate(outer):
            y = outer[(i + 1) % len(outer)]
            v = nv
            nv += 1
            rank[v] = r
            edges += [(x, v), (y, v)]
            inner.append((x, y, v))
            new_outer += [x, v]
        outer = new_outer
    return PlaneGraph(Graph(nv, edges), [tuple(outer)] + inner, 0, rank)


def outer_edges(pg: PlaneGraph) -> List[Tuple[int, int]]:
    f = pg.outer_face
    return [(f[i], f[(i + 1) % len(f)]) for i in range(len(f))]


# --------------------------------------------------------------------------
# grid and fish


def grid_vertex(n: int, row: int, col: int) -> int:
    """Id of grid vertex ``(row, col)`` with 1-based coordinates."""
    return (row - 1) * n + (col - 1)


def triangulated_grid(n: int) -> PlaneGraph:
    """Gr(n) on ``[n] x [n]``; row 1 is the top side, column 1 the left side."""
    if n < 2:
        raise ValueError("grid side must be at least 2")
    check_size(2 * n * (n - 1) + (n - 1) ** 2, f"Gr({n})")
    vid = lambda k, j: grid_vertex(n, k, j)  # noqa: E731
    edges = []
    faces = []
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            if j < n:
                edges.append((vid(k, j), vid(k, j + 1)))
            if k < n:
                edges.append((vid(k, j), vid(k + 1, j)))
            if k < n and j < n:
                edges.append((vid(k, j), vid(k + 1, j + 1)))
                faces.append((vid(k, j), vid(k + 1, j + 1), vid(k, j + 1)))
                faces.append((vid(k, j), vid(k + 1, j), vid(k + 1, j + 1)))
    outer = [vid(1, j) for j in range(1, n + 1)]
    outer += [vid(k, n) for k in range(2, n + 1)]
    outer += [vid(n, j) for j in range(n - 1, 0, -1)]
    outer += [vid(k, 1) for k in range(n - 1, 1, -1)]
    labels = {vid(k, j): f"({k},{j})" for k in range(1, n + 1) for j in range(1, n + 1)}
    return PlaneGraph(Graph(n * n, edges, labels), [tuple(outer)] + faces, 0, None)


def grid_side(n: int, side: str) -> List[int]:
    """Vertex ids of one side of Gr(n): ``left``, ``right``, ``top`` or ``bottom``."""
    if side == "left":
        return [grid_vertex(n, k, 1) for k in range(1, n + 1)]
    if side == "right":
        return [grid_vertex(n, k, n) for k in range(1, n + 1)]
    if side == "top":
        return [grid_vertex(n, 1, j) for j in range(1, n + 1)]
    if side == "bottom":
        return [grid_vertex(n, n, j) for j in range(1, n + 1)]
    raise ValueError(f"unknown side {side!r}")


def grid_corners(n: int) -> Tuple[int, int, int, int]:
    """Corners in clockwise order: top-left, top-right, bottom-right, bottom-left."""
    return (grid_vertex(n, 1, 1), grid_vertex(n, 1, n), grid_vertex(n, n, n), grid_vertex(n, n, 1))


def _fish_parts(k: int):
    x, y = 0, 1
    spine = list(range(2, k + 2))
    edges = [(x, y)]
    for s in spine:
        edges += [(x, s), (y, s)]
    edges += list(zip(spine, spine[1:]))
    faces = [(x, y, spine[0])]
    for a, b in zip(spine, spine[1:]):
        faces.append((a, b, x))
        faces.append((a, y, b))
    outer = (x, spine[-1], y)
    labels = {x: "x", y: "y"}
    labels.update({s: f"s{i}" for i, s in enumerate(spine, 1)})
    return edges, faces, outer, labels


def fish(k: int) -> PlaneGraph:
    """The fish F_{x,y}: anchors 0 (x) and 1 (y), spine ``s_i`` = vertex ``i + 1``."""
    if k < 1:
        raise ValueError("fish needs at least one spine vertex")
    check_size(3 * k, "fish")
    edges, faces, outer, labels = _fish_parts(k)
    return PlaneGraph(Graph(k + 2, edges, labels), [outer] + faces, 0, None)


C4_WITNESS_SPINE = 15


def c4_witness() -> PlaneGraph:
    """Fish with 15 spine vertices and a degree-3 vertex stacked into every
    face bounded by two consecutive spine vertices (both the x and y side)."""
    k = C4_WITNESS_SPINE
    edges, faces, outer, labels = _fish_parts(k)
    nv = k + 2
    out_faces = [outer, faces[0]]
    for f in faces[1:]:
        a, b, c = f
        v = nv
        nv += 1
        edges += [(a, v), (b, v), (c, v)]
        side = "x" if 0 in f else "y"
        spine_pair = sorted(u for u in f if u > 1)
        labels[v] = f"z{spine_pair[0] - 1}{side}"
        out_faces += [(a, b, v), (b, c, v), (c, a, v)]
    return PlaneGraph(Graph(nv, edges, labels), out_faces, 0, None)


def octahedron() -> PlaneGraph:
    # Vertices 0/5 are the poles, 1..4 the equator (counter-clockwise seen from 0).
    eq = [1, 2, 3, 4]
    edges = [(0, v) for v in eq] + [(5, v) for v in eq] + [(eq[i], eq[(i + 1) % 4]) for i in range(4)]
    faces = [(0, eq[i], eq[(i + 1) % 4]) for i in range(4)]
    faces += [(5, eq[(i + 1) % 4], eq[i]) for i in range(4)]
    return PlaneGraph(Graph(6, edges), faces, 0, None)


# --------------------------------------------------------------------------
# trees


def _bfs_tree(children_counts: Sequence[int], name: str) -> TreeSpec:
    """Tree whose depth-``d`` vertices each get ``children_counts[d]`` children."""
    parent = [-1]
    level = [0]
    for c in children_counts:
        nxt = []
        for v in level:
            for _ in range(c):
                parent.append(v)
                nxt.append(len(parent) - 1)
        level = nxt
    return TreeSpec(tuple(parent), 0, name)


def perfect_kary_tree(k: int, r: int) -> TreeSpec:
    if k < 2 or r < 0:
        raise ValueError("need k >= 2 and r >= 0")
    check_size((k ** (r + 1) - 1) // (k - 1) - 1, "perfect k-ary tree")
    return _bfs_tree([k] * r, f"kary({k},{r})")


def generalized_broom(p: int, q: int) -> TreeSpec:
    """Path on ``p`` vertices plus ``q`` pendant edges at its centre vertex.

    Path vertices are ``0..p-1``; the centre is path position ``ceil(p/2)``
    (1-based) and the star leaves follow the path.
    """
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    check_size(p - 1 + q, "broom")
    center = (p + 1) // 2 - 1
    parent = [-1] * (p + q)
    for v in range(center):
        parent[v] = v + 1
    for v in range(center + 1, p):
        parent[v] = v - 1
    for v in range(p, p + q):
        parent[v] = center
    return TreeSpec(tuple(parent), center, f"broom({p},{q})")


def paper_tree(tree_id: str) -> TreeSpec:
    """The four named avoidance trees ``T1``..``T4``."""
    tid = tree_id.upper()
    if tid == "T1":
        return _bfs_tree([5, 4, 4], "T1")
    if tid == "T2":
        # Four children at depth 0 and 1; matches the 21-vertex count.
        return _bfs_tree([4, 4], "T2")
    if tid == "T3":
        return _bfs_tree([3, 2], "T3")
    if tid == "T4":
        return TreeSpec((-1, 0, 0, 0, 1, 1), 0, "T4")
    raise ValueError(f"unknown tree {tree_id!r}; expected T1, T2, T3 or T4")


# --------------------------------------------------------------------------
# small standard graphs


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    check_size(n * (n - 1) // 2, f"K{n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    """P_n: the path on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    check_size(n - 1, f"P{n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    check_size(n, f"C{n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
