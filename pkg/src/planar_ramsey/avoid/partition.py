"""Vertex partitions into linear forests.

Planar graphs split into three linear forests and outerplanar graphs into two.
Both routines check their own output with :func:`is_linear_forest` before
returning it.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Sequence, Set, Tuple

from ..graph import Graph, GraphError, PlaneGraph, VertexPartition, edge_key, is_linear_forest


class EmbeddingRequired(GraphError):
    """The operation needs face lists that the input does not carry."""


class NotOuterplanarError(GraphError):
    """The input embedding has a vertex off the outer face."""


# ---------------------------------------------------------------------------
# triangulating a plane graph


def _triangulate(pg: PlaneGraph) -> Tuple[int, List[Tuple[int, int, int]]]:
    """Fill every face with dummy vertices until all faces are triangles.

    Returns the new vertex count and the triangle list.  A face bounded by a
    simple cycle gets one dummy joined to all of its corners.  A face whose
    boundary walk repeats vertices first gets a ring of dummies (one per
    corner) so that no parallel edges arise, then a hub inside the ring.
    """
    if pg.faces is None:
        raise EmbeddingRequired("face lists are required")
    n = pg.n
    tris: List[Tuple[int, int, int]] = []
    for f in pg.faces:
        L = len(f)
        if L == 3 and len(set(f)) == 3:
            tris.append(tuple(f))  # type: ignore[arg-type]
            continue
        if len(set(f)) == L:
            hub = n
            n += 1
            for i in range(L):
                tris.append((f[i], f[(i + 1) % L], hub))
            continue
        ring = list(range(n, n + L))
        n += L
        hub = n
        n += 1
        for i in range(L):
            j = (i + 1) % L
            tris.append((f[i], f[j], ring[j]))
            tris.append((f[i], ring[j], ring[i]))
            tris.append((ring[i], ring[j], hub))
    return n, tris


# ---------------------------------------------------------------------------
# three linear forests for planar graphs


class _Tri:
    """Triangle list with edge-to-face incidence."""

    def __init__(self, n: int, tris: Sequence[Tuple[int, int, int]]):
        self.n = n
        self.tris = list(tris)
        self.edge_faces: Dict[Tuple[int, int], List[int]] = {}
        self.adj: List[Set[int]] = [set() for _ in range(n)]
        for fi, (a, b, c) in enumerate(self.tris):
            for u, v in ((a, b), (b, c), (c, a)):
                self.edge_faces.setdefault(edge_key(u, v), []).append(fi)
                self.adj[u].add(v)
                self.adj[v].add(u)
        for e, fs in self.edge_faces.items():
            if len(fs) != 2:
                raise GraphError(f"edge {e} lies on {len(fs)} triangles after triangulation")

    def other_face(self, e: Tuple[int, int], fi: int) -> int:
        a, b = self.edge_faces[edge_key(*e)]
        return b if a == fi else a

    def face_with_edge(self, e: Tuple[int, int], region: Set[int], avoid: int = -1) -> int:
        for fi in self.edge_faces[edge_key(*e)]:
            if fi in region and fi != avoid:
                return fi
        raise RuntimeError(f"no region face on edge {e}")

    def flood(self, start: int, region: Set[int], barrier: Set[Tuple[int, int]]) -> Set[int]:
        out = {start}
        q = [start]
        while q:
            fi = q.pop()
            a, b, c = self.tris[fi]
            for u, v in ((a, b), (b, c), (c, a)):
                e = edge_key(u, v)
                if e in barrier:
                    continue
                nf = self.other_face(e, fi)
                if nf in region and nf not in out:
                    out.add(nf)
                    q.append(nf)
        return out


def _cycle_edges(cyc: Sequence[int]) -> Set[Tuple[int, int]]:
    return {edge_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}


def _three_forest_colors(t: _Tri, outer: int) -> List[int]:
    """Color the vertices of a triangulated sphere with three linear-forest classes.

    Works on disc regions bounded by a cycle split into two induced paths
    ``P`` (color ``a``) and ``Q`` (color ``b``).  Interior vertices next to
    ``P`` never get ``a`` and those next to ``Q`` never get ``b``, which keeps
    ``P`` and ``Q`` whole components of their classes.  A chord between the
    paths splits the disc in two.  Without one, a shortest path ``R`` through
    the interior neighbours of ``P`` gets the third color and cuts the disc
    into the part between ``P`` and ``R`` and the part between ``R`` and ``Q``.
    """
    color = [-1] * t.n
    x, y, z = t.tris[outer]
    color[x] = color[y] = 0
    color[z] = 1
    region = set(range(len(t.tris))) - {outer}
    # work items: (region faces, P, Q, color of P, color of Q)
    work = [(region, [x, y], [z], 0, 1)]
    while work:
        region, P, Q, a, b = work.pop()
        if len(region) == 1:
            continue
        cyc = P + Q
        bnd = _cycle_edges(cyc)
        pset, qset = set(P), set(Q)
        verts: Set[int] = set()
        for fi in region:
            verts.update(t.tris[fi])

        chord = None
        for u in P:
            for v in t.adj[u]:
                if v in qset and edge_key(u, v) not in bnd and v in verts:
                    if any(fi in region for fi in t.edge_faces[edge_key(u, v)]):
                        chord = (u, v)
                        break
            if chord:
                break
        if chord is not None:
            u, v = chord
            i, j = P.index(u), Q.index(v)
            barrier = bnd | {edge_key(u, v)}
            f1, f2 = [fi for fi in t.edge_faces[edge_key(u, v)] if fi in region]
            side1 = t.flood(f1, region, barrier)
            side2 = region - side1
            part_a = (P[i:], Q[: j + 1])
            part_b = (P[: i + 1], Q[j:])
            marker = set(P[i + 1 :]) | set(Q[:j])
            v1: Set[int] = set()
            for fi in side1:
                v1.update(t.tris[fi])
            if marker & v1:
                work.append((side1, part_a[0], part_a[1], a, b))
                work.append((side2, part_b[0], part_b[1], a, b))
            else:
                work.append((side1, part_b[0], part_b[1], a, b))
                work.append((side2, part_a[0], part_a[1], a, b))
            continue

        interior = verts - pset - qset
        if not interior:
            raise RuntimeError("chordless disc without interior vertices is not a triangle")
        g = 3 - a - b
        t_first = t.face_with_edge((Q[-1], P[0]), region)
        t_last = t.face_with_edge((P[-1], Q[0]), region)
        w_first = next(w for w in t.tris[t_first] if w not in (Q[-1], P[0]))
        w_last = next(w for w in t.tris[t_last] if w not in (P[-1], Q[0]))
        near = {w for u in P for w in t.adj[u] if w in interior}
        parent = {w_first: -1}
        dq = deque([w_first])
        while dq:
            w = dq.popleft()
            if w == w_last:
                break
            for nb in t.adj[w]:
                if nb in near and nb not in parent:
                    parent[nb] = w
                    dq.append(nb)
        if w_last not in parent:
            raise RuntimeError("interior neighbours of P are not connected")
        R = [w_last]
        while parent[R[-1]] >= 0:
            R.append(parent[R[-1]])
        R.reverse()
        for w in R:
            color[w] = g
        barrier = bnd | _cycle_edges(P + R[::-1]) | _cycle_edges(Q + R)
        if len(P) + len(R) >= 3:
            start = t.face_with_edge((P[0], R[0]), region, avoid=t_first)
            work.append((t.flood(start, region, barrier), P, R[::-1], a, g))
        if len(Q) + len(R) >= 3:
            start = t.face_with_edge((Q[-1], R[0]), region, avoid=t_first)
            work.append((t.flood(start, region, barrier), Q, R, b, g))
    return color


def poh_linear_forest_partition(pg: PlaneGraph) -> VertexPartition:
    """Split a plane graph into three parts that each induce a linear forest.

    Non-triangular faces are filled with dummy vertices first; the dummies are
    dropped from the result.
    """
    if pg.faces is None:
        raise EmbeddingRequired("three-forest partition needs face lists")
    n = pg.n
    if n == 0:
        return VertexPartition([[], [], []])
    if n <= 2:
        return VertexPartition([list(range(n)), [], []])
    pg.check_faces()
    total, tris = _triangulate(pg)
    t = _Tri(total, tris)
    color = _three_forest_colors(t, 0)
    parts: List[List[int]] = [[], [], []]
    for v in range(n):
        if color[v] < 0:
            raise RuntimeError(f"vertex {v} was never colored")
        parts[color[v]].append(v)
    out = VertexPartition(parts)
    for p in out.parts:
        if not is_linear_forest(pg.graph, p):
            raise RuntimeError("three-forest partition produced a part that is not a linear forest")
    return out


# ---------------------------------------------------------------------------
# two linear forests for outerplanar graphs


def _grow_linear_forest(g: Graph, part0: Set[int]) -> Set[int]:
    """Greedily move vertices into ``part0`` while it stays a linear forest."""
    parent = {v: v for v in range(g.n)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * g.n
    for u, v in g.induced_edges(part0):
        deg[u] += 1
        deg[v] += 1
        parent[find(u)] = find(v)
    for v in range(g.n):
        if v in part0:
            continue
        nbs = [u for u in g.adj[v] if u in part0]
        if len(nbs) > 2 or any(deg[u] >= 2 for u in nbs):
            continue
        if len(nbs) == 2 and find(nbs[0]) == find(nbs[1]):
            continue
        part0.add(v)
        for u in nbs:
            deg[u] += 1
            deg[v] += 1
            parent[find(u)] = find(v)
    return part0


def outerplanar_linear_forest_partition(pg: PlaneGraph) -> VertexPartition:
    """Split an outerplanar graph into two parts that each induce a linear forest.

    Vertices at even and odd breadth-first distance form the two parts.  A
    layer of an outerplanar graph induces a linear forest: a vertex with three
    neighbours in its own layer would give a K(2,3) minor with the contracted
    lower layers, and a cycle would give a K4 minor.  Layers two apart are not
    adjacent.  A greedy pass then moves vertices into the first part while it
    stays a linear forest.
    """
    if pg.faces is None:
        raise EmbeddingRequired("outerplanar partition needs the outer face")
    g = pg.graph
    on_outer = set(pg.outer_face)
    off = [v for v in range(g.n) if v not in on_outer and g.degree(v) > 0]
    if off:
        raise NotOuterplanarError(f"vertices off the outer face: {off[:10]}")
    dist = [-1] * g.n
    for s in range(g.n):
        if dist[s] >= 0:
            continue
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
    even = {v for v in range(g.n) if dist[v] % 2 == 0}
    part0 = _grow_linear_forest(g, even)
    out = VertexPartition([sorted(part0), sorted(set(range(g.n)) - part0)])
    for p in out.parts:
        if not is_linear_forest(g, p):
            raise NotOuterplanarError("layer split failed; the embedding is not outerplanar")
    return out
