"""Constructive monochromatic path extractors.

Color 0 is red and color 1 is blue throughout.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..graph import EdgeColoring, GraphError, PlaneGraph, coloring_problems, edge_key
from .match import is_mono_path

RED, BLUE = 0, 1


class PreconditionError(GraphError):
    """The input does not meet an extractor's structural requirements."""


@dataclass
class MonoPath:
    color: int
    path: List[int]

    @property
    def length(self) -> int:
        return len(self.path) - 1


def _bfs_path(adj, sources: Iterable[int], targets: Set[int]) -> Optional[List[int]]:
    """Shortest path from any source to any target; ``adj`` maps a vertex to its neighbours."""
    parent: Dict[int, int] = {}
    q = deque()
    for s in sources:
        if s not in parent:
            parent[s] = -1
            q.append(s)
    while q:
        x = q.popleft()
        if x in targets:
            path = [x]
            while parent[path[-1]] >= 0:
                path.append(parent[path[-1]])
            return path[::-1]
        for y in adj(x):
            if y not in parent:
                parent[y] = x
                q.append(y)
    return None


def _class_adj(c: EdgeColoring, color: int) -> Dict[int, Set[int]]:
    adj: Dict[int, Set[int]] = {}
    for (u, v), col in c.colors.items():
        if col == color:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
    return adj


# ---------------------------------------------------------------------------
# crossing paths in near-triangulations


def boundary_arcs(pg: PlaneGraph, a: int, b: int, c: int, d: int) -> Dict[str, List[int]]:
    """Split the outer cycle at ``a, b, c, d`` (clockwise) into the four arcs."""
    outer = list(pg.outer_face)
    pos = {v: i for i, v in enumerate(outer)}
    for v in (a, b, c, d):
        if v not in pos:
            raise PreconditionError(f"vertex {v} is not on the outer cycle")
    if len({a, b, c, d}) != 4:
        raise PreconditionError("a, b, c, d must be distinct")
    L = len(outer)
    rel = [(pos[v] - pos[a]) % L for v in (a, b, c, d)]
    if not rel[0] < rel[1] < rel[2] < rel[3]:
        raise PreconditionError("a, b, c, d are not in clockwise order on the outer cycle")

    def arc(x: int, y: int) -> List[int]:
        i = pos[x]
        out = [outer[i]]
        while outer[i] != y:
            i = (i + 1) % L
            out.append(outer[i])
        return out

    return {"ab": arc(a, b), "bc": arc(b, c), "cd": arc(c, d), "da": arc(d, a)}


def _face_of_dart(pg: PlaneGraph) -> Dict[Tuple[int, int], int]:
    dart: Dict[Tuple[int, int], int] = {}
    for fi, f in enumerate(pg.faces):
        for i in range(len(f)):
            d = (f[i], f[(i + 1) % len(f)])
            if d in dart:
                raise PreconditionError("faces are not consistently oriented")
            dart[d] = fi
    return dart


def _check_near_triangulation(pg: PlaneGraph) -> None:
    if pg.faces is None:
        raise PreconditionError("crossing paths need face lists")
    pg.check_faces()
    for f in pg.inner_faces:
        if len(f) != 3:
            raise PreconditionError(f"inner face {f} is not a triangle")
    if len(set(pg.outer_face)) != len(pg.outer_face):
        raise PreconditionError("outer face is not a cycle")


def crossing_path(pg: PlaneGraph, a: int, b: int, c: int, d: int, coloring: EdgeColoring) -> MonoPath:
    """A blue path from arc C(a,b) to C(c,d), or else a red path from C(b,c) to C(d,a).

    The blue side is a breadth-first search.  When it fails, the red path is
    read off the dual walk along the frontier of the blue-reachable region:
    the frontier edges are all red and consecutive ones share a vertex.
    """
    _check_near_triangulation(pg)
    problems = coloring_problems(pg.graph, coloring)
    if problems or coloring.k != 2:
        raise PreconditionError("need a valid 2-coloring: " + "; ".join(problems))
    arcs = boundary_arcs(pg, a, b, c, d)
    blue = _class_adj(coloring, BLUE)
    found = _bfs_path(lambda x: blue.get(x, ()), arcs["ab"], set(arcs["cd"]))
    if found is not None:
        return MonoPath(BLUE, found)

    reach: Set[int] = set()
    q = deque(arcs["ab"])
    reach.update(arcs["ab"])
    while q:
        x = q.popleft()
        for y in blue.get(x, ()):
            if y not in reach:
                reach.add(y)
                q.append(y)

    dart = _face_of_dart(pg)
    bc = arcs["bc"]
    start = None
    for x, y in zip(bc, bc[1:]):
        if x in reach and y not in reach:
            start = (x, y)
    if start is None:
        raise RuntimeError("no frontier edge on arc C(b,c)")

    frontier = [start]
    u, v = start
    face = dart[(v, u)]
    while face != pg.outer:
        tri = pg.faces[face]
        nxt = None
        for i in range(3):
            p, q2 = tri[i], tri[(i + 1) % 3]
            if {p, q2} != {u, v} and (p in reach) != (q2 in reach):
                nxt = (p, q2)
        if nxt is None:
            raise RuntimeError("dual walk lost the frontier")
        frontier.append(nxt)
        u, v = nxt
        face = dart[(v, u)]

    red: Dict[int, Set[int]] = {}
    for x, y in frontier:
        if coloring[(x, y)] != RED:
            raise RuntimeError("frontier edge is not red")
        red.setdefault(x, set()).add(y)
        red.setdefault(y, set()).add(x)
    found = _bfs_path(lambda x: red.get(x, ()), [x for x in bc if x in red], set(arcs["da"]))
    if found is None:
        raise RuntimeError("frontier walk did not reach arc C(d,a)")
    return MonoPath(RED, found)


def verify_crossing_path(
    pg: PlaneGraph, a: int, b: int, c: int, d: int, coloring: EdgeColoring, result: MonoPath
) -> bool:
    """Independent check of a crossing-path answer."""
    arcs = boundary_arcs(pg, a, b, c, d)
    p = result.path
    if not is_mono_path(pg.graph, coloring, p, result.color):
        return False
    if result.color == BLUE:
        ends = (set(arcs["ab"]), set(arcs["cd"]))
    elif result.color == RED:
        ends = (set(arcs["bc"]), set(arcs["da"]))
    else:
        return False
    return (p[0] in ends[0] and p[-1] in ends[1]) or (p[0] in ends[1] and p[-1] in ends[0])


# ---------------------------------------------------------------------------
# long paths in universal outerplanar graphs


@dataclass
class UopEdgeState:
    """Tracked red/blue path lengths at the current edge ``(u, v)``, ``v`` of top rank."""

    edge: Tuple[int, int]
    red_len: int
    blue_len: int
    case: str = "start"


@dataclass
class UopExtraction:
    color: int
    path: List[int]
    trace: List[UopEdgeState] = field(default_factory=list)
    mode: str = "sequence"

    @property
    def length(self) -> int:
        return len(self.path) - 1


class _UnionFind:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


def _child(pg: PlaneGraph, a: int, b: int) -> Optional[int]:
    """The vertex hung on edge ``ab`` one round after its younger endpoint."""
    rank = pg.rank
    want = max(rank[a], rank[b]) + 1
    adj = pg.graph.adj
    small, big = (a, b) if len(adj[a]) <= len(adj[b]) else (b, a)
    for x in adj[small]:
        if rank[x] == want and x in adj[big]:
            return x
    return None


def _out_side(pg: PlaneGraph, a: int, b: int) -> Set[int]:
    """Vertices of G(out, ab): both endpoints plus everything hung on ``ab`` later."""
    out = {a, b}
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        z = _child(pg, x, y)
        if z is not None:
            out.add(z)
            stack += [(x, z), (z, y)]
    return out


def _check_uop(pg: PlaneGraph) -> int:
    if pg.rank is None or pg.faces is None:
        raise PreconditionError("UOP extraction needs rank metadata and the outer face")
    if len(pg.rank) != pg.n:
        raise PreconditionError("rank metadata does not cover every vertex")
    m = max(pg.rank.values())
    if sorted(v for v, r in pg.rank.items() if r == 1) != [0, 1, 2] or pg.n != 3 * 2 ** (m - 1):
        raise PreconditionError("rank metadata does not describe a universal outerplanar graph")
    if set(pg.outer_face) != set(range(pg.n)):
        raise PreconditionError("some vertex is off the outer face")
    return m


def two_far_vertices(pg: PlaneGraph, rank: int) -> Tuple[int, int]:
    """Two vertices of the given rank at distance at least ``rank``."""
    keep = {v for v, r in pg.rank.items() if r <= rank}
    adj = pg.graph.adj
    for s in sorted(v for v in keep if pg.rank[v] == rank):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y in keep and y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        for t, dt in dist.items():
            if dt >= rank and pg.rank[t] == rank:
                return s, t
    raise RuntimeError(f"no two rank-{rank} vertices at distance {rank}")


def uop_extract_path(pg: PlaneGraph, coloring: EdgeColoring, n: int) -> UopExtraction:
    """A monochromatic path with at least ``n`` edges in a 2-colored UOP(m), ``m >= n*n``.

    Follows the edge sequence e_n < e_{n+1} < ... of outer edges whose ends lie
    in different blue components, extending either the red path (the new
    vertex is blue-separated from the top endpoint) or the blue path (it is
    blue-connected to the top endpoint, through the part hung on that edge).
    """
    m = _check_uop(pg)
    if n < 2:
        raise PreconditionError("target length must be at least 2")
    if n * n > m:
        raise PreconditionError(f"UOP({m}) is too small for n={n}: need at least UOP({n * n})")
    problems = coloring_problems(pg.graph, coloring)
    if problems or coloring.k != 2:
        raise PreconditionError("need a valid 2-coloring: " + "; ".join(problems))

    rank = pg.rank
    uf = _UnionFind(pg.n)
    for (x, y), col in coloring.colors.items():
        if col == BLUE:
            uf.union(x, y)
    comp = uf.find

    cycle_n = [v for v in pg.outer_face if rank[v] <= n]
    start = None
    for i, x in enumerate(cycle_n):
        y = cycle_n[(i + 1) % len(cycle_n)]
        if comp(x) != comp(y):
            start = (x, y) if rank[y] == n else (y, x)
            break

    adj = pg.graph.adj
    colors = coloring.colors

    def blue_nbrs(x: int):
        return [y for y in adj[x] if colors[(x, y) if x < y else (y, x)] == BLUE]

    if start is None:
        s, t = two_far_vertices(pg, n)
        path = _bfs_path(blue_nbrs, [s], {t})
        if path is None:
            raise RuntimeError("rank-n vertices should share a blue component")
        return UopExtraction(BLUE, path, [], mode="blue-component")

    u, v = start
    red_path = [u, v]
    blue_path = [v]
    trace = [UopEdgeState((u, v), 1, 0)]
    r = n
    while len(red_path) - 1 < n and len(blue_path) - 1 < n:
        if r >= n * n:
            raise RuntimeError("sequence ended without a long path")
        w = _child(pg, u, v)
        if comp(v) != comp(w):
            red_path.append(w)
            blue_path = [w]
            u, v = v, w
            case = "red"
        else:
            assert comp(u) != comp(w)
            inside = _out_side(pg, v, w)
            link = _bfs_path(lambda x: [y for y in blue_nbrs(x) if y in inside], [v], {w})
            if link is None:
                raise RuntimeError("blue link outside G(out, vw)")
            red_path[-1] = w
            blue_path = blue_path + link[1:]
            v = w
            case = "blue"
        r += 1
        trace.append(UopEdgeState((u, v), len(red_path) - 1, len(blue_path) - 1, case))
    if len(red_path) - 1 >= n:
        return UopExtraction(RED, red_path, trace)
    return UopExtraction(BLUE, blue_path, trace)
