"""Orientations with bounded out-degree by path reversal."""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Set, Tuple

from ..graph import Edge, Graph, GraphError, Orientation


class InfeasibleOrientation(GraphError):
    """No orientation meets the bound; ``vertices`` spans too many edges."""

    def __init__(self, vertices: List[int], edges: int, bound: int):
        self.vertices = vertices
        self.edges = edges
        self.bound = bound
        super().__init__(
            f"vertex set of size {len(vertices)} spans {edges} edges > {bound} * {len(vertices)}: {vertices[:20]}"
        )


def _degeneracy_order(g: Graph) -> List[int]:
    """Smallest-last order: each vertex has few neighbours later in the order."""
    deg = [g.degree(v) for v in range(g.n)]
    buckets: Dict[int, Set[int]] = {}
    for v, d in enumerate(deg):
        buckets.setdefault(d, set()).add(v)
    removed = [False] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        d = max(0, d - 1)
        while not buckets.get(d):
            d += 1
        v = min(buckets[d])
        buckets[d].discard(v)
        removed[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    return order


def bounded_outdegree_orientation(g: Graph, d: int) -> Orientation:
    """Orient ``g`` so every out-degree is at most ``d``.

    Starts from the smallest-last orientation and, while some vertex is over
    the bound, reverses a directed path from it to a vertex below the bound.
    When no such path exists the vertices reachable from the overloaded vertex
    span more than ``d`` edges each, and that set is reported.
    """
    if d < 0:
        raise ValueError("bound must be non-negative")
    es = g.edge_list
    pos = {v: i for i, v in enumerate(_degeneracy_order(g))}
    out: List[Set[int]] = [set() for _ in range(g.n)]
    for u, v in es:
        if pos[u] < pos[v]:
            out[u].add(v)
        else:
            out[v].add(u)
    for s in range(g.n):
        while len(out[s]) > d:
            parent = {s: -1}
            q = deque([s])
            target = -1
            while q:
                x = q.popleft()
                if len(out[x]) < d:
                    target = x
                    break
                for y in sorted(out[x]):
                    if y not in parent:
                        parent[y] = x
                        q.append(y)
            if target < 0:
                reach = sorted(parent)
                rs = set(reach)
                span = sum(1 for u, v in es if u in rs and v in rs)
                raise InfeasibleOrientation(reach, span, d)
            y = target
            while parent[y] >= 0:
                x = parent[y]
                out[x].discard(y)
                out[y].add(x)
                y = x
    arcs: Dict[Edge, Tuple[int, int]] = {}
    for u in range(g.n):
        for v in out[u]:
            arcs[(u, v) if u < v else (v, u)] = (u, v)
    return Orientation(arcs, d)
