"""Explicit avoidance colorings built from a linear-forest partition and orientations.

Two-color schemes (``avoid_T1``, ``avoid_T2``) color the paths inside each
part alternately, starting red at the lower-indexed end, and color a cross
edge directed from part ``i`` to part ``j`` red when ``i < j`` and blue
otherwise.  The three- and four-color schemes (``c3``, ``c4``) orient the
edges between each pair of parts and color a cross edge by the part of its
head; ``c3`` gives intra-part edges their part's color and ``c4`` gives them
the extra color 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..graph import Edge, EdgeColoring, Graph, Orientation, PlaneGraph, VertexPartition, coloring_problems
from .orient import bounded_outdegree_orientation
from .partition import outerplanar_linear_forest_partition, poh_linear_forest_partition

RED, BLUE = 0, 1
INTRA, CROSS = "intra", "cross"


@dataclass
class AvoidanceColoring:
    """A coloring together with the partition and orientations that produced it."""

    scheme: str
    coloring: EdgeColoring
    partition: VertexPartition
    orientations: Dict[str, Orientation]
    rule: Dict[Edge, str] = field(default_factory=dict)

    def problems(self, g: Graph) -> List[str]:
        """Rule violations, recomputed from the recorded provenance."""
        out = list(coloring_problems(g, self.coloring))
        if not self.partition.is_valid_for(g, linear_forest=True):
            out.append("partition is not a cover by linear forests")
            return out
        part = self.partition.part_of()
        for name, o in self.orientations.items():
            sub = Graph(g.n, o.arcs.keys())
            if not o.is_valid_for(sub) or not set(o.arcs) <= g.edges:
                out.append(f"orientation {name} breaks its out-degree bound {o.bound}")
        expect = _expected_colors(g, self.scheme, part, self.orientations)
        for e in g.edge_list:
            want_rule = INTRA if part[e[0]] == part[e[1]] else CROSS
            if self.rule.get(e) != want_rule:
                out.append(f"edge {e[0]}-{e[1]} recorded as {self.rule.get(e)}, expected {want_rule}")
            if self.coloring.colors.get(e) != expect.get(e):
                out.append(f"edge {e[0]}-{e[1]} has color {self.coloring.colors.get(e)}, rule gives {expect.get(e)}")
        return out

    def to_json(self) -> dict:
        return {
            "scheme": self.scheme,
            "parts": [sorted(p) for p in self.partition.parts],
            "orientations": {
                name: {"bound": o.bound, "arcs": sorted([list(a) for a in o.arcs.values()])}
                for name, o in self.orientations.items()
            },
            "rules": {f"{u}-{v}": r for (u, v), r in sorted(self.rule.items())},
        }


def alternate_paths(g: Graph, part: frozenset) -> Dict[Edge, int]:
    """Color each path of ``g[part]`` alternately, red at its lower-indexed end."""
    nb: Dict[int, List[int]] = {v: [u for u in g.adj[v] if u in part] for v in part}
    out: Dict[Edge, int] = {}
    seen = set()
    for s in sorted(part):
        if s in seen or len(nb[s]) == 2:
            continue
        # s is an end of its path (or isolated); the lower end of the two is reached first.
        seen.add(s)
        prev, cur, col = -1, s, RED
        while True:
            nxt = [u for u in nb[cur] if u != prev]
            if not nxt:
                break
            y = nxt[0]
            out[(cur, y) if cur < y else (y, cur)] = col
            col = 1 - col
            prev, cur = cur, y
            seen.add(cur)
    if len(seen) != len(part):
        raise ValueError("part contains a cycle")
    return out


def _expected_colors(
    g: Graph, scheme: str, part: Dict[int, int], orientations: Dict[str, Orientation]
) -> Dict[Edge, int]:
    colors: Dict[Edge, int] = {}
    nparts = max(part.values(), default=-1) + 1
    if scheme in ("avoidT1", "avoidT2"):
        o = orientations["all"]
        for p in range(nparts):
            members = frozenset(v for v, i in part.items() if i == p)
            colors.update(alternate_paths(g, members))
        for e in g.edge_list:
            if part[e[0]] != part[e[1]]:
                t, h = o.arcs[e]
                colors[e] = RED if part[t] < part[h] else BLUE
        return colors
    if scheme in ("c3", "c4"):
        for e in g.edge_list:
            a, b = part[e[0]], part[e[1]]
            if a == b:
                colors[e] = a if scheme == "c3" else 3
            else:
                o = orientations[f"B{3 - a - b + 1}"]
                colors[e] = part[o.arcs[e][1]]
        return colors
    raise ValueError(f"unknown scheme {scheme!r}")


def _rules(g: Graph, part: Dict[int, int]) -> Dict[Edge, str]:
    return {e: INTRA if part[e[0]] == part[e[1]] else CROSS for e in g.edge_list}


def _finish(g: Graph, scheme: str, k: int, partition: VertexPartition, orientations: Dict[str, Orientation]):
    part = partition.part_of()
    colors = _expected_colors(g, scheme, part, orientations)
    ac = AvoidanceColoring(scheme, EdgeColoring(k, colors), partition, orientations, _rules(g, part))
    bad = ac.problems(g)
    if bad:
        raise RuntimeError(f"{scheme} coloring failed its own checks: {bad[:3]}")
    return ac


def _given(partition: Optional[VertexPartition], g: Graph, parts: int) -> Optional[VertexPartition]:
    if partition is not None and (len(partition.parts) != parts or not partition.is_valid_for(g, linear_forest=True)):
        raise ValueError(f"need a partition into {parts} linear forests")
    return partition


def coloring_avoid_T1(pg: PlaneGraph, partition: Optional[VertexPartition] = None) -> AvoidanceColoring:
    """Two-coloring of a plane graph with no monochromatic T1.

    ``partition`` overrides the computed three-part linear-forest partition.
    """
    partition = _given(partition, pg.graph, 3) or poh_linear_forest_partition(pg)
    o = bounded_outdegree_orientation(pg.graph, 3)
    return _finish(pg.graph, "avoidT1", 2, partition, {"all": o})


def coloring_avoid_T2(pg: PlaneGraph, partition: Optional[VertexPartition] = None) -> AvoidanceColoring:
    """Two-coloring of an outerplanar graph with no monochromatic T2."""
    partition = _given(partition, pg.graph, 2) or outerplanar_linear_forest_partition(pg)
    o = bounded_outdegree_orientation(pg.graph, 2)
    return _finish(pg.graph, "avoidT2", 2, partition, {"all": o})


def _cross_orientations(g: Graph, partition: VertexPartition) -> Dict[str, Orientation]:
    part = partition.part_of()
    out = {}
    for i in range(3):
        es = [e for e in g.edge_list if part[e[0]] != part[e[1]] and i not in (part[e[0]], part[e[1]])]
        out[f"B{i + 1}"] = bounded_outdegree_orientation(Graph(g.n, es), 2)
    return out


def coloring_c3(pg: PlaneGraph, partition: Optional[VertexPartition] = None) -> AvoidanceColoring:
    """Three-coloring of a plane graph with no monochromatic T3."""
    partition = _given(partition, pg.graph, 3) or poh_linear_forest_partition(pg)
    return _finish(pg.graph, "c3", 3, partition, _cross_orientations(pg.graph, partition))


def coloring_c4(pg: PlaneGraph, partition: Optional[VertexPartition] = None) -> AvoidanceColoring:
    """Four-coloring of a plane graph with no monochromatic T4; color 3 is a linear forest."""
    partition = _given(partition, pg.graph, 3) or poh_linear_forest_partition(pg)
    return _finish(pg.graph, "c4", 4, partition, _cross_orientations(pg.graph, partition))


SCHEMES = {
    "avoidT1": coloring_avoid_T1,
    "avoidT2": coloring_avoid_T2,
    "c3": coloring_c3,
    "c4": coloring_c4,
}


def class_degree(g: Graph, c: EdgeColoring, v: int, color: int) -> int:
    return sum(1 for u in g.adj[v] if c[(u, v)] == color)


def local_bound_problems(g: Graph, ac: AvoidanceColoring) -> List[Tuple[int, str]]:
    """Degree facts the avoidance arguments rest on, checked vertex by vertex.

    Two-color schemes: out-degree within the bound, at most one red and one
    blue intra-part edge per vertex, red degree at most ``bound + 1`` on the
    first part and blue degree at most ``bound + 1`` on the last part.
    ``c3``/``c4``: a vertex with three edges of color ``i`` lies in part ``i``.
    """
    part = ac.partition.part_of()
    bad: List[Tuple[int, str]] = []
    c = ac.coloring
    if ac.scheme in ("avoidT1", "avoidT2"):
        o = ac.orientations["all"]
        outdeg = o.out_degrees(g.n)
        last = len(ac.partition.parts) - 1
        for v in range(g.n):
            if outdeg[v] > o.bound:
                bad.append((v, "out-degree"))
            for col in (RED, BLUE):
                intra = sum(1 for u in g.adj[v] if part[u] == part[v] and c[(u, v)] == col)
                if intra > 1:
                    bad.append((v, f"two intra edges of color {col}"))
            if part[v] == 0 and class_degree(g, c, v, RED) > o.bound + 1:
                bad.append((v, "red degree on first part"))
            if part[v] == last and class_degree(g, c, v, BLUE) > o.bound + 1:
                bad.append((v, "blue degree on last part"))
    else:
        for v in range(g.n):
            for col in range(3):
                if part[v] != col and class_degree(g, c, v, col) > 2:
                    bad.append((v, f"three edges of color {col} outside part {col}"))
    return bad
