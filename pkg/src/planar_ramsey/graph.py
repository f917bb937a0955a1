"""Core graph, embedding and overlay types.

Vertices are dense integers ``0..n-1`` and edges are stored as sorted pairs
``(u, v)`` with ``u < v``.  Graphs never change after construction; colorings,
orientations and partitions are separate overlay objects so one host can serve
many of them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

Edge = Tuple[int, int]

#: Default upper bound on generated edge counts; see :func:`set_size_cap`.
DEFAULT_SIZE_CAP = 2_000_000
_size_cap = DEFAULT_SIZE_CAP


class GraphError(ValueError):
    """Structural problem with a graph or one of its overlays."""


class SizeLimitError(GraphError):
    """A construction would exceed the configured edge cap."""


def set_size_cap(edges: int) -> None:
    global _size_cap
    if edges < 1:
        raise ValueError("size cap must be positive")
    _size_cap = int(edges)


def size_cap() -> int:
    return _size_cap


def check_size(edges: int, what: str = "graph") -> None:
    if edges > _size_cap:
        raise SizeLimitError(f"{what} would have {edges} edges, above the cap of {_size_cap}")


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: FrozenSet[Edge]
    labels: Mapping[int, str] = field(default_factory=dict)

    def __init__(self, n: int, edges: Iterable[Sequence[int]], labels: Optional[Mapping[int, str]] = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            k = edge_key(u, v)
            if k in es:
                raise GraphError(f"parallel edge {k[0]}-{k[1]}")
            es.add(k)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "labels", dict(labels or {}))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and dict(self.labels) == dict(other.labels)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        """Edges in sorted order; positions serve as stable edge indices."""
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adj(self) -> Tuple[FrozenSet[int], ...]:
        nb: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def induced_edges(self, part: Iterable[int]) -> List[Edge]:
        s = set(part)
        return [e for e in self.edge_list if e[0] in s and e[1] in s]

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in sorted order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = {pos[v]: s for v, s in self.labels.items() if v in pos}
        return Graph(len(vs), es, labels)

    def components(self, vertices: Optional[Iterable[int]] = None) -> List[List[int]]:
        allowed = set(range(self.n)) if vertices is None else set(vertices)
        seen = set()
        out = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            q = deque([s])
            while q:
                x = q.popleft()
                for y in self.adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        q.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_bipartite(self) -> bool:
        return bipartition(self) is not None

    def vertex_by_label(self, label: str) -> int:
        for v, s in self.labels.items():
            if s == label:
                return v
        raise KeyError(label)


def bipartition(g: Graph) -> Optional[List[int]]:
    """Return a 0/1 side per vertex, or ``None`` if ``g`` has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return None
    return side


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """A graph together with its face cycles and construction ranks.

    ``faces`` lists every face as a vertex cycle, ``outer`` indexes the outer
    face, and ``rank`` records the construction round of each vertex.  The
    outer face is stored in the orientation treated as clockwise by the
    crossing-path extractor.
    """

    graph: Graph
    faces: Optional[Tuple[Tuple[int, ...], ...]] = None
    outer: Optional[int] = None
    rank: Optional[Mapping[int, int]] = None

    def __post_init__(self):
        if self.faces is not None:
            object.__setattr__(self, "faces", tuple(tuple(int(x) for x in f) for f in self.faces))
            if self.outer is None or not 0 <= self.outer < len(self.faces):
                raise GraphError("outer face index missing or out of range")
        if self.rank is not None:
            object.__setattr__(self, "rank", {int(k): int(v) for k, v in self.rank.items()})

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.faces == other.faces
            and self.outer == other.outer
            and (dict(self.rank) if self.rank is not None else None)
            == (dict(other.rank) if other.rank is not None else None)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        nf = None if self.faces is None else len(self.faces)
        return f"PlaneGraph(n={self.graph.n}, m={self.graph.m}, faces={nf})"

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def outer_face(self) -> Tuple[int, ...]:
        if self.faces is None:
            raise GraphError("plane graph has no face lists")
        return self.faces[self.outer]

    @property
    def inner_faces(self) -> List[Tuple[int, ...]]:
        if self.faces is None:
            raise GraphError("plane graph has no face lists")
        return [f for i, f in enumerate(self.faces) if i != self.outer]

    def check_faces(self) -> None:
        """Raise :class:`GraphError` unless the face data is a consistent embedding."""
        if self.faces is None:
            raise GraphError("plane graph has no face lists")
        seen: Dict[Edge, int] = {}
        for f in self.faces:
            if len(f) < 3:
                raise GraphError(f"face {f} has fewer than 3 vertices")
            for i in range(len(f)):
                u, v = f[i], f[(i + 1) % len(f)]
                if not self.graph.has_edge(u, v):
                    raise GraphError(f"face {f} uses non-edge {u}-{v}")
                k = edge_key(u, v)
                seen[k] = seen.get(k, 0) + 1
        for e in self.graph.edges:
            if seen.get(e, 0) != 2:
                raise GraphError(f"edge {e[0]}-{e[1]} lies on {seen.get(e, 0)} faces, expected 2")
        if self.graph.n - self.graph.m + len(self.faces) != 2:
            raise GraphError("Euler identity V - E + F = 2 fails")

    def rank_subgraph(self, below: int) -> Graph:
        """Subgraph on vertices of rank ``< below`` (vertex ids kept)."""
        if self.rank is None:
            raise GraphError("plane graph has no rank metadata")
        keep = {v for v, r in self.rank.items() if r < below}
        n = max(keep) + 1 if keep else 0
        if keep != set(range(n)):
            raise GraphError("rank-prefix vertices are not an initial segment of ids")
        return Graph(n, [e for e in self.graph.edges if e[1] < n])


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total map from host edges to colors ``0..k-1``."""

    k: int
    colors: Mapping[Edge, int]

    def __init__(self, k: int, colors: Mapping[Sequence[int], int]):
        object.__setattr__(self, "k", int(k))
        object.__setattr__(self, "colors", {edge_key(int(e[0]), int(e[1])): int(c) for e, c in colors.items()})

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.k == other.k and dict(self.colors) == dict(other.colors)

    __hash__ = None  # type: ignore[assignment]

    def __getitem__(self, e: Sequence[int]) -> int:
        return self.colors[edge_key(e[0], e[1])]

    def class_edges(self, color: int) -> List[Edge]:
        return sorted(e for e, c in self.colors.items() if c == color)

    def class_adjacency(self, n: int, color: int) -> List[set]:
        nb: List[set] = [set() for _ in range(n)]
        for (u, v), c in self.colors.items():
            if c == color:
                nb[u].add(v)
                nb[v].add(u)
        return nb

    @classmethod
    def from_list(cls, g: Graph, k: int, values: Sequence[int]) -> "EdgeColoring":
        """Build from colors listed in ``g.edge_list`` order."""
        if len(values) != g.m:
            raise GraphError("one color per edge required")
        out = cls.__new__(cls)
        object.__setattr__(out, "k", int(k))
        object.__setattr__(out, "colors", dict(zip(g.edge_list, (int(x) for x in values))))
        return out

    def as_list(self, g: Graph) -> List[int]:
        return [self.colors[e] for e in g.edge_list]


def coloring_problems(g: Graph, c: EdgeColoring) -> List[str]:
    """Human-readable reasons why ``c`` is not a valid coloring of ``g``."""
    out = []
    if c.k < 1:
        out.append(f"color count k={c.k} is not positive")
    missing = sorted(g.edges - set(c.colors))
    extra = sorted(set(c.colors) - g.edges)
    if missing:
        out.append("missing edges: " + ", ".join(f"{u}-{v}" for u, v in missing))
    if extra:
        out.append("extra edges: " + ", ".join(f"{u}-{v}" for u, v in extra))
    bad = sorted(e for e, col in c.colors.items() if not 0 <= col < c.k)
    if bad:
        out.append("colors out of range: " + ", ".join(f"{u}-{v}={c.colors[(u, v)]}" for u, v in bad))
    return out


def validate_coloring(g: Graph, c: EdgeColoring) -> bool:
    return not coloring_problems(g, c)


@dataclass(frozen=True)
class Orientation:
    """Direction ``(tail, head)`` for every edge, with a recorded out-degree bound."""

    arcs: Mapping[Edge, Tuple[int, int]]
    bound: int

    def head(self, e: Edge) -> int:
        return self.arcs[e][1]

    def out_degrees(self, n: int) -> List[int]:
        out = [0] * n
        for t, _ in self.arcs.values():
            out[t] += 1
        return out

    def is_valid_for(self, g: Graph) -> bool:
        if set(self.arcs) != set(g.edges):
            return False
        for e, (t, h) in self.arcs.items():
            if edge_key(t, h) != e:
                return False
        return max(self.out_degrees(g.n), default=0) <= self.bound


@dataclass(frozen=True)
class VertexPartition:
    parts: Tuple[FrozenSet[int], ...]

    def __init__(self, parts: Iterable[Iterable[int]]):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in parts))

    def part_of(self) -> Dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def is_valid_for(self, g: Graph, linear_forest: bool = False) -> bool:
        seen: set = set()
        for p in self.parts:
            if seen & p:
                return False
            seen |= p
        if seen != set(range(g.n)):
            return False
        return not linear_forest or all(is_linear_forest(g, p) for p in self.parts)


def is_linear_forest(g: Graph, part: Iterable[int]) -> bool:
    """True iff ``part`` induces an acyclic subgraph of maximum degree 2."""
    s = set(part)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    deg = {v: 0 for v in s}
    edges = 0
    for u, v in g.edges:
        if u in s and v in s:
            deg[u] += 1
            deg[v] += 1
            edges += 1
            if deg[u] > 2 or deg[v] > 2:
                return False
    ncomp = len(g.components(s))
    return edges == len(s) - ncomp


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices."""

    mapping: Tuple[int, ...]

    def image_edges(self, h: Graph) -> List[Edge]:
        return sorted(edge_key(self.mapping[a], self.mapping[b]) for a, b in h.edge_list)

    def is_valid(self, g: Graph, h: Graph, c: Optional[EdgeColoring] = None, color: Optional[int] = None) -> bool:
        if len(self.mapping) != h.n or len(set(self.mapping)) != h.n:
            return False
        if any(not 0 <= x < g.n for x in self.mapping):
            return False
        for e in self.image_edges(h):
            if e not in g.edges:
                return False
            if c is not None and c.colors.get(e) != color:
                return False
        return True


def check_triangulation(pg: PlaneGraph) -> bool:
    """True iff every inner face is a triangle and ``|E| = 3|V| - 6``."""
    if pg.faces is None:
        raise GraphError("triangulation check needs face lists")
    if any(len(f) != 3 for f in pg.inner_faces):
        return False
    return pg.n >= 3 and pg.m == 3 * pg.n - 6
