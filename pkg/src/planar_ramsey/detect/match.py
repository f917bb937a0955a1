"""Backtracking search for (monochromatic) copies of a pattern graph.

Pattern vertices are visited in a fixed order: within each component the root
is a maximum-degree vertex (smallest index on ties) and the rest follow in BFS
order.  Every non-root vertex is chosen among the host neighbours of an
already placed pattern neighbour, so partial embeddings stay connected.
Pendant pattern vertices are not branched on at all: once everything else is
placed they are assigned by one bipartite matching.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..graph import Edge, EdgeColoring, Embedding, Graph, coloring_problems, edge_key

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """The node limit was reached before the search could finish."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class _Plan:
    order: List[int]            # branched pattern vertices in visiting order
    anchor: List[int]           # per order position: earlier pattern neighbour, or -1 for a root
    back: List[List[int]]       # per position: earlier placed neighbours (adjacency checks)
    after: List[int]            # per position: index of a sibling whose image must be smaller, or -1
    leaves: List[Tuple[int, int]]  # deferred (leaf, parent) pairs


def _bfs_order(h: Graph, comp: Sequence[int]) -> List[int]:
    root = min(comp, key=lambda v: (-h.degree(v), v))
    order = [root]
    seen = {root}
    q = deque([root])
    while q:
        x = q.popleft()
        for y in sorted(h.adj[x], key=lambda v: (-h.degree(v), v)):
            if y not in seen:
                seen.add(y)
                order.append(y)
                q.append(y)
    return order


def _canon(h: Graph, v: int, parent: int, memo: Dict[Tuple[int, int], str]) -> str:
    key = (v, parent)
    if key not in memo:
        kids = sorted(_canon(h, u, v, memo) for u in h.adj[v] if u != parent)
        memo[key] = "(" + "".join(kids) + ")"
    return memo[key]


def _plan(h: Graph) -> _Plan:
    is_forest = h.is_forest()
    order: List[int] = []
    leaves: List[Tuple[int, int]] = []
    for comp in h.components():
        comp_order = _bfs_order(h, comp)
        if len(comp) > 2:
            for v in comp_order[1:]:
                if h.degree(v) == 1:
                    (p,) = h.adj[v]
                    if h.degree(p) > 1:
                        leaves.append((v, p))
                        continue
            comp_order = [v for v in comp_order if not any(v == l for l, _ in leaves)]
        order += comp_order
    pos = {v: i for i, v in enumerate(order)}
    deferred = {l for l, _ in leaves}
    anchor, back = [], []
    for i, v in enumerate(order):
        earlier = sorted((u for u in h.adj[v] if u in pos and pos[u] < i), key=lambda u: pos[u])
        anchor.append(earlier[0] if earlier else -1)
        back.append(earlier)
    after = [-1] * len(order)
    if is_forest:
        # Sibling subtrees with the same shape are interchangeable; force increasing images.
        memo: Dict[Tuple[int, int], str] = {}
        groups: Dict[Tuple[int, str], List[int]] = {}
        for i, v in enumerate(order):
            a = anchor[i]
            if a < 0:
                continue
            groups.setdefault((a, _canon(h, v, a, memo)), []).append(i)
        for idxs in groups.values():
            for prev, cur in zip(idxs, idxs[1:]):
                after[cur] = prev
    else:
        # Twins with equal open neighbourhoods are interchangeable.
        cls: Dict[Tuple[int, ...], List[int]] = {}
        for i, v in enumerate(order):
            cls.setdefault(tuple(sorted(h.adj[v])), []).append(i)
        for idxs in cls.values():
            for prev, cur in zip(idxs, idxs[1:]):
                after[cur] = prev
    return _Plan(order, anchor, back, after, leaves)


def _bipartite_match(left: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """Perfect matching of left items into distinct right values (Kuhn)."""
    match_r: Dict[int, int] = {}
    assign = [-1] * len(left)

    def try_item(i: int, seen: Set[int]) -> bool:
        for r in left[i]:
            if r in seen:
                continue
            seen.add(r)
            j = match_r.get(r)
            if j is None or try_item(j, seen):
                match_r[r] = i
                assign[i] = r
                return True
        return False

    for i in range(len(left)):
        if not try_item(i, set()):
            return None
    return assign


def _refine_domains(adj: Sequence[Set[int]], h: Graph, plan: _Plan) -> Dict[int, Set[int]]:
    """Degree filter followed by neighbourhood-matching refinement to a fixpoint."""
    branched = plan.order
    dom: Dict[int, Set[int]] = {}
    for v in branched:
        d = h.degree(v)
        dom[v] = {x for x in range(len(adj)) if len(adj[x]) >= d}
    deferred = {l for l, _ in plan.leaves}
    changed = True
    rounds = 0
    while changed and rounds < 8:
        changed = False
        rounds += 1
        for v in branched:
            nbrs = [u for u in h.adj[v] if u not in deferred]
            if not nbrs:
                continue
            keep = set()
            for x in dom[v]:
                options = [[y for y in adj[x] if y in dom[u]] for u in nbrs]
                if all(options) and _bipartite_match(options) is not None:
                    keep.add(x)
            if len(keep) != len(dom[v]):
                dom[v] = keep
                changed = True
            if not keep:
                return dom
    return dom


class Matcher:
    """Enumerates embeddings of ``h`` into the host given as adjacency sets."""

    def __init__(self, adj: Sequence[Set[int]], h: Graph, budget: Optional[int] = DEFAULT_BUDGET):
        self.adj = adj
        self.h = h
        self.budget = budget
        self.nodes = 0
        self.plan = _plan(h)

    def __iter__(self) -> Iterator[Embedding]:
        h, adj, plan = self.h, self.adj, self.plan
        if h.n > len(adj) or h.n == 0:
            return
        dom = _refine_domains(adj, h, plan)
        if any(not dom[v] for v in plan.order):
            return
        order = plan.order
        k = len(order)
        img = [-1] * h.n
        used: Set[int] = set()
        leaf_count = [0] * h.n
        for _, p in plan.leaves:
            leaf_count[p] += 1
        pos = {v: i for i, v in enumerate(order)}
        remaining_nbrs = [
            sum(1 for u in h.adj[v] if u in pos and pos[u] > i) for i, v in enumerate(order)
        ]

        def candidates(i: int) -> List[int]:
            v = order[i]
            a = plan.anchor[i]
            base = adj[img[a]] if a >= 0 else range(len(adj))
            lo = img[order[plan.after[i]]] if plan.after[i] >= 0 else -1
            d = dom[v]
            return sorted(x for x in base if x > lo and x not in used and x in d)

        def finish() -> Optional[List[int]]:
            if not plan.leaves:
                return list(img)
            options = [[y for y in adj[img[p]] if y not in used] for _, p in plan.leaves]
            m = _bipartite_match(options)
            if m is None:
                return None
            out = list(img)
            for (l, _), y in zip(plan.leaves, m):
                out[l] = y
            return out

        stack: List[Tuple[int, List[int], int]] = []
        if k == 0:
            res = finish()
            if res is not None:
                yield Embedding(tuple(res))
            return
        stack.append((0, candidates(0), 0))
        while stack:
            i, cands, j = stack[-1]
            v = order[i]
            if img[v] >= 0:
                used.discard(img[v])
                img[v] = -1
            placed = False
            while j < len(cands):
                x = cands[j]
                j += 1
                self.nodes += 1
                if self.budget is not None and self.nodes > self.budget:
                    raise BudgetExceeded(self.nodes)
                if any(img[u] not in adj[x] for u in plan.back[i]):
                    continue
                free = sum(1 for y in adj[x] if y not in used)
                if free < leaf_count[v] + remaining_nbrs[i]:
                    continue
                img[v] = x
                used.add(x)
                placed = True
                break
            stack[-1] = (i, cands, j)
            if not placed:
                stack.pop()
                continue
            if i + 1 == k:
                res = finish()
                if res is not None:
                    yield Embedding(tuple(res))
                continue
            stack.append((i + 1, candidates(i + 1), 0))


def color_class_adjacency(g: Graph, c: EdgeColoring, color: int) -> List[Set[int]]:
    return c.class_adjacency(g.n, color)


def find_copy(g: Graph, h: Graph, budget: Optional[int] = DEFAULT_BUDGET) -> Optional[Embedding]:
    """Any copy of ``h`` in ``g`` (no color constraint)."""
    return next(iter(Matcher([set(a) for a in g.adj], h, budget)), None)


def find_mono_copy(
    g: Graph,
    c: EdgeColoring,
    color: int,
    h: Graph,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> Optional[Embedding]:
    """A copy of ``h`` whose edges all have ``color``, or ``None`` if none exists.

    ``None`` is exact.  Raises :class:`BudgetExceeded` when the search hits
    ``budget`` nodes first.
    """
    problems = coloring_problems(g, c)
    if problems:
        raise ValueError("invalid coloring: " + "; ".join(problems))
    if h.n > g.n:
        return None
    return next(iter(Matcher(c.class_adjacency(g.n, color), h, budget)), None)


def iter_mono_copies(
    g: Graph, c: EdgeColoring, color: int, h: Graph, budget: Optional[int] = DEFAULT_BUDGET
) -> Iterator[Embedding]:
    """Monochromatic copies of ``h``, one per placement of its non-leaf vertices.

    Leaves are assigned by a single bipartite matching, so copies that differ
    only in where the leaves land are not all listed, and symmetry breaking is
    partial, so one edge set may appear twice.  Use this to collect witnesses,
    not to count copies.
    """
    return iter(Matcher(c.class_adjacency(g.n, color), h, budget))


def enumerate_c4s(g: Graph) -> List[Tuple[int, int, int, int]]:
    """Every 4-cycle once, as ``(v0, v1, v2, v3)`` with ``v0`` minimal and ``v1 < v3``."""
    out = set()
    for a in range(g.n):
        for c in range(a + 1, g.n):
            common = sorted(g.adj[a] & g.adj[c])
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    b, d = common[i], common[j]
                    cyc = [a, b, c, d]
                    s = cyc.index(min(cyc))
                    r = cyc[s:] + cyc[:s]
                    if r[1] > r[3]:
                        r = [r[0], r[3], r[2], r[1]]
                    out.add(tuple(r))
    return sorted(out)


def cycle_edges(cyc: Sequence[int]) -> List[Edge]:
    return [edge_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


@dataclass
class PathResult:
    path: List[int]
    exact: bool

    @property
    def length(self) -> int:
        return max(len(self.path) - 1, 0)


def longest_mono_path(
    g: Graph, c: EdgeColoring, color: int, budget: Optional[int] = DEFAULT_BUDGET
) -> PathResult:
    """Longest simple path in one color class by exhaustive DFS.

    ``exact`` is ``False`` when the node budget cut the search short.
    """
    adj = c.class_adjacency(g.n, color)
    best: List[int] = [0] if g.n else []
    nodes = 0
    # Upper bound per start vertex: size of its color component.
    comp_size = [0] * g.n
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        for x in members:
            comp_size[x] = len(members)
    for s in sorted(range(g.n), key=lambda v: -comp_size[v]):
        if comp_size[s] <= len(best):
            continue
        path = [s]
        on = {s}
        stack = [iter(sorted(adj[s]))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on.discard(path.pop())
                continue
            if nxt in on:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                return PathResult(best, False)
            path.append(nxt)
            on.add(nxt)
            if len(path) > len(best):
                best = list(path)
                if len(best) == comp_size[s]:
                    break
            stack.append(iter(sorted(adj[nxt])))
        if len(best) == max(comp_size, default=0):
            break
    return PathResult(best, True)


def is_mono_path(g: Graph, c: EdgeColoring, path: Sequence[int], color: Optional[int] = None) -> bool:
    """Independent check: simple, every step an edge of one color."""
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    cols = set()
    for a, b in zip(path, path[1:]):
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            return False
        cols.add(c.colors[edge_key(a, b)])
    return len(cols) == 1 and (color is None or cols == {color})
