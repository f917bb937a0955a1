"""Recognition of pattern classes and the planar avoidability verdicts they imply.

Verdicts are per number of colors ``k`` (2, 3, 4 and "5+").  A pattern is
reported avoidable only when a stated sufficient condition holds and
unavoidable only for the recognised unavoidable classes; everything else is
``unknown``.  Verdicts are propagated monotonically: avoidable with ``k``
colors implies avoidable with more, unavoidable with ``k`` implies
unavoidable with fewer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..constructions import paper_tree
from ..graph import Graph, SizeLimitError, bipartition
from ..detect.match import BudgetExceeded, find_copy

MAX_PATTERN_EDGES = 10_000
COLOR_COUNTS = ("2", "3", "4", "5+")


def is_outerplanar(g: Graph) -> bool:
    """Outerplanar iff adding a vertex joined to every vertex keeps the graph planar."""
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    apex = nx.Graph()
    apex.add_nodes_from(range(g.n + 1))
    apex.add_edges_from(g.edge_list)
    apex.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(apex)[0]


def _tree_components(g: Graph) -> Optional[List[List[int]]]:
    comps = g.components()
    return comps if g.is_forest() else None


def is_caterpillar_forest(g: Graph) -> bool:
    """Every component is a tree whose non-leaf vertices induce a path."""
    comps = _tree_components(g)
    if comps is None:
        return False
    for comp in comps:
        spine = [v for v in comp if g.degree(v) >= 2]
        if spine and not _is_path_set(g, spine):
            return False
    return True


def _is_path_set(g: Graph, vs: List[int]) -> bool:
    s = set(vs)
    deg = [sum(1 for u in g.adj[v] if u in s) for v in vs]
    edges = sum(deg) // 2
    return max(deg) <= 2 and edges == len(vs) - 1 and len(g.components(vs)) == 1


def is_star_forest(g: Graph) -> bool:
    """Every component is a star (a single vertex adjacent to all others)."""
    comps = _tree_components(g)
    if comps is None:
        return False
    return all(len(c) <= 2 or max(g.degree(v) for v in c) == len(c) - 1 for c in comps)


def tree_radius(g: Graph) -> Optional[int]:
    if not (g.is_connected() and g.is_forest()):
        return None
    best = None
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        ecc = max(dist.values())
        best = ecc if best is None else min(best, ecc)
    return best


def is_generalized_broom(g: Graph) -> bool:
    """A path and a star that share only the star's centre."""
    if not (g.is_connected() and g.is_forest()):
        return False
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(big) > 1:
        return False
    if not big:
        return True
    c = big[0]
    return sum(1 for u in g.adj[c] if g.degree(u) >= 2) <= 2


def high_degree_core(g: Graph) -> bool:
    """The vertices of degree at least 4 induce a subgraph of maximum degree at least 3."""
    big = {v for v in range(g.n) if g.degree(v) >= 4}
    return any(sum(1 for u in g.adj[v] if u in big) >= 3 for v in big)


def odd_path_between_branch_vertices(g: Graph, budget: int = 200_000) -> Optional[bool]:
    """Some path of odd length joins two vertices of degree at least 3.

    Exact on bipartite components (all paths between two vertices share a
    parity); otherwise a bounded search over simple paths, ``None`` when the
    budget runs out.
    """
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(big) < 2:
        return False
    unsure = []
    for comp in g.components():
        sub_big = [v for v in comp if g.degree(v) >= 3]
        if len(sub_big) < 2:
            continue
        sides = bipartition(g.subgraph(comp))
        if sides is not None:
            pos = {v: i for i, v in enumerate(comp)}
            if len({sides[pos[v]] for v in sub_big}) == 2:
                return True
        else:
            unsure.append(set(sub_big))
    nodes = 0
    for targets in unsure:
        for s in targets:
            stack = [(s, 0, iter(sorted(g.adj[s])))]
            on = {s}
            while stack:
                nodes += 1
                if nodes > budget:
                    return None
                x, d, it = stack[-1]
                y = next(it, None)
                if y is None:
                    stack.pop()
                    on.discard(x)
                    continue
                if y in on:
                    continue
                if y in targets and (d + 1) % 2 == 1:
                    return True
                on.add(y)
                stack.append((y, d + 1, iter(sorted(g.adj[y]))))
    return False


def _contains(g: Graph, name: str, budget: int) -> Optional[bool]:
    h = paper_tree(name).graph
    if h.n > g.n or h.m > g.m:
        return False
    try:
        return find_copy(g, h, budget=budget) is not None
    except BudgetExceeded:
        return None


@dataclass
class ClassificationReport:
    facts: Dict[str, Optional[bool]]
    verdicts: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "facts": dict(self.facts),
            "verdicts": {k: {"status": s, "reason": r} for k, (s, r) in self.verdicts.items()},
        }


def classify(h: Graph, budget: int = 1_000_000) -> ClassificationReport:
    """Boolean class facts for ``h`` and per-color-count avoidability verdicts.

    Isolated vertices do not affect any verdict and are dropped first.
    """
    if h.m > MAX_PATTERN_EDGES:
        raise SizeLimitError(f"pattern has {h.m} edges, above {MAX_PATTERN_EDGES}")
    if h.m == 0:
        raise ValueError("pattern needs at least one edge")
    h = h.subgraph([v for v in range(h.n) if h.degree(v) > 0])
    forest = h.is_forest()
    radius = tree_radius(h)
    facts: Dict[str, Optional[bool]] = {
        "bipartite": h.is_bipartite(),
        "outerplanar": is_outerplanar(h),
        "forest": forest,
        "caterpillar_forest": is_caterpillar_forest(h),
        "star_forest": is_star_forest(h),
        "path": h.is_connected() and forest and h.max_degree() <= 2,
        "c4": h.n == 4 and h.m == 4 and all(h.degree(v) == 2 for v in range(4)),
        "tree_radius_le_2": radius is not None and radius <= 2,
        "generalized_broom": is_generalized_broom(h),
        "high_degree_core": high_degree_core(h),
        "odd_path_between_branch_vertices": odd_path_between_branch_vertices(h),
        "contains_T1": _contains(h, "T1", budget),
        "contains_T3": _contains(h, "T3", budget),
        "contains_T4": _contains(h, "T4", budget),
    }

    avoid: Dict[str, List[str]] = {k: [] for k in COLOR_COUNTS}
    unavoid: Dict[str, List[str]] = {k: [] for k in COLOR_COUNTS}
    if not facts["bipartite"]:
        avoid["2"].append("not bipartite")
    if not facts["outerplanar"]:
        avoid["2"].append("not outerplanar")
    if facts["contains_T1"]:
        avoid["2"].append("contains T1")
    if not forest:
        avoid["3"].append("not a forest")
    if facts["high_degree_core"]:
        avoid["3"].append("degree-4 vertices induce maximum degree 3")
    if facts["contains_T3"]:
        avoid["3"].append("contains T3")
    if not facts["caterpillar_forest"]:
        avoid["4"].append("not a caterpillar forest")
    if facts["odd_path_between_branch_vertices"]:
        avoid["4"].append("odd path between two degree-3 vertices")
    if facts["contains_T4"]:
        avoid["4"].append("contains T4")
    if facts["star_forest"]:
        for k in COLOR_COUNTS:
            unavoid[k].append("star forest")
    else:
        avoid["5+"].append("not a star forest")
    for name, reason in (
        ("path", "path"),
        ("c4", "C4"),
        ("tree_radius_le_2", "tree of radius at most 2"),
        ("generalized_broom", "generalized broom"),
    ):
        if facts[name]:
            unavoid["2"].append(reason)

    report = ClassificationReport(facts)
    inherited_avoid = None
    for k in COLOR_COUNTS:
        if avoid[k]:
            inherited_avoid = f"{avoid[k][0]} (k={k})" if inherited_avoid is None else inherited_avoid
        if inherited_avoid is not None and not avoid[k]:
            avoid[k].append(f"avoidable with fewer colors: {inherited_avoid}")
    inherited_unavoid = None
    for k in reversed(COLOR_COUNTS):
        if unavoid[k] and inherited_unavoid is None:
            inherited_unavoid = f"{unavoid[k][0]} (k={k})"
        if inherited_unavoid is not None and not unavoid[k]:
            unavoid[k].append(f"unavoidable with more colors: {inherited_unavoid}")
    for k in COLOR_COUNTS:
        if avoid[k] and unavoid[k]:
            raise RuntimeError(f"contradictory verdicts for k={k}: {avoid[k]} vs {unavoid[k]}")
        if avoid[k]:
            report.verdicts[k] = ("avoidable", "; ".join(avoid[k]))
        elif unavoid[k]:
            report.verdicts[k] = ("unavoidable", "; ".join(unavoid[k]))
        else:
            report.verdicts[k] = ("unknown", "")
    return report
