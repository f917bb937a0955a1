"""Deciding whether every k-coloring of a host contains a monochromatic pattern.

``decide_arrows`` runs a counterexample-guided loop around the in-repo SAT
solver: one variable per (edge, color), exactly one color per edge, and a
blocking clause for every monochromatic copy the detector finds in a
candidate coloring.  ``exhaustive_arrows`` is an independent brute-force
oracle for small hosts.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from ..graph import EdgeColoring, Embedding, Graph, GraphError, coloring_problems, edge_key
from ..detect.match import DEFAULT_BUDGET, BudgetExceeded, Matcher, cycle_edges, enumerate_c4s
from .sat import Solver

ARROWS, NOT_ARROWS, UNDECIDED = "ARROWS", "NOT_ARROWS", "UNDECIDED"
EXHAUSTIVE_CAP = 1 << 24
MAX_COLORS = 8
DEFAULT_ARROW_BUDGET = 20_000_000


class InconclusiveError(RuntimeError):
    """A certificate check could not finish within its budget."""


class CapExceeded(GraphError):
    """The exhaustive oracle refuses instances above its size cap."""


@dataclass
class Verdict:
    outcome: str
    method: str
    certificate: Optional[EdgeColoring] = None
    stats: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "method": self.method, "stats": dict(self.stats)}
        if self.certificate is not None:
            out["certificate"] = {
                "k": self.certificate.k,
                "colors": {f"{u}-{v}": c for (u, v), c in sorted(self.certificate.colors.items())},
            }
        return out


def _check_args(g: Graph, h: Graph, k: int) -> None:
    if not 2 <= k <= MAX_COLORS:
        raise ValueError(f"color count must be in 2..{MAX_COLORS}")
    if h.m == 0:
        raise ValueError("pattern must have at least one edge")
    if any(h.degree(v) == 0 for v in range(h.n)):
        raise ValueError("pattern must not have isolated vertices")


def find_violation(
    g: Graph, h: Graph, c: EdgeColoring, budget: Optional[int] = DEFAULT_BUDGET
) -> Optional[Tuple[int, Embedding]]:
    """A monochromatic copy of ``h`` under ``c`` as ``(color, embedding)``, or ``None``.

    Raises :class:`InconclusiveError` when the detector runs out of budget.
    """
    problems = coloring_problems(g, c)
    if problems:
        raise ValueError("invalid coloring: " + "; ".join(problems))
    for color in range(c.k):
        try:
            emb = next(iter(Matcher(c.class_adjacency(g.n, color), h, budget)), None)
        except BudgetExceeded as exc:
            raise InconclusiveError(f"detector budget exhausted on color {color} after {exc.nodes} nodes") from exc
        if emb is not None:
            return color, emb
    return None


def verify_certificate(g: Graph, h: Graph, k: int, c: EdgeColoring, budget: Optional[int] = DEFAULT_BUDGET) -> bool:
    """True iff ``c`` is a ``k``-coloring of ``g`` with no monochromatic ``h``."""
    if c.k != k:
        return False
    if coloring_problems(g, c):
        return False
    return find_violation(g, h, c, budget) is None


# ---------------------------------------------------------------------------
# counterexample-guided search


def _var(e: int, color: int, k: int) -> int:
    return e * k + color + 1


def _base_solver(g: Graph, k: int, seed: Optional[int]) -> Solver:
    s = Solver(g.m * k, seed=seed)
    for e in range(g.m):
        s.add_clause([_var(e, c, k) for c in range(k)])
        for a, b in itertools.combinations(range(k), 2):
            s.add_clause([-_var(e, a, k), -_var(e, b, k)])
    if g.m:
        # Colors are interchangeable, so the first edge can be fixed.
        s.add_clause([_var(0, 0, k)])
    return s


def _block(s: Solver, edges: Sequence[int], k: int, seen: Set[FrozenSet[int]]) -> bool:
    """Forbid the edge set in every color.  Returns False if it was already blocked."""
    key = frozenset(edges)
    if key in seen:
        return False
    seen.add(key)
    for color in range(k):
        s.add_clause([-_var(e, color, k) for e in key])
    return True


def _is_c4(h: Graph) -> bool:
    return h.n == 4 and h.m == 4 and all(h.degree(v) == 2 for v in range(4))


def _is_k3(h: Graph) -> bool:
    return h.n == 3 and h.m == 3


def _decide_single(
    g: Graph,
    h: Graph,
    k: int,
    budget: int,
    seed: Optional[int],
    per_round: int,
    eager: Optional[bool],
) -> Verdict:
    t0 = time.perf_counter()
    s = _base_solver(g, k, seed)
    idx = g.edge_index
    seen: Set[FrozenSet[int]] = set()
    stats: Dict[str, object] = {"iterations": 0, "embeddings_blocked": 0, "detector_nodes": 0, "conflicts": 0}
    method = "cegar"
    if eager is None:
        eager = _is_c4(h) or _is_k3(h)
    if eager and (_is_c4(h) or _is_k3(h)):
        method = "eager"
        if _is_c4(h):
            copies = [cycle_edges(c) for c in enumerate_c4s(g)]
        else:
            copies = [
                [edge_key(a, b), edge_key(b, c), edge_key(a, c)]
                for a, b in g.edge_list
                for c in sorted(g.adj[a] & g.adj[b])
                if c > b
            ]
        for es in copies:
            _block(s, [idx[e] for e in es], k, seen)
        stats["embeddings_blocked"] = len(seen)

    def done(outcome: str, cert: Optional[EdgeColoring] = None) -> Verdict:
        stats["conflicts"] = s.stats.conflicts
        stats["decisions"] = s.stats.decisions
        stats["learned"] = s.stats.learned
        stats["final_conflict_level0"] = s.stats.final_conflict_level0
        stats["wall_time"] = round(time.perf_counter() - t0, 6)
        return Verdict(outcome, method, cert, stats)

    while True:
        used = s.stats.conflicts + int(stats["detector_nodes"])
        if used >= budget:
            return done(UNDECIDED)
        res = s.solve(max_conflicts=budget - used)
        if res is None:
            return done(UNDECIDED)
        if res is False:
            return done(ARROWS)
        stats["iterations"] = int(stats["iterations"]) + 1
        model = s.model()
        colors = [0] * g.m
        for e in range(g.m):
            for color in range(k):
                if model[_var(e, color, k) - 1] > 0:
                    colors[e] = color
        cand = EdgeColoring.from_list(g, k, colors)
        found = 0
        for color in range(k):
            left = budget - s.stats.conflicts - int(stats["detector_nodes"])
            m = Matcher(cand.class_adjacency(g.n, color), h, max(left, 0))
            try:
                for emb in m:
                    if _block(s, [idx[e] for e in emb.image_edges(h)], k, seen):
                        found += 1
                    if found >= per_round:
                        break
            except BudgetExceeded:
                stats["detector_nodes"] = int(stats["detector_nodes"]) + m.nodes
                stats["embeddings_blocked"] = len(seen)
                return done(UNDECIDED)
            stats["detector_nodes"] = int(stats["detector_nodes"]) + m.nodes
            if found >= per_round:
                break
        stats["embeddings_blocked"] = len(seen)
        if not found:
            if verify_certificate(g, h, k, cand, budget=None):
                return done(NOT_ARROWS, cand)
            raise RuntimeError("candidate passed the detector loop but failed verification")


def _worker(args, queue) -> None:
    try:
        queue.put(_decide_single(*args))
    except Exception as exc:  # pragma: no cover - reported to the parent
        queue.put(exc)


def decide_arrows(
    g: Graph,
    h: Graph,
    k: int = 2,
    budget: int = DEFAULT_ARROW_BUDGET,
    seed: Optional[int] = None,
    jobs: int = 1,
    per_round: int = 32,
    eager: Optional[bool] = None,
) -> Verdict:
    """Decide whether every ``k``-coloring of ``g`` has a monochromatic ``h``.

    ``budget`` bounds solver conflicts plus detector nodes.  With ``jobs > 1``
    differently seeded searches run in parallel and the first definite answer
    wins; a NOT_ARROWS certificate is re-verified here before it is returned.
    """
    _check_args(g, h, k)
    if h.n > g.n or h.m > g.m:
        return Verdict(NOT_ARROWS, "trivial", EdgeColoring.from_list(g, k, [0] * g.m), {"iterations": 0})
    if jobs <= 1:
        return _decide_single(g, h, k, budget, seed, per_round, eager)
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    queue = ctx.Queue()
    base = 0 if seed is None else seed
    procs = [
        ctx.Process(target=_worker, args=((g, h, k, budget, base + i, per_round, eager), queue), daemon=True)
        for i in range(jobs)
    ]
    for p in procs:
        p.start()
    verdict: Optional[Verdict] = None
    try:
        for _ in procs:
            got = queue.get()
            if isinstance(got, Exception):
                raise got
            if got.outcome != UNDECIDED:
                verdict = got
                break
            verdict = verdict or got
    finally:
        for p in procs:
            if p.is_alive():
                p.terminate()
            p.join()
    assert verdict is not None
    if verdict.outcome == NOT_ARROWS and not verify_certificate(g, h, k, verdict.certificate, budget=None):
        raise RuntimeError("portfolio worker returned an invalid certificate")
    verdict.stats["jobs"] = jobs
    return verdict


# ---------------------------------------------------------------------------
# exhaustive oracle


def all_copies(g: Graph, h: Graph) -> List[Tuple[int, ...]]:
    """Edge-index sets of every copy of ``h`` in ``g``, by trying all injections."""
    idx = g.edge_index
    out = set()
    hedges = h.edge_list
    for img in itertools.permutations(range(g.n), h.n):
        es = []
        for a, b in hedges:
            e = edge_key(img[a], img[b])
            j = idx.get(e)
            if j is None:
                break
            es.append(j)
        else:
            out.add(tuple(sorted(es)))
    return sorted(out)


def exhaustive_arrows(g: Graph, h: Graph, k: int = 2, cap: int = EXHAUSTIVE_CAP) -> Verdict:
    """Exact verdict by enumerating colorings, with edge 0 fixed to color 0.

    Colorings are built edge by edge and a branch is cut as soon as some
    copy of ``h`` whose largest edge index was just colored is monochromatic.
    """
    _check_args(g, h, k)
    if k ** g.m > cap:
        raise CapExceeded(f"{k}^{g.m} colorings exceed the cap of {cap}")
    t0 = time.perf_counter()
    copies = all_copies(g, h) if h.n <= g.n else []
    by_last: List[List[Tuple[int, ...]]] = [[] for _ in range(g.m)]
    for cp in copies:
        by_last[cp[-1]].append(cp)
    colors = [-1] * g.m
    nodes = 0

    def mono_at(i: int) -> bool:
        c = colors[i]
        return any(all(colors[j] == c for j in cp) for cp in by_last[i])

    if g.m == 0:
        cert = EdgeColoring.from_list(g, k, [])
        return Verdict(NOT_ARROWS, "exhaustive", cert, {"nodes": 0, "copies": 0})
    # iterative DFS over edge positions
    i = 0
    colors[0] = 0
    found = None
    while True:
        nodes += 1
        if not mono_at(i):
            if i == g.m - 1:
                found = list(colors)
                break
            i += 1
            colors[i] = 0
            continue
        # advance to the next color, backtracking as needed
        while True:
            if i == 0:
                colors[0] = -1
                break
            if colors[i] + 1 < k:
                colors[i] += 1
                break
            colors[i] = -1
            i -= 1
        if colors[0] < 0:
            break
    stats = {"nodes": nodes, "copies": len(copies), "wall_time": round(time.perf_counter() - t0, 6)}
    if found is None:
        return Verdict(ARROWS, "exhaustive", None, stats)
    return Verdict(NOT_ARROWS, "exhaustive", EdgeColoring.from_list(g, k, found), stats)
