"""A small incremental CDCL SAT solver.

Two watched literals per clause, first-UIP learning, VSIDS-style activity
with phase saving, and Luby restarts.  Clauses may be added between calls to
:meth:`Solver.solve`, which is what the lazy blocking loop in
:mod:`planar_ramsey.arrows.engine` relies on.  Literals use the DIMACS
convention: variable ``v`` is ``v`` and its negation is ``-v``.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, List, Optional


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    learned: int = 0
    restarts: int = 0
    # Set once an empty clause has been derived, i.e. a conflict with no decisions on the trail.
    final_conflict_level0: bool = False


def luby(i: int) -> int:
    """The ``i``-th element (1-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


class Solver:
    def __init__(self, nvars: int = 0, seed: Optional[int] = None, restart_base: int = 64):
        self.nvars = 0
        self.assign: List[int] = [0]  # 1 true, -1 false, 0 unassigned; index 0 unused
        self.level: List[int] = [0]
        self.reason: List[Optional[list]] = [None]
        self.activity: List[float] = [0.0]
        self.phase: List[int] = [-1]
        self.watches: List[List[list]] = [[], []]
        self.clauses: List[list] = []
        self.learnts: List[list] = []
        self.trail: List[int] = []
        self.trail_lim: List[int] = []
        self.qhead = 0
        self.heap: List[tuple] = []
        self.var_inc = 1.0
        self.var_decay = 0.95
        self.restart_base = restart_base
        self.ok = True
        self.stats = SolverStats()
        self._rng = random.Random(seed) if seed is not None else None
        self._model: Optional[List[int]] = None
        self._lbd: dict = {}
        self.max_learnts = 4000
        self.new_vars(nvars)

    # ------------------------------------------------------------------ setup

    def new_vars(self, count: int) -> None:
        for _ in range(count):
            self.nvars += 1
            v = self.nvars
            self.assign.append(0)
            self.level.append(0)
            self.reason.append(None)
            # A seeded solver perturbs the initial order so reruns explore differently.
            act = self._rng.random() * 1e-3 if self._rng is not None else 0.0
            self.activity.append(act)
            self.phase.append(-1)
            self.watches += [[], []]
            heapq.heappush(self.heap, (-act, v))

    def _widx(self, lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def _value(self, lit: int) -> int:
        a = self.assign[lit if lit > 0 else -lit]
        return a if lit > 0 else -a

    def add_clause(self, lits: Iterable[int]) -> bool:
        """Add a clause at decision level 0.  Returns ``False`` once unsatisfiable."""
        if not self.ok:
            return False
        self._cancel_until(0)
        seen = set()
        clause = []
        for lit in lits:
            v = abs(lit)
            if v == 0:
                raise ValueError("literal 0 is not allowed")
            if v > self.nvars:
                self.new_vars(v - self.nvars)
            if -lit in seen:
                return True
            if lit in seen:
                continue
            val = self._value(lit)
            if val == 1:
                return True
            if val == -1:
                continue
            seen.add(lit)
            clause.append(lit)
        if not clause:
            self.ok = False
            self.stats.final_conflict_level0 = True
            return False
        if len(clause) == 1:
            self._enqueue(clause[0], None)
            if self._propagate() is not None:
                self.ok = False
                self.stats.final_conflict_level0 = True
            return self.ok
        self.clauses.append(clause)
        self._watch(clause)
        return True

    def _watch(self, clause: list) -> None:
        self.watches[self._widx(clause[0])].append(clause)
        self.watches[self._widx(clause[1])].append(clause)

    # ------------------------------------------------------------ propagation

    def _enqueue(self, lit: int, reason: Optional[list]) -> None:
        v = lit if lit > 0 else -lit
        self.assign[v] = 1 if lit > 0 else -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self) -> Optional[list]:
        assign = self.assign
        watches = self.watches
        trail = self.trail
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.stats.propagations += 1
            false_lit = -p
            ws = watches[2 * false_lit if false_lit > 0 else -2 * false_lit + 1]
            n = len(ws)
            i = j = 0
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                fv = assign[first] if first > 0 else -assign[-first]
                if fv == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if (assign[lk] if lk > 0 else -assign[-lk]) != -1:
                        c[1] = lk
                        c[k] = false_lit
                        watches[2 * lk if lk > 0 else -2 * lk + 1].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if fv == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        return c
                    self._enqueue(first, c)
            del ws[j:]
        return None

    def _reduce_db(self) -> None:
        """Forget the less useful half of the learned clauses (call at level 0)."""
        lbd = self._lbd
        self.learnts.sort(key=lambda c: (lbd.get(id(c), len(c)), len(c)))
        keep = self.learnts[: len(self.learnts) // 2]
        keep += [c for c in self.learnts[len(self.learnts) // 2 :] if lbd.get(id(c), 99) <= 2]
        self.learnts = keep
        self._lbd = {id(c): lbd[id(c)] for c in keep if id(c) in lbd}
        self.watches = [[] for _ in range(2 * self.nvars + 2)]
        for c in self.clauses:
            self._watch(c)
        for c in keep:
            self._watch(c)

    # ---------------------------------------------------------------- learning

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(1, self.nvars + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-self.activity[u], u) for u in range(1, self.nvars + 1) if self.assign[u] == 0]
            heapq.heapify(self.heap)
        elif self.assign[v] == 0:
            heapq.heappush(self.heap, (-self.activity[v], v))

    def _analyze(self, confl: list):
        seen = [False] * (self.nvars + 1)
        learnt = [0]
        counter = 0
        p = 0
        idx = len(self.trail) - 1
        cur = len(self.trail_lim)
        reason = confl
        while True:
            for q in reason:
                if p != 0 and q == p:
                    continue
                v = abs(q)
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if self.level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            v = abs(p)
            seen[v] = False
            counter -= 1
            if counter == 0:
                break
            reason = self.reason[v]
        learnt[0] = -p
        # Drop literals implied by the rest of the clause (local minimisation).
        if len(learnt) > 2:
            marks = {abs(x) for x in learnt}
            kept = [learnt[0]]
            for q in learnt[1:]:
                r = self.reason[abs(q)]
                if r is None or any(abs(x) not in marks and self.level[abs(x)] > 0 for x in r if abs(x) != abs(q)):
                    kept.append(q)
            learnt = kept
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda j: self.level[abs(learnt[j])])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, self.level[abs(learnt[1])]

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        start = self.trail_lim[lvl]
        for lit in self.trail[start:]:
            v = abs(lit)
            self.phase[v] = 1 if lit > 0 else -1
            self.assign[v] = 0
            self.reason[v] = None
            heapq.heappush(self.heap, (-self.activity[v], v))
        del self.trail[start:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _pick(self) -> int:
        while self.heap:
            _, v = heapq.heappop(self.heap)
            if self.assign[v] == 0:
                return v
        return 0

    # ------------------------------------------------------------------ solve

    def solve(self, max_conflicts: Optional[int] = None) -> Optional[bool]:
        """Return ``True`` (model available), ``False`` (unsatisfiable) or
        ``None`` when ``max_conflicts`` was exhausted."""
        self._model = None
        if not self.ok:
            return False
        self._cancel_until(0)
        if self._propagate() is not None:
            self.ok = False
            self.stats.final_conflict_level0 = True
            return False
        start_conflicts = self.stats.conflicts
        restart_no = 1
        limit = self.restart_base * luby(restart_no)
        since_restart = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                self.stats.conflicts += 1
                since_restart += 1
                if not self.trail_lim:
                    self.ok = False
                    self.stats.final_conflict_level0 = True
                    return False
                learnt, back = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self.learnts.append(learnt)
                    self._lbd[id(learnt)] = len({self.level[abs(x)] for x in learnt})
                    self.stats.learned += 1
                    self._watch(learnt)
                    self._enqueue(learnt[0], learnt)
                self.var_inc /= self.var_decay
                if max_conflicts is not None and self.stats.conflicts - start_conflicts >= max_conflicts:
                    self._cancel_until(0)
                    return None
                continue
            if since_restart >= limit:
                self.stats.restarts += 1
                restart_no += 1
                limit = self.restart_base * luby(restart_no)
                since_restart = 0
                self._cancel_until(0)
                if len(self.learnts) > self.max_learnts:
                    self._reduce_db()
                    self.max_learnts = int(self.max_learnts * 1.1)
                continue
            v = self._pick()
            if v == 0:
                self._model = [u if self.assign[u] == 1 else -u for u in range(1, self.nvars + 1)]
                self._cancel_until(0)
                return True
            self.stats.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(v if self.phase[v] > 0 else -v, None)

    def model(self) -> List[int]:
        if self._model is None:
            raise RuntimeError("no model: last solve() did not return True")
        return list(self._model)


def solve_cnf(clauses: Iterable[Iterable[int]], nvars: int = 0, **kw) -> Optional[List[int]]:
    """Convenience wrapper: a model as a list of literals, or ``None`` if unsatisfiable."""
    s = Solver(nvars, **kw)
    for c in clauses:
        if not s.add_clause(c):
            return None
    return s.model() if s.solve() else None
