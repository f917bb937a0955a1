"""Acceptance criteria, one test per criterion.

Each test records one ``PASS``/``FAIL`` line; the lines are printed in the
pytest terminal summary, and ``python3 tests/test_acceptance.py`` runs the
same checks without pytest.
"""

from __future__ import annotations

import random
import time

from planar_ramsey import constructions as C
from planar_ramsey.arrows.engine import ARROWS, NOT_ARROWS, decide_arrows, exhaustive_arrows, verify_certificate
from planar_ramsey.avoid.classify import COLOR_COUNTS, classify
from planar_ramsey.avoid.colorings import (
    coloring_avoid_T1,
    coloring_avoid_T2,
    coloring_c3,
    coloring_c4,
    local_bound_problems,
)
from planar_ramsey.detect.match import BudgetExceeded, find_mono_copy, is_mono_path
from planar_ramsey.detect.paths import crossing_path, uop_extract_path, verify_crossing_path
from planar_ramsey.graph import EdgeColoring, Graph, is_linear_forest

from corpus import corpus_patterns, random_coloring, small_hosts

RESULTS: list = []


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _witness_variant(sides):
    """Fish(15) plus one degree-3 vertex per spine edge; ``sides[i]`` picks x (0) or y (1)."""
    base = C.fish(15).graph
    edges = list(base.edge_list)
    nv = base.n
    for i, side in enumerate(sides):
        edges += [(2 + i, nv), (3 + i, nv), (side, nv)]
        nv += 1
    return Graph(nv, edges)


def test_criterion_1_c4_witness():
    c4 = C.cycle_graph(4)
    g = C.c4_witness().graph
    t0 = time.perf_counter()
    v = decide_arrows(g, c4, seed=0)
    took = time.perf_counter() - t0
    arrows_ok = v.outcome == ARROWS and took <= 300

    deterministic = True
    outcomes = set()
    for d in range(17, g.n):
        sub = g.subgraph([x for x in range(g.n) if x != d])
        a = decide_arrows(sub, c4, seed=0).outcome
        b = decide_arrows(sub, c4, seed=0).outcome
        deterministic &= a == b and a in (ARROWS, NOT_ARROWS)
        outcomes.add(a)

    # the stated 31-vertex, 87-edge shape: sample side choices, expect avoiding colorings
    rng = random.Random(0)
    samples = [[i % 2 for i in range(14)]] + [[rng.randrange(2) for _ in range(14)] for _ in range(31)]
    small_arrow = 0
    for sides in samples:
        h = _witness_variant(sides)
        w = decide_arrows(h, c4, seed=0)
        if w.outcome == ARROWS:
            small_arrow += 1
        else:
            assert w.outcome == NOT_ARROWS and verify_certificate(h, c4, 2, w.certificate, budget=None)
    size_ok = (g.n, g.m) == (31, 87)
    detail = (
        f"built witness {g.n}v/{g.m}e -> {v.outcome} in {took:.2f}s; "
        f"{g.n - 17} single deletions deterministic={deterministic} outcomes={sorted(outcomes)}; "
        f"stated 31v/87e shape: {small_arrow}/{len(samples)} sampled side choices arrow C4, "
        "so the stated size cannot be met (see decisions ledger)"
    )
    record(1, arrows_ok and deterministic and size_ok, detail)


def test_criterion_2_grid3_all_colorings():
    pg = C.triangulated_grid(3)
    corners = C.grid_corners(3)
    g = pg.graph
    bad = 0
    t0 = time.perf_counter()
    for mask in range(1 << g.m):
        c = EdgeColoring.from_list(g, 2, [(mask >> i) & 1 for i in range(g.m)])
        if not verify_crossing_path(pg, *corners, c, crossing_path(pg, *corners, c)):
            bad += 1
    took = time.perf_counter() - t0
    record(2, bad == 0 and took <= 60, f"{1 << g.m} colorings, {bad} failures, {took:.1f}s")


def test_criterion_3_grids_arrow_paths():
    t0 = time.perf_counter()
    a = exhaustive_arrows(C.triangulated_grid(3).graph, C.path_graph(3), 2)
    ta = time.perf_counter() - t0
    t0 = time.perf_counter()
    b = decide_arrows(C.triangulated_grid(4).graph, C.path_graph(4), 2, seed=0)
    tb = time.perf_counter() - t0
    ok = a.outcome == ARROWS and b.outcome == ARROWS and b.certificate is None and ta <= 120 and tb <= 120
    record(3, ok, f"Gr(3)->P3 {a.outcome} exhaustive {ta:.2f}s; Gr(4)->P4 {b.outcome} {b.method} {tb:.2f}s")


def _uop_trials(m, n, trials):
    pg = C.universal_outerplanar(m)
    fails = 0
    for seed in range(trials):
        c = random_coloring(pg.graph, 2, seed)
        res = uop_extract_path(pg, c, n)
        if res.length < n or not is_mono_path(pg.graph, c, res.path, res.color):
            fails += 1
    return fails


def test_criterion_4_uop_extractor():
    t0 = time.perf_counter()
    f9 = _uop_trials(9, 3, 1000)
    f16 = _uop_trials(16, 4, 200)
    took = time.perf_counter() - t0
    record(4, f9 == 0 and f16 == 0, f"UOP(9) n=3: {f9}/1000 failures; UOP(16) n=4: {f16}/200 failures; {took:.1f}s")


def _random_hosts():
    return [C.random_stacked_triangulation(100 * (i + 1), 1000 + i) for i in range(20)]


def _absent(pg, ac, tree, colors):
    """True when an exact search finds no monochromatic copy in any listed color."""
    h = C.paper_tree(tree).graph
    for col in colors:
        try:
            if find_mono_copy(pg.graph, ac.coloring, col, h) is not None:
                return False
        except BudgetExceeded:
            return False
    return True


def test_criterion_5_two_color_avoidance():
    t0 = time.perf_counter()
    hosts = [C.iterated_triangulation(6)] + _random_hosts()
    t1_ok = 0
    for pg in hosts:
        ac = coloring_avoid_T1(pg)
        if not ac.problems(pg.graph) and not local_bound_problems(pg.graph, ac) and _absent(pg, ac, "T1", (0, 1)):
            t1_ok += 1
    t2_ok = 0
    for n in range(3, 7):
        pg = C.universal_outerplanar(n)
        ac = coloring_avoid_T2(pg)
        if not ac.problems(pg.graph) and not local_bound_problems(pg.graph, ac) and _absent(pg, ac, "T2", (0, 1)):
            t2_ok += 1
    took = time.perf_counter() - t0
    ok = t1_ok == len(hosts) and t2_ok == 4
    record(5, ok, f"T1: {t1_ok}/{len(hosts)} hosts clean; T2: {t2_ok}/4 UOP hosts clean; {took:.1f}s")


def test_criterion_6_three_and_four_colors():
    t0 = time.perf_counter()
    hosts = [C.iterated_triangulation(5)] + _random_hosts()
    c3_ok = c4_ok = forest_ok = 0
    for pg in hosts:
        ac3 = coloring_c3(pg)
        if not ac3.problems(pg.graph) and _absent(pg, ac3, "T3", range(3)):
            c3_ok += 1
        ac4 = coloring_c4(pg)
        if not ac4.problems(pg.graph) and _absent(pg, ac4, "T4", range(4)):
            c4_ok += 1
        edges = [e for e, col in ac4.coloring.colors.items() if col == 3]
        if is_linear_forest(Graph(pg.n, edges), {v for e in edges for v in e}):
            forest_ok += 1
    took = time.perf_counter() - t0
    n = len(hosts)
    record(6, c3_ok == c4_ok == forest_ok == n,
           f"c3 no T3: {c3_ok}/{n}; c4 no T4: {c4_ok}/{n}; color 4 linear forest: {forest_ok}/{n}; {took:.1f}s")


def test_criterion_7_engine_soundness():
    t0 = time.perf_counter()
    runs = mismatches = bad_certs = 0
    for name, g in small_hosts(20):
        for pname, h in corpus_patterns():
            for k in (2, 3):
                want = exhaustive_arrows(g, h, k, cap=1 << 64).outcome
                got = decide_arrows(g, h, k, seed=0)
                runs += 1
                if got.outcome != want:
                    mismatches += 1
                if got.outcome == NOT_ARROWS and not verify_certificate(g, h, k, got.certificate, budget=None):
                    bad_certs += 1
    took = time.perf_counter() - t0
    record(7, mismatches == 0 and bad_certs == 0,
           f"{runs} instances, {mismatches} mismatches, {bad_certs} bad certificates, {took:.1f}s")


def test_criterion_8_ramsey_anchors():
    t0 = time.perf_counter()
    k3 = C.complete_graph(3)
    a = decide_arrows(C.complete_graph(6), k3, seed=0)
    b = decide_arrows(C.complete_graph(5), k3, seed=0)
    cert_ok = b.outcome == NOT_ARROWS and verify_certificate(C.complete_graph(5), k3, 2, b.certificate, budget=None)
    took = time.perf_counter() - t0
    record(8, a.outcome == ARROWS and cert_ok and took <= 10, f"K6 {a.outcome}, K5 {b.outcome} certified={cert_ok}, {took:.2f}s")


def test_criterion_9_size_formulas():
    bad = []
    for n in range(0, 9):
        if C.iterated_triangulation(n).n != 3 + (3 ** n - 1) // 2:
            bad.append(f"Tr({n})")
    for n in range(1, 17):
        if C.universal_outerplanar(n).n != 3 * 2 ** (n - 1):
            bad.append(f"UOP({n})")
    for n in range(2, 31):
        if C.triangulated_grid(n).m != 2 * n * (n - 1) + (n - 1) ** 2:
            bad.append(f"Gr({n})")
    sizes = [C.paper_tree(t).n for t in ("T1", "T2", "T3", "T4")]
    if sizes != [106, 21, 10, 6]:
        bad.append(f"trees {sizes}")
    record(9, not bad, "Tr(0..8), UOP(1..16), Gr(2..30), T1-T4 exact" if not bad else f"mismatch: {bad}")


def test_criterion_10_classifier():
    checks = []
    c3 = classify(C.complete_graph(3)).verdicts
    checks.append(c3["2"][0] == "avoidable")
    c4 = classify(C.cycle_graph(4)).verdicts
    checks.append(c4["2"][0] == "unavoidable" and c4["3"][0] == "avoidable")
    k23 = classify(Graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)]))
    checks.append(k23.verdicts["2"][0] == "avoidable" and k23.facts["outerplanar"] is False)
    t4 = classify(C.paper_tree("T4").graph)
    checks.append(t4.verdicts["4"][0] == "avoidable" and "odd path" in t4.verdicts["4"][1])
    # classify raises on contradictory verdicts; also check monotone spreading
    consistent = 0
    pats = [g for _, g in small_hosts(20)] + [h for _, h in corpus_patterns()]
    pats += [C.paper_tree(t).graph for t in ("T1", "T2", "T3", "T4")]
    for h in pats:
        order = [classify(h).verdicts[k][0] for k in COLOR_COUNTS]
        ok = all(
            not (s == "avoidable" and any(t != "avoidable" for t in order[i:]))
            and not (s == "unavoidable" and any(t != "unavoidable" for t in order[: i + 1]))
            for i, s in enumerate(order)
        )
        consistent += ok
    record(10, all(checks) and consistent == len(pats),
           f"examples {sum(checks)}/4; consistent verdicts on {consistent}/{len(pats)} patterns")


if __name__ == "__main__":
    import sys

    failed = 0
    tests = [(int(name.split("_")[2]), fn) for name, fn in globals().items() if name.startswith("test_criterion_")]
    for _, fn in sorted(tests):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
