"""Command-line front end.

Exit codes: ``arrow`` returns 0 for ARROWS, 1 for NOT_ARROWS and 2 for
UNDECIDED; ``verify`` returns 0 for a valid certificate, 1 when a
monochromatic copy exists and 3 when the check ran out of budget; ``find``
returns 0 when a copy exists, 1 when none does and 3 on budget exhaustion.
Any error (bad arguments, unreadable input, violated preconditions) exits
with 4.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Any, Dict, List, Optional

from . import __version__
from . import constructions as C
from .arrows.engine import (
    ARROWS,
    DEFAULT_ARROW_BUDGET,
    EXHAUSTIVE_CAP,
    NOT_ARROWS,
    InconclusiveError,
    decide_arrows,
    exhaustive_arrows,
    find_violation,
)
from .avoid.classify import classify
from .avoid.colorings import SCHEMES
from .detect.match import BudgetExceeded, find_copy, find_mono_copy
from .detect.paths import crossing_path, uop_extract_path, verify_crossing_path
from .detect.match import is_mono_path
from .graph import Graph, GraphError, PlaneGraph, coloring_problems, set_size_cap, size_cap
from .io import coloring_to_json, dumps, graph_to_json, load_coloring, load_graph

EXIT_ERROR = 4
DEFAULT_SEED = 0
DEFAULT_DETECT_BUDGET = 5_000_000


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage errors apart from the verdict codes
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _plain(obj: Any) -> Graph:
    return obj.graph if isinstance(obj, PlaneGraph) else obj


def _plane(obj: Any, what: str) -> PlaneGraph:
    if not isinstance(obj, PlaneGraph) or obj.faces is None:
        raise CliError(f"{what} needs a graph file with faces")
    return obj


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, JSON payload, extra manifest fields)


def _gen(args) -> tuple:
    fam, p = args.family, args.params

    def ints(count: int) -> List[int]:
        if len(p) != count:
            raise CliError(f"gen {fam} takes {count} integer parameter(s)")
        try:
            return [int(x) for x in p]
        except ValueError:
            raise CliError(f"gen {fam}: parameters must be integers") from None

    if fam == "tr":
        obj = C.iterated_triangulation(*ints(1))
    elif fam == "uop":
        obj = C.universal_outerplanar(*ints(1))
    elif fam == "grid":
        obj = C.triangulated_grid(*ints(1))
    elif fam == "fish":
        obj = C.fish(*ints(1))
    elif fam == "c4witness":
        ints(0)
        obj = C.c4_witness()
    elif fam == "tree":
        if len(p) != 1:
            raise CliError("gen tree takes one of T1, T2, T3, T4")
        obj = C.paper_tree(p[0]).graph
    elif fam == "broom":
        obj = C.generalized_broom(*ints(2)).graph
    elif fam == "kary":
        obj = C.perfect_kary_tree(*ints(2)).graph
    elif fam == "random":
        obj = C.random_stacked_triangulation(ints(1)[0], args.seed)
    elif fam == "complete":
        obj = C.complete_graph(*ints(1))
    elif fam == "path":
        obj = C.path_graph(*ints(1))
    elif fam == "cycle":
        obj = C.cycle_graph(*ints(1))
    else:  # argparse restricts the choices
        raise CliError(f"unknown family {fam}")
    return 0, graph_to_json(obj), {}


def _arrow(args) -> tuple:
    g = _plain(load_graph(args.host))
    h = _plain(load_graph(args.pattern))
    if args.method == "exhaustive":
        v = exhaustive_arrows(g, h, args.k, cap=args.max_colorings)
    else:
        v = decide_arrows(g, h, args.k, budget=args.budget, seed=args.seed, jobs=args.jobs)
    wall = v.stats.pop("wall_time", None)
    payload = v.to_json()
    code = {ARROWS: 0, NOT_ARROWS: 1}.get(v.outcome, 2)
    return code, payload, {"wall_time_engine": wall}


def _color(args) -> tuple:
    pg = _plane(load_graph(args.graph), f"color {args.scheme}")
    ac = SCHEMES[args.scheme](pg)
    payload = coloring_to_json(ac.coloring)
    payload["provenance"] = ac.to_json()
    return 0, payload, {}


def _verify(args) -> tuple:
    g = _plain(load_graph(args.graph))
    h = _plain(load_graph(args.pattern))
    c = load_coloring(args.coloring)
    problems = coloring_problems(g, c)
    if c.k != args.k:
        problems.append(f"coloring uses k={c.k}, expected {args.k}")
    if problems:
        return 1, {"valid": False, "problems": problems}, {}
    try:
        hit = find_violation(g, h, c, budget=args.budget)
    except InconclusiveError as exc:
        return 3, {"valid": None, "inconclusive": str(exc)}, {}
    if hit is None:
        return 0, {"valid": True}, {}
    color, emb = hit
    return 1, {"valid": False, "color": color, "embedding": list(emb.mapping)}, {}


def _corners(pg: PlaneGraph, given: Optional[List[int]]) -> List[int]:
    if given:
        return given
    outer = pg.outer_face
    if len(outer) < 4:
        raise CliError("outer face has fewer than 4 vertices; pass --corners")
    step = len(outer) / 4
    return [outer[int(i * step)] for i in range(4)]


def _extract(args) -> tuple:
    obj = load_graph(args.graph)
    c = load_coloring(args.coloring)
    if args.mode == "crossing":
        pg = _plane(obj, "extract crossing")
        a, b, cc, d = _corners(pg, args.corners)
        res = crossing_path(pg, a, b, cc, d, c)
        if not verify_crossing_path(pg, a, b, cc, d, c, res):
            raise RuntimeError("extracted crossing path failed verification")
        return 0, {"mode": "crossing", "corners": [a, b, cc, d], "color": res.color, "path": res.path}, {}
    if not isinstance(obj, PlaneGraph) or obj.rank is None or obj.faces is None:
        raise CliError("extract uop needs a universal outerplanar graph file with faces and rank metadata")
    if args.n is None:
        raise CliError("extract uop needs -n")
    res = uop_extract_path(obj, c, args.n)
    if res.length < args.n or not is_mono_path(obj.graph, c, res.path, res.color):
        raise RuntimeError("extracted path failed verification")
    trace = [[s.edge[0], s.edge[1], s.red_len, s.blue_len, s.case] for s in res.trace]
    return 0, {"mode": "uop", "n": args.n, "color": res.color, "path": res.path, "method": res.mode, "trace": trace}, {}


def _find(args) -> tuple:
    g = _plain(load_graph(args.graph))
    h = _plain(load_graph(args.pattern))
    try:
        if args.coloring is None:
            emb = find_copy(g, h, budget=args.budget)
            color = None
        else:
            c = load_coloring(args.coloring)
            colors = range(c.k) if args.color is None else [args.color]
            emb, color = None, None
            for col in colors:
                emb = find_mono_copy(g, c, col, h, budget=args.budget)
                if emb is not None:
                    color = col
                    break
    except BudgetExceeded as exc:
        return 3, {"found": None, "inconclusive": str(exc)}, {}
    if emb is None:
        return 1, {"found": False}, {}
    return 0, {"found": True, "color": color, "embedding": list(emb.mapping)}, {}


def _classify(args) -> tuple:
    h = _plain(load_graph(args.pattern))
    return 0, classify(h).to_json(), {}


COMMANDS = {
    "gen": _gen,
    "arrow": _arrow,
    "color": _color,
    "verify": _verify,
    "extract": _extract,
    "find": _find,
    "classify": _classify,
}

FAMILIES = ["tr", "uop", "grid", "fish", "c4witness", "tree", "broom", "kary", "random", "complete", "path", "cycle"]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=f"64-bit seed for all randomness (default {DEFAULT_SEED})")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="search budget; see README for units")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="parallel portfolio workers for arrow (default 1)")
    common.add_argument("--cap-edges", type=int, default=argparse.SUPPRESS, help="edge cap for generated graphs")
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write JSON here (and a .manifest.json beside it)")

    parser = _Parser(prog="planar-ramsey", description="Planar Ramsey constructions, colorings and arrow checks.", parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*")

    p = sub.add_parser("arrow", parents=[common], help="decide whether HOST k-arrows PATTERN")
    p.add_argument("host")
    p.add_argument("pattern")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--method", choices=["cegar", "exhaustive"], default="cegar")
    p.add_argument("--max-colorings", type=int, default=EXHAUSTIVE_CAP, help="cap on k^|E| for --method exhaustive")

    p = sub.add_parser("color", parents=[common], help="build an avoidance coloring")
    p.add_argument("scheme", choices=sorted(SCHEMES))
    p.add_argument("graph")

    p = sub.add_parser("verify", parents=[common], help="check an avoidance certificate")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("coloring")
    p.add_argument("-k", type=int, default=2)

    p = sub.add_parser("extract", parents=[common], help="extract a monochromatic path")
    p.add_argument("mode", choices=["crossing", "uop"])
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--corners", type=int, nargs=4, metavar=("A", "B", "C", "D"))
    p.add_argument("-n", type=int)

    p = sub.add_parser("find", parents=[common], help="search for a (monochromatic) copy")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("--coloring")
    p.add_argument("--color", type=int)

    p = sub.add_parser("classify", parents=[common], help="report class facts and avoidability verdicts")
    p.add_argument("pattern")
    return parser


def _inputs(args) -> List[str]:
    keys = ("host", "pattern", "graph", "coloring")
    return [getattr(args, k) for k in keys if getattr(args, k, None)]


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("seed", DEFAULT_SEED), ("jobs", 1), ("cap_edges", None), ("output", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if not hasattr(args, "budget"):
        args.budget = DEFAULT_ARROW_BUDGET if args.command == "arrow" else DEFAULT_DETECT_BUDGET
    t0 = time.perf_counter()
    old_cap = size_cap()
    try:
        if args.cap_edges is not None:
            set_size_cap(args.cap_edges)
        code, payload, extra = COMMANDS[args.command](args)
    except (CliError, GraphError, ValueError, OSError, KeyError) as exc:
        print(f"planar-ramsey {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        set_size_cap(old_cap)
    wall = time.perf_counter() - t0

    if args.output:
        manifest_path = args.output + ".manifest.json"
        payload = dict(payload)
        payload["manifest"] = os.path.basename(manifest_path)
        manifest: Dict[str, Any] = {
            "command": args.command,
            "arguments": list(sys.argv[1:] if argv is None else argv),
            "seed": args.seed,
            "budget": args.budget,
            "inputs": _inputs(args),
            "output": args.output,
            "version": __version__,
            "wall_time": round(wall, 6),
            "exit_code": code,
        }
        manifest.update({k: v for k, v in extra.items() if v is not None})
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps(payload))
        with open(manifest_path, "w", encoding="utf-8") as fh:
            fh.write(dumps(manifest))
    else:
        sys.stdout.write(dumps(payload))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
