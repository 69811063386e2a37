"""Command-line front end: generation, classification, solving, reductions,
strategy verification, transcript replay, interactive play, and the HTTP
game service.

Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 property violation.
Identical argv + seed + inputs produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys

from . import graph6, reductions, solver, strategies
from .game import Status, apply_move, new_game, replay_transcript, red_blue_isomorphic
from .graphs import (Graph, complement, cartesian, categorical, cube_graph,
                     complete_bipartite, complete_bipartite_minus_edge,
                     complete_graph, complete_minus_matching, cycle_graph,
                     fig1_graph, graph_sum, grid_graph, lexicographic,
                     path_graph, platonic_graph, star_graph, subdivision,
                     triangle_plus_edge, aux_product, PLATONIC_NAMES)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VIOLATION = 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Graph spec strings
# ---------------------------------------------------------------------------

def parse_graph_spec(spec: str) -> Graph:
    """Family shorthand: P4, C8, K5, K3,3, K3,3-e, K6-M, Q3, star5, grid2x4,
    K3+e, fig1:3, platonic names, or one of the product counterexample boards.
    """
    s = spec.strip()
    if s in PLATONIC_NAMES:
        return platonic_graph(s)
    if s in strategies.PRODUCT_BOARDS:
        return strategies.product_board(s)
    if s == "K3+e":
        return triangle_plus_edge()
    m = re.fullmatch(r"P(\d+)", s)
    if m:
        return path_graph(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", s)
    if m:
        return cycle_graph(int(m.group(1)))
    m = re.fullmatch(r"Q(\d+)", s)
    if m:
        return cube_graph(int(m.group(1)))
    m = re.fullmatch(r"K(\d+),(\d+)-e", s)
    if m:
        return complete_bipartite_minus_edge(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+),(\d+)", s)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)-M", s)
    if m:
        return complete_minus_matching(int(m.group(1)))
    m = re.fullmatch(r"K(\d+)", s)
    if m:
        return complete_graph(int(m.group(1)))
    m = re.fullmatch(r"star(\d+)", s)
    if m:
        return star_graph(int(m.group(1)))
    m = re.fullmatch(r"grid(\d+(?:x\d+)+)", s)
    if m:
        return grid_graph(int(d) for d in m.group(1).split("x"))
    m = re.fullmatch(r"fig1:(\d+)", s)
    if m:
        return fig1_graph(int(m.group(1)))
    raise UsageError(f"cannot parse graph spec {spec!r}")


def _add_input_flags(p: argparse.ArgumentParser, prefix: str = "", required: bool = True):
    dash = f"--{prefix}" if prefix else "--"
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument(f"{dash}graph6", metavar="G6", help="graph6 string")
    group.add_argument(f"{dash}json", metavar="PATH", help="JSON graph file")
    group.add_argument(f"{dash}family", metavar="NAME", help="family shorthand, e.g. C4, K3+e")


def _graph_from_args(args, prefix: str = "") -> Graph:
    pref = prefix.replace("-", "_")
    g6 = getattr(args, f"{pref}graph6" if pref else "graph6", None)
    jpath = getattr(args, f"{pref}json" if pref else "json", None)
    fam = getattr(args, f"{pref}family" if pref else "family", None)
    if g6 is not None:
        return graph6.decode(g6)
    if jpath is not None:
        with open(jpath, encoding="utf-8") as fh:
            return Graph.from_json_obj(json.load(fh))
    if fam is not None:
        return parse_graph_spec(fam)
    raise UsageError("no graph input given")


def _emit(obj, out: str | None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stats_obj(stats: solver.SolveStats) -> dict:
    # elapsed time is excluded so identical runs emit identical bytes
    return {"nodes": stats.nodes, "memo_hits": stats.memo_hits}


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    g = parse_graph_spec(args.family[0])
    if len(args.family) == 2:
        other = parse_graph_spec(args.family[1])
        ops = {"cartesian": cartesian, "lexicographic": lexicographic,
               "categorical": categorical, "sum": graph_sum,
               "aux1": lambda a, b: aux_product(a, b, 1),
               "aux2": lambda a, b: aux_product(a, b, 2),
               "aux3": lambda a, b: aux_product(a, b, 3)}
        if not args.op:
            raise UsageError("two families need --op")
        g = ops[args.op](g, other)
    elif args.op:
        raise UsageError("--op needs two --family arguments")
    if args.subdivide:
        g = subdivision(g)
    if args.complement:
        g = complement(g)
    if args.format == "json":
        _emit(g.to_json_obj(), args.out)
    else:
        text = graph6.encode(g) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def _cmd_check_auto(args) -> int:
    g = _graph_from_args(args)
    from . import morphisms
    witness = morphisms.find_fixed_edge_free_involution(g)
    _emit({"graph6": graph6.encode(g), "in_auto": witness is not None,
           "witness": list(witness) if witness else None}, args.out)
    return EXIT_OK


def _cmd_solve_symm(args) -> int:
    g = _graph_from_args(args)
    result = solver.decide_symm(g, node_budget=args.budget_nodes,
                                time_budget=args.budget_secs, pruning=args.pruning)
    _emit({"graph6": graph6.encode(g), "outcome": result.outcome,
           "certificate": result.certificate, "stats": _stats_obj(result.stats)}, args.out)
    return EXIT_BUDGET if result.outcome == solver.BUDGET_EXCEEDED else EXIT_OK


def _cmd_solve_avoid(args) -> int:
    g = _graph_from_args(args)
    f = _graph_from_args(args, "forbidden-")
    result = solver.solve_avoidance(g, f, node_budget=args.budget_nodes,
                                    time_budget=args.budget_secs, pruning=args.pruning)
    _emit({"graph6": graph6.encode(g), "forbidden": graph6.encode(f),
           "outcome": result.outcome, "certificate": result.certificate,
           "stats": _stats_obj(result.stats)}, args.out)
    return EXIT_BUDGET if result.outcome == solver.BUDGET_EXCEEDED else EXIT_OK


def _cmd_classify_census(args) -> int:
    lines = []
    budget_hit = False
    for g in solver.enumerate_graphs(args.max_order, args.size, args.connected):
        cls = solver.classify(g, node_budget=args.budget_nodes,
                              time_budget=args.budget_secs)
        record = {
            "graph6": graph6.encode(g),
            "in_auto": cls.in_auto,
            "in_symm": cls.in_symm,
            "witness": list(cls.witness) if cls.witness else None,
            "line": (cls.symm.certificate or {}).get("moves") if cls.in_symm is False else None,
        }
        budget_hit = budget_hit or cls.in_symm == solver.BUDGET_EXCEEDED
        lines.append(json.dumps(record, sort_keys=True))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _cmd_reduce_r(args) -> int:
    g = _graph_from_args(args)
    rg = reductions.reduce_r(g)
    if args.format == "json":
        _emit(rg.to_json_obj(), args.out)
    else:
        sys.stdout.write(graph6.encode(rg) + "\n")
    return EXIT_OK


def _cmd_gi2par(args) -> int:
    g0 = parse_graph_spec(args.g0) if not args.g0.startswith("g6:") else graph6.decode(args.g0[3:])
    g1 = parse_graph_spec(args.g1) if not args.g1.startswith("g6:") else graph6.decode(args.g1[3:])
    result = reductions.gi_to_par(g0, g1)
    obj = result.to_json_obj()
    if args.solve:
        alpha = reductions.par_via_iso(result.instance)
        mapping = reductions.recover_isomorphism(alpha, result)
        obj["alpha"] = list(alpha)
        obj["isomorphism"] = list(mapping)
    _emit(obj, args.out)
    return EXIT_OK


def _strategy_for_verify(args):
    name = args.strategy
    if name == "kn-p2":
        n = args.n or 5
        board = complete_graph(n)
        return board, path_graph(2), strategies.kn_p2_defender(n), "B"
    if name == "kn-breaker":
        n = args.n or 4
        return complete_graph(n), None, strategies.kn_symmetry_breaker(n), "A"
    if name.startswith("product:"):
        which = name.split(":", 1)[1]
        return strategies.product_board(which), None, strategies.product_breaker(which), "A"
    if name == "automorphism":
        board = _graph_from_args(args)
        from . import morphisms
        witness = morphisms.find_fixed_edge_free_involution(board)
        if witness is None:
            raise UsageError("board has no fixed-edge-free involution")
        return board, None, strategies.automorphism_strategy(board, witness), "B"
    raise UsageError(f"unknown strategy {name!r}")


def _cmd_verify(args) -> int:
    if args.replay:
        with open(args.replay, encoding="utf-8") as fh:
            obj = json.load(fh)
        final = replay_transcript(obj)
        ok = final.status == obj.get("status")
        _emit({"replayed_status": final.status, "recorded_status": obj.get("status"),
               "match": ok, "red_blue_isomorphic": red_blue_isomorphic(final)}, args.out)
        return EXIT_OK if ok else EXIT_VIOLATION

    board, forbidden, subject, side = _strategy_for_verify(args)
    if args.adversary == "exhaustive":
        adversary = solver.Exhaustive(prune=args.pruning == "orbit")
    else:
        adversary = solver.RandomAdversary(args.count, args.seed)
    if args.property == "never-loses":
        prop = solver.NeverLoses()
    elif args.property == "symmetric-after-b":
        prop = solver.SymmetricAfterBMoves()
    else:
        if args.round is None:
            raise UsageError("--property broken-by needs --round")
        prop = solver.SymmetryBrokenBy(args.round)
    report = solver.verify_strategy(board, forbidden, subject, side, adversary, prop)
    _emit({"subject": report.subject, "property": report.property,
           "passed": report.passed, "branches": report.branches,
           "violations": report.violations[:10]}, args.out)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_play(args) -> int:
    board = _graph_from_args(args)
    forbidden = None
    if args.forbidden_graph6 or args.forbidden_json or args.forbidden_family:
        forbidden = _graph_from_args(args, "forbidden-")
    human = args.side
    engine_side = "B" if human == "A" else "A"
    from .server import _build_engine, ServiceError
    try:
        engine = _build_engine(board, forbidden, args.engine, engine_side)
    except ServiceError as exc:
        raise UsageError(exc.reason) from None
    state = new_game(board, forbidden)
    print(f"board {graph6.encode(board)} ({board.order} vertices, {board.size} edges); "
          f"you play {human}, engine plays {engine_side} ({args.engine})")
    while state.status == Status.IN_PROGRESS:
        if state.to_move() == human:
            print("uncolored:", " ".join(f"{u}-{v}" for u, v in state.uncolored()))
            try:
                line = input(f"{human} move (u v): ")
            except EOFError:
                print("bye")
                return EXIT_OK
            try:
                u, v = map(int, line.replace("-", " ").split())
                state = apply_move(state, (u, v))
            except Exception as exc:  # noqa: BLE001 - interactive loop
                print(f"  rejected: {exc}")
                continue
        else:
            mv = engine(state)
            state = apply_move(state, mv)
            print(f"engine plays {mv[0]}-{mv[1]}")
        iso = red_blue_isomorphic(state)
        print(f"  red={sorted(state.red)} blue={sorted(state.blue)} iso={iso}")
    print(f"result: {state.status}")
    if state.losing_copy:
        print("losing copy:", " ".join(f"{u}-{v}" for u, v in state.losing_copy))
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .server import serve
    serve(args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="avoidance", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a family or product graph")
    p.add_argument("--family", action="append", required=True, metavar="NAME")
    p.add_argument("--op", choices=["cartesian", "lexicographic", "categorical", "sum",
                                    "aux1", "aux2", "aux3"])
    p.add_argument("--subdivide", action="store_true")
    p.add_argument("--complement", action="store_true")
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check-auto", help="search for a fixed-edge-free involution")
    _add_input_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_check_auto)

    p = sub.add_parser("solve-symm", help="decide second-player symmetric-strategy membership")
    _add_input_flags(p)
    p.add_argument("--budget-nodes", type=int, default=solver.DEFAULT_NODE_BUDGET)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--pruning", choices=["none", "orbit"], default="none")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_solve_symm)

    p = sub.add_parser("solve-avoid", help="solve an avoidance game outright")
    _add_input_flags(p)
    _add_input_flags(p, "forbidden-")
    p.add_argument("--budget-nodes", type=int, default=solver.DEFAULT_NODE_BUDGET)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--pruning", choices=["none", "orbit"], default="none")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_solve_avoid)

    p = sub.add_parser("classify-census", help="classify all small graphs, JSON lines out")
    p.add_argument("--max-order", type=int, default=5)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--budget-nodes", type=int, default=solver.DEFAULT_NODE_BUDGET)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_classify_census)

    p = sub.add_parser("reduce-r", help="apply the subdivision + 3-star reduction")
    _add_input_flags(p)
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_reduce_r)

    p = sub.add_parser("gi2par", help="build (and optionally solve) a PAR instance from two graphs")
    p.add_argument("--g0", required=True, help="family shorthand or g6:<graph6>")
    p.add_argument("--g1", required=True)
    p.add_argument("--solve", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gi2par)

    p = sub.add_parser("verify", help="verify a strategy against adversaries, or replay a transcript")
    p.add_argument("--strategy", default="kn-p2",
                   help="kn-p2 | kn-breaker | automorphism | product:<board>")
    p.add_argument("--n", type=int)
    _add_input_flags(p, required=False)
    p.add_argument("--adversary", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--property", choices=["never-loses", "symmetric-after-b", "broken-by"],
                   default="never-loses")
    p.add_argument("--round", type=int)
    p.add_argument("--pruning", choices=["none", "orbit"], default="none")
    p.add_argument("--replay", metavar="TRANSCRIPT")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("play", help="interactive text game against the engine")
    _add_input_flags(p)
    _add_input_flags(p, "forbidden-", required=False)
    p.add_argument("--side", choices=["A", "B"], default="A")
    p.add_argument("--engine", default="optimal")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, default=8070)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("AVOID_LOG", "WARNING").upper())
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, graph6.Graph6Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
