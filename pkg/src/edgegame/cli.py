"""The ``edge`` command line tool.

Exit codes: 0 on success, 1 for domain errors (bad graphs, illegal moves,
failed verification), 2 when a resource limit stops the computation, 64 for
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .coloring import (
    GameState,
    IllegalMoveError,
    Move,
    RulesError,
    apply_move,
    edcn,
    is_markable,
    is_terminal,
)
from .graphs import FamilySpec, Graph, GraphError, SizeLimitError, graph_from_json, parse_graph
from .registry import check_all
from .solver import (
    NodeLimitError,
    SolveOptions,
    TranspositionTable,
    Winner,
    best_move,
    export_dot,
    game_tree,
    winner,
)

OK, DOMAIN_ERROR, RESOURCE_LIMIT, USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", help="family spec such as path:5, chorded:8,3, petersen")
    g.add_argument("--graph", help="edge-list file (.json for the JSON format)")


def _add_solve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--colors", type=int, help="palette size override")
    p.add_argument("--node-limit", type=int, default=None, help="search budget")
    p.add_argument(
        "--no-canon",
        action="store_true",
        help="key the table on raw colorings instead of relabeled ones",
    )
    p.add_argument(
        "--no-auto",
        action="store_true",
        help="never fold positions together by board symmetry",
    )
    p.add_argument("--parallel", action="store_true", help="split the root over processes")


def _load_graph(args) -> tuple[Graph, str]:
    if args.family:
        spec = FamilySpec.parse(args.family)
        return spec.build(), spec.label()
    path = Path(args.graph)
    text = path.read_text()
    if path.suffix == ".json":
        graph = graph_from_json(json.loads(text))
    else:
        graph = parse_graph(text)
    return graph, path.name


def _solve_opts(args) -> SolveOptions:
    kwargs = dict(
        use_color_canonicalization=not args.no_canon,
        use_automorphisms=False if args.no_auto else None,
        color_override=args.colors,
        parallel=args.parallel,
    )
    if args.node_limit is not None:
        kwargs["node_limit"] = args.node_limit
    return SolveOptions(**kwargs)


def cmd_edcn(args) -> int:
    graph, _ = _load_graph(args)
    result = edcn(graph)
    print(f"edcn={result.k}")
    print("witness=" + " ".join(str(c) for c in result.coloring))
    return OK


def cmd_solve(args) -> int:
    graph, label = _load_graph(args)
    result = winner(graph, _solve_opts(args))
    print(f"{result.winner} wins on {label} (k={result.k})")
    print(json.dumps(result.to_json()))
    return OK


def cmd_tree(args) -> int:
    graph, _ = _load_graph(args)
    tree = game_tree(graph, _solve_opts(args), dedup=args.dedup)
    text = export_dot(tree)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {len(tree.nodes)} nodes, {len(tree.arcs)} arcs to {args.out}")
    else:
        sys.stdout.write(text)
    return OK


def _board_line(state: GameState) -> str:
    cells = " ".join("·" if c is None else str(c) for c in state.coloring)
    palette = " ".join(f"{{{a},{b}}}" for a, b in sorted(state.palette))
    line = f"board: [{cells}]"
    if palette:
        line += f"  palette: {palette}"
    return line


def _unmarkable(state: GameState) -> set[int]:
    return {
        v
        for v in range(state.graph.n)
        if state.coloring[v] is None and not is_markable(state, v)
    }


def cmd_play(args) -> int:
    graph, label = _load_graph(args)
    k = args.colors if args.colors is not None else edcn(graph).k
    state = GameState.empty(graph, k)
    table = TranspositionTable()
    engine = {"first": 1, "second": 2, "none": None}[args.engine]
    print(f"playing on {label} with k={k}; enter moves as 'vertex color' (1-based)")
    print(_board_line(state))
    dead: set[int] = set()
    mover = 1
    while True:
        if is_terminal(state):
            print(f"{Winner.PLAYER1 if mover == 2 else Winner.PLAYER2} wins")
            return OK
        if engine == mover:
            bm = best_move(state, table)
            assert bm is not None
            state = apply_move(state, bm.move)
            print(f"player {mover} (engine) plays {bm.move.vertex + 1} {bm.move.color}")
        else:
            sys.stdout.write("move? ")
            sys.stdout.flush()
            line = sys.stdin.readline()
            if not line:
                print()
                return OK
            parts = line.split()
            if len(parts) != 2:
                print("error: enter 'vertex color', for example: 2 1")
                continue
            try:
                v, c = int(parts[0]), int(parts[1])
            except ValueError:
                print("error: vertex and color must be integers")
                continue
            try:
                state = apply_move(state, Move(v - 1, c))
            except IllegalMoveError as exc:
                print(f"illegal: {exc}")
                continue
            print(f"player {mover} plays {v} {c}")
        print(_board_line(state))
        now_dead = _unmarkable(state)
        fresh = sorted(now_dead - dead)
        if fresh:
            print("unmarkable: " + " ".join(f"v{v + 1}" for v in fresh))
        dead = now_dead
        mover = 3 - mover


def cmd_verify(args) -> int:
    opts = _solve_opts(args)
    rows = None
    if args.only:
        from .registry import all_known_results

        rows = [r for r in all_known_results() if args.only in r.label()]
    if args.json:
        report = check_all(opts, rows=rows, progress=lambda r: print(json.dumps(r.to_json()), flush=True))
        print(
            json.dumps(
                {
                    "passed": report.passed,
                    "failed": report.failed,
                    "skipped": report.skipped,
                }
            )
        )
    else:
        report = check_all(
            opts,
            rows=rows,
            progress=lambda r: print(
                f"{r.row.label():<18} {r.status:<8} {r.detail}", flush=True
            ),
        )
        print(f"{report.passed} passed, {report.failed} failed, {report.skipped} skipped")
    return OK if report.ok else DOMAIN_ERROR


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static, sessions_file=args.sessions)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return OK


def build_parser() -> _Parser:
    parser = _Parser(prog="edge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edcn", help="smallest palette with a fully distinguishing coloring")
    _add_graph_args(p)
    p.set_defaults(func=cmd_edcn)

    p = sub.add_parser("solve", help="who wins under optimal play")
    _add_graph_args(p)
    _add_solve_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tree", help="export the reachable-state DAG as DOT")
    _add_graph_args(p)
    _add_solve_args(p)
    p.add_argument("--dedup", action="store_true", help="merge canonically equal states")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("play", help="play on the terminal")
    _add_graph_args(p)
    p.add_argument("--colors", type=int, help="palette size override")
    p.add_argument(
        "--engine",
        choices=["first", "second", "none"],
        default="none",
        help="which player the engine controls",
    )
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("verify", help="recompute all known results")
    p.add_argument("--json", action="store_true", help="one JSON object per row")
    p.add_argument("--only", help="run only rows whose label contains this text")
    p.add_argument("--colors", type=int, help=argparse.SUPPRESS, default=None)
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--no-canon", action="store_true")
    p.add_argument("--no-auto", action="store_true")
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", help="directory with the web UI to serve at /")
    p.add_argument("--sessions", help="JSON-lines file for session persistence")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NodeLimitError, SizeLimitError) as exc:
        print(f"edge: resource limit: {exc}", file=sys.stderr)
        return RESOURCE_LIMIT
    except (GraphError, RulesError) as exc:
        print(f"edge: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except FileNotFoundError as exc:
        print(f"edge: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except ValueError as exc:
        print(f"edge: error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    raise SystemExit(main())
