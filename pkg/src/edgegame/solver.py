"""Exact game solving: P/N classification by memoized backward induction,
move recommendation, reachable-state trees, and DOT export.

A state is P exactly when it is terminal or every successor is N; it is N
when some successor is P.  The player to move wins from N states and loses
from P states, so Player 1 wins a game iff the empty board is N.

The search works on a compact internal form: colorings as mutable lists of
small ints (0 = uncolored), realized edge colors as a bitmask, and
transposition keys as bytes.  Two optional reductions cut the state space:
color relabeling by first occurrence, and minimization over the board's
automorphism group.  Among moves that introduce a color not yet on the
board, only the smallest such color is searched; the classification is
unchanged because unused colors are interchangeable.  Soundness of all
reductions is property-tested against a plain minimax oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from operator import itemgetter
from typing import Optional

from .coloring import (
    GameState,
    Move,
    apply_move,
    edcn,
    legal_moves,
)
from .graphs import (
    ISO_MAX_VERTICES,
    Graph,
    SizeLimitError,
    automorphisms,
    graph_from_json,
    graph_to_json,
)

MAX_SOLVER_COLORS = 255  # colorings are keyed as bytes


class Classification(Enum):
    P = "P"  # previous player wins: no winning move from here
    N = "N"  # next player wins: some move leads to a P state

    def __str__(self):
        return self.value


class Winner(Enum):
    PLAYER1 = "Player1"
    PLAYER2 = "Player2"

    def __str__(self):
        return "Player 1" if self is Winner.PLAYER1 else "Player 2"


class NodeLimitError(RuntimeError):
    """The search exceeded its node budget; carries the count reached."""

    def __init__(self, nodes: int):
        super().__init__(f"node limit exceeded after {nodes} expansions")
        self.nodes = nodes


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for the exact search.

    ``use_automorphisms`` defaults to None, meaning on for boards of at most
    ISO_MAX_VERTICES vertices whose group fits the enumeration cap and off
    otherwise; pass an explicit bool to force either way.
    """

    use_color_canonicalization: bool = True
    use_automorphisms: Optional[bool] = None
    color_override: Optional[int] = None
    node_limit: Optional[int] = 50_000_000
    parallel: bool = False


class TranspositionTable:
    """Write-once map from canonical keys to classifications."""

    __slots__ = ("data", "hits", "misses", "signature")

    def __init__(self):
        self.data: dict[bytes, bool] = {}
        self.hits = 0
        self.misses = 0
        self.signature: Optional[tuple] = None

    def __len__(self):
        return len(self.data)

    def lookup(self, key: bytes) -> Optional[Classification]:
        r = self.data.get(key)
        if r is None:
            self.misses += 1
            return None
        self.hits += 1
        return Classification.N if r else Classification.P

    def insert(self, key: bytes, value: Classification) -> None:
        self.data[key] = value is Classification.N

    def bind(self, signature: tuple) -> None:
        """Tables are keyed per (graph, k, reductions); reject mixing."""
        if self.signature is None:
            self.signature = signature
        elif self.signature != signature:
            raise ValueError(
                "transposition table was built for a different graph, color "
                "count, or canonicalization settings"
            )


@lru_cache(maxsize=128)
def _auto_perm_tuples(graph: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(p.perm for p in automorphisms(graph))


def _resolve_perms(graph: Graph, opts: SolveOptions) -> Optional[tuple[tuple[int, ...], ...]]:
    """The automorphism group to use, or None when disabled or unavailable."""
    if opts.use_automorphisms is False:
        return None
    if opts.use_automorphisms is None and graph.n > ISO_MAX_VERTICES:
        return None
    try:
        perms = _auto_perm_tuples(graph)
    except SizeLimitError:
        if opts.use_automorphisms is None:
            return None
        raise
    if len(perms) <= 1:
        return None
    return perms


def _relabel_bytes(seq) -> bytes:
    """First-occurrence color relabeling: the first color seen becomes 1,
    the next new color 2, and so on; 0 (uncolored) is fixed."""
    mapping: dict[int, int] = {}
    nxt = 0
    out = bytearray(len(seq))
    for i, c in enumerate(seq):
        if c:
            m = mapping.get(c)
            if m is None:
                nxt += 1
                mapping[c] = m = nxt
            out[i] = m
    return bytes(out)


class _Search:
    """Shared machinery for the memoized search on one (graph, k, opts)."""

    __slots__ = (
        "graph", "k", "adj", "loop", "pbit", "table", "limit", "nodes",
        "relabel", "perms", "getters", "collapse", "col",
    )

    def __init__(self, graph: Graph, k: int, opts: SolveOptions, table: TranspositionTable):
        if k > MAX_SOLVER_COLORS:
            raise ValueError(f"solver supports at most {MAX_SOLVER_COLORS} colors, got k={k}")
        self.graph = graph
        self.k = k
        self.adj = graph._adj
        self.loop = graph._has_loop
        # bit index per unordered color pair, symmetric in both orders
        pbit = [[0] * (k + 1) for _ in range(k + 1)]
        idx = 0
        for a in range(1, k + 1):
            for b in range(a, k + 1):
                pbit[a][b] = pbit[b][a] = 1 << idx
                idx += 1
        self.pbit = pbit
        self.table = table
        self.limit = opts.node_limit if opts.node_limit is not None else float("inf")
        self.nodes = 0
        self.relabel = opts.use_color_canonicalization
        self.perms = _resolve_perms(graph, opts)
        self.getters = (
            [itemgetter(*p) for p in self.perms] if self.perms and graph.n > 1 else None
        )
        self.collapse = self.perms is not None
        self.col = [0] * graph.n
        table.bind((graph, k, self.relabel, self.perms is not None))

    def load(self, state: GameState) -> tuple[int, int]:
        """Set the working coloring; returns (palette mask, used-color mask)."""
        col = self.col
        used = 0
        for v, c in enumerate(state.coloring):
            col[v] = c or 0
            if c:
                used |= 1 << c
        pal = 0
        for a, b in state.palette:
            pal |= self.pbit[a][b]
        return pal, used

    def canon(self) -> bytes:
        col = self.col
        getters = self.getters
        if getters is None:
            return _relabel_bytes(col) if self.relabel else bytes(col)
        colt = tuple(col)
        if self.relabel:
            best = None
            for g in getters:
                cand = _relabel_bytes(g(colt))
                if best is None or cand < best:
                    best = cand
            return best
        return min(bytes(g(colt)) for g in getters)

    def canon_of(self, state: GameState) -> bytes:
        self.load(state)
        return self.canon()

    def _vertex_reps(self) -> Optional[list[int]]:
        """Orbit-minimal vertices under automorphisms fixing the coloring,
        or None when the stabilizer is trivial."""
        if not self.collapse:
            return None
        colt = tuple(self.col)
        stab = [p for p, g in zip(self.perms, self.getters) if g(colt) == colt]
        if len(stab) <= 1:
            return None
        n = self.graph.n
        seen = [False] * n
        reps = []
        for v in range(n):
            if seen[v]:
                continue
            reps.append(v)
            orbit = {v}
            frontier = [v]
            while frontier:
                w = frontier.pop()
                for p in stab:
                    x = p[w]
                    if x not in orbit:
                        orbit.add(x)
                        frontier.append(x)
            for x in orbit:
                seen[x] = True
        return reps

    def moves_from(self, pal: int, used: int) -> list[tuple[int, int, int]]:
        """Searchable moves as (vertex, color, new-pair mask), ascending.

        Used colors are all tried; unused colors are represented by the
        single smallest one.  Vertices are collapsed to orbit minima when
        the coloring's stabilizer is nontrivial.
        """
        k = self.k
        fresh = 0
        for c in range(1, k + 1):
            if not (used >> c) & 1:
                fresh = c
                break
        cand = [c for c in range(1, k + 1) if (used >> c) & 1 or c == fresh]
        col = self.col
        adj = self.adj
        loop = self.loop
        pbit = self.pbit
        reps = self._vertex_reps()
        verts = reps if reps is not None else range(self.graph.n)
        out = []
        for v in verts:
            if col[v]:
                continue
            row = adj[v]
            for c in cand:
                pb = pbit[c]
                nm = 0
                if loop[v]:
                    b = pb[c]
                    if pal & b:
                        continue
                    nm = b
                ok = True
                for u in row:
                    cu = col[u]
                    if cu:
                        b = pb[cu]
                        if (pal | nm) & b:
                            ok = False
                            break
                        nm |= b
                if ok:
                    out.append((v, c, nm))
        return out

    def solve(self, pal: int, used: int) -> bool:
        """True when the position is N (the player to move wins)."""
        key = self.canon()
        data = self.table.data
        r = data.get(key)
        if r is not None:
            self.table.hits += 1
            return r
        self.table.misses += 1
        self.nodes += 1
        if self.nodes > self.limit:
            raise NodeLimitError(self.nodes)
        col = self.col
        result = False
        for v, c, nm in self.moves_from(pal, used):
            col[v] = c
            try:
                child = self.solve(pal | nm, used | (1 << c))
            finally:
                col[v] = 0
            if not child:
                result = True
                break
        data[key] = result
        return result


def _game_k(graph: Graph, opts: SolveOptions) -> int:
    if opts.color_override is not None:
        if opts.color_override < 1:
            raise ValueError(f"color override must be >= 1, got {opts.color_override}")
        return opts.color_override
    return edcn(graph).k


def classify(
    state: GameState,
    table: Optional[TranspositionTable] = None,
    opts: Optional[SolveOptions] = None,
) -> Classification:
    """P/N value of a position, memoized in ``table`` when supplied."""
    opts = opts or SolveOptions()
    if table is None:
        table = TranspositionTable()
    search = _Search(state.graph, state.k, opts, table)
    pal, used = search.load(state)
    return Classification.N if search.solve(pal, used) else Classification.P


@dataclass(frozen=True)
class SolveResult:
    winner: Winner
    k: int
    nodes: int
    table_hits: int
    millis: float

    def to_json(self) -> dict:
        return {
            "winner": self.winner.value,
            "k": self.k,
            "nodes": self.nodes,
            "tableHits": self.table_hits,
            "millis": int(round(self.millis)),
        }


def winner(graph: Graph, opts: Optional[SolveOptions] = None) -> SolveResult:
    """Who wins the game on ``graph`` under optimal play.

    The palette size is the board's smallest total-coloring palette unless
    ``opts.color_override`` says otherwise.
    """
    opts = opts or SolveOptions()
    k = _game_k(graph, opts)
    start = time.perf_counter()
    state = GameState.empty(graph, k)
    if opts.parallel:
        result, nodes, hits = _solve_root_parallel(state, opts)
    else:
        table = TranspositionTable()
        search = _Search(graph, k, opts, table)
        pal, used = search.load(state)
        result = search.solve(pal, used)
        nodes, hits = search.nodes, table.hits
    millis = (time.perf_counter() - start) * 1000.0
    win = Winner.PLAYER1 if result else Winner.PLAYER2
    return SolveResult(win, k, nodes, hits, millis)


def _child_payload(state: GameState, move: Move, opts: SolveOptions) -> dict:
    child = apply_move(state, move)
    return {
        "graph": graph_to_json(state.graph),
        "k": state.k,
        "coloring": list(child.coloring),
        "opts": {
            "use_color_canonicalization": opts.use_color_canonicalization,
            "use_automorphisms": opts.use_automorphisms,
            "node_limit": opts.node_limit,
        },
    }


def _solve_child_remote(payload: dict) -> tuple[bool, int, int]:
    graph = graph_from_json(payload["graph"])
    state = GameState.from_coloring(graph, payload["k"], payload["coloring"])
    opts = SolveOptions(**payload["opts"])
    table = TranspositionTable()
    search = _Search(graph, state.k, opts, table)
    pal, used = search.load(state)
    result = search.solve(pal, used)
    return result, search.nodes, table.hits


def _solve_root_parallel(state: GameState, opts: SolveOptions) -> tuple[bool, int, int]:
    """Classify the root by farming its moves out to worker processes.

    Each worker carries its own table, so node counts overlap across
    workers; the combined count is reported as-is.
    """
    seq_opts = replace(opts, parallel=False)
    moves = reduced_moves(state, seq_opts)
    if len(moves) < 2:
        table = TranspositionTable()
        search = _Search(state.graph, state.k, seq_opts, table)
        pal, used = search.load(state)
        return search.solve(pal, used), search.nodes, table.hits
    from concurrent.futures import ProcessPoolExecutor

    payloads = [_child_payload(state, m, seq_opts) for m in moves]
    nodes, hits = 1, 0
    result = False
    with ProcessPoolExecutor() as pool:
        for child_n, child_nodes, child_hits in pool.map(_solve_child_remote, payloads):
            nodes += child_nodes
            hits += child_hits
            if not child_n:
                result = True
    return result, nodes, hits


def reduced_moves(state: GameState, opts: Optional[SolveOptions] = None) -> list[Move]:
    """The moves the search actually explores, sorted by (vertex, color).

    Unused colors collapse to the smallest one per vertex; when
    automorphisms are on, vertices collapse to orbit minima under the
    subgroup fixing the current coloring.
    """
    opts = opts or SolveOptions()
    search = _Search(state.graph, state.k, opts, TranspositionTable())
    pal, used = search.load(state)
    return [Move(v, c) for v, c, _ in sorted(search.moves_from(pal, used))]


def canonicalize(state: GameState, opts: Optional[SolveOptions] = None) -> bytes:
    """Transposition key: the coloring, normalized per ``opts``.

    Distinct keys never merge states with different game values; equal keys
    identify positions equivalent up to color relabeling and, when enabled,
    board automorphisms.
    """
    opts = opts or SolveOptions()
    search = _Search(state.graph, state.k, opts, TranspositionTable())
    return search.canon_of(state)


@dataclass(frozen=True)
class BestMove:
    move: Move
    winning: bool


def best_move(
    state: GameState,
    table: Optional[TranspositionTable] = None,
    opts: Optional[SolveOptions] = None,
) -> Optional[BestMove]:
    """A winning move when one exists, else the smallest legal move.

    Candidates are scanned by vertex ascending; at each vertex the smallest
    color new to the board is tried first, then board colors ascending.
    Returns None only at terminal states.  The table keeps only P/N values,
    so this re-expands one ply rather than storing move lists.
    """
    opts = opts or SolveOptions()
    if table is None:
        table = TranspositionTable()
    moves = legal_moves(state)
    if not moves:
        return None
    used = state.used_colors()
    fresh = next((c for c in range(1, state.k + 1) if c not in used), None)

    def rank(m: Move) -> tuple[int, int, int]:
        return (m.vertex, 0 if m.color == fresh else 1, m.color)

    for m in sorted(moves, key=rank):
        if m.color not in used and m.color != fresh:
            continue  # symmetric to the fresh representative
        child = apply_move(state, m)
        if classify(child, table, opts) is Classification.P:
            return BestMove(m, True)
    return BestMove(moves[0], False)


def verify_strategy_start(
    graph: Graph, move: Move, opts: Optional[SolveOptions] = None
) -> bool:
    """True when ``move`` is a winning first move on the empty board.

    The move must at least be legal; an illegal one raises IllegalMoveError
    rather than reporting False.
    """
    opts = opts or SolveOptions()
    k = _game_k(graph, opts)
    state = GameState.empty(graph, k)
    child = apply_move(state, move)
    return classify(child, TranspositionTable(), opts) is Classification.P


# ---------------------------------------------------------------------------
# reachable-state trees


@dataclass(frozen=True)
class TreeNode:
    coloring: tuple[Optional[int], ...]
    moves_made: int
    classification: Classification


@dataclass(frozen=True)
class GameTree:
    """The reachable positions of a game as a DAG.

    ``nodes[root]`` is the empty board.  Arcs connect each position to its
    successors and always increase moves_made by exactly one.  With
    deduplication, nodes stand for canonical-key classes and the stored
    coloring is the first representative found.
    """

    nodes: tuple[TreeNode, ...]
    arcs: tuple[tuple[int, int], ...]
    root: int


def game_tree(
    graph: Graph,
    opts: Optional[SolveOptions] = None,
    dedup: bool = False,
) -> GameTree:
    """Breadth-first enumeration of every position reachable by legal play.

    Successors come from the full legal move list (no search reductions),
    so the tree is suitable for auditing the P/N recurrence node by node.
    ``dedup`` merges positions sharing a canonical key under ``opts``.
    """
    opts = opts or SolveOptions()
    k = _game_k(graph, opts)
    limit = opts.node_limit if opts.node_limit is not None else float("inf")
    root_state = GameState.empty(graph, k)
    search = _Search(graph, k, opts, TranspositionTable()) if dedup else None

    def key_of(state: GameState):
        if search is not None:
            return search.canon_of(state)
        return state.coloring

    states: list[GameState] = [root_state]
    index: dict = {key_of(root_state): 0}
    arcs: set[tuple[int, int]] = set()
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        for i in frontier:
            st = states[i]
            for m in legal_moves(st):
                child = apply_move(st, m)
                ck = key_of(child)
                j = index.get(ck)
                if j is None:
                    j = len(states)
                    if j + 1 > limit:
                        raise NodeLimitError(j + 1)
                    index[ck] = j
                    states.append(child)
                    nxt.append(j)
                arcs.add((i, j))
        frontier = nxt

    # orient by depth, then classify leaves-first: P iff every successor is N
    order = sorted(
        range(len(states)),
        key=lambda i: (states[i].moves_made, tuple(c or 0 for c in states[i].coloring)),
    )
    remap = {old: new for new, old in enumerate(order)}
    new_arcs = sorted((remap[a], remap[b]) for a, b in arcs)
    succ: dict[int, list[int]] = {}
    for a, b in new_arcs:
        succ.setdefault(a, []).append(b)
    cls: dict[int, Classification] = {}
    for new_i in range(len(states) - 1, -1, -1):
        children = succ.get(new_i, [])
        if any(cls[c] is Classification.P for c in children):
            cls[new_i] = Classification.N
        else:
            cls[new_i] = Classification.P
    nodes = tuple(
        TreeNode(states[old].coloring, states[old].moves_made, cls[new])
        for new, old in enumerate(order)
    )
    return GameTree(nodes=nodes, arcs=tuple(new_arcs), root=0)


def export_dot(tree: GameTree) -> str:
    """Graphviz text for a tree: P nodes yellow, N nodes gray, arcs by move.

    Output is deterministic byte-for-byte for a given tree.
    """
    lines = [
        "digraph edge_game {",
        "  rankdir=TB;",
        '  node [shape=ellipse, style=filled];',
    ]
    for i, node in enumerate(tree.nodes):
        cells = ",".join("·" if c is None else str(c) for c in node.coloring)
        fill = "yellow" if node.classification is Classification.P else "gray"
        lines.append(f'  n{i} [label="({cells})", fillcolor={fill}];')
    for a, b in tree.arcs:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
