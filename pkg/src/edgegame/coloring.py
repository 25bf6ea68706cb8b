"""Rules of the game: partial colorings, move legality, and the smallest
palette size admitting a fully edge-distinguishing coloring.

A coloring assigns colors 1..k to vertices.  Each edge whose endpoints are
both colored receives the unordered pair of endpoint colors (a loop at v
receives {c(v), c(v)}).  A partial coloring is edge-distinguishing when all
such pairs are distinct, and a move is legal exactly when the coloring it
produces stays edge-distinguishing.  Players alternate moves; whoever makes
the last legal move wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph, graph_from_json, graph_to_json

EdgeColor = tuple[int, int]
Coloring = tuple[Optional[int], ...]


class RulesError(ValueError):
    """Base class for rule violations."""


class IllegalMoveError(RulesError):
    """A move that the rules reject.

    ``duplicate_pair`` carries the edge color that would appear twice, when
    that is the reason; ``occupied`` is set when the vertex is already
    colored.
    """

    def __init__(
        self,
        message: str,
        duplicate_pair: Optional[EdgeColor] = None,
        occupied: bool = False,
    ):
        super().__init__(message)
        self.duplicate_pair = duplicate_pair
        self.occupied = occupied


def edge_color(a: int, b: int) -> EdgeColor:
    """The unordered pair of endpoint colors, stored low-first."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Move:
    """Color ``color`` placed on (0-based) ``vertex``."""

    vertex: int
    color: int


class GameState:
    """An immutable snapshot of a game in progress.

    ``coloring`` holds one entry per vertex, None for uncolored.  ``palette``
    is the set of edge colors already realized; it is carried along so move
    legality never rescans the whole board.
    """

    __slots__ = ("graph", "k", "coloring", "palette", "moves_made")

    def __init__(
        self,
        graph: Graph,
        k: int,
        coloring: Coloring,
        palette: frozenset[EdgeColor],
        moves_made: int,
    ):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coloring", coloring)
        object.__setattr__(self, "palette", palette)
        object.__setattr__(self, "moves_made", moves_made)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("GameState is immutable")

    @staticmethod
    def empty(graph: Graph, k: int) -> "GameState":
        if k < 1:
            raise RulesError(f"color count must be >= 1, got k={k}")
        return GameState(graph, k, (None,) * graph.n, frozenset(), 0)

    @staticmethod
    def from_coloring(graph: Graph, k: int, coloring: Sequence[Optional[int]]) -> "GameState":
        """Build a state from an existing partial coloring, validating it."""
        if k < 1:
            raise RulesError(f"color count must be >= 1, got k={k}")
        if len(coloring) != graph.n:
            raise RulesError(
                f"coloring has {len(coloring)} entries for {graph.n} vertices"
            )
        filled = 0
        for v, c in enumerate(coloring):
            if c is None:
                continue
            if not (1 <= c <= k):
                raise RulesError(
                    f"vertex {v + 1} has color {c}, outside 1..{k}"
                )
            filled += 1
        pairs = induced_edge_colors(graph, coloring)
        palette = frozenset(pairs)
        if len(palette) != len(pairs):
            dup = _first_duplicate(pairs)
            raise IllegalMoveError(
                f"coloring is not edge-distinguishing: pair {dup} repeats",
                duplicate_pair=dup,
            )
        return GameState(graph, k, tuple(coloring), palette, filled)

    def color_of(self, vertex: int) -> Optional[int]:
        return self.coloring[vertex]

    def used_colors(self) -> set[int]:
        return {c for c in self.coloring if c is not None}

    def __eq__(self, other):
        return (
            isinstance(other, GameState)
            and self.graph == other.graph
            and self.k == other.k
            and self.coloring == other.coloring
        )

    def __hash__(self):
        return hash((self.graph, self.k, self.coloring))

    def __repr__(self):
        cells = ",".join("." if c is None else str(c) for c in self.coloring)
        return f"GameState(k={self.k}, coloring=({cells}))"

    def to_json(self) -> dict:
        return {
            "graph": graph_to_json(self.graph),
            "k": self.k,
            "coloring": list(self.coloring),
            "movesMade": self.moves_made,
        }

    @staticmethod
    def from_json(data: dict) -> "GameState":
        graph = graph_from_json(data["graph"])
        coloring = [None if c is None else int(c) for c in data["coloring"]]
        return GameState.from_coloring(graph, int(data["k"]), coloring)


def _first_duplicate(pairs: Iterable[EdgeColor]) -> Optional[EdgeColor]:
    seen: set[EdgeColor] = set()
    for p in pairs:
        if p in seen:
            return p
        seen.add(p)
    return None


def induced_edge_colors(graph: Graph, coloring: Sequence[Optional[int]]) -> list[EdgeColor]:
    """Edge colors of all fully-colored edges, as a sorted list (a multiset:
    duplicates are preserved)."""
    out = []
    for u, v in graph.edges:
        cu, cv = coloring[u], coloring[v]
        if cu is not None and cv is not None:
            out.append(edge_color(cu, cv))
    out.sort()
    return out


def is_edge_distinguishing(graph: Graph, coloring: Sequence[Optional[int]]) -> bool:
    """True when no two fully-colored edges share an edge color."""
    pairs = induced_edge_colors(graph, coloring)
    return len(pairs) == len(set(pairs))


def _new_pairs(state: GameState, vertex: int, color: int):
    """Edge colors created by playing ``color`` on ``vertex``.

    Returns (pairs, duplicate): ``pairs`` is the list of new edge colors when
    the move is legal, and ``duplicate`` is the offending pair otherwise.
    """
    pairs: list[EdgeColor] = []
    fresh: set[EdgeColor] = set()
    if state.graph.has_loop(vertex):
        p = (color, color)
        if p in state.palette:
            return None, p
        pairs.append(p)
        fresh.add(p)
    coloring = state.coloring
    for u in state.graph.neighbors(vertex):
        cu = coloring[u]
        if cu is None:
            continue
        p = edge_color(color, cu)
        if p in state.palette or p in fresh:
            return None, p
        pairs.append(p)
        fresh.add(p)
    return pairs, None


def is_legal_move(state: GameState, move: Move) -> bool:
    v, c = move.vertex, move.color
    if not (0 <= v < state.graph.n):
        return False
    if not (1 <= c <= state.k):
        return False
    if state.coloring[v] is not None:
        return False
    pairs, _ = _new_pairs(state, v, c)
    return pairs is not None


def legal_moves(state: GameState) -> list[Move]:
    """All legal moves, sorted by (vertex, color)."""
    out = []
    for v in range(state.graph.n):
        if state.coloring[v] is not None:
            continue
        for c in range(1, state.k + 1):
            pairs, _ = _new_pairs(state, v, c)
            if pairs is not None:
                out.append(Move(v, c))
    return out


def apply_move(state: GameState, move: Move) -> GameState:
    """The state after a legal move; raises IllegalMoveError otherwise."""
    v, c = move.vertex, move.color
    if not (0 <= v < state.graph.n):
        raise IllegalMoveError(f"vertex {v + 1} is outside 1..{state.graph.n}")
    if not (1 <= c <= state.k):
        raise IllegalMoveError(f"color {c} is outside 1..{state.k}")
    if state.coloring[v] is not None:
        raise IllegalMoveError(
            f"vertex {v + 1} is already colored", occupied=True
        )
    pairs, dup = _new_pairs(state, v, c)
    if pairs is None:
        raise IllegalMoveError(
            f"color {c} on vertex {v + 1} repeats the edge color "
            f"{{{dup[0]},{dup[1]}}}",
            duplicate_pair=dup,
        )
    coloring = state.coloring[:v] + (c,) + state.coloring[v + 1 :]
    return GameState(
        state.graph,
        state.k,
        coloring,
        state.palette | frozenset(pairs),
        state.moves_made + 1,
    )


def is_markable(state: GameState, vertex: int) -> bool:
    """True when ``vertex`` is uncolored and some color is legal on it."""
    if state.coloring[vertex] is not None:
        return False
    for c in range(1, state.k + 1):
        pairs, _ = _new_pairs(state, vertex, c)
        if pairs is not None:
            return True
    return False


def is_terminal(state: GameState) -> bool:
    """True when no vertex is markable: the player to move has no move."""
    return not any(is_markable(state, v) for v in range(state.graph.n))


# ---------------------------------------------------------------------------
# smallest palette admitting a total edge-distinguishing coloring


@dataclass(frozen=True)
class EdcnResult:
    """``k`` together with a witness: a total coloring realizing it."""

    k: int
    coloring: tuple[int, ...]


def minimum_colors_bound(edge_count: int) -> int:
    """Smallest k with k(k+1)/2 >= edge_count: there are only k(k+1)/2
    distinct unordered pairs over k colors, one needed per edge."""
    k = 1
    while k * (k + 1) // 2 < edge_count:
        k += 1
    return k


def _witness(graph: Graph, k: int) -> Optional[tuple[int, ...]]:
    """Depth-first search for a total edge-distinguishing k-coloring.

    Vertices are filled in descending degree order; each vertex tries used
    colors ascending plus a single fresh color, which is exhaustive up to
    color relabeling.
    """
    n = graph.n
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    colors = [0] * n
    pair_used: set[EdgeColor] = set()

    def place(idx: int, highest: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        limit = min(k, highest + 1)
        for c in range(1, limit + 1):
            added: list[EdgeColor] = []
            ok = True
            if graph.has_loop(v):
                p = (c, c)
                if p in pair_used:
                    ok = False
                else:
                    pair_used.add(p)
                    added.append(p)
            if ok:
                for u in graph.neighbors(v):
                    cu = colors[u]
                    if cu == 0:
                        continue
                    p = edge_color(c, cu)
                    if p in pair_used:
                        ok = False
                        break
                    pair_used.add(p)
                    added.append(p)
            if ok:
                colors[v] = c
                if place(idx + 1, max(highest, c)):
                    return True
                colors[v] = 0
            for p in added:
                pair_used.discard(p)
        return False

    if place(0, 0):
        return tuple(colors)
    return None


def edcn(graph: Graph) -> EdcnResult:
    """The smallest k admitting a total edge-distinguishing k-coloring.

    Coloring every vertex a distinct color is always edge-distinguishing
    (even with loops), so the search is bounded above by n.
    """
    if graph.n == 0:
        return EdcnResult(1, ())
    k = minimum_colors_bound(len(graph.edges))
    while True:
        w = _witness(graph, k)
        if w is not None:
            return EdcnResult(k, w)
        k += 1
        assert k <= graph.n, "all-distinct coloring must succeed"
