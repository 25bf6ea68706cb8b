"""Shared fixtures and independent oracles.

The oracles in this module deliberately share no code with the package
internals: game values come from a plain, unmemoized minimax over the full
legal move list, palette sizes from enumeration of every total coloring, and
automorphism counts from index-order backtracking.  Frozen literals sprinkled
through the suite were produced by these oracles and then pinned.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Callable, Iterator, Optional

import pytest

from edgegame import (
    Classification,
    GameState,
    Graph,
    Move,
    SolveOptions,
    TranspositionTable,
    apply_move,
    best_move,
    book,
    chorded_cycle,
    classify,
    complete,
    complete_bipartite,
    complete_looped,
    cycle,
    legal_moves,
    path,
    triangular_ladder,
    wheel,
)
from edgegame.graphs import FamilySpec

# ---------------------------------------------------------------------------
# board corpora
# ---------------------------------------------------------------------------


def family_boards(n_max: int) -> list[tuple[str, Graph]]:
    """Every buildable family instance with at most ``n_max`` vertices."""
    boards: list[tuple[str, Graph]] = []
    for n in range(1, n_max + 1):
        boards.append((f"path:{n}", path(n)))
        boards.append((f"complete:{n}", complete(n)))
        boards.append((f"looped:{n}", complete_looped(n)))
    for n in range(3, n_max + 1):
        boards.append((f"cycle:{n}", cycle(n)))
        boards.append((f"book:{n}", book(n)))
        boards.append((f"ladder:{n}", triangular_ladder(n)))
    for n in range(1, n_max):
        for m in range(n, n_max - n + 1):
            boards.append((f"bipartite:{n},{m}", complete_bipartite(n, m)))
    for n in range(4, n_max + 1):
        boards.append((f"wheel:{n}", wheel(n)))
        for j in range(3, n):
            boards.append((f"chorded:{n},{j}", chorded_cycle(n, j)))
    for name, size in (("octahedron", 6), ("moser-spindle", 7), ("cube", 8)):
        if size <= n_max:
            boards.append((name, FamilySpec.parse(name).build()))
    return boards


def random_graph(rng: random.Random, n_max: int = 6) -> Graph:
    """One random board: n in 1..n_max, edge probability in [0.2, 0.9],
    and a 25% chance of a loop-enabled board with per-vertex loops."""
    n = rng.randint(1, n_max)
    prob = rng.uniform(0.2, 0.9)
    allows_loops = rng.random() < 0.25
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < prob:
                edges.append((u, v))
        if allows_loops and rng.random() < 0.3:
            edges.append((u, u))
    return Graph(n, edges, allows_loops=allows_loops)


def random_graphs(seed: int, count: int, n_max: int = 6) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, n_max) for _ in range(count)]


RANDOM_BOARD_SEED = 20260816


@pytest.fixture(scope="session")
def fifty_random_boards() -> list[Graph]:
    return random_graphs(RANDOM_BOARD_SEED, 50)


# ---------------------------------------------------------------------------
# game-value oracle
# ---------------------------------------------------------------------------


def oracle_classification(state: GameState) -> Classification:
    """Plain minimax: a position is N iff some move lands in a P position.

    No memoization, no symmetry reduction, no move pruning -- this is the
    definition, executed literally, so it is safe to check the solver against.
    """
    for move in legal_moves(state):
        if oracle_classification(apply_move(state, move)) is Classification.P:
            return Classification.N
    return Classification.P


# ---------------------------------------------------------------------------
# palette-size oracle
# ---------------------------------------------------------------------------


def oracle_edcn(graph: Graph) -> int:
    """Smallest k admitting a total coloring with pairwise-distinct edge
    colors, found by trying every assignment in [k]^n for k = 1, 2, ..."""
    if graph.n == 0:
        return 1
    edges = sorted(graph.edges)
    for k in range(1, graph.n + 1):
        for colors in product(range(1, k + 1), repeat=graph.n):
            seen = set()
            ok = True
            for u, v in edges:
                a, b = colors[u], colors[v]
                pair = (a, b) if a <= b else (b, a)
                if pair in seen:
                    ok = False
                    break
                seen.add(pair)
            if ok:
                return k
    raise AssertionError("n distinct colors always give distinct edge colors")


# ---------------------------------------------------------------------------
# automorphism-count oracle
# ---------------------------------------------------------------------------


def oracle_automorphism_count(graph: Graph) -> int:
    """Count adjacency-preserving self-bijections by backtracking in plain
    vertex-index order (no degree ordering, unlike the package's search)."""
    n = graph.n
    adj = [[False] * n for _ in range(n)]
    for u, v in graph.edges:
        adj[u][v] = adj[v][u] = True

    count = 0
    image: list[Optional[int]] = [None] * n
    used = [False] * n

    def extend(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        for target in range(n):
            if used[target]:
                continue
            if adj[i][i] != adj[target][target]:
                continue
            ok = True
            for j in range(i):
                if adj[i][j] != adj[target][image[j]]:
                    ok = False
                    break
            if ok:
                image[i] = target
                used[target] = True
                extend(i + 1)
                used[target] = False
                image[i] = None

    extend(0)
    return count


# ---------------------------------------------------------------------------
# playout helpers
# ---------------------------------------------------------------------------


def random_playout(state: GameState, rng: random.Random) -> list[GameState]:
    """States of one uniformly random complete game, start included."""
    states = [state]
    while True:
        moves = legal_moves(states[-1])
        if not moves:
            return states
        states.append(apply_move(states[-1], rng.choice(moves)))


def engine_defeats_every_line(
    state: GameState,
    engine_to_move: bool,
    table: TranspositionTable,
    options: Optional[SolveOptions] = None,
) -> bool:
    """True iff the engine makes the final move against *every* opposing line.

    On the engine's turn it plays ``best_move``; on the adversary's turn every
    legal reply is explored.
    """
    moves = legal_moves(state)
    if not moves:
        return not engine_to_move
    if engine_to_move:
        choice = best_move(state, table=table, opts=options)
        assert choice is not None
        return engine_defeats_every_line(
            apply_move(state, choice.move), False, table, options
        )
    return all(
        engine_defeats_every_line(apply_move(state, move), True, table, options)
        for move in moves
    )


def engine_defeats_random(
    state: GameState,
    engine_to_move: bool,
    table: TranspositionTable,
    rng: random.Random,
    options: Optional[SolveOptions] = None,
) -> bool:
    """One playout: engine plays ``best_move``, adversary plays at random."""
    while True:
        moves = legal_moves(state)
        if not moves:
            return not engine_to_move
        if engine_to_move:
            choice = best_move(state, table=table, opts=options)
            assert choice is not None
            state = apply_move(state, choice.move)
        else:
            state = apply_move(state, rng.choice(moves))
        engine_to_move = not engine_to_move


# ---------------------------------------------------------------------------
# recurring positions
# ---------------------------------------------------------------------------


@pytest.fixture
def p5_endgame() -> GameState:
    """A five-vertex path, three moves in: (1, ., 1, 2, .) with k = 3.

    v2 is dead -- both neighbors carry color 1, so any mark repeats an edge
    color -- and v5 accepts exactly colors 2 and 3.
    """
    return GameState.from_coloring(path(5), 3, [1, None, 1, 2, None])


def replay(graph: Graph, k: int, moves: list[tuple[int, int]]) -> GameState:
    """Apply 1-based (vertex, color) moves from the empty board."""
    state = GameState.empty(graph, k)
    for vertex, color in moves:
        state = apply_move(state, Move(vertex - 1, color))
    return state
