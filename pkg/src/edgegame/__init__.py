"""EDGe: a vertex-coloring game with edge-distinguishing legality.

Players alternately color vertices from a fixed palette; a move is legal
only while every fully-colored edge keeps a distinct unordered pair of
endpoint colors, and whoever moves last wins.  This package provides the
rules, an exact solver, a verification suite for the known results, a CLI,
and an HTTP play service.
"""

from .coloring import (
    EdcnResult,
    GameState,
    IllegalMoveError,
    Move,
    RulesError,
    apply_move,
    edcn,
    edge_color,
    induced_edge_colors,
    is_edge_distinguishing,
    is_legal_move,
    is_markable,
    is_terminal,
    legal_moves,
    minimum_colors_bound,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    ParamError,
    ParseError,
    SizeLimitError,
    VertexPermutation,
    are_isomorphic,
    automorphisms,
    book,
    chorded_cycle,
    complete,
    complete_bipartite,
    complete_looped,
    cycle,
    graph_from_json,
    graph_to_json,
    graph_to_text,
    parse_graph,
    path,
    triangular_ladder,
    wheel,
)
from .registry import (
    KnownResult,
    RowReport,
    VerifyReport,
    all_known_results,
    check_all,
    check_row,
)
from .solver import (
    BestMove,
    Classification,
    GameTree,
    NodeLimitError,
    SolveOptions,
    SolveResult,
    TranspositionTable,
    TreeNode,
    Winner,
    best_move,
    canonicalize,
    classify,
    export_dot,
    game_tree,
    reduced_moves,
    verify_strategy_start,
    winner,
)

__version__ = "0.1.0"
