"""HTTP play service: game sessions with an optional engine opponent.

Session operations live on SessionStore, independent of the web framework;
the FastAPI app is a thin JSON layer over it.  All vertices and colors in
request and response bodies are 1-based.
"""

from __future__ import annotations

import json
import logging
import threading
import time
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .coloring import (
    GameState,
    IllegalMoveError,
    Move,
    RulesError,
    apply_move,
    edcn,
    is_markable,
    is_terminal,
    legal_moves,
)
from .graphs import FamilySpec, Graph, GraphError, graph_from_json, graph_to_json
from .solver import TranspositionTable, best_move

MODES = ("two-human", "engine-first", "engine-second")

logger = logging.getLogger(__name__)


class ServiceError(Exception):
    """An error with a fixed HTTP shape: {"error", "detail", ...}."""

    def __init__(self, status: int, error: str, detail: str, **extra):
        super().__init__(detail)
        self.status = status
        self.error = error
        self.detail = detail
        self.extra = extra

    def body(self) -> dict:
        out = {"error": self.error, "detail": self.detail}
        out.update(self.extra)
        return out


@dataclass
class Session:
    id: str
    label: str
    graph: Graph
    k: int
    mode: str
    color_overridden: bool
    state: GameState
    history: list[Move] = field(default_factory=list)
    table: TranspositionTable = field(default_factory=TranspositionTable)
    lock: threading.RLock = field(default_factory=threading.RLock)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)

    def engine_seat(self) -> Optional[int]:
        """1 or 2 when the engine controls that player, else None."""
        if self.mode == "engine-first":
            return 1
        if self.mode == "engine-second":
            return 2
        return None

    def to_move(self) -> int:
        return 1 if self.state.moves_made % 2 == 0 else 2

    def made_by_engine(self, index: int) -> bool:
        seat = self.engine_seat()
        if seat is None:
            return False
        return (index % 2 == 0) == (seat == 1)


def session_view(session: Session) -> dict:
    st = session.state
    terminal = is_terminal(st)
    turn = None if terminal else f"Player{session.to_move()}"
    win = None
    if terminal:
        win = "Player1" if st.moves_made % 2 == 1 else "Player2"
    seat = session.engine_seat()
    return {
        "id": session.id,
        "family": session.label,
        "mode": session.mode,
        "engineSeat": None if seat is None else f"Player{seat}",
        "k": st.k,
        "graph": graph_to_json(session.graph),
        "coloring": list(st.coloring),
        "movesMade": st.moves_made,
        "moveNumber": st.moves_made,
        "turn": turn,
        "terminal": terminal,
        "winner": win,
        "palette": [[a, b] for a, b in sorted(st.palette)],
        "legalMoves": [[m.vertex + 1, m.color] for m in legal_moves(st)],
        "markable": [is_markable(st, v) for v in range(session.graph.n)],
        "history": [[m.vertex + 1, m.color] for m in session.history],
    }


class SessionStore:
    """All live sessions; every mutation of one session holds its lock."""

    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._sessions)

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._sessions)

    def create(
        self,
        family: Optional[str] = None,
        graph_json: Optional[dict] = None,
        colors: Optional[int] = None,
        mode: str = "two-human",
    ) -> Session:
        if mode not in MODES:
            raise ServiceError(
                422, "bad_request", f"mode must be one of {', '.join(MODES)}, got {mode!r}"
            )
        if (family is None) == (graph_json is None):
            raise ServiceError(
                422, "bad_request", "provide exactly one of 'family' or 'graph'"
            )
        try:
            if family is not None:
                spec = FamilySpec.parse(family)
                graph = spec.build()
                label = spec.label()
            else:
                graph = graph_from_json(graph_json)
                spec = FamilySpec.custom(graph)
                graph = spec.build()  # attaches a default layout
                label = spec.label()
        except GraphError as exc:
            raise ServiceError(422, "bad_graph", str(exc))
        if colors is not None and colors < 1:
            raise ServiceError(422, "bad_request", f"colors must be >= 1, got {colors}")
        k = colors if colors is not None else edcn(graph).k
        session = Session(
            id=uuid.uuid4().hex[:12],
            label=label,
            graph=graph,
            k=k,
            mode=mode,
            color_overridden=colors is not None,
            state=GameState.empty(graph, k),
        )
        if session.engine_seat() == 1:
            self._engine_reply(session)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ServiceError(404, "unknown_game", f"no session {session_id!r}")
        return session

    def _engine_reply(self, session: Session) -> Optional[Move]:
        if is_terminal(session.state):
            return None
        bm = best_move(session.state, session.table)
        assert bm is not None
        session.state = apply_move(session.state, bm.move)
        session.history.append(bm.move)
        return bm.move

    def play(
        self,
        session_id: str,
        vertex: int,
        color: int,
        move_number: Optional[int] = None,
    ) -> tuple[Session, Optional[Move]]:
        """Apply one human move (1-based); the engine answers synchronously.

        ``move_number`` is optimistic concurrency: when two clients race,
        the one whose number no longer matches gets out_of_turn.
        """
        session = self.get(session_id)
        with session.lock:
            if is_terminal(session.state):
                raise ServiceError(409, "game_over", "the game has ended")
            if move_number is not None and move_number != session.state.moves_made:
                raise ServiceError(
                    409,
                    "out_of_turn",
                    f"expected move number {session.state.moves_made}, got {move_number}",
                )
            seat = session.engine_seat()
            if seat is not None and session.to_move() == seat:
                raise ServiceError(409, "out_of_turn", "it is the engine's turn")
            try:
                move = Move(vertex - 1, color)
                session.state = apply_move(session.state, move)
            except IllegalMoveError as exc:
                extra = {}
                if exc.duplicate_pair is not None:
                    extra["duplicatePair"] = list(exc.duplicate_pair)
                raise ServiceError(409, "illegal_move", str(exc), **extra)
            session.history.append(move)
            engine_move = None
            if seat is not None:
                engine_move = self._engine_reply(session)
            session.updated = time.time()
            return session, engine_move

    def undo(self, session_id: str) -> Session:
        """Remove the last ply: the human move plus, in engine modes, the
        engine's reply, so afterward it is the human's turn again."""
        session = self.get(session_id)
        with session.lock:
            history = session.history
            if not history:
                raise ServiceError(409, "nothing_to_undo", "no moves have been made")
            drop = 1
            if session.made_by_engine(len(history) - 1):
                if len(history) < 2:
                    raise ServiceError(
                        409, "nothing_to_undo", "only the engine's opening move exists"
                    )
                drop = 2
            del history[-drop:]
            state = GameState.empty(session.graph, session.k)
            for m in history:
                state = apply_move(state, m)
            session.state = state
            session.updated = time.time()
            return session

    def hint(self, session_id: str) -> tuple[Move, bool]:
        session = self.get(session_id)
        with session.lock:
            if is_terminal(session.state):
                raise ServiceError(409, "game_over", "the game has ended")
            bm = best_move(session.state, session.table)
            assert bm is not None
            return bm.move, bm.winning

    # -- persistence --------------------------------------------------------

    def save(self, path: str | Path) -> None:
        """One JSON object per line, oldest session first."""
        with self._lock:
            sessions = sorted(self._sessions.values(), key=lambda s: s.created)
            lines = []
            for s in sessions:
                lines.append(
                    json.dumps(
                        {
                            "id": s.id,
                            "family": s.label,
                            "graph": graph_to_json(s.graph),
                            "k": s.k,
                            "colorsOverridden": s.color_overridden,
                            "mode": s.mode,
                            "history": [[m.vertex + 1, m.color] for m in s.history],
                            "created": s.created,
                            "updated": s.updated,
                        }
                    )
                )
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))

    def load(self, path: str | Path) -> int:
        """Restore sessions, replaying each history through the rules.

        The serialized palette is never trusted: every move is re-applied
        from the empty board.  A malformed line, or one whose history does
        not replay legally, is skipped with a warning; the rest still load.
        Returns the number of sessions restored.
        """
        text = Path(path).read_text()
        restored: dict[str, Session] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                graph = graph_from_json(data["graph"])
                k = int(data["k"])
                mode = data["mode"]
                if mode not in MODES:
                    raise ValueError(f"unknown mode {mode!r}")
                state = GameState.empty(graph, k)
                history = []
                for v, c in data["history"]:
                    move = Move(int(v) - 1, int(c))
                    state = apply_move(state, move)
                    history.append(move)
                session = Session(
                    id=str(data["id"]),
                    label=str(data.get("family", "custom")),
                    graph=graph,
                    k=k,
                    mode=mode,
                    color_overridden=bool(data.get("colorsOverridden", False)),
                    state=state,
                    history=history,
                    created=float(data.get("created", time.time())),
                    updated=float(data.get("updated", time.time())),
                )
            except (KeyError, TypeError, ValueError, GraphError, RulesError) as exc:
                logger.warning(
                    "session file %s, line %d: skipping session: %s", path, lineno, exc
                )
                continue
            restored[session.id] = session
        with self._lock:
            self._sessions.update(restored)
        return len(restored)


# ---------------------------------------------------------------------------
# FastAPI layer


class CreateGameBody(BaseModel):
    family: Optional[str] = None
    graph: Optional[dict] = None
    colors: Optional[int] = None
    mode: str = "two-human"


class MoveBody(BaseModel):
    vertex: int
    color: int
    moveNumber: Optional[int] = None


def create_app(
    static_dir: Optional[str] = None,
    sessions_file: Optional[str] = None,
    store: Optional[SessionStore] = None,
) -> FastAPI:
    store = store or SessionStore()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if sessions_file and Path(sessions_file).exists():
            store.load(sessions_file)
        yield
        if sessions_file:
            store.save(sessions_file)

    app = FastAPI(title="edge game service", lifespan=lifespan)
    app.state.store = store

    @app.exception_handler(ServiceError)
    async def _service_error(request, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content=exc.body())

    @app.post("/api/games", status_code=201)
    def create_game(body: CreateGameBody):
        session = store.create(
            family=body.family,
            graph_json=body.graph,
            colors=body.colors,
            mode=body.mode,
        )
        view = session_view(session)
        opening = None
        if session.history and session.made_by_engine(0):
            m = session.history[0]
            opening = [m.vertex + 1, m.color]
        return {**view, "engineMove": opening}

    @app.get("/api/games/{session_id}")
    def get_game(session_id: str):
        return session_view(store.get(session_id))

    @app.post("/api/games/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody):
        session, engine_move = store.play(
            session_id, body.vertex, body.color, body.moveNumber
        )
        view = session_view(session)
        reply = None if engine_move is None else [engine_move.vertex + 1, engine_move.color]
        return {**view, "engineMove": reply}

    @app.post("/api/games/{session_id}/undo")
    def post_undo(session_id: str):
        return session_view(store.undo(session_id))

    @app.get("/api/games/{session_id}/hint")
    def get_hint(session_id: str):
        move, winning = store.hint(session_id)
        return {"move": [move.vertex + 1, move.color], "winning": winning}

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index():
            return {"service": "edge game service", "health": "/api/health"}

    return app
