import { ApiClient } from "./api.js";
import { BoardView } from "./board.js";
import { ApiError, SessionView } from "./types.js";

const POLL_MS = 1500;

export interface AppElements {
  board: HTMLElement;
  family: HTMLInputElement;
  colors: HTMLInputElement;
  mode: HTMLSelectElement;
  newGame: HTMLButtonElement;
  hint: HTMLButtonElement;
  undo: HTMLButtonElement;
  message: HTMLElement;
}

/** Wires the board, the controls, and the service together.  All game
 * knowledge (legality, markability, winner) comes from the server's
 * payloads; this layer only moves them around. */
export class App {
  private readonly api: ApiClient;
  private readonly els: AppElements;
  private readonly board: BoardView;
  private gameId: string | null = null;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(els: AppElements, api: ApiClient = new ApiClient()) {
    this.els = els;
    this.api = api;
    this.board = new BoardView(els.board, {
      onMove: (vertex, color) => void this.submitMove(vertex, color),
    });
    els.newGame.addEventListener("click", () => void this.newGame());
    els.hint.addEventListener("click", () => void this.requestHint());
    els.undo.addEventListener("click", () => void this.requestUndo());
  }

  currentGameId(): string | null {
    return this.gameId;
  }

  private say(text: string, isError = false): void {
    this.els.message.textContent = text;
    this.els.message.classList.toggle("error", isError);
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) {
      if (err.duplicatePair !== undefined) {
        const [a, b] = err.duplicatePair;
        return `{${a},${b}} already used — ${err.message}`;
      }
      return err.message;
    }
    return String(err);
  }

  private show(view: SessionView): void {
    this.board.render(view);
    this.els.hint.disabled = view.terminal;
    this.els.undo.disabled = view.history.length === 0;
  }

  async newGame(): Promise<void> {
    const family = this.els.family.value.trim();
    if (!family) {
      this.say("enter a board such as path:5", true);
      return;
    }
    const colors = this.els.colors.value ? Number(this.els.colors.value) : undefined;
    try {
      const view = await this.api.createGame({
        family,
        colors,
        mode: this.els.mode.value,
      });
      this.gameId = view.id;
      this.show(view);
      this.say(`playing on ${view.family} with ${view.k} colors`);
      this.startPolling();
    } catch (err) {
      this.say(this.describe(err), true);
    }
  }

  async submitMove(vertex: number, color: number): Promise<void> {
    const view = this.board.current();
    if (this.gameId === null || view === null) {
      return;
    }
    try {
      const next = await this.api.postMove(this.gameId, vertex, color, view.moveNumber);
      this.show(next);
      const reply = next.engineMove;
      this.say(
        reply != null ? `engine answers v${reply[0]} color ${reply[1]}` : "",
      );
    } catch (err) {
      this.say(this.describe(err), true);
      if (err instanceof ApiError && err.code === "out_of_turn") {
        await this.refresh(); // someone else moved; show the real board
      }
    }
  }

  async requestHint(): Promise<void> {
    if (this.gameId === null) {
      return;
    }
    try {
      const hint = await this.api.hint(this.gameId);
      const [v, c] = hint.move;
      this.board.showHint(v, c);
      this.say(`hint: v${v} color ${c}${hint.winning ? " (winning)" : " (best effort)"}`);
    } catch (err) {
      this.say(this.describe(err), true);
    }
  }

  async requestUndo(): Promise<void> {
    if (this.gameId === null) {
      return;
    }
    try {
      const view = await this.api.undo(this.gameId);
      this.show(view);
      this.say("took the last move back");
    } catch (err) {
      this.say(this.describe(err), true);
    }
  }

  async refresh(): Promise<void> {
    if (this.gameId === null) {
      return;
    }
    try {
      const latest = await this.api.getGame(this.gameId);
      const shown = this.board.current();
      if (shown === null || latest.moveNumber !== shown.moveNumber) {
        this.show(latest);
      }
    } catch {
      // transient poll failures are invisible; the next tick retries
    }
  }

  startPolling(): void {
    if (this.timer === null) {
      this.timer = setInterval(() => void this.refresh(), POLL_MS);
    }
  }

  stopPolling(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}

export function mount(doc: Document = document): App {
  const el = <T extends HTMLElement>(id: string): T => {
    const found = doc.getElementById(id);
    if (!found) {
      throw new Error(`missing #${id}`);
    }
    return found as T;
  };
  return new App({
    board: el("board"),
    family: el<HTMLInputElement>("family"),
    colors: el<HTMLInputElement>("colors"),
    mode: el<HTMLSelectElement>("mode"),
    newGame: el<HTMLButtonElement>("new-game"),
    hint: el<HTMLButtonElement>("hint"),
    undo: el<HTMLButtonElement>("undo"),
    message: el("message"),
  });
}
