import { ApiError, ErrorBody, HintResponse, SessionView } from "./types.js";

export interface CreateGameRequest {
  family?: string;
  graph?: object;
  colors?: number;
  mode?: string;
}

async function parseError(response: Response): Promise<ApiError> {
  let body: ErrorBody;
  try {
    body = (await response.json()) as ErrorBody;
  } catch {
    body = { error: "bad_response", detail: `HTTP ${response.status}` };
  }
  return new ApiError(response.status, body);
}

/** Thin client for the play service.  Requests are queued so at most one
 * is in flight per client, which keeps moveNumber bookkeeping simple. */
export class ApiClient {
  private readonly base: string;
  private queue: Promise<unknown> = Promise.resolve();

  constructor(base: string = "") {
    this.base = base.replace(/\/$/, "");
  }

  private enqueue<T>(job: () => Promise<T>): Promise<T> {
    const next = this.queue.then(job, job);
    // keep the chain alive whether or not the job fails
    this.queue = next.then(
      () => undefined,
      () => undefined,
    );
    return next;
  }

  private async request<T>(method: string, path: string, body?: object): Promise<T> {
    const response = await fetch(this.base + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      throw await parseError(response);
    }
    return (await response.json()) as T;
  }

  createGame(req: CreateGameRequest): Promise<SessionView> {
    return this.enqueue(() => this.request("POST", "/api/games", req));
  }

  getGame(id: string): Promise<SessionView> {
    return this.enqueue(() => this.request("GET", `/api/games/${id}`));
  }

  postMove(
    id: string,
    vertex: number,
    color: number,
    moveNumber: number,
  ): Promise<SessionView> {
    return this.enqueue(() =>
      this.request("POST", `/api/games/${id}/moves`, { vertex, color, moveNumber }),
    );
  }

  undo(id: string): Promise<SessionView> {
    return this.enqueue(() => this.request("POST", `/api/games/${id}/undo`));
  }

  hint(id: string): Promise<HintResponse> {
    return this.enqueue(() => this.request("GET", `/api/games/${id}/hint`));
  }

  health(): Promise<{ status: string }> {
    return this.enqueue(() => this.request("GET", "/api/health"));
  }
}
