// Payload shapes, exactly as the service emits them.  Vertices and colors
// are 1-based everywhere; the client never invents fields of its own.

export type PlayerName = "Player1" | "Player2";

export interface GraphJson {
  n: number;
  edges: [number, number][];
  loops: boolean;
  layout?: [number, number][];
}

export interface SessionView {
  id: string;
  family: string;
  mode: string;
  engineSeat: PlayerName | null;
  k: number;
  graph: GraphJson;
  coloring: (number | null)[];
  movesMade: number;
  moveNumber: number;
  turn: PlayerName | null;
  terminal: boolean;
  winner: PlayerName | null;
  palette: [number, number][];
  legalMoves: [number, number][];
  markable: boolean[];
  history: [number, number][];
  engineMove?: [number, number] | null;
}

export interface HintResponse {
  move: [number, number];
  winning: boolean;
}

export interface ErrorBody {
  error: string;
  detail: string;
  duplicatePair?: [number, number];
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly duplicatePair?: [number, number];

  constructor(status: number, body: ErrorBody) {
    super(body.detail);
    this.status = status;
    this.code = body.error;
    this.duplicatePair = body.duplicatePair;
  }
}
