/** Typed client for the avoidance game service.
 *
 * The UI never evaluates game rules: every status, legality verdict,
 * symmetry flag and loss highlight in these types is server-computed.
 */

export type Side = "A" | "B";
export type GameStatus = "InProgress" | "ALost" | "BLost" | "Drawn";
export type EdgePair = [number, number];

export interface GameStateWire {
  graph6: string;
  forbidden: string | null;
  order: number;
  edges: EdgePair[];
  red: EdgePair[];
  blue: EdgePair[];
  moves: EdgePair[];
  status: GameStatus;
  to_move: Side | null;
  red_blue_isomorphic: boolean;
  losing_copy: EdgePair[];
  engine_side: Side;
  engine: string;
}

export interface CreateRequest {
  graph: { family: string } | { graph6: string };
  forbidden: { family: string } | { graph6: string } | null;
  human_side: Side;
  engine: string;
}

export interface CreateResponse {
  id: string;
  state: GameStateWire;
}

export interface MoveResponse {
  human_move: EdgePair;
  engine_move: EdgePair | null;
  state: GameStateWire;
}

export interface LayoutHint {
  type: "circle" | "grid";
  rows?: number;
  cols?: number;
}

export interface FamilyEntry {
  name: string;
  spec: string;
  description: string;
  layout?: LayoutHint;
}

export interface FamiliesResponse {
  families: FamilyEntry[];
  engines: string[];
}

export interface Transcript {
  graph: string;
  forbidden: string | null;
  moves: EdgePair[];
  status: GameStatus;
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly reason: string) {
    super(`${status}: ${reason}`);
  }
}

async function parse<T>(resp: Response): Promise<T> {
  const text = await resp.text();
  const body = text ? JSON.parse(text) : null;
  if (!resp.ok) {
    throw new ApiError(resp.status, body?.error ?? resp.statusText);
  }
  return body as T;
}

export class GameApi {
  constructor(readonly base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  async families(): Promise<FamiliesResponse> {
    return parse(await fetch(this.url("/api/families")));
  }

  async createGame(req: CreateRequest): Promise<CreateResponse> {
    return parse(await fetch(this.url("/api/games"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    }));
  }

  async getGame(id: string): Promise<CreateResponse> {
    return parse(await fetch(this.url(`/api/games/${id}`)));
  }

  async move(id: string, edge: EdgePair): Promise<MoveResponse> {
    return parse(await fetch(this.url(`/api/games/${id}/moves`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ edge }),
    }));
  }

  async transcript(id: string): Promise<Transcript> {
    return parse(await fetch(this.url(`/api/games/${id}/transcript`)));
  }

  async deleteGame(id: string): Promise<void> {
    const resp = await fetch(this.url(`/api/games/${id}`), { method: "DELETE" });
    if (!resp.ok && resp.status !== 204) {
      throw new ApiError(resp.status, resp.statusText);
    }
  }
}
