/** Typed client for the advisor HTTP API. All data shown in the UI comes from
 * these responses; the client never recomputes scores or tallies. */

export interface ModelSummary {
  id: string;
  title: string;
  patterns: number;
}

export interface ImpactRecord {
  qa: string;
  polarity: "+" | "-";
  note: string | null;
}

export interface PatternRecord {
  id: string;
  name: string;
  area: string;
  summary: string;
  impacts: ImpactRecord[];
  constraints: string[];
  sources: string[];
}

export interface NodeRecord {
  id: string;
  kind:
    | "start"
    | "gateway_exclusive"
    | "gateway_inclusive"
    | "gateway_parallel"
    | "pattern";
  pattern: string | null;
  label: string | null;
}

export interface EdgeRecord {
  from: string;
  to: string;
  condition: string | null;
}

export interface ModelDetail {
  id: string;
  title: string;
  nodes: NodeRecord[];
  edges: EdgeRecord[];
  complements: { a: string; b: string }[];
  patterns: PatternRecord[];
  dot: string;
}

export interface GatewayOption {
  edge: string;
  condition: string | null;
}

export interface PendingGateway {
  gateway: string;
  kind: string;
  label: string | null;
  options: GatewayOption[];
}

export interface SessionState {
  session: string;
  model: string;
  status: "awaiting_decision" | "complete";
  selected: string[];
  pending: PendingGateway[];
}

export interface ConstraintRow {
  pattern: string;
  text: string;
}

export interface QaRow {
  qa: string;
  plus: number;
  minus: number;
  net: number;
  positive: string[];
  negative: string[];
}

export interface TradeoffBody {
  patterns: string[];
  qas: QaRow[];
  conflicts: string[];
  constraints: ConstraintRow[];
}

export interface SessionResultBody {
  session: string;
  model: string;
  selected: string[];
  constraints: ConstraintRow[];
  suggestions: string[];
  tradeoff: TradeoffBody;
  log: { gateway: string; edges: string[] }[];
}

export interface ContributionRow {
  qa: string;
  polarity: "+" | "-";
  weight: number;
}

export interface RankingRow {
  pattern: string;
  name: string;
  score: number;
  contributions: ContributionRow[];
}

export interface RecommendBody {
  model: string;
  ranking: RankingRow[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function decode<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let code = "E_HTTP";
  let message = `${response.status}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    code = body.code ?? code;
    message = body.message ?? message;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    private readonly base = "",
  ) {}

  private get<T>(path: string): Promise<T> {
    return this.fetchFn(this.base + path).then((r) => decode<T>(r));
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    }).then((r) => decode<T>(r));
  }

  listModels(): Promise<{ models: ModelSummary[] }> {
    return this.get("/models");
  }

  getModel(id: string): Promise<ModelDetail> {
    return this.get(`/models/${encodeURIComponent(id)}`);
  }

  createSession(model: string): Promise<SessionState> {
    return this.post("/sessions", { model });
  }

  submitAnswer(session: string, gateway: string, edges: string[]): Promise<SessionState> {
    return this.post(`/sessions/${encodeURIComponent(session)}/answers`, { gateway, edges });
  }

  fetchResult(session: string): Promise<SessionResultBody> {
    return this.get(`/sessions/${encodeURIComponent(session)}/result`);
  }

  recommend(
    model: string,
    weights: Record<string, number>,
    signal?: AbortSignal,
  ): Promise<RecommendBody> {
    return this.post("/recommend", { model, weights }, signal);
  }

  tradeoff(patterns: string[], signal?: AbortSignal): Promise<TradeoffBody> {
    return this.post("/tradeoff", { patterns }, signal);
  }
}

/** Keeps at most one request in flight; starting a new one aborts its predecessor. */
export class LatestOnly {
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const value = await task(controller.signal);
      return controller.signal.aborted ? undefined : value;
    } catch (error) {
      if (controller.signal.aborted) {
        return undefined; // superseded, caller ignores
      }
      throw error;
    }
  }
}
