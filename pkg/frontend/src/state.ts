/** UI state containers. Views subscribe and re-render; every displayed figure
 * is a field of the last service response held here. */

import {
  ApiClient,
  ApiError,
  LatestOnly,
  ModelDetail,
  RecommendBody,
  SessionResultBody,
  SessionState,
  TradeoffBody,
} from "./api.js";

export type Listener = () => void;

export class Store<S> {
  private listeners = new Set<Listener>();

  constructor(public state: S) {}

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  update(patch: Partial<S>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener();
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return `${error.code}: ${error.message}`;
  }
  return error instanceof Error ? error.message : String(error);
}

// --- walkthrough -----------------------------------------------------------

export interface WalkthroughState {
  model: string | null;
  session: SessionState | null;
  result: SessionResultBody | null;
  error: string | null;
  busy: boolean;
}

export class WalkthroughFlow extends Store<WalkthroughState> {
  constructor(private readonly api: ApiClient) {
    super({ model: null, session: null, result: null, error: null, busy: false });
  }

  async start(model: string): Promise<void> {
    this.update({ model, session: null, result: null, error: null, busy: true });
    try {
      const session = await this.api.createSession(model);
      this.update({ session, busy: false });
      await this.finishIfComplete();
    } catch (error) {
      this.update({ error: describe(error), busy: false });
    }
  }

  async answer(gateway: string, edges: string[]): Promise<void> {
    const session = this.state.session;
    if (!session) {
      return;
    }
    this.update({ busy: true, error: null });
    try {
      const next = await this.api.submitAnswer(session.session, gateway, edges);
      this.update({ session: next, busy: false });
      await this.finishIfComplete();
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        // session expired server-side: recoverable by restarting
        this.update({ session: null, result: null, error: describe(error), busy: false });
      } else {
        this.update({ error: describe(error), busy: false });
      }
    }
  }

  private async finishIfComplete(): Promise<void> {
    const session = this.state.session;
    if (!session || session.status !== "complete") {
      return;
    }
    try {
      const result = await this.api.fetchResult(session.session);
      this.update({ result });
    } catch (error) {
      this.update({ error: describe(error) });
    }
  }

  reset(): void {
    this.update({ model: null, session: null, result: null, error: null, busy: false });
  }
}

// --- weights panel -----------------------------------------------------------

export interface WeightsState {
  model: string;
  weights: Record<string, number>;
  ranking: RecommendBody | null;
  error: string | null;
}

export class WeightsPanel extends Store<WeightsState> {
  private readonly inflight = new LatestOnly();

  constructor(
    private readonly api: ApiClient,
    model: string,
  ) {
    super({ model, weights: {}, ranking: null, error: null });
  }

  setModel(model: string): void {
    this.update({ model, weights: {}, ranking: null, error: null });
  }

  /** Slider values live in [0, 1]; zero weights are dropped from the request. */
  async setWeight(qa: string, value: number): Promise<void> {
    const clamped = Math.min(1, Math.max(0, value));
    const weights = { ...this.state.weights };
    if (clamped === 0) {
      delete weights[qa];
    } else {
      weights[qa] = clamped;
    }
    this.update({ weights });
    await this.refresh();
  }

  async refresh(): Promise<void> {
    const { model, weights } = this.state;
    try {
      const ranking = await this.inflight.run((signal) =>
        this.api.recommend(model, weights, signal),
      );
      if (ranking) {
        this.update({ ranking, error: null });
      }
    } catch (error) {
      this.update({ error: describe(error) });
    }
  }
}

// --- what-if basket ---------------------------------------------------------

export interface BasketState {
  basket: string[];
  report: TradeoffBody | null;
  error: string | null;
}

export class WhatIfBasket extends Store<BasketState> {
  private readonly inflight = new LatestOnly();

  constructor(
    private readonly api: ApiClient,
    private readonly knownPatterns: () => Set<string>,
  ) {
    super({ basket: [], report: null, error: null });
  }

  async toggle(patternId: string): Promise<void> {
    if (!this.knownPatterns().has(patternId)) {
      this.update({ error: `unknown pattern ${patternId}` });
      return;
    }
    const basket = this.state.basket.includes(patternId)
      ? this.state.basket.filter((p) => p !== patternId)
      : [...this.state.basket, patternId];
    this.update({ basket });
    await this.refresh();
  }

  async refresh(): Promise<void> {
    if (this.state.basket.length === 0) {
      this.update({ report: null, error: null });
      return;
    }
    try {
      const report = await this.inflight.run((signal) =>
        this.api.tradeoff(this.state.basket, signal),
      );
      if (report) {
        this.update({ report, error: null });
      }
    } catch (error) {
      this.update({ error: describe(error) });
    }
  }
}

// --- catalog ------------------------------------------------------------------

export interface Catalog {
  models: ModelDetail[];
  patternById: Map<string, ModelDetail["patterns"][number]>;
  qaIds: string[];
}

export function buildCatalog(models: ModelDetail[]): Catalog {
  const patternById = new Map<string, ModelDetail["patterns"][number]>();
  const qaIds = new Set<string>();
  for (const model of models) {
    for (const pattern of model.patterns) {
      patternById.set(pattern.id, pattern);
      for (const impact of pattern.impacts) {
        qaIds.add(impact.qa);
      }
    }
  }
  return { models, patternById, qaIds: [...qaIds].sort() };
}
