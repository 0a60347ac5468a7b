/** Workbench controller: draft document, evaluation lifecycle, slider,
 * and named scenario snapshots.
 *
 * Concurrency model: every edit and every outgoing request bumps one
 * monotone sequence number. A response only lands if nothing newer has
 * been issued in the meantime, so the displayed ranking always belongs
 * to the last successfully evaluated draft and superseded responses
 * are discarded. While the draft is ahead of the displayed result the
 * `pendingEdit` flag is up, which the shell renders as a stale badge.
 */

import type { DecisionClient } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import { hasBlockingCell, stripProbabilities, type CellEdit } from "./matrix.js";
import { applyEdit } from "./matrix.js";
import type {
  EvaluateResponse,
  LambdaPoint,
  Method,
  ProblemDocument,
} from "./types.js";

export const LAMBDA_MIN = 0.1;
export const LAMBDA_MAX = 10;
export const SLIDER_DEBOUNCE_MS = 250;
export const DEFAULT_LAMBDA = 2.25;

export interface Scenario {
  name: string;
  method: Method;
  response: EvaluateResponse;
}

export interface ComparisonRow {
  alternative: string;
  leftRank: number;
  rightRank: number;
  delta: number;
}

export interface WorkbenchEvents {
  /** Fired whenever displayed state changes (result, error, pending flag). */
  onChange?: () => void;
}

export class WorkbenchState {
  draft: ProblemDocument | null = null;
  lastResponse: EvaluateResponse | null = null;
  lambdaPreview: LambdaPoint | null = null;
  pendingEdit = false;
  lastError: string | null = null;
  method: Method | null = null;
  lambdaValue: number = DEFAULT_LAMBDA;
  scenarios: Scenario[] = [];

  private sequence = 0;
  private readonly client: DecisionClient;
  private readonly events: WorkbenchEvents;
  private readonly slider: Debounced<[number]>;
  private lastSliderValue: number | null = null;

  constructor(client: DecisionClient, events: WorkbenchEvents = {}, debounceMs = SLIDER_DEBOUNCE_MS) {
    this.client = client;
    this.events = events;
    this.slider = debounce((value: number) => {
      void this.refreshLambda(value);
    }, debounceMs);
  }

  loadDocument(document: ProblemDocument): void {
    this.draft = structuredClone(document);
    this.lambdaValue = document.lambda ?? DEFAULT_LAMBDA;
    this.lambdaPreview = null;
    this.pendingEdit = true;
    this.lastError = null;
    this.sequence += 1;
    this.notify();
  }

  /** Apply one matrix edit to the draft; throws on invalid edits so the
   * shell can keep them inline and send nothing. */
  edit(cellEdit: CellEdit): void {
    if (this.draft === null) throw new Error("no document loaded");
    this.draft = applyEdit(this.draft, cellEdit);
    this.pendingEdit = true;
    this.sequence += 1;
    this.notify();
  }

  /** True when a blocked cell (excess probability mass) forbids commits. */
  commitBlocked(): boolean {
    return this.draft !== null && hasBlockingCell(this.draft);
  }

  /** Evaluate the current draft. Returns the response, or null when the
   * response arrived stale and was discarded. */
  async commit(): Promise<EvaluateResponse | null> {
    if (this.draft === null) throw new Error("no document loaded");
    if (this.commitBlocked()) throw new Error("fix blocked cells before evaluating");
    const seq = ++this.sequence;
    const snapshot = structuredClone(this.draft);
    try {
      const response = await this.client.evaluate(snapshot, {
        method: this.method ?? undefined,
        lambda: this.lambdaValue,
      });
      if (seq !== this.sequence) return null;
      this.lastResponse = response;
      this.pendingEdit = false;
      this.lastError = null;
      this.notify();
      return response;
    } catch (error) {
      if (seq === this.sequence) {
        this.lastError = error instanceof Error ? error.message : String(error);
        this.notify();
      }
      throw error;
    }
  }

  /** Slider input: clamped, debounced, trailing-edge. */
  setLambda(value: number): void {
    const clamped = Math.min(LAMBDA_MAX, Math.max(LAMBDA_MIN, value));
    this.lambdaValue = clamped;
    this.slider(clamped);
    this.notify();
  }

  /** Run the pending slider request immediately (tests, blur events). */
  flushLambda(): void {
    this.slider.flush();
  }

  /** The debounced slider lands here; also the retry target. */
  async refreshLambda(value: number): Promise<LambdaPoint | null> {
    if (this.draft === null) return null;
    this.lastSliderValue = value;
    const seq = ++this.sequence;
    try {
      const points = await this.client.lambdaSensitivity(
        structuredClone(this.draft),
        [value],
        this.method ?? undefined,
      );
      if (seq !== this.sequence) return null;
      this.lambdaPreview = points[0] ?? null;
      this.lastError = null;
      this.notify();
      return this.lambdaPreview;
    } catch (error) {
      if (seq === this.sequence) {
        this.lastError = error instanceof Error ? error.message : String(error);
        this.notify();
      }
      return null;
    }
  }

  /** Toast retry: re-issue the last slider request. */
  async retryLambda(): Promise<LambdaPoint | null> {
    if (this.lastSliderValue === null) return null;
    return this.refreshLambda(this.lastSliderValue);
  }

  /** Store the last evaluation under a name for later comparison. */
  snapshotScenario(name: string): Scenario {
    if (this.lastResponse === null) throw new Error("nothing evaluated yet");
    const scenario: Scenario = {
      name,
      method: this.lastResponse.method,
      response: this.lastResponse,
    };
    this.scenarios = [...this.scenarios.filter((s) => s.name !== name), scenario];
    this.notify();
    return scenario;
  }

  /** Evaluate the draft's probability-free twin and snapshot it. */
  async snapshotStrippedTwin(name: string): Promise<Scenario> {
    if (this.draft === null) throw new Error("no document loaded");
    const twin = stripProbabilities(this.draft);
    const response = await this.client.evaluate(twin, { lambda: this.lambdaValue });
    const scenario: Scenario = { name, method: response.method, response };
    this.scenarios = [...this.scenarios.filter((s) => s.name !== name), scenario];
    this.notify();
    return scenario;
  }

  private notify(): void {
    this.events.onChange?.();
  }
}

/** Rank deltas between two scenario snapshots of the same alternatives. */
export function compareScenarios(left: Scenario, right: Scenario): ComparisonRow[] {
  const names = left.response.alternatives;
  if (JSON.stringify(names) !== JSON.stringify(right.response.alternatives)) {
    throw new Error("compared scenarios must share alternative names");
  }
  return names.map((alternative, i) => {
    const leftRank = left.response.ranks[i];
    const rightRank = right.response.ranks[i];
    return { alternative, leftRank, rightRank, delta: rightRank - leftRank };
  });
}
