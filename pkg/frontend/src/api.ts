/** Thin typed client for the evaluation service.
 *
 * Every number the console displays comes from these calls; the client
 * never computes dominance itself.
 */

import type {
  ApiErrorPayload,
  EvaluateResponse,
  HealthResponse,
  LambdaPoint,
  Method,
  ProblemDocument,
  WeightSensitivityResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly kind: string;
  readonly path?: string;

  constructor(status: number, payload: ApiErrorPayload) {
    super(payload.message);
    this.name = "ApiError";
    this.status = status;
    this.kind = payload.error;
    this.path = payload.path;
  }
}

export interface EvaluateOptions {
  method?: Method;
  lambda?: number;
}

export type WeightNudge = { criterion: number; delta: number } | { deltas: number[] };

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class DecisionClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  async health(): Promise<HealthResponse> {
    const response = await this.fetchFn(`${this.base}/v1/health`);
    return (await this.unwrap(response)) as HealthResponse;
  }

  async evaluate(
    problem: ProblemDocument,
    options: EvaluateOptions = {},
  ): Promise<EvaluateResponse> {
    const body: Record<string, unknown> = { problem };
    if (options.method !== undefined) body.method = options.method;
    if (options.lambda !== undefined) body.lambda = options.lambda;
    return (await this.post("/v1/evaluate", body)) as EvaluateResponse;
  }

  async lambdaSensitivity(
    problem: ProblemDocument,
    lambdas: number[],
    method?: Method,
  ): Promise<LambdaPoint[]> {
    const body: Record<string, unknown> = { problem, lambdas };
    if (method !== undefined) body.method = method;
    return (await this.post("/v1/sensitivity/lambda", body)) as LambdaPoint[];
  }

  async weightSensitivity(
    problem: ProblemDocument,
    nudge: WeightNudge,
    options: EvaluateOptions = {},
  ): Promise<WeightSensitivityResponse> {
    const body: Record<string, unknown> = { problem, ...nudge };
    if (options.method !== undefined) body.method = options.method;
    if (options.lambda !== undefined) body.lambda = options.lambda;
    return (await this.post("/v1/sensitivity/weight", body)) as WeightSensitivityResponse;
  }

  private async post(path: string, body: unknown): Promise<unknown> {
    const response = await this.fetchFn(`${this.base}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return this.unwrap(response);
  }

  private async unwrap(response: Response): Promise<unknown> {
    if (response.ok) {
      return response.json();
    }
    let payload: ApiErrorPayload;
    try {
      payload = (await response.json()) as ApiErrorPayload;
    } catch {
      payload = { error: "http", message: `request failed with status ${response.status}` };
    }
    throw new ApiError(response.status, payload);
  }
}
