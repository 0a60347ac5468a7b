/** Shared fakes for unit tests: a controllable fetch and sample payloads. */

import type { FetchLike } from "../src/api.js";
import type { EvaluateResponse, LambdaPoint, ProblemDocument } from "../src/types.js";

export interface PendingCall {
  url: string;
  body: unknown;
  resolve: (response: Response) => void;
  reject: (error: unknown) => void;
}

export interface FakeFetch {
  fetchFn: FetchLike;
  calls: PendingCall[];
  /** Calls not yet answered by the test. */
  open: () => PendingCall[];
}

/** A fetch whose responses the test releases by hand, in any order. */
export function fakeFetch(): FakeFetch {
  const calls: PendingCall[] = [];
  const answered = new Set<PendingCall>();
  const fetchFn: FetchLike = (url, init) =>
    new Promise<Response>((resolve, reject) => {
      const call: PendingCall = {
        url,
        body: init?.body === undefined ? undefined : JSON.parse(String(init.body)),
        resolve: (response) => {
          answered.add(call);
          resolve(response);
        },
        reject: (error) => {
          answered.add(call);
          reject(error);
        },
      };
      calls.push(call);
    });
  return { fetchFn, calls, open: () => calls.filter((call) => !answered.has(call)) };
}

export function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function sampleDocument(): ProblemDocument {
  return {
    schema_version: 1,
    mode: "phf",
    alternatives: ["A1", "A2", "A3"],
    criteria: [
      { name: "c1", kind: "benefit" },
      { name: "c2", kind: "cost" },
    ],
    assessments: [
      [[{ d: 0.5, p: 1 }], [{ d: 0.2, p: 1 }]],
      [[{ d: 0.7, p: 1 }], [{ d: 0.4, p: 1 }]],
      [[{ d: 0.6, p: 1 }], [{ d: 0.3, p: 1 }]],
    ],
    weights: [[{ d: 0.6, p: 1 }], [{ d: 0.4, p: 1 }]],
    lambda: 2.25,
  };
}

/** A minimal but complete evaluation response for the given ranking. */
export function evaluateResponse(
  order: string[],
  overall: number[],
  method: "phf" | "hf" | "classical" = "phf",
): EvaluateResponse {
  const alternatives = [...order].sort();
  const ranks = alternatives.map((name) => order.indexOf(name) + 1);
  const n = alternatives.length;
  const zeros = alternatives.map(() => alternatives.map(() => 0));
  return {
    method,
    lambda: 2.25,
    alternatives,
    criteria: [
      { name: "c1", kind: "benefit" },
      { name: "c2", kind: "cost" },
    ],
    weights: {
      values: [0.6, 0.4],
      relative: [1, 0.6667],
      reference: 0,
      relative_sum: 1.6667,
    },
    dominance: { per_criterion: [zeros, zeros], aggregate: zeros, sums: new Array(n).fill(0) },
    overall,
    order,
    ranks,
    footnotes: [],
  };
}

export function lambdaPoint(lambda: number, order: string[], overall: number[]): LambdaPoint {
  return { lambda, overall, order };
}
