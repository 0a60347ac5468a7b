/** Wire types for the decision service and its problem documents. */

export type Mode = "phf" | "hf" | "crisp";
export type Method = "phf" | "hf" | "classical";
export type CriterionKind = "benefit" | "cost";

export interface PhfEntry {
  d: number;
  p: number;
}

export type PhfCell = PhfEntry[];
export type HfCell = number[];
export type Cell = PhfCell | HfCell | number;

export interface CriterionSpec {
  name: string;
  kind: CriterionKind;
}

export interface ProblemMetadata {
  title?: string;
  notes?: string[];
  [key: string]: unknown;
}

export interface ProblemDocument {
  schema_version: number;
  mode: Mode;
  alternatives: string[];
  criteria: CriterionSpec[];
  assessments: Cell[][];
  weights: Cell[];
  lambda?: number;
  metadata?: ProblemMetadata;
}

export interface WeightsPayload {
  values: number[];
  relative: number[];
  reference: number;
  relative_sum: number;
}

export interface DominancePayload {
  per_criterion: number[][][];
  aggregate: number[][];
  sums: number[];
}

export interface EvaluateResponse {
  method: Method;
  lambda: number;
  alternatives: string[];
  criteria: CriterionSpec[];
  weights: WeightsPayload;
  dominance: DominancePayload;
  overall: number[];
  order: string[];
  ranks: number[];
  footnotes: string[];
}

export interface LambdaPoint {
  lambda: number;
  overall: number[];
  order: string[];
}

export interface WeightSensitivityResponse {
  method: Method;
  lambda: number;
  weights: WeightsPayload;
  overall: number[];
  order: string[];
  ranks: number[];
}

export interface HealthResponse {
  status: string;
  version: string;
}

export interface ApiErrorPayload {
  error: string;
  message: string;
  path?: string;
}
