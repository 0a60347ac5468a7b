/** View model for the dominance heatmap and its per-criterion drill-down.
 *
 * This renders numbers the service computed; nothing here re-derives
 * dominance.
 */

import { fullPrecision, round2 } from "./format.js";
import type { EvaluateResponse } from "./types.js";

export type HeatTone = "gain" | "loss" | "neutral";

export interface HeatCell {
  row: string;
  column: string;
  value: number;
  tone: HeatTone;
  /** 0..1 share of the largest off-diagonal magnitude in this matrix. */
  intensity: number;
  display: string;
  title: string;
}

export function heatmapModel(names: string[], matrix: number[][]): HeatCell[][] {
  let peak = 0;
  for (let i = 0; i < names.length; i += 1) {
    for (let k = 0; k < names.length; k += 1) {
      if (i !== k) peak = Math.max(peak, Math.abs(matrix[i][k]));
    }
  }
  return names.map((row, i) =>
    names.map((column, k) => {
      const value = matrix[i][k];
      const diagonal = i === k;
      const tone: HeatTone = diagonal || value === 0 ? "neutral" : value > 0 ? "gain" : "loss";
      return {
        row,
        column,
        value,
        tone,
        intensity: diagonal || peak === 0 ? 0 : Math.abs(value) / peak,
        display: round2(value),
        title: `${row} vs ${column}: ${fullPrecision(value)}`,
      };
    }),
  );
}

/** The aggregate theta matrix view. */
export function aggregateHeatmap(response: EvaluateResponse): HeatCell[][] {
  return heatmapModel(response.alternatives, response.dominance.aggregate);
}

/** One criterion's dominance matrix view. */
export function criterionHeatmap(response: EvaluateResponse, criterion: number): HeatCell[][] {
  const matrices = response.dominance.per_criterion;
  if (criterion < 0 || criterion >= matrices.length) {
    throw new Error(`no criterion ${criterion} to drill into`);
  }
  return heatmapModel(response.alternatives, matrices[criterion]);
}
