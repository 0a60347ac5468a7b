/** Pure logic behind the matrix editor: cell edits, validation, and the
 * per-cell probability-mass indicator.
 *
 * Edits never mutate the incoming document; `applyEdit` returns a new
 * one so the workbench can treat drafts as immutable snapshots.
 */

import type { Cell, HfCell, PhfCell, ProblemDocument } from "./types.js";

export const MASS_TOLERANCE = 1e-9;

export type MassStatus = "ok" | "deficit" | "excess" | "empty";

export interface MassIndicator {
  mass: number;
  status: MassStatus;
  /** True when the editor must refuse to commit this cell. */
  blocking: boolean;
  message: string;
}

export interface CellEdit {
  row: number;
  column: number;
  entry: number;
  field: "d" | "p";
  value: number;
}

export function isPhfCell(cell: Cell): cell is PhfCell {
  return Array.isArray(cell) && (cell.length === 0 || typeof cell[0] === "object");
}

export function probabilityMass(cell: PhfCell): number {
  return cell.reduce((sum, entry) => sum + entry.p, 0);
}

/** The chip next to each probabilistic cell: deficits renormalize on
 * evaluation, excess mass blocks the commit. */
export function massIndicator(cell: PhfCell): MassIndicator {
  const mass = probabilityMass(cell);
  if (mass > 1 + MASS_TOLERANCE) {
    return {
      mass,
      status: "excess",
      blocking: true,
      message: `blocked: probability mass ${mass.toFixed(2)} exceeds 1`,
    };
  }
  if (mass <= MASS_TOLERANCE) {
    return {
      mass,
      status: "empty",
      blocking: true,
      message: "blocked: probability mass must be positive",
    };
  }
  if (mass < 1 - MASS_TOLERANCE) {
    return {
      mass,
      status: "deficit",
      blocking: false,
      message: `mass ${mass.toFixed(2)}: will renormalize on evaluation`,
    };
  }
  return { mass, status: "ok", blocking: false, message: "mass 1.00" };
}

/** Inline validation; returns null when the edit is acceptable. */
export function validateEdit(document: ProblemDocument, edit: CellEdit): string | null {
  const row = document.assessments[edit.row];
  if (row === undefined) return `no alternative at row ${edit.row}`;
  const cell = row[edit.column];
  if (cell === undefined) return `no criterion at column ${edit.column}`;
  if (!Number.isFinite(edit.value)) return "value must be a finite number";
  if (edit.field === "d" && edit.value < 0) return "degree must be non-negative";
  if (edit.field === "p" && edit.value < 0) return "probability must be non-negative";
  if (typeof cell === "number") {
    if (edit.field === "p") return "crisp cells carry no probabilities";
    if (edit.entry !== 0) return "crisp cells hold a single value";
    return null;
  }
  if (edit.entry < 0 || edit.entry >= cell.length) {
    return `cell has no entry ${edit.entry}`;
  }
  if (!isPhfCell(cell) && edit.field === "p") {
    return "hesitant cells carry no probabilities";
  }
  return null;
}

/** Apply a validated edit, returning the updated document. */
export function applyEdit(document: ProblemDocument, edit: CellEdit): ProblemDocument {
  const problem = validateEdit(document, edit);
  if (problem !== null) {
    throw new Error(problem);
  }
  const next = structuredClone(document);
  const cell = next.assessments[edit.row][edit.column];
  if (typeof cell === "number") {
    next.assessments[edit.row][edit.column] = edit.value;
  } else if (isPhfCell(cell)) {
    cell[edit.entry][edit.field] = edit.value;
  } else {
    (cell as HfCell)[edit.entry] = edit.value;
  }
  return next;
}

/** True when any probabilistic cell blocks evaluation. */
export function hasBlockingCell(document: ProblemDocument): boolean {
  if (document.mode !== "phf") return false;
  for (const row of document.assessments) {
    for (const cell of row) {
      if (isPhfCell(cell) && massIndicator(cell).blocking) return true;
    }
  }
  for (const cell of document.weights) {
    if (isPhfCell(cell) && massIndicator(cell).blocking) return true;
  }
  return false;
}

/** The probability-free twin: keep every degree in place, drop the
 * probabilities. Matches the service-side strip operation. */
export function stripProbabilities(document: ProblemDocument): ProblemDocument {
  if (document.mode !== "phf") {
    throw new Error(`can only strip probabilities from a phf problem, got ${document.mode}`);
  }
  const strip = (cell: Cell): HfCell => (cell as PhfCell).map((entry) => entry.d);
  return {
    schema_version: document.schema_version,
    mode: "hf",
    alternatives: [...document.alternatives],
    criteria: document.criteria.map((c) => ({ ...c })),
    assessments: document.assessments.map((row) => row.map(strip)),
    weights: document.weights.map(strip),
    lambda: document.lambda,
  };
}
