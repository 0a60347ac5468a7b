/** Display helpers: two-decimal panel values with full precision on hover. */

/** Two decimals, whole numbers bare, mirroring the service's table view. */
export function round2(value: number): string {
  const rounded = Math.round(value * 100) / 100;
  if (Number.isInteger(rounded)) {
    // Avoid the "-0" artifact for tiny negative values.
    return String(rounded === 0 ? 0 : rounded);
  }
  return rounded.toFixed(2);
}

/** The hover text: the exact value as the service sent it. */
export function fullPrecision(value: number): string {
  return String(value);
}

/** Signed rank movement between two scenarios ("0", "+2", "-1"). */
export function rankDelta(from: number, to: number): string {
  const delta = to - from;
  if (delta === 0) return "0";
  return delta > 0 ? `+${delta}` : String(delta);
}
