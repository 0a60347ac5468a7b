import { describe, expect, it } from "vitest";

import { fullPrecision, rankDelta, round2 } from "../src/format.js";

describe("round2", () => {
  it("drops trailing zeros on integers", () => {
    expect(round2(0)).toBe("0");
    expect(round2(1)).toBe("1");
    expect(round2(2.999)).toBe("3");
    expect(round2(-2.004)).toBe("-2");
  });

  it("keeps two decimals otherwise", () => {
    expect(round2(0.5)).toBe("0.50");
    expect(round2(0.4025375998233545)).toBe("0.40");
    expect(round2(0.34141969110113907)).toBe("0.34");
    expect(round2(-13.732)).toBe("-13.73");
  });

  it("never shows a negative zero", () => {
    expect(round2(-0.0001)).toBe("0");
  });
});

describe("fullPrecision", () => {
  it("prints the exact double", () => {
    expect(fullPrecision(0.4025375998233545)).toBe("0.4025375998233545");
    expect(fullPrecision(1)).toBe("1");
  });
});

describe("rankDelta", () => {
  it("signs movements and zeroes ties", () => {
    expect(rankDelta(1, 1)).toBe("0");
    expect(rankDelta(3, 1)).toBe("-2");
    expect(rankDelta(1, 3)).toBe("+2");
  });
});
