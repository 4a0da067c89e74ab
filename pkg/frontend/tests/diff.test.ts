import { describe, expect, it } from "vitest";

import { diffAgainstTarget, highlightedKeys } from "../src/diff.js";
import { a2_pham_after_a1, a2_pham_initial } from "./golden.js";

describe("diffAgainstTarget", () => {
  it("flags the dashed edge of the Pham form against the standard target", () => {
    const diffs = diffAgainstTarget(a2_pham_initial.diagram.edges, a2_pham_initial.target);
    expect(diffs).toEqual([{ key: "1:2", current: "-1", target: "1" }]);
    expect(highlightedKeys(diffs)).toEqual(new Set(["1:2"]));
  });

  it("reports an exact match after the reducing move", () => {
    expect(diffAgainstTarget(a2_pham_after_a1.diagram.edges, a2_pham_after_a1.target)).toEqual([]);
  });

  it("is empty without a target", () => {
    expect(diffAgainstTarget(a2_pham_initial.diagram.edges, undefined)).toEqual([]);
  });

  it("sees edges missing on either side", () => {
    const target = { gram: [[-2, 0], [0, -2]] };
    const diffs = diffAgainstTarget([{ a: 1, b: 2, weight: 1 }], target);
    expect(diffs).toEqual([{ key: "1:2", current: "1", target: "0" }]);
    const other = diffAgainstTarget([], { gram: [[-2, 1], [1, -2]] });
    expect(other).toEqual([{ key: "1:2", current: "0", target: "1" }]);
  });

  it("compares oversized integers textually, never numerically", () => {
    const big = "123456789012345678901234567890";
    const target = { gram: [["-2", big], [big, "-2"]] };
    const same = diffAgainstTarget([{ a: 1, b: 2, weight: big }], target);
    expect(same).toEqual([]);
    const off = diffAgainstTarget([{ a: 1, b: 2, weight: big + "1" }], target);
    expect(off).toHaveLength(1);
  });
});
