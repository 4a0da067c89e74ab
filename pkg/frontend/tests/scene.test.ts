import { describe, expect, it } from "vitest";

import { buildScene, dashedWeightSign, MalformedPayload } from "../src/scene.js";
import { DiagramPayload } from "../src/types.js";
import { a2_pham_initial, e8_gabrielov_initial, t237_diagram } from "./golden.js";

describe("dashed weight rule", () => {
  it("matches the fiber-dimension convention", () => {
    expect(dashedWeightSign(0)).toBe(1);
    expect(dashedWeightSign(2)).toBe(-1);
    expect(dashedWeightSign(4)).toBe(1);
    expect(dashedWeightSign(1)).toBe(-1);
    expect(dashedWeightSign(3)).toBe(1);
  });
});

describe("buildScene", () => {
  it("renders the complete-dashed A2 payload as one dashed stroke", () => {
    const scene = buildScene(a2_pham_initial.diagram, a2_pham_initial.n);
    expect(scene.nodes.map((n) => n.label)).toEqual(["1", "2"]);
    expect(scene.strokes).toHaveLength(1);
    expect(scene.strokes[0]!.dashed).toBe(true); // weight -1 at n = 2
    expect(scene.strokes[0]!.weightText).toBe("-1");
  });

  it("renders the Gabrielov E8 payload with 10 solid and 3 dashed strokes", () => {
    const scene = buildScene(e8_gabrielov_initial.diagram, e8_gabrielov_initial.n);
    expect(scene.nodes).toHaveLength(8);
    expect(scene.strokes.filter((s) => !s.dashed)).toHaveLength(10);
    expect(scene.strokes.filter((s) => s.dashed)).toHaveLength(3);
  });

  it("renders the double dashed central edge of T(2,3,7) as two parallel strokes", () => {
    const scene = buildScene(t237_diagram, 2);
    const central = scene.strokes.filter((s) => s.a === 1 && s.b === 2);
    expect(central).toHaveLength(2);
    expect(central.every((s) => s.dashed)).toBe(true);
    expect(new Set(central.map((s) => `${s.x1},${s.y1}`)).size).toBe(2); // offset apart
    const solid = scene.strokes.filter((s) => !s.dashed);
    expect(solid.length).toBe(t237_diagram.edges.length - 1); // all arms and center links
  });

  it("is deterministic for a fixed seed and varies with the seed", () => {
    const one = buildScene(t237_diagram, 2, 7);
    const two = buildScene(t237_diagram, 2, 7);
    expect(two).toEqual(one);
    const other = buildScene(t237_diagram, 2, 8);
    expect(other.nodes).not.toEqual(one.nodes);
  });

  it("marks highlighted edge pairs", () => {
    const scene = buildScene(a2_pham_initial.diagram, 2, 1, 420, new Set(["1:2"]));
    expect(scene.strokes[0]!.highlight).toBe(true);
  });

  it("rejects malformed payloads without partial output", () => {
    expect(() => buildScene({} as unknown as DiagramPayload, 2)).toThrow(MalformedPayload);
    const dangling: DiagramPayload = {
      nodes: [{ id: 1, label: "1" }],
      edges: [{ a: 1, b: 2, weight: 1 }],
      charpoly: [1],
      signature: null,
    };
    expect(() => buildScene(dangling, 2)).toThrow(MalformedPayload);
  });

  it("skips zero-weight pairs entirely", () => {
    const payload: DiagramPayload = {
      nodes: [{ id: 1, label: "1" }, { id: 2, label: "2" }],
      edges: [{ a: 1, b: 2, weight: 0 }],
      charpoly: [1],
      signature: null,
    };
    expect(buildScene(payload, 2).strokes).toHaveLength(0);
  });
});
