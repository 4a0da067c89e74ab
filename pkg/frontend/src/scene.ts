// Scene construction: a pure function from a server diagram payload to
// drawable primitives. |weight| parallel strokes per edge pair, dashed
// styling by the sign convention at fiber dimension n (the same rule the
// server uses for DOT output); no arithmetic on matrix entries beyond
// reading the sign and a small magnitude.

import { circularLayout, Point } from "./layout.js";
import { DiagramPayload, wireMagnitude, wireSign, wireText } from "./types.js";

export interface SceneNode {
  id: number;
  label: string;
  x: number;
  y: number;
}

export interface SceneStroke {
  a: number;
  b: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  dashed: boolean;
  weightText: string;
  highlight: boolean;
}

export interface Scene {
  nodes: SceneNode[];
  strokes: SceneStroke[];
  size: number;
}

export class MalformedPayload extends Error {}

// The pairing sign a dashed edge represents at fiber dimension n.
export function dashedWeightSign(n: number): -1 | 1 {
  const exponent = n % 2 === 0 ? (n / 2) % 2 : ((n + 1) / 2) % 2;
  return exponent === 0 ? 1 : -1;
}

const STROKE_SPACING = 7;

export function buildScene(
  payload: DiagramPayload,
  n: number,
  seed = 1,
  size = 420,
  highlighted: ReadonlySet<string> = new Set(),
): Scene {
  if (!payload || !Array.isArray(payload.nodes) || !Array.isArray(payload.edges)) {
    throw new MalformedPayload("diagram payload must carry nodes and edges");
  }
  const ids = payload.nodes.map((node) => node.id);
  if (ids.some((id) => typeof id !== "number")) {
    throw new MalformedPayload("node ids must be integers");
  }
  const positions = new Map<number, Point>();
  circularLayout(ids.length, seed, size).forEach((point, index) => {
    positions.set(ids[index]!, point);
  });

  const nodes: SceneNode[] = payload.nodes.map((node) => {
    const at = positions.get(node.id)!;
    return { id: node.id, label: node.label, x: at.x, y: at.y };
  });

  const dashedSign = dashedWeightSign(n);
  const strokes: SceneStroke[] = [];
  for (const edge of payload.edges) {
    const from = positions.get(edge.a);
    const to = positions.get(edge.b);
    if (!from || !to) {
      throw new MalformedPayload(`edge (${edge.a}, ${edge.b}) references a missing node`);
    }
    const sign = wireSign(edge.weight);
    if (sign === 0) continue; // zero pairings carry no edge
    const count = wireMagnitude(edge.weight);
    const length = Math.hypot(to.x - from.x, to.y - from.y) || 1;
    const normalX = -(to.y - from.y) / length;
    const normalY = (to.x - from.x) / length;
    for (let i = 0; i < count; i += 1) {
      const offset = (i - (count - 1) / 2) * STROKE_SPACING;
      strokes.push({
        a: edge.a,
        b: edge.b,
        x1: Math.round(100 * (from.x + normalX * offset)) / 100,
        y1: Math.round(100 * (from.y + normalY * offset)) / 100,
        x2: Math.round(100 * (to.x + normalX * offset)) / 100,
        y2: Math.round(100 * (to.y + normalY * offset)) / 100,
        dashed: sign === dashedSign,
        weightText: wireText(edge.weight),
        highlight: highlighted.has(`${edge.a}:${edge.b}`),
      });
    }
  }
  return { nodes, strokes, size };
}
