// Target overlay: which edge pairs differ between the current diagram and
// the target intersection matrix. Comparison is textual on the wire values,
// so arbitrarily large entries compare exactly without any arithmetic.

import { DiagramEdge, TargetPayload, WireInt, wireText } from "./types.js";

export interface EdgeDiff {
  key: string; // "a:b" with a < b
  current: string; // "0" when the edge is absent
  target: string;
}

function edgeKey(a: number, b: number): string {
  return a < b ? `${a}:${b}` : `${b}:${a}`;
}

function normalize(value: WireInt): string {
  const text = wireText(value);
  return /^-?0+$/.test(text) ? "0" : text;
}

export function diffAgainstTarget(
  edges: DiagramEdge[],
  target: TargetPayload | undefined,
): EdgeDiff[] {
  if (!target) return [];
  const current = new Map<string, string>();
  for (const edge of edges) {
    current.set(edgeKey(edge.a, edge.b), normalize(edge.weight));
  }
  const diffs: EdgeDiff[] = [];
  const mu = target.gram.length;
  for (let i = 0; i < mu; i += 1) {
    const row = target.gram[i]!;
    for (let j = i + 1; j < mu; j += 1) {
      const key = edgeKey(i + 1, j + 1);
      const want = normalize(row[j]!);
      const have = current.get(key) ?? "0";
      if (want !== have) {
        diffs.push({ key, current: have, target: want });
      }
      current.delete(key);
    }
  }
  // edges present now but outside the target rank (should not happen when
  // ranks agree, but surface them rather than hide them)
  for (const [key, have] of current) {
    if (have !== "0") diffs.push({ key, current: have, target: "0" });
  }
  return diffs.sort((x, y) => (x.key < y.key ? -1 : x.key > y.key ? 1 : 0));
}

export function highlightedKeys(diffs: EdgeDiff[]): Set<string> {
  return new Set(diffs.map((d) => d.key));
}
