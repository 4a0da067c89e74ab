// Wire types for the vctk session service. Integers beyond 64 bits arrive
// as decimal strings and are never parsed into floats: the client does no
// arithmetic on matrix data, it only displays what the server sent.

export type WireInt = number | string;

export interface DiagramNode {
  id: number;
  label: string;
}

export interface DiagramEdge {
  a: number;
  b: number;
  weight: WireInt;
}

export interface DiagramPayload {
  nodes: DiagramNode[];
  edges: DiagramEdge[];
  charpoly: WireInt[];
  signature: number[] | null;
}

export interface MatrixPanels {
  intersection: WireInt[][];
  seifert: WireInt[][];
  monodromy: WireInt[][];
}

export interface TargetPayload {
  gram: WireInt[][];
}

export interface ServerState {
  id: string;
  n: number;
  mu: number;
  lattice: { n: number; gram: WireInt[][] };
  vectors: WireInt[][];
  history: string[];
  matrices: MatrixPanels;
  diagram: DiagramPayload;
  target?: TargetPayload;
  target_matched: boolean | null;
}

export interface MoveResponse {
  state: ServerState;
  diff: { vectors_changed: number[]; gram_changed: boolean };
}

export interface CreateResponse {
  id: string;
  diagram: DiagramPayload;
  matrices: MatrixPanels;
  state: ServerState;
}

// Sign of a wire integer without numeric conversion: safe for any length.
export function wireSign(value: WireInt): -1 | 0 | 1 {
  const text = typeof value === "number" ? value.toString() : value.trim();
  if (/^-0*$/.test(text) || /^0+$/.test(text) || text === "0") return 0;
  return text.startsWith("-") ? -1 : 1;
}

// Verbatim display text for a wire integer.
export function wireText(value: WireInt): string {
  return typeof value === "number" ? value.toString() : value;
}

// |weight| as a small count for parallel-edge rendering. Edge multiplicities
// are tiny in practice; anything unparseable renders as a single edge.
export function wireMagnitude(value: WireInt): number {
  const text = wireText(value).replace(/^-/, "");
  const parsed = Number(text);
  return Number.isSafeInteger(parsed) && parsed > 0 ? parsed : 1;
}
