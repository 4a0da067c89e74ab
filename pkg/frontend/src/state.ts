// ViewState: a pure projection of the last server response. No client-side
// matrix arithmetic; the scene, panels, badges, and target diffs are all
// derived functions of the ServerState the service returned.

import { diffAgainstTarget, EdgeDiff, highlightedKeys } from "./diff.js";
import { buildScene, Scene } from "./scene.js";
import { ServerState } from "./types.js";

export interface ViewState {
  sessionId: string;
  server: ServerState;
  scene: Scene;
  diffs: EdgeDiff[];
  targetMatched: boolean | null;
  history: string[];
  canUndo: boolean;
  layoutSeed: number;
  error: string | null;
}

export function fromServerState(state: ServerState, layoutSeed = 1): ViewState {
  const diffs = diffAgainstTarget(state.diagram.edges, state.target);
  return {
    sessionId: state.id,
    server: state,
    scene: buildScene(state.diagram, state.n, layoutSeed, 420, highlightedKeys(diffs)),
    diffs,
    targetMatched: state.target_matched,
    history: [...state.history],
    canUndo: state.history.length > 0,
    layoutSeed,
    error: null,
  };
}

// A failed request leaves the state untouched apart from the error banner.
export function withError(state: ViewState, message: string): ViewState {
  return { ...state, error: message };
}

export function clearError(state: ViewState): ViewState {
  return state.error === null ? state : { ...state, error: null };
}

// Valid move tokens for a rank-mu basis, in display order.
export function moveTokens(mu: number): string[] {
  const tokens: string[] = [];
  for (let j = 1; j < mu; j += 1) tokens.push(`a${j}`);
  for (let j = 2; j <= mu; j += 1) tokens.push(`b${j}`);
  for (let i = 1; i <= mu; i += 1) tokens.push(`k${i}`);
  return tokens;
}

// Weak-move token from two vertex clicks: the first selects the twisting
// cycle i, the second the rewritten slot j.
export function weakTokenFor(kind: "wa" | "wb", i: number, j: number): string | null {
  return i === j ? null : `${kind}${i}:${j}`;
}

export function isValidToken(token: string, mu: number): boolean {
  const plain = /^([abk])(\d+)$/.exec(token.trim());
  if (plain) {
    const index = Number(plain[2]);
    if (plain[1] === "a") return index >= 1 && index < mu;
    if (plain[1] === "b") return index >= 2 && index <= mu;
    return index >= 1 && index <= mu;
  }
  const weak = /^w([ab])(\d+):(\d+)$/.exec(token.trim());
  if (weak) {
    const i = Number(weak[2]);
    const j = Number(weak[3]);
    return i !== j && i >= 1 && i <= mu && j >= 1 && j <= mu;
  }
  return false;
}
