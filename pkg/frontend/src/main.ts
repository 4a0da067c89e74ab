// Application wiring: session form, move buttons, undo, and re-rendering.
// The server is the single source of truth; every interaction is
// request -> new ServerState -> rebuild ViewState -> render.

import { ApiError, SessionClient } from "./api.js";
import { renderPanels, renderScene } from "./render.js";
import {
  clearError,
  fromServerState,
  isValidToken,
  moveTokens,
  ViewState,
  weakTokenFor,
  withError,
} from "./state.js";

let client: SessionClient | null = null;
let view: ViewState | null = null;
let selectedVertex: number | null = null;

function svg(): SVGSVGElement {
  return document.getElementById("diagram") as unknown as SVGSVGElement;
}

function render(): void {
  if (!view) return;
  renderScene(svg(), view);
  renderPanels(document, view);
  renderMoveButtons(view.server.mu);
  markSelection();
}

// Clicking one vertex picks the twisting cycle, clicking a second applies
// the weak move on that slot (wb with the inverse box checked).
function markSelection(): void {
  for (const circle of svg().querySelectorAll("circle[data-vertex]")) {
    const id = Number(circle.getAttribute("data-vertex"));
    circle.classList.toggle("selected", id === selectedVertex);
  }
}

function onVertexClick(id: number): void {
  if (selectedVertex === null || selectedVertex === id) {
    selectedVertex = selectedVertex === id ? null : id;
    markSelection();
    return;
  }
  const inverse = (document.getElementById("weak-inverse") as HTMLInputElement | null)?.checked;
  const token = weakTokenFor(inverse ? "wb" : "wa", selectedVertex, id);
  selectedVertex = null;
  if (token) void applyToken(token);
}

function renderMoveButtons(mu: number): void {
  const bar = document.getElementById("move-buttons");
  if (!bar) return;
  bar.replaceChildren();
  for (const token of moveTokens(mu)) {
    const button = document.createElement("button");
    button.textContent = token;
    button.addEventListener("click", () => void applyToken(token));
    bar.appendChild(button);
  }
}

async function applyToken(token: string): Promise<void> {
  if (!client || !view) return;
  if (!isValidToken(token, view.server.mu)) {
    view = withError(view, `invalid move token ${token} for rank ${view.server.mu}`);
    render();
    return;
  }
  try {
    const response = await client.applyMove(view.sessionId, token);
    view = fromServerState(response.state, view.layoutSeed);
  } catch (error) {
    view = withError(view, error instanceof ApiError ? error.message : String(error));
  }
  render();
}

async function undo(): Promise<void> {
  if (!client || !view || !view.canUndo) return;
  try {
    const state = await client.undo(view.sessionId);
    view = fromServerState(state, view.layoutSeed);
  } catch (error) {
    view = withError(view, error instanceof ApiError ? error.message : String(error));
  }
  render();
}

async function applyWord(): Promise<void> {
  if (!client || !view) return;
  const input = document.getElementById("word-input") as HTMLInputElement;
  const tokens = input.value.trim().split(/\s+/).filter(Boolean);
  for (const token of tokens) {
    await applyToken(token);
    if (view?.error) break; // stop on the first rejected token
  }
}

async function startSession(): Promise<void> {
  const base = (document.getElementById("base-url") as HTMLInputElement).value.replace(/\/$/, "");
  const name = (document.getElementById("catalog-name") as HTMLInputElement).value.trim();
  const target = (document.getElementById("target-name") as HTMLInputElement).value.trim();
  client = new SessionClient(base);
  try {
    const created = await client.createSession(
      target ? { catalog: name, target } : { catalog: name },
    );
    view = fromServerState(created.state);
  } catch (error) {
    const banner = document.getElementById("error-banner");
    if (banner) {
      banner.textContent = error instanceof ApiError ? error.message : String(error);
      (banner as HTMLElement).style.display = "block";
    }
    return;
  }
  view = clearError(view);
  render();
}

export function bind(): void {
  document.getElementById("start")?.addEventListener("click", () => void startSession());
  document.getElementById("undo")?.addEventListener("click", () => void undo());
  document.getElementById("apply-word")?.addEventListener("click", () => void applyWord());
  document.getElementById("diagram")?.addEventListener("click", (event) => {
    const target = event.target as Element | null;
    const id = target?.getAttribute?.("data-vertex");
    if (id) onVertexClick(Number(id));
  });
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  bind();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", bind);
}
