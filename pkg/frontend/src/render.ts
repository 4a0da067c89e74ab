// DOM rendering. Everything here is a dumb projection of ViewState; all
// decisions (styles, diffs, badges) were made in the pure modules.

import { charpolyText, historyText, matrixRows, signatureText } from "./format.js";
import { ViewState } from "./state.js";

const SVG = "http://www.w3.org/2000/svg";

export function renderScene(svg: SVGSVGElement, state: ViewState): void {
  const { scene } = state;
  svg.setAttribute("viewBox", `0 0 ${scene.size} ${scene.size}`);
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  for (const stroke of scene.strokes) {
    const line = document.createElementNS(SVG, "line");
    line.setAttribute("x1", String(stroke.x1));
    line.setAttribute("y1", String(stroke.y1));
    line.setAttribute("x2", String(stroke.x2));
    line.setAttribute("y2", String(stroke.y2));
    line.setAttribute("class", [
      "edge",
      stroke.dashed ? "dashed" : "solid",
      stroke.highlight ? "mismatch" : "",
    ].join(" ").trim());
    const title = document.createElementNS(SVG, "title");
    title.textContent = `<${stroke.a}, ${stroke.b}> = ${stroke.weightText}`;
    line.appendChild(title);
    svg.appendChild(line);
  }
  for (const node of scene.nodes) {
    const circle = document.createElementNS(SVG, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", "14");
    circle.setAttribute("class", "vertex");
    circle.setAttribute("data-vertex", String(node.id));
    svg.appendChild(circle);
    const text = document.createElementNS(SVG, "text");
    text.setAttribute("x", String(node.x));
    text.setAttribute("y", String(node.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.setAttribute("class", "vertex-label");
    text.textContent = node.label;
    svg.appendChild(text);
  }
}

export function renderMatrix(table: HTMLTableElement, rows: string[][]): void {
  table.replaceChildren();
  for (const row of rows) {
    const tr = document.createElement("tr");
    for (const cell of row) {
      const td = document.createElement("td");
      td.textContent = cell; // decimal strings shown verbatim
      tr.appendChild(td);
    }
    table.appendChild(tr);
  }
}

export function renderPanels(root: Document, state: ViewState): void {
  const matrices = state.server.matrices;
  renderMatrix(root.getElementById("matrix-s") as HTMLTableElement, matrixRows(matrices.intersection));
  renderMatrix(root.getElementById("matrix-l") as HTMLTableElement, matrixRows(matrices.seifert));
  renderMatrix(root.getElementById("matrix-h") as HTMLTableElement, matrixRows(matrices.monodromy));

  setText(root, "badge-charpoly", charpolyText(state.server.diagram.charpoly));
  setText(root, "badge-signature", signatureText(state.server.diagram.signature));
  setText(root, "badge-history", historyText(state.history) || "(empty)");

  const targetBadge = root.getElementById("badge-target");
  if (targetBadge) {
    if (state.targetMatched === null) {
      targetBadge.textContent = "no target";
      targetBadge.className = "badge";
    } else if (state.targetMatched) {
      targetBadge.textContent = "target matched";
      targetBadge.className = "badge ok";
    } else {
      targetBadge.textContent = `${state.diffs.length} edge(s) off target`;
      targetBadge.className = "badge off";
    }
  }

  const banner = root.getElementById("error-banner");
  if (banner) {
    banner.textContent = state.error ?? "";
    (banner as HTMLElement).style.display = state.error ? "block" : "none";
  }

  const undoButton = root.getElementById("undo") as HTMLButtonElement | null;
  if (undoButton) undoButton.disabled = !state.canUndo;
}

function setText(root: Document, id: string, text: string): void {
  const element = root.getElementById(id);
  if (element) element.textContent = text;
}
