// Verbatim display helpers. Matrix cells and polynomial coefficients pass
// through as the decimal text the server sent; the only transformations are
// typographic.

import { WireInt, wireSign, wireText } from "./types.js";

export function matrixRows(entries: WireInt[][]): string[][] {
  return entries.map((row) => row.map(wireText));
}

// Characteristic polynomial from coefficients, lowest degree first.
export function charpolyText(coeffs: WireInt[]): string {
  const parts: string[] = [];
  for (let degree = coeffs.length - 1; degree >= 0; degree -= 1) {
    const coeff = coeffs[degree]!;
    const sign = wireSign(coeff);
    if (sign === 0) continue;
    const magnitude = wireText(coeff).replace(/^-/, "");
    const variable = degree === 0 ? "" : degree === 1 ? "t" : `t^${degree}`;
    const body =
      variable === "" ? magnitude : magnitude === "1" ? variable : `${magnitude}${variable}`;
    if (parts.length === 0) {
      parts.push(sign < 0 ? `-${body}` : body);
    } else {
      parts.push(`${sign < 0 ? "-" : "+"} ${body}`);
    }
  }
  return parts.length ? parts.join(" ") : "0";
}

export function signatureText(signature: number[] | null): string {
  if (!signature) return "skew form (n odd)";
  const [plus, zero, minus] = signature;
  return `(${plus}, ${zero}, ${minus})`;
}

export function historyText(history: string[]): string {
  return history.join(" ");
}
