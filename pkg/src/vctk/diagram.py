"""Coxeter-Dynkin diagrams as signed multigraphs, with DOT emission.

The diagram of an intersection matrix has one numbered vertex per basis
cycle and |<d_i, d_j>| parallel edges between vertices i < j, each weighted
by the sign of the pairing. Whether a sign is drawn dashed depends on the
fiber dimension: the distinguished weight w(n) is dashed, -w(n) solid, with
w = (-1)^(n/2) for n even and (-1)^((n+1)/2) for n odd.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intmat
from .errors import InputError
from .intmat import IntMatrix


def dashed_weight(n: int) -> int:
    """The pairing sign rendered as a dashed edge at fiber dimension n."""
    if n % 2 == 0:
        return (-1) ** ((n // 2) % 2)
    return (-1) ** (((n + 1) // 2) % 2)


@dataclass(frozen=True)
class DiagramGraph:
    """Signed multigraph of an intersection matrix; vertices are 1..mu."""

    n: int
    size: int
    edges: tuple[tuple[int, int, int], ...]  # (a, b, weight) with a < b

    @staticmethod
    def from_intersection(s: IntMatrix, n: int) -> "DiagramGraph":
        s = intmat.freeze(s)
        if not intmat.is_square(s):
            raise InputError("intersection matrix must be square")
        mu = len(s)
        edges = tuple(
            (i + 1, j + 1, s[i][j])
            for i in range(mu)
            for j in range(i + 1, mu)
            if s[i][j] != 0
        )
        return DiagramGraph(n, mu, edges)

    def is_connected(self) -> bool:
        if self.size <= 1:
            return True
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.size + 1)}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {1}
        frontier = [1]
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == self.size

    def edge_styles(self) -> tuple[tuple[int, int, int, str], ...]:
        w = dashed_weight(self.n)
        return tuple(
            (a, b, weight, "dashed" if (1 if weight > 0 else -1) == w else "solid")
            for a, b, weight in self.edges
        )

    def solid_count(self) -> int:
        return sum(abs(w) for _, _, w, style in self.edge_styles() if style == "solid")

    def dashed_count(self) -> int:
        return sum(abs(w) for _, _, w, style in self.edge_styles() if style == "dashed")

    def to_dot(self, name: str = "diagram") -> str:
        """DOT text: |weight| parallel edges, dashed style per the sign rule."""
        lines = [f"graph {_dot_id(name)} {{"]
        for v in range(1, self.size + 1):
            lines.append(f'  {v} [label="{v}"];')
        for a, b, weight, style in self.edge_styles():
            attr = " [style=dashed]" if style == "dashed" else ""
            for _ in range(abs(weight)):
                lines.append(f"  {a} -- {b}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "nodes": [{"id": v, "label": str(v)} for v in range(1, self.size + 1)],
            "edges": [{"a": a, "b": b, "weight": w} for a, b, w in self.edges],
        }


def _dot_id(name: str) -> str:
    safe = "".join(c if c.isalnum() or c == "_" else "_" for c in name)
    return safe or "diagram"
