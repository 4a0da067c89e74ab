"""Desk-scale brute-force orbit machinery.

Two independent routes to the set of distinguished bases of a definite
lattice are implemented and compared:

- enumerate over all root tuples whose ordered reflection product equals a
  prescribed Coxeter element and whose span is unimodular, with
  partial-product pruning by reflection length (rank of w - 1), and
- close a single seed basis under the slot moves a/b/k by breadth-first
  search with exact deduplication.

Tuples are deduplicated exactly, never up to isometry, so the search space
is the full set of bases, not its quotient. All budgets are explicit node
counts, never wall clock, so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import intmat
from .errors import InputError
from .intmat import IntMatrix
from .lattice import BilinearLattice, Cycle, as_cycle
from .moves import DistinguishedBasis, reflection_matrix, standard_moves


@dataclass(frozen=True)
class OrbitReport:
    """Result of closing a seed basis under the a/b/k moves."""

    seed: tuple[Cycle, ...]
    bases: frozenset[tuple[Cycle, ...]]
    diagrams: frozenset[IntMatrix]
    complete: bool
    explored: int
    budget: int

    @property
    def basis_count(self) -> int:
        return len(self.bases)

    @property
    def diagram_count(self) -> int:
        return len(self.diagrams)

    def to_json_dict(self) -> dict:
        return {
            "seed": [list(v) for v in self.seed],
            "basis_count": self.basis_count,
            "diagram_count": self.diagram_count,
            "complete": self.complete,
            "explored": self.explored,
            "budget": self.budget,
        }


def braid_orbit(basis: DistinguishedBasis, budget: int = 100_000) -> OrbitReport:
    """Breadth-first closure of a basis under all a, b, and k moves."""
    if budget < 1:
        raise InputError("budget must be positive")
    moves = standard_moves(basis.mu)
    seen: dict[tuple[Cycle, ...], DistinguishedBasis] = {basis.vectors: basis}
    diagrams = {basis.gram()}
    frontier = [basis]
    complete = True
    while frontier:
        next_frontier = []
        for b in frontier:
            for move in moves:
                image = b.apply_move(move)
                if image.vectors in seen:
                    continue
                if len(seen) >= budget:
                    complete = False
                    break
                seen[image.vectors] = image
                diagrams.add(image.gram())
                next_frontier.append(image)
            if not complete:
                break
        if not complete:
            break
        frontier = next_frontier
    return OrbitReport(
        seed=basis.vectors,
        bases=frozenset(seen),
        diagrams=frozenset(diagrams),
        complete=complete,
        explored=len(seen),
        budget=budget,
    )


def enumerate_bases(lattice: BilinearLattice, roots: Iterable[Sequence[int]],
                    coxeter: IntMatrix) -> frozenset[tuple[Cycle, ...]]:
    """All root tuples with unimodular span whose ordered reflection product
    (slot 1 applied first) equals the given isometry.

    Requires a definite lattice so that the root set is finite and the
    reflection length of any remaining factor equals rank(w - 1); prefixes
    whose remaining factor cannot be completed in the remaining number of
    reflections are pruned.
    """
    if not lattice.symmetric:
        raise InputError("base enumeration requires a symmetric lattice")
    npos, nzero, nneg = lattice.signature()
    if nzero or (npos and nneg):
        raise InputError("base enumeration requires a definite lattice")
    mu = lattice.rank
    root_list = [as_cycle(v, mu) for v in roots]
    coxeter = intmat.freeze(coxeter)
    gram = lattice.gram
    if intmat.mat_mul(intmat.transpose(coxeter), intmat.mat_mul(gram, coxeter)) != gram:
        raise InputError("target is not an isometry of the form")

    mats = {v: reflection_matrix(lattice, v) for v in root_list}
    ident = intmat.identity(mu)

    def deficiency(w: IntMatrix) -> int:
        return intmat.rank(intmat.mat_sub(w, ident))

    found: list[tuple[Cycle, ...]] = []
    prefix: list[Cycle] = []

    # remaining[k] = c * (M_1 ... M_k)^{-1} = c * M_1 ... M_k (involutions).
    def rec(remaining: IntMatrix):
        k = len(prefix)
        if k == mu:
            if remaining == ident and lattice.is_unimodular_span(prefix):
                found.append(tuple(prefix))
            return
        slots_left = mu - k
        need = deficiency(remaining)
        if need > slots_left or (slots_left - need) % 2 != 0:
            return
        for v in root_list:
            prefix.append(v)
            rec(intmat.mat_mul(remaining, mats[v]))
            prefix.pop()

    rec(coxeter)
    return frozenset(found)


@dataclass(frozen=True)
class DiagramStats:
    """Edge statistics over the distinct diagrams of an orbit."""

    complete: bool  # minima are exact only over a complete orbit
    diagram_count: int
    min_negative_edges: int
    min_monotone_feedback: int
    all_connected: bool

    def to_json_dict(self) -> dict:
        return {
            "complete": self.complete,
            "diagram_count": self.diagram_count,
            "min_negative_edges": self.min_negative_edges,
            "min_monotone_feedback": self.min_monotone_feedback,
            "all_connected": self.all_connected,
        }


def negative_edge_count(s: IntMatrix) -> int:
    """Edges of negative weight, counting weight w as |w| parallel edges."""
    mu = len(s)
    return sum(-s[i][j] for i in range(mu) for j in range(i + 1, mu) if s[i][j] < 0)


def monotone_cycles(s: IntMatrix) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All monotone cycles of the diagram, as tuples of edges.

    A monotone cycle visits vertices in increasing order and closes back
    from the largest to the smallest; in the simple-graph reading an edge
    exists wherever the pairing is nonzero.
    """
    mu = len(s)
    edges = {(i, j) for i in range(mu) for j in range(i + 1, mu) if s[i][j] != 0}
    cycles = []
    for size in range(3, mu + 1):
        for verts in combinations(range(mu), size):
            ring = list(zip(verts, verts[1:])) + [(verts[0], verts[-1])]
            if all(e in edges for e in ring):
                cycles.append(tuple(sorted(ring)))
    return tuple(cycles)


def monotone_feedback_number(s: IntMatrix) -> int:
    """Minimum number of edges to delete so no monotone cycle remains."""
    cycles = monotone_cycles(s)
    if not cycles:
        return 0
    involved = sorted({e for cyc in cycles for e in cyc})
    for size in range(1, len(involved) + 1):
        for removal in combinations(involved, size):
            gone = set(removal)
            if all(any(e in gone for e in cyc) for cyc in cycles):
                return size
    return len(involved)


def diagram_stats(report: OrbitReport, n: int = 2) -> DiagramStats:
    from .diagram import DiagramGraph

    neg = []
    feedback = []
    connected = True
    for s in report.diagrams:
        neg.append(negative_edge_count(s))
        feedback.append(monotone_feedback_number(s))
        connected = connected and DiagramGraph.from_intersection(s, n).is_connected()
    return DiagramStats(
        complete=report.complete,
        diagram_count=len(report.diagrams),
        min_negative_edges=min(neg),
        min_monotone_feedback=min(feedback),
        all_connected=connected,
    )


@dataclass(frozen=True)
class ProductClass:
    """One quasi-Coxeter element: an ordered product realized by some
    spanning root tuple."""

    matrix: IntMatrix
    element_order: int
    tuple_count: int
    braid_orbit_count: int

    def to_json_dict(self) -> dict:
        return {
            "element_order": self.element_order,
            "tuple_count": self.tuple_count,
            "braid_orbit_count": self.braid_orbit_count,
        }


@dataclass(frozen=True)
class QuasiCoxeterReport:
    spanning_tuple_count: int
    products: tuple[ProductClass, ...]
    conjugacy_class_count: int | None  # None when the closure group was capped
    budget_exceeded: bool

    def to_json_dict(self) -> dict:
        return {
            "spanning_tuple_count": self.spanning_tuple_count,
            "products": [p.to_json_dict() for p in self.products],
            "conjugacy_class_count": self.conjugacy_class_count,
            "budget_exceeded": self.budget_exceeded,
        }


def _matrix_order(m: IntMatrix, cap: int = 10_000) -> int:
    ident = intmat.identity(len(m))
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = intmat.mat_mul(power, m)
    raise ArithmeticError("matrix order exceeds cap")


def quasi_coxeter_survey(lattice: BilinearLattice, roots: Iterable[Sequence[int]],
                         budget: int = 1_000_000) -> QuasiCoxeterReport:
    """Classify ordered products over all spanning root tuples.

    Enumerates the spanning tuples (up to the budget), groups them by their
    ordered reflection product, counts braid-and-sign orbits inside each
    product class, and counts conjugacy classes of the products inside the
    full reflection group when that group is small enough to close.
    """
    if not lattice.symmetric:
        raise InputError("the survey requires a symmetric lattice")
    mu = lattice.rank
    root_list = [as_cycle(v, mu) for v in roots]
    mats = {v: reflection_matrix(lattice, v) for v in root_list}

    budget_exceeded = False
    by_product: dict[IntMatrix, set[tuple[Cycle, ...]]] = {}
    count = 0

    prefix: list[Cycle] = []

    def rec(product: IntMatrix):
        nonlocal count, budget_exceeded
        if budget_exceeded:
            return
        if len(prefix) == mu:
            if lattice.is_unimodular_span(prefix):
                count += 1
                if count > budget:
                    budget_exceeded = True
                    return
                by_product.setdefault(product, set()).add(tuple(prefix))
            return
        for v in root_list:
            prefix.append(v)
            rec(intmat.mat_mul(mats[v], product))  # slot 1 applied first
            prefix.pop()
            if budget_exceeded:
                return

    rec(intmat.identity(mu))

    moves = standard_moves(mu)
    classes = []
    for matrix, tuples in sorted(by_product.items()):
        orbit_count = 0
        unvisited = set(tuples)
        while unvisited:
            orbit_count += 1
            start = unvisited.pop()
            stack = [DistinguishedBasis(lattice, start, validate=False)]
            while stack:
                b = stack.pop()
                for move in moves:
                    image = b.apply_move(move)
                    if image.vectors in unvisited:
                        unvisited.remove(image.vectors)
                        stack.append(image)
        classes.append(
            ProductClass(
                matrix=matrix,
                element_order=_matrix_order(matrix),
                tuple_count=len(tuples),
                braid_orbit_count=orbit_count,
            )
        )

    conjugacy_classes: int | None = None
    if not budget_exceeded and by_product:
        group = _full_closure(lattice, root_list, cap=budget)
        if group is not None:
            remaining = set(by_product)
            conjugacy_classes = 0
            while remaining:
                c = remaining.pop()
                conjugacy_classes += 1
                for g in group:
                    image = intmat.mat_mul(g, intmat.mat_mul(c, intmat.inverse_unimodular(g)))
                    remaining.discard(image)
    return QuasiCoxeterReport(
        spanning_tuple_count=count,
        products=tuple(classes),
        conjugacy_class_count=conjugacy_classes,
        budget_exceeded=budget_exceeded,
    )


def _full_closure(lattice: BilinearLattice, roots: list[Cycle], cap: int) -> list[IntMatrix] | None:
    gens = [reflection_matrix(lattice, v) for v in roots]
    ident = intmat.identity(lattice.rank)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for m in gens:
                h = intmat.mat_mul(m, g)
                if h not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)
