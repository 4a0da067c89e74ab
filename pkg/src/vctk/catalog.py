"""Named lattices and diagrams, product constructions, and reference data.

The built-in entries are the classical A/D/E trees, the Pham complete
graphs, the Gabrielov presentation of E8, and the one- and two-point star
graphs T(p,q,r) and S(p,q,r). An entry is stored as an abstract signed
multigraph and realized at any requested fiber dimension n; the default
presentation is n = 2, where the diagonal is -2, solid edges carry +1 and
dashed edges -1.

Product constructions: suspension of an intersection matrix (adding squares
of new variables), the signed tensor product of Seifert matrices for sums
f(x) + g(y) of singularities in disjoint variables, the iterated tensor for
z_0^{a_0} + ... + z_n^{a_n}, and the conjectural Toeplitz Seifert matrix of
the weighted-homogeneous chain z_0^{a_0} + z_0 z_1^{a_1} + ... .
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from . import intmat
from .diagram import DiagramGraph, dashed_weight
from .errors import InputError
from .intmat import IntMatrix
from .lattice import BilinearLattice, vanishing_self_pairing
from .moves import DistinguishedBasis
from .polynomials import IntPoly
from .seifert import SeifertMatrix, intersection_from_seifert, monodromy_from_seifert


@dataclass(frozen=True)
class GraphSpec:
    """Abstract diagram: edges (a, b, count, dashed) with 1-based a < b."""

    size: int
    edges: tuple[tuple[int, int, int, bool], ...]

    def intersection_at(self, n: int) -> IntMatrix:
        w = dashed_weight(n)
        diag = vanishing_self_pairing(n)
        s = [[0] * self.size for _ in range(self.size)]
        for i in range(self.size):
            s[i][i] = diag
        for a, b, count, dashed in self.edges:
            value = count * (w if dashed else -w)
            s[a - 1][b - 1] = value
            s[b - 1][a - 1] = value if n % 2 == 0 else -value
        return intmat.freeze(s)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    basis: DistinguishedBasis
    provenance: str
    constants: dict

    @property
    def lattice(self) -> BilinearLattice:
        return self.basis.lattice

    @property
    def gram(self) -> IntMatrix:
        return self.lattice.gram

    def diagram(self) -> DiagramGraph:
        return DiagramGraph.from_intersection(self.gram, self.lattice.n)


def _path_edges(vertices: list[int]) -> list[tuple[int, int, int, bool]]:
    return [(min(a, b), max(a, b), 1, False) for a, b in zip(vertices, vertices[1:])]


def _a_standard(k: int) -> GraphSpec:
    return GraphSpec(k, tuple(_path_edges(list(range(1, k + 1)))))


def _a_pham(k: int) -> GraphSpec:
    edges = [(i, j, 1, True) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    return GraphSpec(k, tuple(edges))


def _d_standard(k: int) -> GraphSpec:
    edges = _path_edges(list(range(1, k)))  # path 1..k-1
    edges.append((k - 2, k, 1, False))  # fork at the (k-2)nd vertex
    return GraphSpec(k, tuple(edges))


_E_BRANCH = {6: 3, 7: 4, 8: 5}  # path 1..k-1 with vertex k attached here


def _e_standard(k: int) -> GraphSpec:
    edges = _path_edges(list(range(1, k)))
    edges.append((_E_BRANCH[k], k, 1, False))
    return GraphSpec(k, tuple(edges))


def _e8_gabrielov() -> GraphSpec:
    solid = [(2, 4), (4, 6), (6, 8), (1, 3), (3, 5), (5, 7),
             (1, 2), (3, 4), (5, 6), (7, 8)]
    dashed = [(1, 4), (3, 6), (5, 8)]
    edges = [(a, b, 1, False) for a, b in solid] + [(a, b, 1, True) for a, b in dashed]
    return GraphSpec(8, tuple(sorted(edges)))


def _star_arms(first_arm_vertex: int, lengths: tuple[int, int, int],
               centers: tuple[int, ...]) -> list[tuple[int, int, int, bool]]:
    """Arms of a star graph; each arm head is joined solidly to every center."""
    edges: list[tuple[int, int, int, bool]] = []
    v = first_arm_vertex
    for length in lengths:
        if length == 0:
            continue
        head = v
        for c in centers:
            edges.append((min(c, head), max(c, head), 1, False))
        edges.extend(_path_edges(list(range(head, head + length))))
        v += length
    return edges


def _t_graph(p: int, q: int, r: int) -> GraphSpec:
    # mu = p + q + r - 1: two centers joined by a double dashed edge, three
    # solid arms of lengths p-1, q-1, r-1 whose heads see both centers.
    edges = [(1, 2, 2, True)]
    edges += _star_arms(3, (p - 1, q - 1, r - 1), (1, 2))
    return GraphSpec(p + q + r - 1, tuple(sorted(edges)))


def _s_graph(p: int, q: int, r: int) -> GraphSpec:
    # mu = p + q + r: the T graph with one extra vertex hanging off center 2.
    edges = [(1, 2, 2, True), (2, 3, 1, False)]
    edges += _star_arms(4, (p - 1, q - 1, r - 1), (1, 2))
    return GraphSpec(p + q + r, tuple(sorted(edges)))


_NAME = re.compile(
    r"^(?:(A)(\d+)(?::(pham|standard))?|(D)(\d+)|(E)([678])(?::(gabrielov|standard))?"
    r"|(T|S)\((\d+),(\d+),(\d+)\))$"
)

ADE_NAMES = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
             "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8")
T_TRIPLES = ((3, 3, 3), (2, 4, 4), (2, 3, 6), (2, 3, 7), (2, 4, 5), (3, 3, 4))
S_TRIPLES = ((2, 3, 7), (2, 4, 5), (3, 3, 4))


def catalog_names() -> tuple[str, ...]:
    """The entries the verification suites sweep over."""
    return ADE_NAMES + tuple(f"T({p},{q},{r})" for p, q, r in T_TRIPLES) + tuple(
        f"S({p},{q},{r})" for p, q, r in S_TRIPLES
    )


def catalog_entry(name: str, n: int = 2) -> CatalogEntry:
    """Build a named entry at fiber dimension n (default n = 2)."""
    m = _NAME.match(name.strip())
    if not m:
        raise InputError(f"unknown catalog name {name!r}")
    if n < 0:
        raise InputError("fiber dimension n must be nonnegative")

    constants: dict = {}
    if m.group(1):  # A series
        k = int(m.group(2))
        if k < 1:
            raise InputError("A-series index must be at least 1")
        variant = m.group(3) or "standard"
        spec = _a_pham(k) if variant == "pham" else _a_standard(k)
        canonical = f"A{k}:{variant}"
        provenance = (
            "Pham basis for one-variable power singularities: complete graph, all dashed"
            if variant == "pham"
            else "classical A-series path diagram"
        )
        constants = {"coxeter_number": k + 1, "weyl_order": math.factorial(k + 1)}
    elif m.group(4):  # D series
        k = int(m.group(5))
        if k < 4:
            raise InputError("D-series index must be at least 4")
        spec = _d_standard(k)
        canonical = f"D{k}"
        provenance = "classical D-series tree, cross-checked via group order and Coxeter number"
        constants = {"coxeter_number": 2 * k - 2, "weyl_order": 2 ** (k - 1) * math.factorial(k)}
    elif m.group(6):  # E series
        k = int(m.group(7))
        variant = m.group(8) or "standard"
        if variant == "gabrielov":
            if k != 8:
                raise InputError("the Gabrielov presentation is built in for E8 only")
            spec = _e8_gabrielov()
            provenance = "Gabrielov diagram of E8: two solid 4-chains with rungs and three dashed diagonals"
        else:
            spec = _e_standard(k)
            provenance = "classical E-series tree diagram"
        canonical = f"E{k}:{variant}" if k == 8 else f"E{k}"
        constants = {
            "coxeter_number": {6: 12, 7: 18, 8: 30}[k],
            "weyl_order": {6: 51840, 7: 2903040, 8: 696729600}[k],
        }
    else:  # T or S star graphs
        kind = m.group(9)
        p, q, r = int(m.group(10)), int(m.group(11)), int(m.group(12))
        if not (2 <= p <= q <= r):
            raise InputError("star-graph triples need 2 <= p <= q <= r")
        spec = _t_graph(p, q, r) if kind == "T" else _s_graph(p, q, r)
        canonical = f"{kind}({p},{q},{r})"
        provenance = (
            "two-center star graph of the unimodal one-parameter families"
            if kind == "T"
            else "two-center star graph with a third center leaf (exceptional unimodal normal form)"
        )

    s = spec.intersection_at(n)
    lattice = BilinearLattice(n, s)
    basis = DistinguishedBasis.reference(lattice)
    entry = CatalogEntry(canonical, basis, provenance, constants)
    if not entry.diagram().is_connected():
        raise InputError(f"catalog diagram {canonical} is not connected")
    return entry


def stabilize(s: IntMatrix, n: int, m: int) -> IntMatrix:
    """Intersection matrix after adding m squares of fresh variables.

    Off-diagonal entries pick up sign(j-i)^m (-1)^((n+1)m + m(m-1)/2); the
    diagonal becomes the vanishing-cycle self-pairing at n + m. The result
    is a valid intersection matrix for parameter n + m.
    """
    from .seifert import validate_intersection

    if m < 0:
        raise InputError("stabilization adds a nonnegative number of variables")
    s = validate_intersection(s, n)
    mu = len(s)
    sign = (-1) ** (((n + 1) * m + m * (m - 1) // 2) % 2)
    diag = vanishing_self_pairing(n + m)
    flip = (-1) ** (m % 2)  # sign(j - i)^m for j < i
    out = [
        [
            diag if i == j else (sign * s[i][j] if i < j else sign * flip * s[i][j])
            for j in range(mu)
        ]
        for i in range(mu)
    ]
    return validate_intersection(intmat.freeze(out), n + m)


def tensor_seifert(lf: SeifertMatrix, lg: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix of f(x) + g(y) in disjoint variables.

    g lives in m = lg.n + 1 variables; the result is
    (-1)^((n+1)m) (L_f tensor L_g) in lexicographic basis order at parameter
    n + m. The mandated diagonal comes out automatically and is revalidated
    by the SeifertMatrix constructor.
    """
    m = lg.n + 1
    sign = (-1) ** (((lf.n + 1) * m) % 2)
    entries = intmat.mat_scale(sign, intmat.kron(lf.entries, lg.entries))
    return SeifertMatrix(lf.n + m, entries)


def pham_seifert(exponent: int) -> SeifertMatrix:
    """Seifert matrix of the one-variable singularity z^a: all -1, lower."""
    if exponent < 2:
        raise InputError("power-singularity exponent must be at least 2")
    k = exponent - 1
    return SeifertMatrix(0, tuple(tuple(-1 if j <= i else 0 for j in range(k)) for i in range(k)))


@dataclass(frozen=True)
class MatrixTriple:
    """Seifert matrix together with its derived intersection and monodromy."""

    seifert: SeifertMatrix

    @property
    def n(self) -> int:
        return self.seifert.n

    @property
    def mu(self) -> int:
        return self.seifert.mu

    @property
    def intersection(self) -> IntMatrix:
        return intersection_from_seifert(self.seifert)

    @property
    def monodromy(self) -> IntMatrix:
        return monodromy_from_seifert(self.seifert)


def brieskorn_pham(exponents: tuple[int, ...] | list[int]) -> MatrixTriple:
    """Iterated tensor Seifert matrix of z_0^{a_0} + ... + z_n^{a_n}."""
    a = tuple(int(x) for x in exponents)
    if not a:
        raise InputError("need at least one exponent")
    if any(x < 2 for x in a):
        raise InputError("exponents must be at least 2")
    l = pham_seifert(a[0])
    for x in a[1:]:
        l = tensor_seifert(l, pham_seifert(x))
    return MatrixTriple(l)


@dataclass(frozen=True)
class ToeplitzSeifert:
    """Conjectured Seifert data for the chain z_0^{a_0} + z_0 z_1^{a_1} + ...."""

    coefficients: tuple[int, ...]  # c_0 .. c_mu of the closed-form product
    seifert: SeifertMatrix


def orlik_randell(exponents: tuple[int, ...] | list[int]) -> ToeplitzSeifert:
    """Expand prod (t^{r_i} - 1)^((-1)^(n-i)) and build the Toeplitz matrix.

    r_k = a_0 a_1 ... a_k with r_{-1} = 1; the exact rational-function
    product always closes to a polynomial c_mu t^mu + ... + c_0 with
    mu = sum (-1)^(n-i) r_i, and the candidate Seifert matrix is
    -(-1)^(n(n+1)/2) times the lower-triangular Toeplitz matrix of the c_i.
    A nonzero remainder in the division signals an internal bug.
    """
    a = tuple(int(x) for x in exponents)
    if not a:
        raise InputError("need at least one exponent")
    if any(x < 2 for x in a):
        raise InputError("exponents must be at least 2")
    n = len(a) - 1
    radii = [1]
    for x in a:
        radii.append(radii[-1] * x)
    # radii[i + 1] = r_i in the usual indexing; exponent of (t^{r_i} - 1) is (-1)^(n - i).
    numerator = IntPoly.one()
    denominator = IntPoly.one()
    for i in range(-1, n + 1):
        factor = IntPoly(tuple([-1] + [0] * (radii[i + 1] - 1) + [1]))
        if (n - i) % 2 == 0:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    quotient, remainder = divmod(numerator, denominator)
    if not remainder.is_zero():
        raise ArithmeticError("closed-form product failed to divide exactly")
    mu = sum((-1) ** ((n - i) % 2) * radii[i + 1] for i in range(-1, n + 1))
    if quotient.degree() != mu:
        raise ArithmeticError("closed-form product has unexpected degree")
    c = quotient.coeffs
    sign = -((-1) ** ((n * (n + 1) // 2) % 2))
    entries = tuple(
        tuple(sign * c[i - j] if j <= i else 0 for j in range(mu)) for i in range(mu)
    )
    return ToeplitzSeifert(c, SeifertMatrix(n, entries))


_ADE = re.compile(r"^(A|D|E)(\d+)$")


def _ade_constants(type_name: str) -> tuple[int, int, int]:
    """(rank, coxeter number, group order) for an A/D/E type name."""
    m = _ADE.match(type_name.strip())
    if not m:
        raise InputError(f"unknown A/D/E type {type_name!r}")
    family, k = m.group(1), int(m.group(2))
    if family == "A" and k >= 1:
        return k, k + 1, math.factorial(k + 1)
    if family == "D" and k >= 4:
        return k, 2 * k - 2, 2 ** (k - 1) * math.factorial(k)
    if family == "E" and k in (6, 7, 8):
        return k, {6: 12, 7: 18, 8: 30}[k], {6: 51840, 7: 2903040, 8: 696729600}[k]
    raise InputError(f"unknown A/D/E type {type_name!r}")


def ll_degree(type_name: str) -> int:
    """Degree k! N^k / |W| of the critical-value covering, exactly."""
    k, coxeter_number, order = _ade_constants(type_name)
    numerator = math.factorial(k) * coxeter_number**k
    degree, remainder = divmod(numerator, order)
    if remainder:
        raise ArithmeticError("covering degree failed to divide exactly")
    return degree


@dataclass(frozen=True)
class StoredConstant:
    value: int
    provenance: str


def stored_constants() -> dict[str, StoredConstant]:
    table = {
        "D_count:E8": StoredConstant(
            2**8 * 3**4 * 5**6,
            "number of distinguished-basis diagrams of E8, 2^8 3^4 5^6; reference value, not enumerated",
        ),
    }
    for name in ADE_NAMES:
        _, coxeter_number, order = _ade_constants(name)
        table[f"weyl_order:{name}"] = StoredConstant(
            order, "classical reflection-group order; cross-checked by closure at small rank"
        )
        table[f"coxeter_number:{name}"] = StoredConstant(
            coxeter_number, "classical Coxeter number; equals the exact order of the standard Coxeter element"
        )
    return table


def stored_constant(name: str) -> int:
    table = stored_constants()
    if name not in table:
        raise InputError(f"unknown stored constant {name!r}")
    return table[name].value
