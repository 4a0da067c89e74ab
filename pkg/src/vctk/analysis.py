"""Spectral and arithmetic verdicts on monodromy matrices and lattices.

Everything here is exact: characteristic polynomials come from fraction-free
elimination, quasi-unipotence is decided by trial division against
cyclotomic polynomials, and reflection groups are closed by breadth-first
search over exactly hashed integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import intmat
from .errors import InputError
from .intmat import IntMatrix
from .lattice import BilinearLattice, Cycle, as_cycle
# char_poly is re-exported here: spectral verdicts are this module's surface.
from .polynomials import IntPoly, char_poly, cyclotomic, cyclotomic_indices_up_to_degree

__all__ = [
    "char_poly",
    "is_quasi_unipotent",
    "TraceReport",
    "trace_checks",
    "transvection_matrix",
    "VanishingLatticeReport",
    "vanishing_lattice_check",
    "certified_root_bound",
    "root_candidates",
    "complete_roots",
    "GroupClosureReport",
    "group_closure",
]


def is_quasi_unipotent(p: IntPoly) -> tuple[bool, tuple[int, ...]]:
    """Whether p is +- a product of cyclotomic polynomials.

    Returns the verdict together with the multiset of cyclotomic indices
    found by trial division (phi(d) <= deg p bounds the candidates). The
    input must be monic up to sign.
    """
    if p.is_zero():
        raise InputError("the zero polynomial is not monic up to sign")
    if p.leading() == -1:
        p = -p
    if p.leading() != 1:
        raise InputError("polynomial is not monic up to sign")
    factors: list[int] = []
    for d in cyclotomic_indices_up_to_degree(p.degree()):
        phi_d = cyclotomic(d)
        while p.degree() >= phi_d.degree() and phi_d.divides(p):
            p = p.exact_div(phi_d)
            factors.append(d)
    return p.degree() == 0, tuple(sorted(factors))


@dataclass(frozen=True)
class TraceReport:
    """Trace identities for a monodromy matrix at fiber dimension n.

    trace_expected is (-1)^(n+1), fixed by the rank-one desk case where the
    monodromy is [(-1)^(n+1)]; trace_expected_alt records the opposite sign
    convention (-1)^n seen in print, so both are always visible. The squared
    trace is compared against (-1)^corank only when n = 2 mod 4 and a corank
    is supplied.
    """

    trace: int
    trace_sq: int
    trace_expected: int
    trace_expected_alt: int
    trace_ok: bool
    corank: int | None
    trace_sq_expected: int | None
    trace_sq_ok: bool | None

    def to_json_dict(self) -> dict:
        return {
            "trace": self.trace,
            "trace_sq": self.trace_sq,
            "trace_expected": self.trace_expected,
            "trace_expected_alt": self.trace_expected_alt,
            "trace_ok": self.trace_ok,
            "corank": self.corank,
            "trace_sq_expected": self.trace_sq_expected,
            "trace_sq_ok": self.trace_sq_ok,
        }


def trace_checks(h: IntMatrix, n: int, corank: int | None = None) -> TraceReport:
    h = intmat.freeze(h)
    if not intmat.is_square(h):
        raise InputError("monodromy matrix must be square")
    if abs(intmat.det(h)) != 1:
        raise InputError("monodromy matrix must be unimodular")
    trace = sum(h[i][i] for i in range(len(h)))
    trace_sq = sum(
        sum(h[i][k] * h[k][i] for k in range(len(h))) for i in range(len(h))
    )
    expected = (-1) ** ((n + 1) % 2)
    alt = -expected
    sq_expected = None
    sq_ok = None
    if corank is not None and n % 4 == 2:
        sq_expected = (-1) ** (corank % 2)
        sq_ok = trace_sq == sq_expected
    return TraceReport(
        trace=trace,
        trace_sq=trace_sq,
        trace_expected=expected,
        trace_expected_alt=alt,
        trace_ok=trace == expected,
        corank=corank,
        trace_sq_expected=sq_expected,
        trace_sq_ok=sq_ok,
    )


def transvection_matrix(lattice: BilinearLattice, delta: Cycle, eps: int,
                        inverse: bool = False) -> IntMatrix:
    """Matrix of v -> v - eps <v, delta> delta (and its inverse)."""
    d = as_cycle(delta, lattice.rank)
    gd = intmat.mat_vec(lattice.gram, d)
    k = lattice.rank
    if inverse and not lattice.symmetric:
        return tuple(
            tuple((1 if i == j else 0) + eps * d[i] * gd[j] for j in range(k))
            for i in range(k)
        )
    return tuple(
        tuple((1 if i == j else 0) - eps * d[i] * gd[j] for j in range(k))
        for i in range(k)
    )


@dataclass(frozen=True)
class VanishingLatticeReport:
    ok: bool
    failed: tuple[str, ...]  # subset of ("generates", "single_orbit", "unit_pair")
    orbit_size: int
    set_size: int

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failed": list(self.failed),
            "orbit_size": self.orbit_size,
            "set_size": self.set_size,
        }


def vanishing_lattice_check(lattice: BilinearLattice, cycles: Iterable[Sequence[int]],
                            eps: int) -> VanishingLatticeReport:
    """Check the three vanishing-lattice axioms for a finite candidate set.

    (generates)    the set spans the whole lattice over the integers;
    (single_orbit) the set is one orbit of the group its reflections or
                   transvections generate, checked by closing one element
                   under the generators and their inverses;
    (unit_pair)    in rank > 1 some pair pairs to exactly 1.

    In the symmetric case every member must have self-pairing 2 eps, else
    the input is rejected outright.
    """
    if eps not in (1, -1):
        raise InputError("eps must be +1 or -1")
    members = tuple(as_cycle(v, lattice.rank) for v in cycles)
    if not members:
        raise InputError("the candidate set is empty")
    member_set = set(members)
    if lattice.symmetric:
        for v in members:
            if lattice.pairing(v, v) != 2 * eps:
                raise InputError(
                    f"self-pairing of {list(v)} is {lattice.pairing(v, v)}, expected {2 * eps}"
                )

    failed: list[str] = []

    cols = intmat.transpose(intmat.freeze(members))
    factors = intmat.invariant_factors(cols)
    if not (len(factors) == lattice.rank and all(f == 1 for f in factors)):
        failed.append("generates")

    mats = [transvection_matrix(lattice, d, eps) for d in member_set]
    if not lattice.symmetric:
        mats += [transvection_matrix(lattice, d, eps, inverse=True) for d in member_set]
    orbit = {members[0]}
    frontier = [members[0]]
    escaped = False
    while frontier and not escaped:
        v = frontier.pop()
        for m in mats:
            image = intmat.mat_vec(m, v)
            if image in orbit:
                continue
            if image not in member_set:
                escaped = True
                break
            orbit.add(image)
            frontier.append(image)
    if escaped or orbit != member_set:
        failed.append("single_orbit")

    if lattice.rank > 1:
        if not any(
            lattice.pairing(u, v) == 1 for u in member_set for v in member_set
        ):
            failed.append("unit_pair")

    return VanishingLatticeReport(
        ok=not failed,
        failed=tuple(failed),
        orbit_size=len(orbit),
        set_size=len(member_set),
    )


def certified_root_bound(lattice: BilinearLattice, eps: int) -> int | None:
    """Coordinate bound that provably contains every vector of norm 2 eps.

    Only available when eps * G is positive definite: then x^t Q x = 2 with
    Q = eps G forces x_i^2 <= 2 (Q^{-1})_{ii}. Returns None otherwise.
    """
    from fractions import Fraction

    if not lattice.symmetric:
        return None
    npos, nzero, nneg = lattice.signature()
    mu = lattice.rank
    if nzero or (eps == 1 and npos != mu) or (eps == -1 and nneg != mu):
        return None
    q = intmat.mat_scale(eps, lattice.gram)
    bound = 0
    for i in range(mu):
        e = [Fraction(0)] * mu
        e[i] = Fraction(1)
        col = intmat.solve_right(q, e)
        assert col is not None  # definite, hence invertible
        twice = 2 * col[i]
        # floor of sqrt of a nonnegative rational
        root = _isqrt_rational_floor(twice)
        bound = max(bound, root)
    return bound


def _isqrt_rational_floor(x) -> int:
    from math import isqrt

    if x < 0:
        return 0
    return isqrt((x.numerator * x.denominator)) // x.denominator if x.denominator != 1 else isqrt(x.numerator)


def root_candidates(lattice: BilinearLattice, eps: int, bound: int) -> frozenset[Cycle]:
    """All vectors with coordinates in [-bound, bound], norm 2 eps, and
    primitive pairing with the lattice."""
    if not lattice.symmetric:
        raise InputError("root enumeration requires a symmetric lattice")
    if eps not in (1, -1):
        raise InputError("eps must be +1 or -1")
    if bound < 0:
        raise InputError("bound must be nonnegative")
    mu = lattice.rank
    target = 2 * eps
    out: list[Cycle] = []
    coords = range(-bound, bound + 1)

    def rec(prefix: list[int]):
        if len(prefix) == mu:
            v = tuple(prefix)
            if lattice.pairing(v, v) == target and lattice.primitive_pairing(v):
                out.append(v)
            return
        for c in coords:
            prefix.append(c)
            rec(prefix)
            prefix.pop()

    rec([])
    return frozenset(out)


def complete_roots(lattice: BilinearLattice, eps: int) -> frozenset[Cycle]:
    """The full root-candidate set of a definite lattice, with certificate."""
    bound = certified_root_bound(lattice, eps)
    if bound is None:
        raise InputError("lattice is not definite; no finite certificate")
    return root_candidates(lattice, eps, bound)


@dataclass(frozen=True)
class GroupClosureReport:
    order: int | None  # None when the cap was exceeded
    cap_exceeded: bool
    orbit_sizes: tuple[int, ...]  # one per generator, same order as input
    generator_count: int

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "cap_exceeded": self.cap_exceeded,
            "orbit_sizes": list(self.orbit_sizes),
            "generator_count": self.generator_count,
        }


def group_closure(lattice: BilinearLattice, generators: Sequence[Sequence[int]],
                  cap: int = 1_000_000) -> GroupClosureReport:
    """Closure of the group generated by the reflections in the given cycles.

    Breadth-first multiplication over exactly hashed integer matrices; stops
    with cap_exceeded once more than cap distinct elements have been seen.
    Also reports the orbit size of each generating cycle under the group
    (capped by the same budget).
    """
    gens = [as_cycle(v, lattice.rank) for v in generators]
    eps = lattice.epsilon
    want = lattice.self_pairing
    for v in gens:
        if lattice.pairing(v, v) != want:
            raise InputError("generator fails the vanishing-cycle self-pairing")
    mats = [transvection_matrix(lattice, v, eps) for v in gens]
    if not lattice.symmetric:
        mats += [transvection_matrix(lattice, v, eps, inverse=True) for v in gens]

    identity = intmat.identity(lattice.rank)
    seen = {identity}
    frontier = [identity]
    cap_exceeded = False
    while frontier:
        next_frontier = []
        for g in frontier:
            for m in mats:
                h = intmat.mat_mul(m, g)
                if h not in seen:
                    seen.add(h)
                    next_frontier.append(h)
                    if len(seen) > cap:
                        cap_exceeded = True
                        break
            if cap_exceeded:
                break
        if cap_exceeded:
            break
        frontier = next_frontier

    orbit_sizes = []
    for v in gens:
        orbit = {v}
        stack = [v]
        while stack and len(orbit) <= cap:
            u = stack.pop()
            for m in mats:
                w = intmat.mat_vec(m, u)
                if w not in orbit:
                    orbit.add(w)
                    stack.append(w)
        orbit_sizes.append(len(orbit))

    return GroupClosureReport(
        order=None if cap_exceeded else len(seen),
        cap_exceeded=cap_exceeded,
        orbit_sizes=tuple(orbit_sizes),
        generator_count=len(gens),
    )
