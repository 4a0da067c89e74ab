"""Named self-verification suites, shared by the CLI and the test suite.

Each suite returns a SuiteReport whose checks carry a stable name, a pass
flag, and a one-line detail. Randomized suites are driven entirely by an
explicit seed, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import intmat
from .analysis import (
    complete_roots,
    group_closure,
    is_quasi_unipotent,
    trace_checks,
    vanishing_lattice_check,
)
from .catalog import (
    ADE_NAMES,
    brieskorn_pham,
    catalog_entry,
    catalog_names,
    pham_seifert,
    stabilize,
    tensor_seifert,
)
from .lattice import BilinearLattice
from .moves import Alpha, Beta, DistinguishedBasis, standard_moves
from .polynomials import char_poly
from .seifert import (
    bourbaki_coxeter,
    intersection_from_seifert,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
)

ORBIT_SEEDS = ("A2", "A3", "A4", "D4", "D5", "E6", "E8:standard", "E8:gabrielov",
               "T(3,3,3)", "T(2,3,7)", "S(2,3,7)")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_json_dict() for c in self.checks],
        }


def random_word(rng: random.Random, mu: int, length: int) -> list:
    moves = standard_moves(mu)
    return [rng.choice(moves) for _ in range(length)]


def sample_orbit_basis(rng: random.Random, name: str, length: int = 8) -> DistinguishedBasis:
    basis = catalog_entry(name).basis
    return basis.apply_word(random_word(rng, basis.mu, length))


def _tally(name: str, failures: list[str], total: int) -> Check:
    return Check(
        name=name,
        passed=not failures,
        detail=f"{total - len(failures)}/{total} ok" + (f"; first failure: {failures[0]}" if failures else ""),
    )


def suite_slh(count: int = 200, seed: int = 0) -> SuiteReport:
    """Round trips and cross-identities among S, L, H on orbit samples."""
    rng = random.Random(seed)
    names = ["s_roundtrip", "l_roundtrip", "form_preserved", "splitting_inverse", "coxeter_matches"]
    failures: dict[str, list[str]] = {k: [] for k in names}
    for i in range(count):
        name = ORBIT_SEEDS[i % len(ORBIT_SEEDS)]
        basis = sample_orbit_basis(rng, name)
        n = basis.lattice.n
        s = basis.gram()
        l = seifert_from_intersection(s, n)
        h = monodromy_from_seifert(l)
        tag = f"{name}#{i}"
        if intersection_from_seifert(l) != s:
            failures["s_roundtrip"].append(tag)
        if seifert_from_monodromy(h, n).entries != l.entries:
            failures["l_roundtrip"].append(tag)
        if intmat.mat_mul(intmat.transpose(h), intmat.mat_mul(s, h)) != s:
            failures["form_preserved"].append(tag)
        if intmat.mat_mul(h, bourbaki_coxeter(s, n)) != intmat.identity(basis.mu):
            failures["splitting_inverse"].append(tag)
        if basis.coxeter_element() != h:
            failures["coxeter_matches"].append(tag)
    checks = tuple(_tally(k, failures[k], count) for k in names)
    return SuiteReport("slh", seed, checks)


def suite_braid(count: int = 1000, seed: int = 0) -> SuiteReport:
    """Inverse-pair, Artin relations, operator invariance, invariant outputs."""
    rng = random.Random(seed)
    names = ["inverse_pair", "artin_length3", "artin_commute", "operator_invariant", "outputs_valid"]
    failures: dict[str, list[str]] = {k: [] for k in names}
    for i in range(count):
        name = ORBIT_SEEDS[i % len(ORBIT_SEEDS)]
        basis = sample_orbit_basis(rng, name, length=5)
        mu = basis.mu
        tag = f"{name}#{i}"
        j = rng.randrange(1, mu)
        if basis.apply_word([Alpha(j), Beta(j + 1)]).vectors != basis.vectors:
            failures["inverse_pair"].append(tag)
        elif basis.apply_word([Beta(j + 1), Alpha(j)]).vectors != basis.vectors:
            failures["inverse_pair"].append(tag)
        if mu >= 3:
            j = rng.randrange(1, mu - 1)
            lhs = basis.apply_word([Alpha(j), Alpha(j + 1), Alpha(j)])
            rhs = basis.apply_word([Alpha(j + 1), Alpha(j), Alpha(j + 1)])
            if lhs.vectors != rhs.vectors:
                failures["artin_length3"].append(tag)
        if mu >= 4:
            j = rng.randrange(1, mu - 2)
            k = rng.randrange(j + 2, mu)
            lhs = basis.apply_word([Alpha(j), Alpha(k)])
            rhs = basis.apply_word([Alpha(k), Alpha(j)])
            if lhs.vectors != rhs.vectors:
                failures["artin_commute"].append(tag)
        move = rng.choice(standard_moves(mu))
        moved = basis.apply_move(move)
        if moved.coxeter_operator() != basis.coxeter_operator():
            failures["operator_invariant"].append(tag)
        try:
            moved.revalidated()
        except Exception as exc:  # invariant violation is a failure, not an error
            failures["outputs_valid"].append(f"{tag}: {exc}")
    checks = tuple(_tally(k, failures[k], count) for k in names)
    return SuiteReport("braid", seed, checks)


def _bp_exponent_lists() -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for length in (1, 2, 3):
        def rec(prefix: tuple[int, ...]):
            if len(prefix) == length:
                out.append(prefix)
                return
            for a in (2, 3, 4):
                rec(prefix + (a,))
        rec(())
    return out


def suite_traces(seed: int = 0) -> SuiteReport:
    """Spectral checks: cyclotomic char polys and the trace identities."""
    checks: list[Check] = []
    bad_cyc: list[str] = []
    bad_tr: list[str] = []
    bad_tr2: list[str] = []
    exponent_lists = _bp_exponent_lists()
    for a in exponent_lists:
        triple = brieskorn_pham(a)
        h = triple.monodromy
        n = triple.n
        ok, _ = is_quasi_unipotent(char_poly(h))
        if not ok:
            bad_cyc.append(f"bp{a}")
        corank = sum(1 for x in a if x >= 3)
        report = trace_checks(h, n, corank=corank)
        if not report.trace_ok:
            bad_tr.append(f"bp{a}: tr={report.trace}")
        if report.trace_sq_ok is False:
            bad_tr2.append(f"bp{a}: tr_sq={report.trace_sq}")
    for name in catalog_names():
        basis = catalog_entry(name).basis
        h = basis.coxeter_element()
        ok, _ = is_quasi_unipotent(char_poly(h))
        if not ok:
            bad_cyc.append(name)
        report = trace_checks(h, basis.lattice.n)
        if not report.trace_ok:
            bad_tr.append(f"{name}: tr={report.trace}")
    total = len(exponent_lists) + len(catalog_names())
    checks.append(_tally("char_poly_cyclotomic", bad_cyc, total))
    checks.append(_tally("trace_sign", bad_tr, total))
    checks.append(_tally("trace_sq_corank", bad_tr2, len(exponent_lists)))
    return SuiteReport("traces", seed, tuple(checks))


TENSOR_PAIRS = (((2,), (2,)), ((3,), (2,)), ((3, 2), (2,)), ((3, 3), (2, 2)), ((4, 3), (3,)))


def suite_tensor(seed: int = 0) -> SuiteReport:
    """Monodromy of a sum of singularities is the tensor of the factors."""
    failures: list[str] = []
    for a, b in TENSOR_PAIRS:
        combined = brieskorn_pham(a + b).monodromy
        split = intmat.kron(brieskorn_pham(a).monodromy, brieskorn_pham(b).monodromy)
        if combined != split:
            failures.append(f"{a}+{b}")
    diag_failures: list[str] = []
    for a, b in TENSOR_PAIRS:
        try:
            tensor_seifert(brieskorn_pham(a).seifert, brieskorn_pham(b).seifert)
        except Exception as exc:
            diag_failures.append(f"{a}x{b}: {exc}")
    return SuiteReport("tensor", seed, (
        _tally("monodromy_tensor", failures, len(TENSOR_PAIRS)),
        _tally("tensor_diagonal_valid", diag_failures, len(TENSOR_PAIRS)),
    ))


def suite_stab(seed: int = 0) -> SuiteReport:
    """Suspension sign bookkeeping on the catalog matrices."""
    twice: list[str] = []
    period: list[str] = []
    cross: list[str] = []
    names = catalog_names()
    for name in names:
        s = catalog_entry(name).gram
        one_then_one = stabilize(stabilize(s, 2, 1), 3, 1)
        if one_then_one != stabilize(s, 2, 2):
            twice.append(name)
        four = stabilize(s, 2, 4)
        mu = len(s)
        if any(four[i][j] != s[i][j] for i in range(mu) for j in range(mu) if i != j):
            period.append(name)
    pham = catalog_entry("A2:pham", n=0).gram
    tensor_route = intersection_from_seifert(tensor_seifert(pham_seifert(3), pham_seifert(2)))
    if stabilize(pham, 0, 1) != tensor_route:
        cross.append("A2 suspension vs tensor")
    return SuiteReport("stab", seed, (
        _tally("one_twice_equals_two", twice, len(names)),
        _tally("four_fixes_offdiagonal", period, len(names)),
        _tally("suspension_matches_tensor", cross, 1),
    ))


PARABOLIC = ((3, 3, 3), (2, 4, 4), (2, 3, 6))
HYPERBOLIC_MINIMAL = ((2, 3, 7), (2, 4, 5), (3, 3, 4))


def suite_radicals(seed: int = 0) -> SuiteReport:
    """Signatures, radical ranks, and connectivity across the catalog."""
    ade_bad: list[str] = []
    for name in ADE_NAMES:
        lat = catalog_entry(name).lattice
        if lat.signature() != (0, 0, lat.rank):
            ade_bad.append(name)
    para_bad: list[str] = []
    for p, q, r in PARABOLIC:
        lat = catalog_entry(f"T({p},{q},{r})").lattice
        if len(lat.radical_basis()) != 2:
            para_bad.append(f"T({p},{q},{r})")
    hyp_bad: list[str] = []
    for p, q, r in HYPERBOLIC_MINIMAL:
        lat = catalog_entry(f"T({p},{q},{r})").lattice
        mu = lat.rank
        if lat.signature() != (1, 1, mu - 2):
            hyp_bad.append(f"T({p},{q},{r}): signature")
            continue
        radical = lat.radical_basis()
        delta_diff = tuple((-1 if i == 0 else 1 if i == 1 else 0) for i in range(mu))
        if len(radical) != 1 or radical[0] not in (delta_diff, tuple(-x for x in delta_diff)):
            hyp_bad.append(f"T({p},{q},{r}): radical span")
    conn_bad: list[str] = []
    for name in catalog_names():
        if not catalog_entry(name).diagram().is_connected():
            conn_bad.append(name)
    return SuiteReport("radicals", seed, (
        _tally("ade_negative_definite", ade_bad, len(ADE_NAMES)),
        _tally("parabolic_radical_rank_2", para_bad, len(PARABOLIC)),
        _tally("hyperbolic_signature_and_radical", hyp_bad, len(HYPERBOLIC_MINIMAL)),
        _tally("diagrams_connected", conn_bad, len(catalog_names())),
    ))


def suite_vanishing(seed: int = 0, max_a: int = 4) -> SuiteReport:
    """Reflection-group orders, root orbits, and the vanishing-lattice axioms."""
    import math

    order_bad: list[str] = []
    orbit_bad: list[str] = []
    axiom_bad: list[str] = []
    for k in range(1, max_a + 1):
        lat = catalog_entry(f"A{k}").lattice
        report = group_closure(lat, intmat.identity(k), cap=10 * math.factorial(k + 1))
        if report.order != math.factorial(k + 1):
            order_bad.append(f"A{k}: {report.order}")
        if k >= 2:
            roots = complete_roots(lat, -1)
            if any(size != len(roots) for size in report.orbit_sizes):
                orbit_bad.append(f"A{k}")
            if len(roots) != k * (k + 1):
                orbit_bad.append(f"A{k}: root count {len(roots)}")
            vl = vanishing_lattice_check(lat, roots, -1)
            if not vl.ok:
                axiom_bad.append(f"A{k}: {vl.failed}")
    d4 = catalog_entry("D4").lattice
    report = group_closure(d4, intmat.identity(4), cap=10000)
    if report.order != 192:
        order_bad.append(f"D4: {report.order}")
    if any(size != 24 for size in report.orbit_sizes):
        orbit_bad.append("D4")
    split = BilinearLattice(2, [[-2, 0], [0, -2]])
    vl = vanishing_lattice_check(split, [(1, 0), (-1, 0), (0, 1), (0, -1)], -1)
    if vl.ok or "unit_pair" not in vl.failed:
        axiom_bad.append(f"A1+A1: {vl.failed}")
    counts = max_a + 1
    return SuiteReport("vanishing", seed, (
        _tally("closure_orders", order_bad, counts),
        _tally("single_root_orbit", orbit_bad, counts),
        _tally("axioms", axiom_bad, max_a),
    ))


SUITES = {
    "slh": lambda count, seed: suite_slh(count=count, seed=seed),
    "braid": lambda count, seed: suite_braid(count=count, seed=seed),
    "traces": lambda count, seed: suite_traces(seed=seed),
    "tensor": lambda count, seed: suite_tensor(seed=seed),
    "stab": lambda count, seed: suite_stab(seed=seed),
    "radicals": lambda count, seed: suite_radicals(seed=seed),
    "vanishing": lambda count, seed: suite_vanishing(seed=seed),
}


def run_suite(name: str, count: int | None = None, seed: int = 0) -> SuiteReport:
    from .errors import InputError

    if name not in SUITES:
        raise InputError(f"unknown verification suite {name!r}; choose from {sorted(SUITES)}")
    defaults = {"slh": 200, "braid": 1000}
    effective = count if count is not None else defaults.get(name, 0)
    return SUITES[name](effective, seed)
