"""Spectral verdicts and reflection groups, all in exact arithmetic.

Run with: python demos/05_spectra_and_groups.py
"""

from vctk import (
    brieskorn_pham,
    catalog_entry,
    char_poly,
    complete_roots,
    group_closure,
    is_quasi_unipotent,
    ll_degree,
    orlik_randell,
    stored_constant,
    trace_checks,
    vanishing_lattice_check,
)
from vctk.intmat import identity
from vctk.seifert import monodromy_from_seifert

# Monodromy eigenvalues are roots of unity: characteristic polynomials
# factor into cyclotomics, found by exact trial division.
for a in ((3, 2), (3, 3), (4, 3, 2)):
    h = brieskorn_pham(a).monodromy
    p = char_poly(h)
    ok, factors = is_quasi_unipotent(p)
    print(f"exponents {a}: char poly {p}, cyclotomic indices {factors}")
    report = trace_checks(h, len(a) - 1, corank=sum(1 for x in a if x >= 3))
    print(f"  trace {report.trace} (expected {report.trace_expected}), "
          f"trace of square {report.trace_sq}")

# The conjectured Toeplitz Seifert matrix of a weighted-homogeneous chain
# passes the same spectral checks.
chain = orlik_randell((2, 3))
h = monodromy_from_seifert(chain.seifert)
print("\nchain (2,3): coefficients", chain.coefficients)
print("quasi-unipotent:", is_quasi_unipotent(char_poly(h))[0])

# Reflection-group closures with exact matrix hashing.
for name, expected in (("A3", 24), ("D4", 192)):
    lat = catalog_entry(name).lattice
    closure = group_closure(lat, identity(lat.rank))
    print(f"\n{name}: group order {closure.order} (expected {expected}), "
          f"root orbit sizes {set(closure.orbit_sizes)}")
    roots = complete_roots(lat, -1)
    print(f"  vanishing-lattice axioms: {vanishing_lattice_check(lat, roots, -1).ok}")

# Critical-value covering degrees, exact to the last digit.
print("\ncovering degrees:", {t: ll_degree(t) for t in ("A2", "A3", "D4", "E8")})
print("stored diagram count for E8:", stored_constant("D_count:E8"))
