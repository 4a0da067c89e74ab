"""Two routes to all distinguished bases of a definite lattice.

Route one enumerates root tuples whose ordered reflection product is the
Coxeter element and whose span is unimodular; route two closes one seed
basis under the slot moves. At desk scale the two sets coincide, which is
the transitivity of the braid-and-sign action.
Run with: python demos/04_orbits_and_transitivity.py
"""

from vctk import (
    braid_orbit,
    catalog_entry,
    complete_roots,
    diagram_stats,
    enumerate_bases,
    quasi_coxeter_survey,
)

for name in ("A2", "A3"):
    entry = catalog_entry(name)
    roots = complete_roots(entry.lattice, -1)
    enumerated = enumerate_bases(entry.lattice, roots, entry.basis.coxeter_operator())
    orbit = braid_orbit(entry.basis, budget=10_000)
    print(f"{name}: {len(roots)} roots, {len(enumerated)} bases by enumeration, "
          f"{orbit.basis_count} by braid closure, equal: {enumerated == orbit.bases}")
    stats = diagram_stats(orbit)
    print(f"  distinct diagrams: {orbit.diagram_count}, "
          f"min negative edges: {stats.min_negative_edges}, "
          f"min monotone feedback: {stats.min_monotone_feedback}")

# Beyond the Coxeter element: group every spanning root tuple by its ordered
# product and count braid orbits inside each class.
a2 = catalog_entry("A2")
survey = quasi_coxeter_survey(a2.lattice, complete_roots(a2.lattice, -1))
print(f"\nA2 spanning pairs: {survey.spanning_tuple_count}")
for cls in survey.products:
    print(f"  product of order {cls.element_order}: {cls.tuple_count} tuples, "
          f"{cls.braid_orbit_count} braid orbit(s)")
print("conjugacy classes of products:", survey.conjugacy_class_count)

# An incomplete search is reported, never silently truncated.
e8 = catalog_entry("E8:gabrielov")
partial = braid_orbit(e8.basis, budget=2000)
print(f"\nE8 with budget {partial.budget}: complete={partial.complete}, "
      f"{partial.basis_count} bases, {partial.diagram_count} diagrams so far")
