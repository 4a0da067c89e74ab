"""Tour of the built-in lattices and their Coxeter-Dynkin diagrams.

Run with: python demos/01_lattices_and_diagrams.py
"""

from vctk import catalog_entry, catalog_names

# Every entry is realized at a fiber dimension n; the default n = 2
# presentation has diagonal -2, solid edges +1, dashed edges -1.
a2 = catalog_entry("A2")
print("A2 intersection matrix:", a2.gram)
print("A2 signature (n+, n0, n-):", a2.lattice.signature())

# The Pham basis of a one-variable power singularity is a complete graph
# with only dashed edges; at n = 0 the pairings are all +1.
pham = catalog_entry("A4:pham", n=0)
print("\nA4 Pham pairings at n = 0:")
for row in pham.gram:
    print("  ", row)

# The one-parameter star families: parabolic triples carry a rank-2 radical,
# hyperbolic triples a rank-1 radical spanned by the difference of the two
# central cycles.
for name in ("T(3,3,3)", "T(2,3,7)"):
    entry = catalog_entry(name)
    print(f"\n{name}: rank {entry.lattice.rank}")
    print("  signature:", entry.lattice.signature())
    print("  radical:  ", entry.lattice.radical_basis())

# Diagrams render to DOT; dashed styling tracks the sign convention at n.
print("\nGabrielov presentation of E8 as DOT:")
print(catalog_entry("E8:gabrielov").diagram().to_dot("e8_gabrielov"))

print("catalog sweep:", ", ".join(catalog_names()))
