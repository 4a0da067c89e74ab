"""Reducing the Gabrielov presentation of E8 to the standard tree by moves.

The move word below rewrites the 13-edge Gabrielov diagram into the
standard E8 tree: seven left-shifts, three blocks of inverse shifts, and
three orientation flips. Run with: python demos/02_braid_moves_e8.py
"""

from vctk import catalog_entry

WORD = "a7 a6 a5 a4 a3 a2 a1 b5 b4 b7 b6 b5 b7 b6 b5 b8 b7 b6 k2 k7 k8"

gab = catalog_entry("E8:gabrielov")
std = catalog_entry("E8:standard")

print("start:  ", gab.diagram().solid_count(), "solid edges,",
      gab.diagram().dashed_count(), "dashed edges")

basis = gab.basis
for i, token in enumerate(WORD.split(), start=1):
    basis = basis.apply_word(token)
    diagram = basis.gram()
    solid = sum(1 for r in range(8) for c in range(r + 1, 8) if diagram[r][c] > 0)
    dashed = sum(1 for r in range(8) for c in range(r + 1, 8) if diagram[r][c] < 0)
    print(f"after {token:>3} ({i:2d}/21): {solid} solid, {dashed} dashed")

print("\nfinal equals the standard E8 matrix:", basis.gram() == std.gram)

# The ordered product of the slot reflections is untouched by every move
# when read as an operator on the ambient lattice:
print("operator invariant:", basis.coxeter_operator() == gab.basis.coxeter_operator())

# ... while the matrix taken in the tuple's own frame tracks the diagram and
# always matches the Seifert-route monodromy (see demo 03):
print("own-frame Coxeter element:", basis.coxeter_element())
