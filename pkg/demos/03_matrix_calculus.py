"""The exact triangle: intersection matrix S, Seifert matrix L, monodromy H.

L is lower triangular with a parity-mandated diagonal and pivots the two
conversions S = -L - (-1)^n L^t and H = (-1)^(n+1) L^{-1} L^t; the
triangular-splitting product is always the exact inverse of H.
Run with: python demos/03_matrix_calculus.py
"""

from vctk import (
    bourbaki_coxeter,
    brieskorn_pham,
    catalog_entry,
    intersection_from_seifert,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
    tensor_seifert,
    pham_seifert,
)
from vctk.intmat import identity, mat_mul

s = catalog_entry("A2").gram
print("S:", s)

l = seifert_from_intersection(s, 2)
print("L:", l.entries)
print("back to S:", intersection_from_seifert(l))

h = monodromy_from_seifert(l)
print("H:", h)
print("L recovered from H:", seifert_from_monodromy(h, 2).entries)

c = bourbaki_coxeter(s, 2)
print("splitting product C:", c)
print("H C = I:", mat_mul(h, c) == identity(2))

# Sums of singularities in disjoint variables tensor their Seifert matrices
# (with a parity sign) and their monodromies exactly.
cusp = brieskorn_pham((3, 2))  # z^3 + w^2 in two variables
print("\nz^3 + w^2: L =", cusp.seifert.entries)
print("monodromy:", cusp.monodromy)

suspended = tensor_seifert(pham_seifert(3), pham_seifert(2))
print("tensor route gives the same matrix:", suspended.entries == cusp.seifert.entries)
