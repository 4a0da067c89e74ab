"""Exact conversions among intersection, Seifert, and monodromy matrices.

With respect to a distinguished basis the Seifert matrix L is lower
triangular with -(-1)^(n(n-1)/2) on the diagonal and unimodular, and it
pivots everything else:

    S = -L - (-1)^n L^t          (intersection matrix)
    H = (-1)^(n+1) L^{-1} L^t    (monodromy matrix)

Both directions are exact integer computations. The ordered-product matrix
from the triangular splitting (bourbaki_coxeter) is always the exact inverse
of H, which pins down the two composition conventions side by side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import intmat, jsonio
from .errors import InputError
from .intmat import IntMatrix
from .lattice import picard_lefschetz_sign, vanishing_self_pairing


@dataclass(frozen=True)
class SeifertMatrix:
    """Lower triangular unimodular integer matrix with mandated diagonal."""

    n: int
    entries: IntMatrix = field()

    def __post_init__(self):
        entries = intmat.freeze(self.entries)
        object.__setattr__(self, "entries", entries)
        if not intmat.is_square(entries):
            raise InputError("Seifert matrix must be square")
        if not intmat.is_lower_triangular(entries):
            raise InputError("Seifert matrix must be lower triangular")
        want = -picard_lefschetz_sign(self.n)
        for i in range(len(entries)):
            if entries[i][i] != want:
                raise InputError(
                    f"Seifert diagonal must be {want} at n={self.n}, "
                    f"found {entries[i][i]} at position {i + 1}"
                )

    @property
    def mu(self) -> int:
        return len(self.entries)

    def inverse(self) -> IntMatrix:
        return intmat.lower_triangular_inverse(self.entries)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "kind": "seifert", "entries": [list(r) for r in self.entries]}


def validate_intersection(s: IntMatrix, n: int) -> IntMatrix:
    """Check the parity symmetry and the vanishing-cycle diagonal of S."""
    s = intmat.freeze(s)
    if not intmat.is_square(s):
        raise InputError("intersection matrix must be square")
    diag = vanishing_self_pairing(n)
    for i in range(len(s)):
        if s[i][i] != diag:
            raise InputError(f"intersection diagonal must be {diag} at n={n}")
        for j in range(i + 1, len(s)):
            if n % 2 == 0 and s[i][j] != s[j][i]:
                raise InputError("intersection matrix must be symmetric (n even)")
            if n % 2 == 1 and s[i][j] != -s[j][i]:
                raise InputError("intersection matrix must be skew (n odd)")
    return s


def seifert_from_intersection(s: IntMatrix, n: int) -> SeifertMatrix:
    """The unique triangular solution L of S = -L - (-1)^n L^t."""
    s = validate_intersection(s, n)
    mu = len(s)
    diag = -picard_lefschetz_sign(n)
    entries = tuple(
        tuple(diag if i == j else (-s[i][j] if i > j else 0) for j in range(mu))
        for i in range(mu)
    )
    return SeifertMatrix(n, entries)


def intersection_from_seifert(l: SeifertMatrix) -> IntMatrix:
    lt = intmat.transpose(l.entries)
    sign = 1 if l.n % 2 == 0 else -1
    return intmat.mat_sub(intmat.mat_neg(l.entries), intmat.mat_scale(sign, lt))


def monodromy_from_seifert(l: SeifertMatrix) -> IntMatrix:
    h = intmat.mat_mul(l.inverse(), intmat.transpose(l.entries))
    return intmat.mat_scale((-1) ** (l.n + 1), h)


def seifert_from_monodromy(h: IntMatrix, n: int) -> SeifertMatrix:
    """Recover L from the monodromy matrix of a distinguished basis.

    Solves L H = (-1)^(n+1) L^t row by row: for each i the strictly lower
    unknowns of row i satisfy a square linear system over the leading
    (i-1) x (i-1) block of H. The solution must be unique, integral, and
    satisfy the full relation, otherwise H is not a distinguished-basis
    monodromy for this n.
    """
    h = intmat.freeze(h)
    if not intmat.is_square(h):
        raise InputError("monodromy matrix must be square")
    if abs(intmat.det(h)) != 1:
        raise InputError("monodromy matrix must be unimodular")
    mu = len(h)
    eps = picard_lefschetz_sign(n)
    sign = (-1) ** (n + 1)
    rows: list[list[int]] = []
    for i in range(mu):
        row = [0] * mu
        row[i] = -eps
        if i > 0:
            # sum_{k<i} L_ik H_kj = eps * H_ij  for all j < i
            block = tuple(tuple(h[k][j] for k in range(i)) for j in range(i))
            rhs = [Fraction(eps * h[i][j]) for j in range(i)]
            sol = intmat.solve_right(block, rhs)
            if sol is None:
                raise InputError("no unique Seifert matrix for this monodromy")
            for k, val in enumerate(sol):
                if val.denominator != 1:
                    raise InputError("Seifert solution is not integral")
                row[k] = int(val)
        rows.append(row)
    l = SeifertMatrix(n, intmat.freeze(rows))
    if intmat.mat_mul(l.entries, h) != intmat.mat_scale(sign, intmat.transpose(l.entries)):
        raise InputError("matrix is not the monodromy of a distinguished basis at this n")
    return l


def bourbaki_coxeter(s: IntMatrix, n: int) -> IntMatrix:
    """Ordered reflection product via the triangular splitting of the form.

    Sets a_ij = eps * S_ji so that the operators e_j -> e_j - a_ij e_i match
    the Picard-Lefschetz operators in both parities, splits A = U + V into
    the strictly upper part U and the rest V, and returns
    (I + U)^{-1} (I - V). This is exactly the inverse of
    monodromy_from_seifert(seifert_from_intersection(s, n)).
    """
    s = validate_intersection(s, n)
    mu = len(s)
    eps = picard_lefschetz_sign(n)
    a = tuple(tuple(eps * s[j][i] for j in range(mu)) for i in range(mu))
    i_plus_u = tuple(
        tuple((1 if i == j else 0) + (a[i][j] if i < j else 0) for j in range(mu))
        for i in range(mu)
    )
    i_minus_v = tuple(
        tuple((1 if i == j else 0) - (a[i][j] if i >= j else 0) for j in range(mu))
        for i in range(mu)
    )
    return intmat.mat_mul(intmat.inverse_unimodular(i_plus_u), i_minus_v)


def matrix_to_json_dict(kind: str, n: int, entries: IntMatrix) -> dict:
    if kind not in ("intersection", "seifert", "monodromy"):
        raise InputError(f"unknown matrix kind {kind!r}")
    return {"n": n, "kind": kind, "entries": [list(r) for r in entries]}


def matrix_from_json_dict(data: dict) -> tuple[str, int, IntMatrix]:
    if not isinstance(data, dict) or set(data) != {"n", "kind", "entries"}:
        raise InputError('matrix JSON must be {"n": int, "kind": str, "entries": [[int,...],...]}')
    kind = data["kind"]
    if kind not in ("intersection", "seifert", "monodromy"):
        raise InputError(f"unknown matrix kind {kind!r}")
    return kind, jsonio.as_int(data["n"]), jsonio.int_rows(data["entries"])
