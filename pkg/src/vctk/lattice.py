"""Integer lattices with a symmetric-even or skew-symmetric bilinear form.

A lattice of rank mu carries the Gram matrix of its reference basis and the
fiber-dimension parameter n: for n even the form is symmetric with even
diagonal, for n odd it is skew-symmetric. Cycles are plain integer coordinate
tuples in the reference basis; changing the reference basis is always an
explicit unimodular conjugation, never implicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from . import intmat, jsonio
from .errors import InputError
from .intmat import IntMatrix, IntVector

Cycle = IntVector


def as_cycle(v: Sequence[int], rank: int | None = None) -> Cycle:
    out = tuple(int(x) for x in v)
    if rank is not None and len(out) != rank:
        raise InputError(f"cycle has length {len(out)}, lattice rank is {rank}")
    return out


def picard_lefschetz_sign(n: int) -> int:
    """The sign (-1)^(n(n-1)/2) governing reflections and self-pairings."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def vanishing_self_pairing(n: int) -> int:
    """Self-pairing of a vanishing cycle: 0 for n odd, +-2 for n even."""
    return picard_lefschetz_sign(n) * (1 + (-1) ** (n % 2))


@dataclass(frozen=True)
class BilinearLattice:
    """Rank-mu integer lattice with a parity-constrained bilinear form."""

    n: int
    gram: IntMatrix = field()

    def __post_init__(self):
        gram = intmat.freeze(self.gram)
        object.__setattr__(self, "gram", gram)
        if self.n < 0:
            raise InputError("fiber dimension n must be nonnegative")
        if not intmat.is_square(gram):
            raise InputError("Gram matrix must be square")
        mu = len(gram)
        if self.n % 2 == 0:
            for i in range(mu):
                if gram[i][i] % 2 != 0:
                    raise InputError("symmetric lattice needs an even diagonal")
                for j in range(i + 1, mu):
                    if gram[i][j] != gram[j][i]:
                        raise InputError("Gram matrix is not symmetric (n even)")
        else:
            for i in range(mu):
                for j in range(i, mu):
                    if gram[i][j] != -gram[j][i]:
                        raise InputError("Gram matrix is not skew-symmetric (n odd)")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def symmetric(self) -> bool:
        return self.n % 2 == 0

    @property
    def epsilon(self) -> int:
        """(-1)^(n(n-1)/2), the sign in the reflection formula."""
        return picard_lefschetz_sign(self.n)

    @property
    def self_pairing(self) -> int:
        """Mandatory self-pairing of a vanishing cycle in this lattice."""
        return vanishing_self_pairing(self.n)

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        """<u, v> = u^t G v."""
        uu = as_cycle(u, self.rank)
        vv = as_cycle(v, self.rank)
        gv = intmat.mat_vec(self.gram, vv)
        return sum(a * b for a, b in zip(uu, gv))

    def gram_of(self, vs: Iterable[Sequence[int]]) -> IntMatrix:
        """Pairwise pairing matrix of a list of cycles."""
        tup = [as_cycle(v, self.rank) for v in vs]
        gvs = [intmat.mat_vec(self.gram, v) for v in tup]
        return tuple(
            tuple(sum(a * b for a, b in zip(u, gv)) for gv in gvs) for u in tup
        )

    def radical_basis(self) -> tuple[Cycle, ...]:
        """Primitive integer basis of {v : Gv = 0} (Smith normal form)."""
        return intmat.kernel_basis(self.gram)

    def signature(self) -> tuple[int, int, int]:
        """Inertia (n_plus, n_zero, n_minus) of the symmetric form, exactly."""
        if not self.symmetric:
            raise InputError("signature requires a symmetric lattice (n even)")
        return intmat.inertia(self.gram)

    def is_unimodular_span(self, vs: Sequence[Sequence[int]]) -> bool:
        """True iff mu cycles span the whole lattice over the integers."""
        if len(vs) != self.rank:
            raise InputError(f"need exactly {self.rank} cycles, got {len(vs)}")
        cols = intmat.transpose(intmat.freeze([as_cycle(v, self.rank) for v in vs]))
        factors = intmat.invariant_factors(cols)
        return len(factors) == self.rank and all(f == 1 for f in factors)

    def primitive_pairing(self, v: Sequence[int]) -> bool:
        """True iff <v, M> = Z, i.e. gcd of the entries of Gv is 1."""
        gv = intmat.mat_vec(self.gram, as_cycle(v, self.rank))
        g = 0
        for x in gv:
            g = gcd(g, x)
        return g == 1

    def conjugated(self, p: IntMatrix) -> "BilinearLattice":
        """Re-express the form in the reference basis transformed by p.

        p must be unimodular; the new Gram matrix is p^t G p. Cycles written
        in the new basis relate to old coordinates by v_old = p v_new.
        """
        p = intmat.freeze(p)
        if abs(intmat.det(p)) != 1:
            raise InputError("change of reference basis must be unimodular")
        return BilinearLattice(self.n, intmat.mat_mul(intmat.transpose(p), intmat.mat_mul(self.gram, p)))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "gram": [list(row) for row in self.gram]}

    @staticmethod
    def from_json_dict(data: dict) -> "BilinearLattice":
        if not isinstance(data, dict) or set(data) != {"n", "gram"}:
            raise InputError('lattice JSON must be {"n": int, "gram": [[int,...],...]}')
        return BilinearLattice(jsonio.as_int(data["n"]), jsonio.int_rows(data["gram"]))
