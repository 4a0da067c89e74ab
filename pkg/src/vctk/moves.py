"""Distinguished bases and the braid-group, sign, and isometry actions.

An ordered tuple of mu vanishing cycles in a rank-mu lattice is a
distinguished basis when it spans the lattice unimodularly and every member
has the mandatory self-pairing. The slot moves act on such tuples:

- a<j>  swaps slots (j, j+1), twisting the right cycle through the left one,
- b<j>  is its inverse at slots (j-1, j),
- k<i>  flips the orientation of the cycle in slot i,
- wa<i>:<j>, wb<i>:<j> rewrite slot j in place through the slot-i cycle
  (the weak moves; numbering is irrelevant for weakly distinguished bases).

Indices always refer to current slot positions, not to cycle identities.
Words apply left to right. All values are immutable; every operation
returns a fresh basis.
"""

from __future__ import annotations

import re
from dataclasses import InitVar, dataclass
from typing import Iterable, Sequence

from . import intmat, jsonio
from .errors import InputError
from .intmat import IntMatrix
from .lattice import BilinearLattice, Cycle, as_cycle


@dataclass(frozen=True)
class Alpha:
    j: int

    def token(self) -> str:
        return f"a{self.j}"


@dataclass(frozen=True)
class Beta:
    j: int

    def token(self) -> str:
        return f"b{self.j}"


@dataclass(frozen=True)
class Kappa:
    i: int

    def token(self) -> str:
        return f"k{self.i}"


@dataclass(frozen=True)
class WeakAlpha:
    i: int
    j: int

    def token(self) -> str:
        return f"wa{self.i}:{self.j}"


@dataclass(frozen=True)
class WeakBeta:
    i: int
    j: int

    def token(self) -> str:
        return f"wb{self.i}:{self.j}"


Move = Alpha | Beta | Kappa | WeakAlpha | WeakBeta
BraidWord = tuple[Move, ...]

_TOKEN = re.compile(r"^(wa|wb|a|b|k)(\d+)(?::(\d+))?$")


def parse_word(text: str) -> BraidWord:
    """Parse a whitespace-separated move word such as "a1 b2 k3 wa1:2"."""
    moves: list[Move] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise InputError(f"unrecognized move token {tok!r}")
        kind, first, second = m.group(1), int(m.group(2)), m.group(3)
        if kind in ("a", "b", "k"):
            if second is not None:
                raise InputError(f"move token {tok!r} does not take two indices")
            moves.append({"a": Alpha, "b": Beta, "k": Kappa}[kind](first))
        else:
            if second is None:
                raise InputError(f"weak move {tok!r} needs two indices, like wa1:2")
            moves.append((WeakAlpha if kind == "wa" else WeakBeta)(first, int(second)))
    return tuple(moves)


def format_word(word: Iterable[Move]) -> str:
    return " ".join(m.token() for m in word)


def reflect(lattice: BilinearLattice, delta: Sequence[int], alpha: Sequence[int],
            inverse: bool = False) -> Cycle:
    """Picard-Lefschetz operator h_delta applied to alpha.

    h_delta(x) = x - eps * <x, delta> * delta with eps = (-1)^(n(n-1)/2);
    a reflection for n even (then an involution, so inverse = forward) and a
    symplectic transvection for n odd. The inverse swaps the pairing slots.
    """
    d = as_cycle(delta, lattice.rank)
    a = as_cycle(alpha, lattice.rank)
    if lattice.pairing(d, d) != lattice.self_pairing:
        raise InputError(
            f"reflection axis has self-pairing {lattice.pairing(d, d)}, "
            f"expected {lattice.self_pairing} at n={lattice.n}"
        )
    coef = lattice.pairing(d, a) if inverse else lattice.pairing(a, d)
    e = lattice.epsilon
    return tuple(x - e * coef * y for x, y in zip(a, d))


def reflection_matrix(lattice: BilinearLattice, delta: Sequence[int],
                      inverse: bool = False) -> IntMatrix:
    """Matrix of h_delta (columns are images of the reference basis)."""
    d = as_cycle(delta, lattice.rank)
    if lattice.pairing(d, d) != lattice.self_pairing:
        raise InputError("reflection axis fails the self-pairing requirement")
    gd = intmat.mat_vec(lattice.gram, d)
    e = lattice.epsilon
    k = lattice.rank
    if inverse and not lattice.symmetric:
        # h^{-1}(e_j) = e_j - eps <delta, e_j> delta = e_j + eps <e_j, delta> delta
        return tuple(
            tuple((1 if i == j else 0) + e * d[i] * gd[j] for j in range(k))
            for i in range(k)
        )
    return tuple(
        tuple((1 if i == j else 0) - e * d[i] * gd[j] for j in range(k))
        for i in range(k)
    )


@dataclass(frozen=True)
class DistinguishedBasis:
    """Ordered tuple of mu cycles spanning the lattice, acted on by moves.

    Construction validates the two defining invariants (mandatory
    self-pairings and unimodular span). The moves preserve both, being
    isometries composed with unimodular slot operations, so internally they
    skip revalidation; the braid property suites re-assert validity on
    sampled outputs.
    """

    lattice: BilinearLattice
    vectors: tuple[Cycle, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        vecs = tuple(as_cycle(v, self.lattice.rank) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not validate:
            return
        want = self.lattice.self_pairing
        for idx, v in enumerate(vecs):
            got = self.lattice.pairing(v, v)
            if got != want:
                raise InputError(
                    f"cycle {idx + 1} has self-pairing {got}, expected {want}"
                )
        if not self.lattice.is_unimodular_span(vecs):
            raise InputError("cycles do not span the lattice unimodularly")

    def revalidated(self) -> "DistinguishedBasis":
        """Re-run the constructor checks (used by the property suites)."""
        return DistinguishedBasis(self.lattice, self.vectors)

    @property
    def mu(self) -> int:
        return self.lattice.rank

    def gram(self) -> IntMatrix:
        """Intersection matrix of the tuple (the Coxeter-Dynkin diagram data)."""
        return self.lattice.gram_of(self.vectors)

    def apply_move(self, move: Move) -> "DistinguishedBasis":
        mu = self.mu
        vs = list(self.vectors)
        lat = self.lattice
        match move:
            case Alpha(j):
                if not 1 <= j <= mu - 1:
                    raise InputError(f"a{j} out of range for mu={mu}")
                vs[j - 1], vs[j] = reflect(lat, vs[j - 1], vs[j]), vs[j - 1]
            case Beta(j):
                if not 2 <= j <= mu:
                    raise InputError(f"b{j} out of range for mu={mu}")
                vs[j - 2], vs[j - 1] = vs[j - 1], reflect(lat, vs[j - 1], vs[j - 2], inverse=True)
            case Kappa(i):
                if not 1 <= i <= mu:
                    raise InputError(f"k{i} out of range for mu={mu}")
                vs[i - 1] = tuple(-x for x in vs[i - 1])
            case WeakAlpha(i, j):
                _check_weak(i, j, mu)
                vs[j - 1] = reflect(lat, vs[i - 1], vs[j - 1])
            case WeakBeta(i, j):
                _check_weak(i, j, mu)
                vs[j - 1] = reflect(lat, vs[i - 1], vs[j - 1], inverse=True)
            case _:
                raise InputError(f"unknown move {move!r}")
        return DistinguishedBasis(lat, tuple(vs), validate=False)

    def apply_word(self, word: Iterable[Move] | str) -> "DistinguishedBasis":
        if isinstance(word, str):
            word = parse_word(word)
        basis = self
        for move in word:
            basis = basis.apply_move(move)
        return basis

    def apply_isometry(self, h: IntMatrix) -> "DistinguishedBasis":
        """Map every cycle by a form-preserving unimodular matrix h."""
        h = intmat.freeze(h)
        g = self.lattice.gram
        if intmat.mat_mul(intmat.transpose(h), intmat.mat_mul(g, h)) != g:
            raise InputError("matrix does not preserve the bilinear form")
        if abs(intmat.det(h)) != 1:
            raise InputError("isometry must be unimodular")
        return DistinguishedBasis(
            self.lattice, tuple(intmat.mat_vec(h, v) for v in self.vectors),
            validate=False,
        )

    def coxeter_operator(self) -> IntMatrix:
        """Ordered product of the slot reflections, in reference coordinates.

        Matrices act on column coordinate vectors and the slot-1 operator is
        applied first, so this is M(mu) * ... * M(1). For even n the slot
        operators are involutions and this operator is invariant under every
        a/b/k move (conjugation rewrites the factors without changing the
        product); for odd n the move-invariant product is the reverse order,
        available as the exact inverse via the triangular splitting.
        """
        h = intmat.identity(self.mu)
        for v in self.vectors:
            h = intmat.mat_mul(reflection_matrix(self.lattice, v), h)
        return h

    def coordinate_matrix(self) -> IntMatrix:
        """Unimodular matrix whose columns are the tuple's cycles."""
        return intmat.transpose(intmat.freeze(self.vectors))

    def coxeter_element(self) -> IntMatrix:
        """The same ordered product, written in the tuple's own coordinates.

        Conjugating the reference-frame operator by the coordinate matrix
        gives the matrix of the composition with respect to (d_1, ..., d_mu)
        itself; slot 1 still acts first. In this frame the result coincides
        exactly (for n even) with the Seifert-route monodromy
        (-1)^(n+1) L^{-1} L^t of the tuple's intersection matrix, and the
        triangular-splitting product is its exact inverse. On the reference
        basis both frames agree; unlike the reference-frame operator, this
        matrix changes along a braid orbit whenever the diagram changes.
        """
        p = self.coordinate_matrix()
        return intmat.mat_mul(
            intmat.inverse_unimodular(p), intmat.mat_mul(self.coxeter_operator(), p)
        )

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json_dict(),
            "vectors": [list(v) for v in self.vectors],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "DistinguishedBasis":
        if not isinstance(data, dict) or set(data) != {"lattice", "vectors"}:
            raise InputError('basis JSON must be {"lattice": {...}, "vectors": [[int,...],...]}')
        lattice = BilinearLattice.from_json_dict(data["lattice"])
        return DistinguishedBasis(lattice, jsonio.int_rows(data["vectors"]))

    @staticmethod
    def reference(lattice: BilinearLattice) -> "DistinguishedBasis":
        """The reference-basis tuple (e_1, ..., e_mu)."""
        return DistinguishedBasis(lattice, intmat.identity(lattice.rank))


def _check_weak(i: int, j: int, mu: int) -> None:
    if not (1 <= i <= mu and 1 <= j <= mu):
        raise InputError(f"weak move indices ({i},{j}) out of range for mu={mu}")
    if i == j:
        raise InputError("weak moves need two distinct slots")


def standard_moves(mu: int) -> tuple[Move, ...]:
    """The generators used for orbit closures: all a, b, and k moves."""
    return tuple(
        [Alpha(j) for j in range(1, mu)]
        + [Beta(j) for j in range(2, mu + 1)]
        + [Kappa(i) for i in range(1, mu + 1)]
    )
