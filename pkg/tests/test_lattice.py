"""Lattice core: pairings, Gram matrices, radicals, signatures, span tests.

The signature implementation (congruence diagonalization) is cross-checked
against an independent oracle: for a symmetric integer matrix the
characteristic polynomial is real-rooted, so Descartes' sign-change rule
counts its positive roots exactly, and trailing zero coefficients count the
kernel.
"""

import random

import pytest

from vctk import intmat
from vctk.errors import InputError
from vctk.lattice import BilinearLattice, vanishing_self_pairing
from vctk.polynomials import char_poly
from tests.test_intmat import random_unimodular

A2 = BilinearLattice(2, [[-2, 1], [1, -2]])
SKEW = BilinearLattice(1, [[0, 1], [-1, 0]])


def signature_descartes_oracle(gram):
    """(n+, n0, n-) from the characteristic polynomial, Descartes-exact."""
    coeffs = list(char_poly(gram).coeffs)
    n_zero = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        n_zero += 1
    signs = [c for c in coeffs if c != 0]
    n_pos = sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
    return n_pos, n_zero, len(gram) - n_zero - n_pos


def test_pairing_values():
    assert A2.pairing((1, 0), (1, 0)) == -2  # self-pairing at n = 2 mod 4
    assert A2.pairing((1, 0), (0, 1)) == 1
    assert SKEW.pairing((1, 0), (1, 0)) == 0  # skew forms are alternating
    assert SKEW.pairing((2, 3), (2, 3)) == 0


def test_pairing_dimension_mismatch():
    with pytest.raises(InputError):
        A2.pairing((1, 0, 0), (0, 1))


def test_gram_of():
    assert A2.gram_of([(1, 0), (0, 1)]) == A2.gram
    assert A2.gram_of([(1, 1), (1, 0)]) == ((-2, -1), (-1, -2))
    pham0 = BilinearLattice(0, [[2, 1], [1, 2]])
    assert pham0.gram_of([(1, 0), (0, 1)]) == ((2, 1), (1, 2))


def test_radical_basis():
    assert A2.radical_basis() == ()
    degenerate = BilinearLattice(2, [[-2, 2], [2, -2]])
    basis = degenerate.radical_basis()
    assert len(basis) == 1
    for v in basis:
        assert intmat.mat_vec(degenerate.gram, v) == (0, 0)


def test_signature_values_and_errors():
    assert A2.signature() == (0, 0, 2)
    with pytest.raises(InputError):
        SKEW.signature()


def test_signature_matches_descartes_oracle():
    rng = random.Random(21)
    for _ in range(40):
        k = rng.randint(1, 5)
        half = [[0] * k for _ in range(k)]
        for i in range(k):
            half[i][i] = 2 * rng.randint(-2, 2)
            for j in range(i + 1, k):
                half[i][j] = half[j][i] = rng.randint(-3, 3)
        lat = BilinearLattice(2, half)
        assert lat.signature() == signature_descartes_oracle(lat.gram)


def test_signature_invariant_under_reference_change():
    rng = random.Random(22)
    for _ in range(20):
        p = random_unimodular(rng, 3)
        lat = BilinearLattice(2, [[-2, 1, 0], [1, -2, 1], [0, 1, -2]])
        assert lat.conjugated(p).signature() == lat.signature()


def test_radical_vectors_are_primitive():
    """Radical basis vectors extend to a lattice basis (coordinate gcd 1)."""
    from math import gcd

    for gram in ([[0, 0], [0, -2]], [[-2, 2], [2, -2]], [[0, 0, 0], [0, -2, 2], [0, 2, -2]]):
        lat = BilinearLattice(2, gram)
        for v in lat.radical_basis():
            g = 0
            for x in v:
                g = gcd(g, x)
            assert g == 1


def test_radical_rank_plus_form_rank():
    rng = random.Random(23)
    for _ in range(20):
        k = rng.randint(1, 4)
        half = [[0] * k for _ in range(k)]
        for i in range(k):
            half[i][i] = 2 * rng.randint(-2, 2)
            for j in range(i + 1, k):
                half[i][j] = half[j][i] = rng.randint(-2, 2)
        lat = BilinearLattice(2, half)
        assert len(lat.radical_basis()) + intmat.rank(lat.gram) == k
        for v in lat.radical_basis():
            assert not lat.primitive_pairing(v)


def test_is_unimodular_span():
    assert A2.is_unimodular_span([(1, 0), (0, 1)])
    assert not A2.is_unimodular_span([(2, 0), (0, 1)])
    assert A2.is_unimodular_span([(1, 0), (1, 1)])
    with pytest.raises(InputError):
        A2.is_unimodular_span([(1, 0)])


def test_primitive_pairing():
    assert A2.primitive_pairing((1, 0))  # G e1 = (-2, 1)
    assert not A2.primitive_pairing((0, 0))
    a1 = BilinearLattice(2, [[-2]])
    assert not a1.primitive_pairing((1,))  # <v, M> = 2Z


def test_bilinearity_on_random_vectors():
    rng = random.Random(24)
    for lat in (A2, SKEW):
        for _ in range(30):
            u = tuple(rng.randint(-4, 4) for _ in range(2))
            v = tuple(rng.randint(-4, 4) for _ in range(2))
            w = tuple(rng.randint(-4, 4) for _ in range(2))
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            av_bw = tuple(a * x + b * y for x, y in zip(v, w))
            assert lat.pairing(u, av_bw) == a * lat.pairing(u, v) + b * lat.pairing(u, w)
            if lat.symmetric:
                assert lat.pairing(u, v) == lat.pairing(v, u)
            else:
                assert lat.pairing(u, v) == -lat.pairing(v, u)


def test_parity_validation():
    with pytest.raises(InputError):
        BilinearLattice(2, [[-2, 1], [0, -2]])  # not symmetric
    with pytest.raises(InputError):
        BilinearLattice(2, [[-1]])  # odd diagonal
    with pytest.raises(InputError):
        BilinearLattice(1, [[0, 1], [1, 0]])  # not skew
    with pytest.raises(InputError):
        BilinearLattice(-1, [[0]])


def test_self_pairing_table():
    assert vanishing_self_pairing(0) == 2
    assert vanishing_self_pairing(1) == 0
    assert vanishing_self_pairing(2) == -2
    assert vanishing_self_pairing(3) == 0
    assert vanishing_self_pairing(4) == 2
    assert vanishing_self_pairing(6) == -2


def test_json_round_trip():
    data = A2.to_json_dict()
    assert BilinearLattice.from_json_dict(data) == A2
    with pytest.raises(InputError):
        BilinearLattice.from_json_dict({"n": 2})
    with pytest.raises(InputError):
        BilinearLattice.from_json_dict({"n": 2, "gram": [[-2, 1], [1, -2]], "extra": 1})
