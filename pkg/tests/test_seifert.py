"""S/L/H conversions: hand-derived cases, round trips, and the splitting."""

import random

import pytest

from vctk import intmat
from vctk.catalog import catalog_entry
from vctk.errors import InputError
from vctk.moves import standard_moves
from vctk.seifert import (
    SeifertMatrix,
    bourbaki_coxeter,
    intersection_from_seifert,
    matrix_from_json_dict,
    matrix_to_json_dict,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
)


def test_seifert_from_intersection_hand_cases():
    assert seifert_from_intersection(((2,),), 0).entries == ((-1,),)
    assert seifert_from_intersection(((-2, 1), (1, -2)), 2).entries == ((1, 0), (-1, 1))
    assert seifert_from_intersection(((0, 1), (-1, 0)), 1).entries == ((-1, 0), (1, -1))


def test_intersection_from_seifert_round_trips():
    assert intersection_from_seifert(SeifertMatrix(0, ((-1,),))) == ((2,),)
    assert intersection_from_seifert(SeifertMatrix(2, ((1, 0), (-1, 1)))) == ((-2, 1), (1, -2))
    assert intersection_from_seifert(SeifertMatrix(1, ((-1, 0), (1, -1)))) == ((0, 1), (-1, 0))


def test_monodromy_hand_cases():
    assert monodromy_from_seifert(SeifertMatrix(0, ((-1,),))) == ((-1,),)
    assert monodromy_from_seifert(SeifertMatrix(2, ((1, 0), (-1, 1)))) == ((-1, 1), (-1, 0))
    h = monodromy_from_seifert(SeifertMatrix(1, ((-1, 0), (1, -1))))
    assert h == ((1, -1), (1, 0))
    from vctk.polynomials import char_poly

    assert char_poly(h).coeffs == (1, -1, 1)


def test_bourbaki_coxeter_hand_cases():
    assert bourbaki_coxeter(((-2, 1), (1, -2)), 2) == ((0, -1), (1, -1))
    assert bourbaki_coxeter(((0, 1), (-1, 0)), 1) == ((0, 1), (-1, 1))
    assert bourbaki_coxeter(((-2,),), 2) == ((-1,),)


def test_seifert_from_monodromy_hand_cases():
    assert seifert_from_monodromy(((-1, 1), (-1, 0)), 2).entries == ((1, 0), (-1, 1))
    assert seifert_from_monodromy(((1,),), 1).entries == ((-1,),)
    with pytest.raises(InputError):
        seifert_from_monodromy(((2,),), 0)  # not unimodular
    with pytest.raises(InputError):
        seifert_from_monodromy(intmat.identity(2), 2)  # identity is no monodromy


def test_validation_rejections():
    with pytest.raises(InputError):
        SeifertMatrix(2, ((1, 1), (0, 1)))  # not lower triangular
    with pytest.raises(InputError):
        SeifertMatrix(2, ((-1, 0), (0, -1)))  # wrong diagonal at n = 2
    with pytest.raises(InputError):
        seifert_from_intersection(((-2, 1), (2, -2)), 2)  # asymmetric
    with pytest.raises(InputError):
        seifert_from_intersection(((-4, 1), (1, -4)), 2)  # wrong diagonal


def orbit_samples(seed, count=40):
    rng = random.Random(seed)
    names = ("A2", "A3", "D4", "E8:gabrielov", "T(3,3,3)", "T(2,3,7)", "S(2,4,5)")
    for i in range(count):
        basis = catalog_entry(names[i % len(names)]).basis
        word = [rng.choice(standard_moves(basis.mu)) for _ in range(8)]
        yield basis.apply_word(word)


def test_round_trips_on_orbit_samples():
    for basis in orbit_samples(41):
        n = basis.lattice.n
        s = basis.gram()
        l = seifert_from_intersection(s, n)
        assert intersection_from_seifert(l) == s
        h = monodromy_from_seifert(l)
        assert seifert_from_monodromy(h, n).entries == l.entries
        assert intmat.mat_mul(intmat.transpose(h), intmat.mat_mul(s, h)) == s
        assert intmat.mat_mul(h, bourbaki_coxeter(s, n)) == intmat.identity(basis.mu)
        assert basis.coxeter_element() == h


def test_determinant_identities():
    # det L is +-1 always; det H is (-1)^mu for n even and +1 for n odd
    for basis in orbit_samples(42, count=15):
        s = basis.gram()
        l = seifert_from_intersection(s, basis.lattice.n)
        assert abs(intmat.det(l.entries)) == 1
        h = monodromy_from_seifert(l)
        assert intmat.det(h) == (-1) ** basis.mu
    from vctk.catalog import brieskorn_pham

    for a in ((2, 2), (3, 2), (4, 3), (2, 2, 2, 2)):
        triple = brieskorn_pham(a)
        if triple.n % 2 == 1:
            assert intmat.det(triple.monodromy) == 1


def test_splitting_inverse_at_scale():
    """H * C = I on every catalog matrix and 500 random orbit matrices."""
    from vctk.catalog import catalog_names

    rng = random.Random(43)
    def check(s, n, mu):
        l = seifert_from_intersection(s, n)
        h = monodromy_from_seifert(l)
        assert intmat.mat_mul(h, bourbaki_coxeter(s, n)) == intmat.identity(mu)

    for name in catalog_names():
        entry = catalog_entry(name)
        check(entry.gram, entry.lattice.n, entry.lattice.rank)
    seeds = [catalog_entry(n) for n in ("A2", "A3", "A4", "D4", "E6", "E8:gabrielov", "T(2,3,7)")]
    for i in range(500):
        basis = seeds[i % len(seeds)].basis
        word = [rng.choice(standard_moves(basis.mu)) for _ in range(6)]
        moved = basis.apply_word(word)
        check(moved.gram(), moved.lattice.n, moved.mu)


def test_matrix_json_round_trip():
    data = matrix_to_json_dict("seifert", 2, ((1, 0), (-1, 1)))
    kind, n, entries = matrix_from_json_dict(data)
    assert (kind, n, entries) == ("seifert", 2, ((1, 0), (-1, 1)))
    with pytest.raises(InputError):
        matrix_from_json_dict({"n": 2, "kind": "weird", "entries": [[1]]})
