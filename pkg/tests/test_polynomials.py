import random

import pytest

from vctk import intmat
from vctk.errors import InputError
from vctk.polynomials import IntPoly, char_poly, cyclotomic, cyclotomic_indices_up_to_degree, euler_phi


def test_arithmetic():
    p = IntPoly.of(1, 2)  # 2t + 1
    q = IntPoly.of(-1, 1)  # t - 1
    assert (p * q).coeffs == (-1, -1, 2)
    assert (p + q).coeffs == (0, 3)
    assert (p - q).coeffs == (2, 1)
    assert (-p).coeffs == (-1, -2)
    assert p(3) == 7
    assert IntPoly.of(0, 0).is_zero()
    assert IntPoly.of(1, 0, 0).degree() == 0


def test_divmod_exact_and_rejection():
    num = IntPoly.of(-1, 0, 0, 1)  # t^3 - 1
    den = IntPoly.of(-1, 1)  # t - 1
    q, r = divmod(num, den)
    assert q.coeffs == (1, 1, 1)
    assert r.is_zero()
    with pytest.raises(InputError):
        divmod(IntPoly.of(1, 1), IntPoly.of(0, 2))  # 1 not divisible by 2


def test_cyclotomic_values():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(3).coeffs == (1, 1, 1)
    assert cyclotomic(4).coeffs == (1, 0, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    # product over divisors reassembles t^n - 1
    for n in (6, 8, 12):
        prod = IntPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod.coeffs == tuple([-1] + [0] * (n - 1) + [1])


def test_euler_phi_and_index_scan():
    values = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 12: 4, 30: 8}
    for n, phi in values.items():
        assert euler_phi(n) == phi
    indices = cyclotomic_indices_up_to_degree(2)
    assert set(indices) == {1, 2, 3, 4, 6}


def test_char_poly_hand_values():
    assert char_poly(((-1, 1), (-1, 0))).coeffs == (1, 1, 1)  # t^2 + t + 1
    assert char_poly(((1, -1), (1, 0))).coeffs == (1, -1, 1)  # t^2 - t + 1
    assert char_poly(intmat.identity(3)).coeffs == (-1, 3, -3, 1)  # (t-1)^3
    assert char_poly(()).coeffs == (1,)


def test_char_poly_conjugation_invariant():
    from tests.test_intmat import random_unimodular

    rng = random.Random(11)
    for _ in range(20):
        k = rng.randint(1, 5)
        h = intmat.freeze([[rng.randint(-3, 3) for _ in range(k)] for _ in range(k)])
        p = random_unimodular(rng, k)
        conj = intmat.mat_mul(p, intmat.mat_mul(h, intmat.inverse_unimodular(p)))
        assert char_poly(h) == char_poly(conj)


def test_char_poly_matches_trace_and_det():
    rng = random.Random(12)
    for _ in range(20):
        k = rng.randint(1, 4)
        h = intmat.freeze([[rng.randint(-4, 4) for _ in range(k)] for _ in range(k)])
        p = char_poly(h)
        assert p.leading() == 1
        assert p.degree() == k
        trace = sum(h[i][i] for i in range(k))
        assert p.coeffs[k - 1] == -trace
        assert p.coeffs[0] == (-1) ** k * intmat.det(h)
