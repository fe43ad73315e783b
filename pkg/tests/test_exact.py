from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcurves.exact import (
    QuadNum,
    check_discriminant,
    decompose_discriminant,
    divisors,
    euler_phi,
    is_discriminant,
    is_square,
    kronecker,
    mobius,
    mobius_weighted_sum,
    sigma,
)


def test_is_square():
    assert [n for n in range(1, 30) if is_square(n)] == [1, 4, 9, 16, 25]
    assert not is_square(-4)
    assert is_square(0)


def test_is_discriminant():
    good = [n for n in range(1, 22) if is_discriminant(n)]
    assert good == [1, 4, 5, 8, 9, 12, 13, 16, 17, 20, 21]
    assert not is_discriminant(7)
    assert not is_discriminant(-4)


def test_check_discriminant_message():
    with pytest.raises(ValueError, match="congruent to 0 or 1 mod 4"):
        check_discriminant(7)
    with pytest.raises(ValueError, match=">= 5"):
        check_discriminant(4, minimum=5)
    check_discriminant(5, minimum=5)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


def test_sigma_values():
    assert sigma(1, 6) == 12
    assert sigma(3, 4) == 73
    assert sigma(1, 1) == 1
    # constant terms of the two Eisenstein series
    assert sigma(1, 0) == Fraction(-1, 24)
    assert sigma(3, 0) == Fraction(1, 240)
    assert sigma(1, -3) == 0
    assert sigma(3, -8) == 0


def test_sigma_multiplicative():
    for m in (1, 3):
        assert sigma(m, 6) == sigma(m, 2) * sigma(m, 3)
        assert sigma(m, 35) == sigma(m, 5) * sigma(m, 7)


def test_mobius():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_euler_phi():
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_kronecker():
    assert [kronecker(5, r) for r in range(1, 6)] == [1, -1, -1, 1, 0]
    assert [kronecker(8, r) for r in range(1, 6)] == [1, 0, -1, 0, -1]
    assert all(kronecker(1, n) == 1 for n in range(1, 20))
    # completely multiplicative in the lower argument
    for a in (5, 13, 17):
        for m in range(1, 8):
            for n in range(1, 8):
                assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_decompose_discriminant():
    assert decompose_discriminant(5) == (5, 1)
    assert decompose_discriminant(8) == (8, 1)
    assert decompose_discriminant(12) == (12, 1)
    assert decompose_discriminant(17) == (17, 1)
    assert decompose_discriminant(20) == (5, 2)
    assert decompose_discriminant(45) == (5, 3)
    assert decompose_discriminant(48) == (12, 2)
    assert decompose_discriminant(4) == (1, 2)
    assert decompose_discriminant(9) == (1, 3)
    assert decompose_discriminant(25) == (1, 5)


def test_mobius_weighted_sum():
    # only squarefree divisors contribute
    assert mobius_weighted_sum(1, 4) == 1 - Fraction(1, 4)
    assert mobius_weighted_sum(5, 1) == 1
    assert mobius_weighted_sum(5, 2) == 1 - kronecker(5, 2) * Fraction(1, 4)


def test_quadnum_requires_discriminant():
    with pytest.raises(ValueError):
        QuadNum(7, 1, 1)
    with pytest.raises(ValueError):
        QuadNum(-4, 1, 1)


def test_quadnum_golden_ratio():
    lam = QuadNum(5, Fraction(1, 2), Fraction(1, 2))
    assert lam * lam == lam + 1
    assert lam.norm() == -1
    assert lam.trace() == 1
    assert lam.sign1() > 0
    assert lam.sign2() < 0
    assert lam.inverse() == lam - 1


def test_quadnum_sqrt_constructor():
    r = QuadNum.sqrt(8)
    assert r * r == 8
    assert r.norm() == -8
    assert (1 / r) * r == 1


def test_quadnum_rational_leniency():
    two = QuadNum(5, 2)
    assert two == 2
    assert two == Fraction(2)
    assert two == QuadNum(8, 2)
    assert two + QuadNum(8, 3) == 5
    assert hash(two) == hash(QuadNum(8, 2)) == hash(Fraction(2))


def test_quadnum_mixed_discriminants_rejected():
    x = QuadNum.sqrt(5)
    y = QuadNum.sqrt(8)
    with pytest.raises(ValueError):
        x + y
    with pytest.raises(ValueError):
        x * y
    assert x != y


def test_quadnum_arithmetic_with_scalars():
    x = QuadNum(13, Fraction(3, 2), Fraction(1, 2))
    assert 2 * x - x == x
    assert (x / 2) * 2 == x
    assert 1 + x - 1 == x
    assert Fraction(1, 3) * x * 3 == x
    assert -x + x == 0
    assert not (x - x)


def test_quadnum_pow():
    x = QuadNum(5, 1, 1)
    assert x ** 0 == 1
    assert x ** 3 == x * x * x
    assert x ** -2 == (x * x).inverse()


def test_quadnum_galois_conjugate():
    x = QuadNum(17, Fraction(2), Fraction(3, 5))
    assert x.galois_conjugate().galois_conjugate() == x
    assert x * x.galois_conjugate() == x.norm()
    assert x + x.galois_conjugate() == x.trace()


def test_quadnum_square_discriminant_embeddings():
    x = QuadNum(9, 1, 1)
    assert x.embed1() == 4
    assert x.embed2() == -2
    assert x.norm() == -8
    assert x.sign1() > 0 and x.sign2() < 0
    with pytest.raises(ValueError):
        QuadNum.sqrt(5).embed1()


def test_quadnum_zero_divisor():
    x = QuadNum(9, 3, 1)
    y = x.galois_conjugate()
    assert x * y == 0
    assert x != 0 and y != 0
    assert x.norm() == 0
    with pytest.raises(ZeroDivisionError):
        x.inverse()


def test_quadnum_str():
    assert str(QuadNum(17, Fraction(221, 24), Fraction(1, 8))) == "221/24 + 1/8*sqrt(17)"
    assert str(QuadNum(17, Fraction(221, 24), Fraction(-1, 8))) == "221/24 - 1/8*sqrt(17)"
    assert str(QuadNum(5, 0, 1)) == "1*sqrt(5)"
    assert str(QuadNum(5, 0, -1)) == "-1*sqrt(5)"
    assert str(QuadNum(5, Fraction(25, 3))) == "25/3"
    assert str(QuadNum(5, 0)) == "0"


def test_quadnum_json_round_trip():
    x = QuadNum(17, Fraction(3, 2), Fraction(-1, 2))
    assert QuadNum.from_json(x.to_json()) == x
    assert x.to_json() == {"rat": "3/2", "rad": "-1/2", "disc": 17}


_rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
_discs = st.sampled_from([5, 8, 12, 13, 17, 44, 173])


@settings(max_examples=200, deadline=None)
@given(_rationals, _rationals, _rationals, _rationals, _discs)
def test_norm_is_multiplicative(p, q, r, s, disc):
    x = QuadNum(disc, p, q)
    y = QuadNum(disc, r, s)
    assert (x * y).norm() == x.norm() * y.norm()


@settings(max_examples=200, deadline=None)
@given(_rationals, _rationals, _rationals, _rationals, _discs)
def test_conjugation_is_a_ring_map(p, q, r, s, disc):
    x = QuadNum(disc, p, q)
    y = QuadNum(disc, r, s)
    assert (x * y).galois_conjugate() == x.galois_conjugate() * y.galois_conjugate()
    assert (x + y).galois_conjugate() == x.galois_conjugate() + y.galois_conjugate()


@settings(max_examples=200, deadline=None)
@given(_rationals, _rationals, _discs)
def test_inverse_left_and_right(p, q, disc):
    x = QuadNum(disc, p, q)
    if x.norm() == 0:
        return
    assert x * x.inverse() == 1
    assert x.inverse() * x == 1
    assert 1 / x == x.inverse()


@settings(max_examples=150, deadline=None)
@given(_rationals, _rationals, _discs)
def test_sign_matches_real_embedding(p, q, disc):
    import math

    x = QuadNum(disc, p, q)
    approx = p + q * math.sqrt(disc)
    if abs(approx) > 1e-6:
        assert x.sign1() == (1 if approx > 0 else -1)
