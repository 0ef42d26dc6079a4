import random
from fractions import Fraction

import pytest

from symtensor.exactnum import (CyclotomicNumber, Rational, cyclotomic_polynomial,
                                euler_phi, zeta)


def test_rational_is_reduced_with_positive_denominator():
    q = Rational(6, -4)
    assert q.numerator == -3 and q.denominator == 2
    assert Rational(0, 7) == Rational(0, 1)
    big = Rational(10**40, 3) * Rational(3, 10**40)
    assert big == 1


def test_cyclotomic_polynomial_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)          # x - 1
    assert cyclotomic_polynomial(4) == (1, 0, 1)        # x^2 + 1
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)  # x^4 - x^2 + 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 8, 12, 20])
def test_cyclotomic_product_identity(m):
    # prod_{d | m} Phi_d(x) == x^m - 1
    from symtensor import univar
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = univar.mul(prod, list(cyclotomic_polynomial(d)))
    want = [-1] + [0] * (m - 1) + [1]
    assert prod == want
    assert len(cyclotomic_polynomial(m)) - 1 == euler_phi(m)


def test_multiplication_examples():
    z4 = zeta(4)
    assert z4 * z4 == -1
    z8 = zeta(8)
    assert z8 * zeta(8, 7) == 1
    z3 = zeta(3)
    assert 1 + z3 + z3 ** 2 == 0


def test_inverse_examples():
    z8 = zeta(8)
    assert z8.inverse() == zeta(8, 7)
    two = CyclotomicNumber.from_rational(8, 2)
    assert two.inverse() == Fraction(1, 2)
    a = 1 + zeta(4)
    expected = (1 - zeta(4)) * Fraction(1, 2)
    assert a.inverse() == expected
    assert a * a.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(4).inverse()


def test_embed_examples():
    minus_one = CyclotomicNumber.from_rational(2, -1)
    assert minus_one.embed(8) == zeta(8, 4)
    assert zeta(4).embed(8) == zeta(8, 2)
    z3 = zeta(3)
    assert (z3 + z3 ** 2).embed(12) == CyclotomicNumber.from_rational(12, -1)
    with pytest.raises(ValueError):
        zeta(3).embed(8)


def test_to_rational():
    assert CyclotomicNumber.zero(8).to_rational() == 0
    s = zeta(8) + zeta(8, 7)
    assert (s * s).to_rational() == 2
    assert zeta(8).to_rational() is None
    # embedding preserves rationality in both directions
    assert CyclotomicNumber.from_rational(4, Fraction(3, 7)).embed(12).to_rational() == Fraction(3, 7)
    assert zeta(4).embed(12).to_rational() is None


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        zeta(4) * zeta(8)
    with pytest.raises(ValueError):
        zeta(4) + zeta(12)


@pytest.mark.parametrize("m", [1, 4, 8, 12, 20])
def test_root_of_unity_has_exact_order(m):
    z = zeta(m)
    for k in range(1, m):
        assert z ** k != 1, f"zeta_{m}^{k} should not be 1"
    assert z ** m == 1


def _random_cyclotomic(rng, m):
    phi = euler_phi(m)
    return CyclotomicNumber(
        m, tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(phi)))


@pytest.mark.parametrize("m", [1, 4, 8, 12, 20])
def test_field_axioms_on_random_samples(m):
    rng = random.Random(1000 + m)
    values = [_random_cyclotomic(rng, m) for _ in range(1000)]
    one = CyclotomicNumber.one(m)
    for i in range(0, len(values) - 2, 3):
        a, b, c = values[i], values[i + 1], values[i + 2]
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
    for a in values:
        if not a.is_zero:
            assert a * a.inverse() == one


@pytest.mark.parametrize("m,target", [(4, 8), (4, 12), (8, 24), (12, 24)])
def test_embed_is_a_ring_homomorphism(m, target):
    rng = random.Random(77 * m + target)
    for _ in range(50):
        a = _random_cyclotomic(rng, m)
        b = _random_cyclotomic(rng, m)
        assert (a * b).embed(target) == a.embed(target) * b.embed(target)
        assert (a + b).embed(target) == a.embed(target) + b.embed(target)


def test_pow_and_division():
    z = zeta(12)
    assert z ** -1 == z ** 11
    assert (z / z) == 1
    assert (1 / z) == z.inverse()
