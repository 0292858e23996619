import random
from fractions import Fraction
from math import factorial

import pytest

from harmonic_sums.exact import (
    Polynomial,
    binomial,
    binomial_row,
    forward_difference_n,
    lemma11_lhs,
    lemma11_rhs,
    poly_eval,
)


def test_binomial_boundary_and_out_of_range():
    assert binomial(5, 0) == 1
    assert binomial(4, 2) == 6  # 4*3/2
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_row_matches_binomial():
    for n in range(0, 60):
        row = binomial_row(n)
        assert len(row) == n + 1
        assert row == [binomial(n, k) for k in range(n + 1)]
    with pytest.raises(ValueError):
        binomial_row(-2)


def test_pascal_rule_up_to_200():
    for n in range(1, 201):
        row_n = binomial_row(n)
        row_n1 = binomial_row(n + 1)
        for k in range(1, n + 1):
            assert row_n1[k] == row_n[k] + row_n[k - 1]


def test_absorption_rule_up_to_200():
    for n in range(1, 201):
        row_n = binomial_row(n)
        row_n1 = binomial_row(n + 1)
        for k in range(1, n + 1):
            assert k * row_n1[k] == (n + 1) * row_n[k - 1]


def test_polynomial_trims_trailing_zeros():
    p = Polynomial((Fraction(1), Fraction(2), Fraction(0), Fraction(0)))
    assert p.coefficients == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert p.leading_coefficient == 2


def test_zero_polynomial_degree_is_none():
    z = Polynomial(())
    assert z.degree is None
    assert z.coefficients == ()
    assert z.leading_coefficient == 0
    also_zero = Polynomial((Fraction(0), Fraction(0)))
    assert also_zero.degree is None


def test_poly_eval_examples():
    t_squared = Polynomial((Fraction(0), Fraction(0), Fraction(1)))
    assert poly_eval(t_squared, Fraction(3)) == 9
    assert poly_eval(Polynomial(()), Fraction(7, 2)) == 0
    p = Polynomial((Fraction(1), Fraction(2)))
    assert poly_eval(p, Fraction(1, 2)) == 2
    assert p(Fraction(1, 2)) == 2


def test_forward_difference_power_examples():
    assert forward_difference_n(lambda k: Fraction(k**3), 3) == 6
    assert forward_difference_n(lambda k: Fraction(k**2), 3) == 0
    assert forward_difference_n(lambda k: Fraction(17, 3), 0) == Fraction(17, 3)
    with pytest.raises(ValueError):
        forward_difference_n(lambda k: Fraction(k), -1)


def test_forward_difference_polynomial_dichotomy():
    rng = random.Random(411)
    for _ in range(60):
        n = rng.randint(1, 12)
        d = rng.randint(0, n)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d + 1)]
        coeffs[-1] = Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9))
        p = Polynomial(tuple(coeffs))
        got = forward_difference_n(lambda k: poly_eval(p, k), n)
        if d < n:
            assert got == 0
        else:
            assert got == factorial(n) * p.leading_coefficient


def test_lemma11_hand_values():
    ones = lambda j: Fraction(1)
    assert lemma11_lhs(ones, 2) == Fraction(-3, 2)
    assert lemma11_rhs(ones, 2) == Fraction(-3, 2)
    zero = lambda j: Fraction(0)
    assert lemma11_lhs(zero, 7) == 0
    assert lemma11_rhs(zero, 7) == 0
    ident = lambda j: Fraction(j)
    assert lemma11_lhs(ident, 3) == lemma11_rhs(ident, 3)


def test_lemma11_equality_property():
    # 100 pseudo-random rational sequences, n up to 50
    rng = random.Random(1729)
    for _ in range(100):
        n = rng.randint(1, 50)
        values = [Fraction(0)] + [
            Fraction(rng.randint(-12, 12), rng.randint(1, 12)) for _ in range(n)
        ]
        a = lambda j: values[j]
        assert lemma11_lhs(a, n) == lemma11_rhs(a, n)


def test_fraction_canonical_closure():
    # the scalar type keeps gcd-reduced form with positive denominator
    rng = random.Random(7)
    for _ in range(200):
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
        y = Fraction(rng.randint(-40, 40) or 1, rng.randint(1, 40))
        from math import gcd

        for z in (x + y, x - y, x * y, x / y):
            assert z.denominator > 0
            assert gcd(abs(z.numerator), z.denominator) == 1
