import math
import random
from fractions import Fraction

import pytest

from eigencubic.scalars import (QSqrt3, SQRT3, format_rational, is_exact,
                                parse_rational)


def rand_q3(rng, bound=9):
    return QSqrt3(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)),
                  Fraction(rng.randint(-bound, bound), rng.randint(1, 4)))


def test_sqrt3_squares_to_three():
    assert SQRT3 * SQRT3 == 3
    assert float(SQRT3) == pytest.approx(math.sqrt(3))


def test_field_axioms_sampled():
    rng = random.Random(0)
    for _ in range(50):
        a, b, c = (rand_q3(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_mixed_arithmetic_with_rationals():
    x = QSqrt3(Fraction(1, 2), 2)
    assert x + 1 == QSqrt3(Fraction(3, 2), 2)
    assert 1 + x == x + 1
    assert 3 * x == QSqrt3(Fraction(3, 2), 6)
    assert x - Fraction(1, 2) == QSqrt3(0, 2)
    assert Fraction(1, 2) - x == QSqrt3(0, -2)
    assert x / 2 == QSqrt3(Fraction(1, 4), 1)
    assert (2 / QSqrt3(0, 1)) * SQRT3 == 2


def test_pow():
    x = QSqrt3(1, 1)
    assert x ** 0 == 1
    assert x ** 1 == x
    assert x ** 2 == x * x
    assert x ** 5 == x * x * x * x * x
    with pytest.raises(ValueError):
        x ** -1


def test_exact_sign_matches_float():
    rng = random.Random(1)
    for _ in range(200):
        x = rand_q3(rng)
        f = float(x)
        if abs(f) > 1e-12:
            assert x.sign() == (1 if f > 0 else -1)
    assert QSqrt3(0, 0).sign() == 0
    # cases where the two components fight: 4 sqrt3 = 6.928 < 7
    assert QSqrt3(-7, 4).sign() == -1
    assert QSqrt3(7, -4).sign() == 1


def test_sign_tight_cases():
    # continued-fraction convergents: 71/41 sits a hair under sqrt(3),
    # 97/56 a hair over
    assert QSqrt3(Fraction(-71, 41), 1).sign() == 1
    assert QSqrt3(Fraction(-97, 56), 1).sign() == -1
    assert (QSqrt3(Fraction(-71, 41), 1) > 0) is True
    assert abs(QSqrt3(Fraction(-71, 41), 1)) == QSqrt3(Fraction(-71, 41), 1)
    assert abs(QSqrt3(Fraction(97, 56), -1)) == QSqrt3(Fraction(97, 56), -1)


def test_comparisons():
    assert QSqrt3(0, 1) > 1
    assert QSqrt3(0, 1) < 2
    assert QSqrt3(2, 0) >= 2 and QSqrt3(2, 0) <= 2
    assert sorted([QSqrt3(0, 1), QSqrt3(1, 0), QSqrt3(2, 0)]) == \
        [QSqrt3(1, 0), QSqrt3(0, 1), QSqrt3(2, 0)]


def test_equality_and_hash_against_rationals():
    assert QSqrt3(Fraction(1, 2), 0) == Fraction(1, 2)
    assert hash(QSqrt3(Fraction(1, 2), 0)) == hash(Fraction(1, 2))
    assert QSqrt3(1, 0) == 1 and hash(QSqrt3(1, 0)) == hash(1)
    assert QSqrt3(1, 1) != 1
    d = {QSqrt3(3, 0): "a"}
    assert d[Fraction(3)] == "a"


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        QSqrt3(1, 1) / 0
    with pytest.raises(ZeroDivisionError):
        QSqrt3(0, 0).inverse()


def test_truthiness():
    assert not QSqrt3(0, 0)
    assert QSqrt3(0, 1) and QSqrt3(1, 0)


def test_immutability():
    x = QSqrt3(1, 2)
    with pytest.raises(AttributeError):
        x.a = Fraction(5)


def test_is_exact():
    assert is_exact(Fraction(1, 2)) and is_exact(7) and is_exact(SQRT3)
    assert not is_exact(0.5)


def test_rational_string_round_trip():
    for v in (Fraction(-8), Fraction(3, 4), Fraction(0)):
        assert parse_rational(format_rational(v)) == v
    assert format_rational(Fraction(-8)) == "-8"
    assert format_rational(Fraction(6, 8)) == "3/4"
