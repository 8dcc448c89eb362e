import random
from fractions import Fraction

import pytest

from circleact.exactnum import (
    binomial,
    den,
    factorial,
    format_rational,
    parse_rational,
    reduce,
)


def test_reduce_examples():
    assert reduce(2, 4) == Fraction(1, 2)
    assert reduce(0, 7) == Fraction(0, 1)
    assert reduce(5, -1320) == Fraction(-1, 264)


def test_reduce_normalizes_sign_and_terms():
    r = reduce(5, -1320)
    assert r.numerator == -1 and r.denominator == 264


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        reduce(1, 0)


def test_den_examples():
    assert den(Fraction(1, 6)) == 6
    assert den(reduce(5, 1320)) == 264
    assert den(Fraction(0)) == 1
    assert den(0) == 1
    assert den(7) == 1


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(3) == 6
    assert factorial(7) == 5040


def test_factorial_negative_rejected():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(10, 0) == 1
    assert binomial(0, 0) == 1
    assert binomial(10, 5) == 252


def test_binomial_total_beyond_range():
    assert binomial(4, 6) == 0


def test_den_of_sum_divides_product_of_dens():
    rng = random.Random(101)
    for _ in range(500):
        a = reduce(rng.randint(-60, 60), rng.randint(1, 80))
        b = reduce(rng.randint(-60, 60), rng.randint(1, 80))
        assert (den(a) * den(b)) % den(a + b) == 0


def test_reduce_idempotent():
    rng = random.Random(102)
    for _ in range(500):
        x = reduce(rng.randint(-999, 999), rng.choice([-1, 1]) * rng.randint(1, 999))
        assert reduce(x.numerator, x.denominator) == x


def test_factorial_recurrence():
    for m in range(1, 40):
        assert factorial(m) == m * factorial(m - 1)


def test_arithmetic_exact_round_trip():
    rng = random.Random(103)
    for _ in range(500):
        a = reduce(rng.randint(-99, 99), rng.randint(1, 99))
        c = reduce(rng.randint(-99, 99), rng.randint(1, 99))
        assert (a + c) - c == a


def test_parse_and_format():
    assert parse_rational("5/1320") == Fraction(1, 264)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 3/4 ") == Fraction(3, 4)
    assert format_rational(Fraction(-1, 264)) == "-1/264"
    assert format_rational(Fraction(5)) == "5"
    assert parse_rational(format_rational(Fraction(-22, 7))) == Fraction(-22, 7)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("two thirds")
