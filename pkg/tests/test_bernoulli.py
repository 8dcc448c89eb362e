import threading
from fractions import Fraction

import pytest

from circleact.bernoulli import (
    BernoulliTable,
    bernoulli_ms,
    im_j_order,
    odd_half_denominator,
    table_rows,
    vsc_denominator,
)
from circleact.exactnum import den


def test_first_values():
    assert bernoulli_ms(1) == Fraction(1, 6)
    assert bernoulli_ms(2) == Fraction(1, 30)
    assert bernoulli_ms(3) == Fraction(1, 42)
    assert bernoulli_ms(4) == Fraction(1, 30)
    assert bernoulli_ms(5) == Fraction(5, 66)
    assert bernoulli_ms(6) == Fraction(691, 2730)


def test_index_starts_at_one():
    with pytest.raises(ValueError, match="index starts at 1"):
        bernoulli_ms(0)
    with pytest.raises(ValueError):
        vsc_denominator(0)


def test_vsc_examples():
    assert vsc_denominator(1) == 6  # primes 2, 3
    assert vsc_denominator(2) == 30  # primes 2, 3, 5
    assert vsc_denominator(6) == 2730  # primes 2, 3, 5, 7, 13


def test_vsc_oracle_equivalence_to_30():
    for k in range(1, 31):
        assert den(bernoulli_ms(k)) == vsc_denominator(k)


def test_positivity_and_parity_to_30():
    for k in range(1, 31):
        b = bernoulli_ms(k)
        assert b > 0
        assert b.numerator % 2 == 1
        assert b.denominator % 2 == 0


def test_j_index_values():
    # frozen after independent reduction of B_k / 4k by hand for k <= 6
    assert [im_j_order(k) for k in range(1, 7)] == [24, 240, 504, 480, 264, 65520]


def test_j_index_divisible_by_24():
    for k in range(1, 31):
        assert im_j_order(k) % 24 == 0


def test_odd_half_denominator_examples():
    assert odd_half_denominator(1) == 12
    assert odd_half_denominator(3) == 252
    assert odd_half_denominator(5) == 132


def test_odd_half_denominator_rejects_even():
    with pytest.raises(ValueError, match="parity"):
        odd_half_denominator(2)


def test_odd_half_relation():
    for k in range(1, 30, 2):
        assert 2 * odd_half_denominator(k) == im_j_order(k)


def test_table_extends_on_demand():
    table = BernoulliTable(3)
    assert table.max_index >= 3
    assert table.value(10) == bernoulli_ms(10)
    assert table.max_index >= 10


def test_table_rejects_bad_index():
    table = BernoulliTable()
    with pytest.raises(ValueError):
        table.value(0)
    with pytest.raises(ValueError):
        table_rows(0)


def test_table_rows_shape():
    rows = table_rows(4)
    assert rows[0] == (1, Fraction(1, 6), 6, 24)
    assert rows[3] == (4, Fraction(1, 30), 30, 480)


def test_concurrent_readers_extend_consistently():
    table = BernoulliTable()
    results = []

    def worker():
        results.append(table.value(25))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
    assert results[0] == bernoulli_ms(25)
