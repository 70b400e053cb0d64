import pytest
from hypothesis import given, strategies as st

import naive
from fibra.errors import DomainError, InsufficientPrefixError
from fibra.fibcore import fib
from fibra.word1d import (
    SquareOccurrence,
    complexity_closed,
    complexity_enum,
    distinct_factor_positions,
    distinct_squares_closed,
    enumerate_squares,
    fib_word,
    infinite_prefix,
    is_primitive,
    square_occurrences_closed,
    total_distinct_factors,
)

# frozen from naive.squares on f_3 .. f_12
R_VALUES = {3: 0, 4: 1, 5: 4, 6: 11, 7: 26, 8: 57, 9: 118, 10: 235, 11: 454, 12: 857}
D_VALUES = {5: 4, 6: 8, 7: 14, 8: 24, 9: 40, 10: 66, 11: 108, 12: 176}


@pytest.mark.parametrize(
    "n, first, second, expected",
    [(0, "a", "b", "a"), (1, "a", "b", "b"), (2, "a", "b", "ba"), (5, "a", "b", "babbabab"), (4, "c", "d", "dcddc")],
)
def test_fib_word_examples(n, first, second, expected):
    w = fib_word(n, first, second)
    assert w.content == expected
    assert len(w) == fib(n)


def test_fib_word_recurrence():
    for n in range(2, 16):
        assert fib_word(n).content == fib_word(n - 1).content + fib_word(n - 2).content


def test_fib_word_rejects_bad_symbol():
    with pytest.raises(DomainError):
        fib_word(3, "x", "b")


@pytest.mark.parametrize("length, expected", [(0, ""), (1, "b"), (8, "babbabab"), (13, "babbababbabba")])
def test_infinite_prefix(length, expected):
    assert infinite_prefix(length) == expected


def test_infinite_prefix_extends_every_fib_word():
    long = infinite_prefix(fib(16))
    for n in range(1, 17):
        assert long.startswith(fib_word(n).content)


@pytest.mark.parametrize("n, k, expected", [(5, 4, 5), (6, 7, 7), (4, 5, 1), (2, 1, 2), (2, 2, 1), (3, 2, 2)])
def test_complexity_closed_examples(n, k, expected):
    assert complexity_closed(n, k) == expected


@pytest.mark.parametrize("n, k", [(1, 1), (4, 0), (4, 6)])
def test_complexity_closed_domain(n, k):
    with pytest.raises(DomainError):
        complexity_closed(n, k)


@pytest.mark.parametrize("word, k, expected", [("bab", 2, 2), ("babba", 3, 3), ("babbabab", 8, 1)])
def test_complexity_enum_examples(word, k, expected):
    assert complexity_enum(word, k) == expected


def test_complexity_enum_domain():
    with pytest.raises(DomainError):
        complexity_enum("bab", 4)


def test_complexity_oracle_equivalence():
    for n in range(2, 13):
        word = naive.fib_word(n)
        for k in range(1, fib(n) + 1):
            assert complexity_closed(n, k) == len(naive.distinct_factors(word, k)), (n, k)


@pytest.mark.parametrize("n, expected", [(2, 3), (3, 5), (4, 11), (5, 24), (6, 55)])
def test_total_distinct_factors(n, expected):
    assert total_distinct_factors(n) == expected


def test_total_distinct_factors_brute():
    for n in range(2, 10):
        word = naive.fib_word(n)
        brute = len({word[i:j] for i in range(len(word)) for j in range(i + 1, len(word) + 1)})
        assert total_distinct_factors(n) == brute


@pytest.mark.parametrize("n, expected", [(5, 4), (6, 8), (7, 14)])
def test_distinct_squares_closed(n, expected):
    assert distinct_squares_closed(n) == expected


@pytest.mark.parametrize("n, expected", [(3, 0), (4, 1), (5, 4)])
def test_square_occurrences_closed(n, expected):
    assert square_occurrences_closed(n) == expected


def test_square_formula_domains():
    with pytest.raises(DomainError):
        distinct_squares_closed(4)
    with pytest.raises(DomainError):
        square_occurrences_closed(2)


def test_frozen_square_counts_match_naive():
    for n, r in R_VALUES.items():
        assert len(naive.squares(naive.fib_word(n))) == r
        assert square_occurrences_closed(n) == r
    for n, d in D_VALUES.items():
        assert len({naive.fib_word(n)[s - 1:s - 1 + 2 * h] for s, h in naive.squares(naive.fib_word(n))}) == d
        assert distinct_squares_closed(n) == d


def test_enumerate_squares_examples():
    assert enumerate_squares("bb") == [SquareOccurrence(1, 1)]
    assert enumerate_squares("babba") == [SquareOccurrence(3, 1)]
    assert enumerate_squares("bab") == []
    assert enumerate_squares("babbabab", distinct=True) == {"bb", "abab", "baba", "babbab"}


def test_enumerate_squares_matches_formulas():
    for n in range(3, 13):
        word = fib_word(n).content
        assert len(enumerate_squares(word)) == square_occurrences_closed(n)
        if n >= 5:
            assert len(enumerate_squares(word, distinct=True)) == distinct_squares_closed(n)


def test_enumerate_squares_rejects_non_primitive_roots():
    # aaaa: roots a (3 times) and aa (once, but aa = a^2 is not primitive)
    assert enumerate_squares("aaaa") == [SquareOccurrence(1, 1), SquareOccurrence(2, 1), SquareOccurrence(3, 1)]


def test_no_fourth_powers_in_fibonacci_words():
    for n in range(2, 13):
        word = fib_word(n).content
        for occ in enumerate_squares(word):
            root = word[occ.start - 1:occ.start - 1 + occ.root_length]
            half = len(root) // 2
            assert not (len(root) % 2 == 0 and root[:half] == root[half:]), (n, occ)


@given(st.text(alphabet="ab", max_size=24))
def test_enumerate_squares_matches_naive_on_any_word(word):
    assert [(o.start, o.root_length) for o in enumerate_squares(word)] == naive.squares(word)


def test_distinct_factor_positions_small():
    k2 = distinct_factor_positions(2)
    assert k2.entries == ((1, "ba"), (2, "ab"), (3, "bb"))
    assert distinct_factor_positions(1).factors == ["b", "a"]
    assert len(set(distinct_factor_positions(3).factors)) == 4


def test_distinct_factor_positions_first_occurrence_order():
    prefix = infinite_prefix(2000)
    for k in range(1, 21):
        fl = distinct_factor_positions(k, prefix)
        factors = fl.factors
        assert len(set(factors)) == k + 1
        assert set(factors) == naive.distinct_factors(prefix, k)
        firsts = [prefix.find(f) for f in factors]
        assert firsts == sorted(firsts)
        assert all(prefix[s - 1:s - 1 + k] == f for s, f in fl.entries)


def test_distinct_factor_positions_short_prefix():
    with pytest.raises(InsufficientPrefixError):
        distinct_factor_positions(5, "babba")
