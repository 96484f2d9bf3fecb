from functools import cmp_to_key
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hkmonoid.words import (
    all_words,
    count_letter,
    deglex_compare,
    find_factor,
    format_word,
    is_periodic_factor,
    parse_word,
    q_word,
    xq_word,
)

from conftest import rank_and_word, words


def w(text):
    return parse_word(text)


@pytest.mark.parametrize("u, v, expected", [("1", "1", 0), ("1", "2", -1), ("3 2", "1 1 1", -1)])
def test_deglex_examples(u, v, expected):
    assert deglex_compare(w(u), w(v)) == expected
    assert deglex_compare(w(v), w(u)) == -expected


def test_deglex_is_total_order_on_small_words():
    pool = list(all_words(3, 4))
    for u, v in product(pool, repeat=2):
        c = deglex_compare(u, v)
        assert c == -deglex_compare(v, u)
        assert (c == 0) == (u == v)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_deglex_is_a_ranking(n):
    # comparing through a sorted rank is transitive by construction
    pool = list(all_words(n, 6 if n < 5 else 5))
    ranked = sorted(pool, key=cmp_to_key(deglex_compare))
    assert ranked == pool  # all_words already lists in deg-lex order
    for a, b in zip(ranked, ranked[1:]):
        assert deglex_compare(a, b) == -1


@given(st.data())
def test_deglex_is_compatible_with_multiplication(data):
    n = data.draw(st.integers(3, 5))
    u, v, x = (data.draw(words(n, 6)) for _ in range(3))
    c = deglex_compare(u, v)
    assert deglex_compare(x + u, x + v) == c
    assert deglex_compare(u + x, v + x) == c


@pytest.mark.parametrize("text, q, expected", [("3 1 2 1", 1, 2), ("", 5, 0), ("4 1 3 2", 4, 1)])
def test_count_letter(text, q, expected):
    assert count_letter(w(text), q) == expected


@pytest.mark.parametrize("n, i, expected", [(3, 0, "2 1"), (4, 1, "1 3 2"), (5, 3, "1 2 3 4")])
def test_q_word(n, i, expected):
    assert q_word(n, i) == w(expected)
    assert xq_word(n, i) == (n,) + w(expected)


@pytest.mark.parametrize("i", [-1, 4])
def test_q_word_range(i):
    with pytest.raises(ValueError):
        q_word(5, i)


@pytest.mark.parametrize("text, pattern, expected", [
    ("3 1 2 3 1 2", "3 1 2", [0, 3]),
    ("1 2", "3", []),
    ("1 1 1", "1 1", [0, 1]),
])
def test_find_factor(text, pattern, expected):
    assert find_factor(w(text), w(pattern)) == expected


def test_parse_examples():
    assert parse_word("3 2 1") == (3, 2, 1)
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_word("0 1")
    with pytest.raises(ValueError):
        parse_word("1 a")
    with pytest.raises(ValueError):
        parse_word("1 4", n=3)


@given(rank_and_word(max_len=12))
def test_parse_format_roundtrip(nw):
    n, word = nw
    assert parse_word(format_word(word), n) == word


def test_letters_rendering():
    assert format_word((4, 1, 3, 2), letters=True) == "dacb"
    assert format_word((), letters=True) == "1"


def test_periodic_factor():
    assert is_periodic_factor((1, 2, 3, 1), (3, 1, 2))
    assert not is_periodic_factor((1, 3), (3, 1, 2))
