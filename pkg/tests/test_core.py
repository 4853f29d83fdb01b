import pytest
from hypothesis import given

from catwords.core import (
    catalan_number,
    descent_count,
    enumerate_words,
    first_return_join,
    first_return_split,
    format_word,
    max_descents,
    parse_word,
    validate,
)

from conftest import catalan_words, naive_words


def w(s):
    return tuple(int(c) for c in s)


@pytest.mark.parametrize(
    "letters, ok",
    [("010", True), ("", True), ("02", False), ("10", False), ("0120123", True), ("0013", False)],
)
def test_validate(letters, ok):
    assert validate(w(letters)) is ok


def test_validate_rejects_negative():
    assert not validate((0, -1))


def test_enumerate_small():
    assert list(enumerate_words(3)) == [w(s) for s in ("000", "001", "010", "011", "012")]
    assert list(enumerate_words(0)) == [()]
    assert sum(1 for _ in enumerate_words(10)) == 16796


@pytest.mark.parametrize("n", range(9))
def test_enumerate_matches_recursive_oracle(n):
    assert list(enumerate_words(n)) == naive_words(n)


def test_enumerate_counts_up_to_14():
    for n in range(15):
        assert sum(1 for _ in enumerate_words(n)) == catalan_number(n)


def test_enumerate_is_strictly_increasing():
    for n in range(1, 11):
        words = list(enumerate_words(n))
        assert all(a < b for a, b in zip(words, words[1:]))


def test_enumerate_negative():
    with pytest.raises(ValueError):
        list(enumerate_words(-1))


@pytest.mark.parametrize(
    "word, head, tail",
    [("0011212", "", "011212"), ("01", "0", ""), ("010", "0", "0"), ("0", "", "")],
)
def test_first_return_split(word, head, tail):
    split = first_return_split(w(word))
    assert split == (w(head), w(tail))
    assert first_return_join(*split) == w(word)


def test_first_return_split_empty():
    with pytest.raises(ValueError, match="empty word has no decomposition"):
        first_return_split(())


@pytest.mark.parametrize("head, tail, joined", [("", "", "0"), ("0", "0", "010"), ("01", "01", "01201")])
def test_first_return_join(head, tail, joined):
    out = first_return_join(w(head), w(tail))
    assert out == w(joined)
    assert validate(out)
    assert first_return_split(out) == (w(head), w(tail))


def test_join_split_roundtrip_exhaustive():
    for n in range(1, 11):
        for word in enumerate_words(n):
            assert first_return_join(*first_return_split(word)) == word


@pytest.mark.parametrize("word, d", [("01012312301", 3), ("0123", 0), ("0011212", 1), ("", 0)])
def test_descent_count(word, d):
    assert descent_count(w(word)) == d


def test_descent_bound_and_additivity_exhaustive():
    for n in range(13):
        for word in enumerate_words(n):
            d = descent_count(word)
            assert d <= max_descents(n)
            if word:
                head, tail = first_return_split(word)
                assert d == descent_count(head) + descent_count(tail) + (1 if head and tail else 0)


@given(catalan_words())
def test_split_parts_are_catalan(word):
    if word:
        head, tail = first_return_split(word)
        assert validate(head) and validate(tail)
        assert first_return_join(head, tail) == word


@pytest.mark.parametrize("n, c", [(0, 1), (1, 1), (7, 429), (10, 16796), (20, 6564120420)])
def test_catalan_number(n, c):
    assert catalan_number(n) == c


def test_format_word():
    assert format_word(w("0120")) == "0120"
    assert format_word(tuple(range(12))) == "0,1,2,3,4,5,6,7,8,9,10,11"
    assert parse_word("0,1,2,3,4,5,6,7,8,9,10") == tuple(range(11))
    assert parse_word("") == ()
