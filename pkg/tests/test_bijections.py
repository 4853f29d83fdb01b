import pytest
from hypothesis import given

from catwords.bijections import (
    InvalidDyckWord,
    Node,
    catalan_to_dyck,
    catalan_to_tree,
    count_ddu,
    count_marked_nodes,
    dyck_to_catalan,
    is_dyck,
    node_count,
    tree_to_catalan,
)
from catwords.core import descent_count, enumerate_words, validate

from conftest import catalan_words


def w(s):
    return tuple(int(c) for c in s)


@pytest.mark.parametrize("word, dyck", [("0011212", "uduuduudduuddd"), ("", ""), ("01", "uudd"), ("0", "ud")])
def test_catalan_to_dyck(word, dyck):
    assert catalan_to_dyck(w(word)) == dyck
    assert dyck_to_catalan(dyck) == w(word)


def test_dyck_to_catalan_accepts_spaced_uppercase():
    assert dyck_to_catalan("U D U U D U U D D U U D D D") == w("0011212")
    assert dyck_to_catalan("UUDUDD") == w("011")


@pytest.mark.parametrize("bad", ["du", "uud", "udx", "udd"])
def test_dyck_to_catalan_rejects(bad):
    assert not is_dyck(bad)
    with pytest.raises(InvalidDyckWord):
        dyck_to_catalan(bad)


@pytest.mark.parametrize("word, k", [("0011212", 1), ("01012312301", 3)])
def test_count_ddu(word, k):
    assert count_ddu(catalan_to_dyck(w(word))) == k
    assert count_ddu("uudd") == 0


def test_trees():
    leaf = Node()
    assert catalan_to_tree(w("0")) == leaf
    assert catalan_to_tree(w("01")) == Node(None, leaf)
    assert catalan_to_tree(w("00")) == Node(leaf, None)
    assert tree_to_catalan(Node(leaf, leaf)) == w("001")
    assert tree_to_catalan(catalan_to_tree(w("010"))) == w("010")
    assert catalan_to_tree(()) is None and tree_to_catalan(None) == ()


@pytest.mark.parametrize("word, marked", [("0", 0), ("010", 1), ("0123", 0), ("01012312301", 3)])
def test_count_marked_nodes(word, marked):
    assert count_marked_nodes(catalan_to_tree(w(word))) == marked


def test_exhaustive_round_trips_and_statistics():
    for n in range(11):
        for word in enumerate_words(n):
            d = catalan_to_dyck(word)
            t = catalan_to_tree(word)
            assert is_dyck(d) and len(d) == 2 * n
            assert dyck_to_catalan(d) == word
            assert tree_to_catalan(t) == word
            assert node_count(t) == n
            assert count_ddu(d) == count_marked_nodes(t) == descent_count(word)


@given(catalan_words(60))
def test_random_words(word):
    d = catalan_to_dyck(word)
    assert dyck_to_catalan(d) == word
    t = catalan_to_tree(word)
    assert tree_to_catalan(t) == word
    assert count_ddu(d) == count_marked_nodes(t) == descent_count(word)


def _trees(n):
    if n == 0:
        yield None
        return
    for left in range(n):
        for a in _trees(left):
            for b in _trees(n - 1 - left):
                yield Node(a, b)


def test_every_tree_gives_a_catalan_word():
    for n in range(8):
        seen = set()
        for t in _trees(n):
            word = tree_to_catalan(t)
            assert validate(word)
            assert catalan_to_tree(word) == t
            seen.add(word)
        assert seen == set(enumerate_words(n))
