"""Catalan words: validation, exhaustive generation, first return decomposition.

A Catalan word is stored as a plain tuple of ints.  The empty tuple is the
unique word of length 0.
"""
from __future__ import annotations

from math import comb
from typing import Iterator, NamedTuple, Sequence

Word = tuple[int, ...]


class FirstReturnSplit(NamedTuple):
    head: Word
    tail: Word


def validate(letters: Sequence[int]) -> bool:
    """True iff ``letters`` starts with 0 and never climbs by more than one."""
    prev = -1
    for letter in letters:
        if letter < 0 or letter > prev + 1:
            return False
        prev = letter
    return True


def enumerate_words(n: int) -> Iterator[Word]:
    """Yield every Catalan word of length ``n`` in lexicographic order.

    Successor-based so memory stays flat: bump the rightmost letter that may
    still grow, then zero everything after it.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    w = [0] * n
    yield tuple(w)
    while True:
        i = n - 1
        while i >= 1 and w[i] == w[i - 1] + 1:
            i -= 1
        if i < 1:
            return
        w[i] += 1
        for j in range(i + 1, n):
            w[j] = 0
        yield tuple(w)


def first_return_split(w: Sequence[int]) -> FirstReturnSplit:
    """Write a non-empty word as ``0 (head+1) tail``."""
    if not w:
        raise ValueError("empty word has no decomposition")
    cut = len(w)
    for i in range(1, len(w)):
        if w[i] == 0:
            cut = i
            break
    head = tuple(x - 1 for x in w[1:cut])
    return FirstReturnSplit(head, tuple(w[cut:]))


def first_return_join(head: Sequence[int], tail: Sequence[int]) -> Word:
    return (0,) + tuple(x + 1 for x in head) + tuple(tail)


def descent_count(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def max_descents(n: int) -> int:
    """Largest descent count a length-``n`` word can have."""
    return max(0, (n - 1) // 2)


def catalan_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def format_word(w: Sequence[int]) -> str:
    """Digits run together, or comma-separated once any letter needs two digits."""
    if any(x >= 10 for x in w):
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if not text.isdigit() and text:
        raise ValueError(f"not a word: {text!r}")
    return tuple(int(c) for c in text)
