"""Pattern occurrence, avoidance and brute-force descent tables.

Everything here works by direct inspection of words and is the ground truth
that the generating functions and closed forms are checked against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .core import Word, descent_count, enumerate_words, max_descents

Pattern = tuple[int, ...]


class InvalidPattern(ValueError):
    pass


def is_valid_pattern(letters: Sequence[int]) -> bool:
    return len(letters) > 0 and set(letters) == set(range(max(letters) + 1))


def as_pattern(p: Sequence[int] | str) -> Pattern:
    """Coerce ``"110"``, ``"1,1,0"`` or a sequence of ints into a checked pattern."""
    if isinstance(p, str):
        text = p.strip()
        try:
            letters = tuple(int(t) for t in text.split(",")) if "," in text else tuple(int(c) for c in text)
        except ValueError:
            raise InvalidPattern(f"not a pattern: {p!r}") from None
    else:
        letters = tuple(p)
    if not is_valid_pattern(letters):
        raise InvalidPattern(f"not a pattern: {p!r}")
    return letters


def pattern_key(p: Sequence[int] | str | None) -> str:
    if p is None:
        return "unrestricted"
    letters = as_pattern(p)
    sep = "," if max(letters) >= 10 else ""
    return sep.join(str(x) for x in letters)


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _order_isomorphic(values: Sequence[int], p: Pattern) -> bool:
    k = len(p)
    return all(
        _cmp(values[a], values[b]) == _cmp(p[a], p[b])
        for a in range(k)
        for b in range(a + 1, k)
    )


def contains(w: Sequence[int], p: Sequence[int] | str) -> bool:
    p = as_pattern(p)
    return _search(w, p, 0, 0, {}, len(w))


def _search(w, p, start, depth, assigned, stop) -> bool:
    # assigned maps pattern values to the word values already matched to them
    if depth == len(p):
        return True
    want = p[depth]
    for i in range(start, stop):
        x = w[i]
        if want in assigned:
            if assigned[want] != x:
                continue
        elif not all(_cmp(x, v) == _cmp(want, q) for q, v in assigned.items()):
            continue
        fresh = want not in assigned
        if fresh:
            assigned[want] = x
        found = _search(w, p, i + 1, depth + 1, assigned, stop)
        if fresh:
            del assigned[want]
        if found:
            return True
    return False


def _ends_with_occurrence(w: list[int], rel: list[list[int]]) -> bool:
    """Is the last letter of ``w`` the end of an occurrence?

    ``rel[a][b]`` is the comparison of pattern letters ``a`` and ``b``; the
    pattern's final letter is matched to ``w[-1]``.
    """
    k = len(rel) - 1
    last = len(w) - 1
    anchor = w[last]
    vals = [0] * k

    def go(depth: int, start: int) -> bool:
        if depth == k:
            return True
        row = rel[depth]
        for i in range(start, last - k + depth + 1):
            x = w[i]
            if (x > anchor) - (x < anchor) != row[k]:
                continue
            for e in range(depth):
                if (x > vals[e]) - (x < vals[e]) != row[e]:
                    break
            else:
                vals[depth] = x
                if go(depth + 1, i + 1):
                    return True
        return False

    return go(0, 0)


def count_occurrences(w: Sequence[int], p: Sequence[int] | str) -> int:
    """Number of index tuples whose letters are order-isomorphic to ``p``."""
    p = as_pattern(p)
    return sum(
        1
        for idx in combinations(range(len(w)), len(p))
        if _order_isomorphic([w[i] for i in idx], p)
    )


def count_consecutive_occurrences(w: Sequence[int], p: Sequence[int] | str) -> int:
    p = as_pattern(p)
    k = len(p)
    return sum(1 for i in range(len(w) - k + 1) if _order_isomorphic(w[i:i + k], p))


def avoiders(n: int, p: Sequence[int] | str) -> Iterator[Word]:
    """Words of length ``n`` avoiding ``p``, in lexicographic order.

    Containment is inherited by extensions, so a prefix that already contains
    ``p`` is pruned instead of being completed and rejected.
    """
    p = as_pattern(p)
    if n < 0:
        raise ValueError("length must be non-negative")
    if n == 0:
        yield ()
        return
    if len(p) == 1:
        return
    if n == 1:
        yield (0,)
        return
    rel = [[_cmp(a, b) for b in p] for a in p]
    w = [0]
    stack = [0]  # stack[-1] is the next letter to try after w
    while stack:
        nxt = stack[-1]
        if nxt > w[-1] + 1:
            stack.pop()
            w.pop()
            continue
        stack[-1] += 1
        w.append(nxt)
        if _ends_with_occurrence(w, rel):
            w.pop()
            continue
        if len(w) == n:
            yield tuple(w)
            w.pop()
        else:
            stack.append(0)


def naive_avoiders(n: int, p: Sequence[int] | str) -> Iterator[Word]:
    """Filter of the full class; slow reference for :func:`avoiders`."""
    p = as_pattern(p)
    return (w for w in enumerate_words(n) if not contains(w, p))


def words_in_class(n: int, p: Sequence[int] | str | None = None) -> Iterator[Word]:
    return enumerate_words(n) if p is None else avoiders(n, p)


@dataclass
class DistributionTable:
    n: int
    counts: dict[int, int] = field(default_factory=dict)
    pattern: Pattern | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def popularity(self) -> int:
        return sum(k * c for k, c in self.counts.items())


def descent_distribution(n: int, p: Sequence[int] | str | None = None) -> DistributionTable:
    pat = None if p is None else as_pattern(p)
    counts: dict[int, int] = {}
    for w in words_in_class(n, pat):
        d = descent_count(w)
        counts[d] = counts.get(d, 0) + 1
    assert all(0 <= k <= max_descents(n) for k in counts)
    return DistributionTable(n, dict(sorted(counts.items())), pat)


def descent_popularity(n: int, p: Sequence[int] | str | None = None) -> int:
    return sum(descent_count(w) for w in words_in_class(n, p))

