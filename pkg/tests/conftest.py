from itertools import combinations

from hypothesis import strategies as st

LENGTH2 = ["00", "01", "10"]
LENGTH3 = ["012", "001", "010", "021", "102", "201", "120", "101", "011", "000", "100", "110", "210"]


def naive_words(n):
    """Catalan words of length n by recursion on the last letter; independent of core."""
    if n == 0:
        return [()]
    out = []
    for w in naive_words(n - 1):
        top = w[-1] + 1 if w else 0
        out.extend(w + (v,) for v in range(top + 1))
    return sorted(out)


def naive_occurrences(w, p):
    def shape(seq):
        return [(a > b) - (a < b) for a, b in combinations(seq, 2)]

    want = shape(p)
    return sum(1 for idx in combinations(range(len(w)), len(p)) if shape([w[i] for i in idx]) == want)


def _build(raw):
    w = []
    for x in raw:
        w.append(x % (w[-1] + 2) if w else 0)
    return tuple(w)


def catalan_words(max_size=40):
    return st.lists(st.integers(0, 1000), max_size=max_size).map(_build)
