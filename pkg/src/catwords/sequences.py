"""Closed forms and recurrences for class sizes and descent popularity.

Every sequence is indexed by word length ``n``; index 0 is the empty word.
Also reads OEIS b-files and compares them with computed prefixes.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Sequence, TextIO

from .core import catalan_number
from .genfunc import Poly2, poly

FACETS = ("count", "popularity")


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def fibonacci(m: int) -> int:
    """``F_1 = F_2 = 1``; extended backwards so ``F_{-1} = 1``."""
    a, b = 0, 1  # F_0, F_1
    if m >= 0:
        for _ in range(m):
            a, b = b, a + b
        return a
    for _ in range(-m):
        a, b = b - a, a
    return a


# --- linear recurrences ------------------------------------------------------

def series_quotient(num: Sequence[int], den: Sequence[int], terms: int) -> list[int]:
    """First ``terms`` coefficients of ``num/den``; ``den[0]`` must be +-1."""
    if not den or den[0] not in (1, -1):
        raise ValueError("denominator needs constant term +1 or -1")
    out: list[int] = []
    for n in range(terms):
        acc = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc * den[0])
    return out


@dataclass(frozen=True)
class SequenceSpec:
    key: str
    facet: str
    kind: str  # "closed" or "recurrence"
    denominator: tuple[int, ...] = ()
    initial: tuple[int, ...] = ()
    closed: Callable[[int], int] | None = None

    def __post_init__(self):
        if self.kind == "recurrence" and len(self.initial) < len(self.denominator) - 1:
            raise ValueError(f"{self.key}/{self.facet}: need at least {len(self.denominator) - 1} initial terms")


def recurrence_from_gf(key: str, facet: str, num: Poly2, den: Poly2) -> SequenceSpec:
    n_coef, d_coef = num.at_y(1), den.at_y(1)
    if d_coef[0] == -1:
        n_coef, d_coef = [-c for c in n_coef], [-c for c in d_coef]
    # the homogeneous recurrence only holds once the numerator has run out
    k = max(len(n_coef), len(d_coef) - 1)
    return SequenceSpec(key, facet, "recurrence", tuple(d_coef), tuple(series_quotient(n_coef, d_coef, k)))


def eval_recurrence(spec: SequenceSpec, n: int) -> int:
    if spec.kind != "recurrence":
        raise ValueError(f"{spec.key}/{spec.facet} is not a recurrence")
    den, init = spec.denominator, spec.initial
    if not den or den[0] != 1 or len(init) < len(den) - 1:
        raise ValueError(f"malformed recurrence for {spec.key}/{spec.facet}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(init):
        return init[n]
    vals = list(init)
    for m in range(len(init), n + 1):
        vals.append(-sum(den[k] * vals[m - k] for k in range(1, len(den))))
    return vals[n]


# univariate generating functions (y = 1 and d/dy at y = 1) of the classes
# without an explicit formula
RECURRENCES: dict[str, SequenceSpec] = {
    s.key + "/" + s.facet: s
    for s in (
        recurrence_from_gf("000", "count", poly("1-2x^2"), poly("1-x-3x^2+x^3")),
        recurrence_from_gf("210", "count", poly("1-5x+7x^2-x^3-x^4"), poly("1-2x") * poly("1-4x+3x^2+x^3")),
        recurrence_from_gf("100", "count", poly("1-2x-x^2+x^3"), poly("1-3x+2x^3")),
        recurrence_from_gf("110", "count", poly("1-3x+2x^2+x^3"), poly("1-x") ** 2 * poly("1-2x-x^2")),
        recurrence_from_gf(
            "000", "popularity",
            poly("x^3") * poly("1-x") * poly("1+2x") * poly("1+x"), poly("1-x-3x^2+x^3") ** 2,
        ),
        recurrence_from_gf("100", "popularity", poly("x^3") * poly("1-x-x^2"), poly("1-3x+2x^3") ** 2),
        recurrence_from_gf(
            "110", "popularity",
            poly("x^3") * poly("1-x-x^2") ** 2, poly("1-x") ** 3 * poly("1-2x-x^2") ** 2,
        ),
        recurrence_from_gf("210", "popularity", poly("x^3") * poly("1-2x"), poly("1-4x+3x^2+x^3") ** 2),
    )
}


def recurrence(key: str, facet: str) -> SequenceSpec:
    return RECURRENCES[f"{key}/{facet}"]


# --- closed forms ------------------------------------------------------------

def count_110_halfsum(n: int) -> int:
    total = sum(binomial(n + 1, 2 * k + 1) * 2**k for k in range(n // 2 + 1))
    if (total - (n - 1)) % 2:
        raise ArithmeticError(f"half-sum for n={n} is not an integer")
    return (total - (n - 1)) // 2


def conjugate_sum(m: int) -> int:
    """``(1+sqrt 3)^m + (1-sqrt 3)^m``, an integer."""
    a, b = 2, 2  # m = 0, 1
    if m == 0:
        return a
    for _ in range(m - 1):
        a, b = b, 2 * b + 2 * a
    return b


def count_100_ceiling(n: int) -> int:
    """``ceil((1+sqrt 3)^(n+1) / 12)`` without floating point.

    With ``t = (1-sqrt 3)^m`` we have ``0 < |t| < 1`` and ``t > 0`` iff ``m``
    is even, so the ceiling of ``(s_m - t) / 12`` is fixed by ``s_m mod 12``.
    """
    m = n + 1
    s = conjugate_sum(m)
    q, r = divmod(s, 12)
    if r:
        return q + 1
    return q if m % 2 == 0 else q + 1


def _pow2(e: int) -> int:
    return 2**e if e >= 0 else 0


_COUNT: dict[str, Callable[[int], int]] = {
    "unrestricted": catalan_number,
    "00": lambda n: 1,
    "01": lambda n: 1,
    "10": lambda n: 2 ** (n - 1),
    "012": lambda n: 2 ** (n - 1),
    "001": lambda n: 2 ** (n - 1),
    "010": lambda n: 2 ** (n - 1),
    "021": lambda n: (n - 1) * _pow2(n - 2) + 1,
    "102": lambda n: (3 ** (n - 1) + 1) // 2,
    "201": lambda n: (3 ** (n - 1) + 1) // 2,
    "120": lambda n: fibonacci(2 * n - 1),
    "101": lambda n: fibonacci(2 * n - 1),
    "011": lambda n: 1 + binomial(n, 2),
    "110": count_110_halfsum,
    "100": lambda n: eval_recurrence(recurrence("100", "count"), n),
    "000": lambda n: eval_recurrence(recurrence("000", "count"), n),
    "210": lambda n: eval_recurrence(recurrence("210", "count"), n),
}

_POPULARITY: dict[str, Callable[[int], int]] = {
    "unrestricted": lambda n: binomial(2 * n - 2, n - 3),
    "00": lambda n: 0,
    "01": lambda n: 0,
    "10": lambda n: 0,
    "010": lambda n: 0,
    "012": lambda n: (n - 2) * _pow2(n - 3),
    "001": lambda n: (n - 2) * _pow2(n - 3),
    # (n+1)(n-2) 2^(n-5), kept integral for n = 3, 4
    "021": lambda n: (n + 1) * (n - 2) * 2**n // 32 if n >= 3 else 0,
    "102": lambda n: (n - 2) * 3 ** (n - 3) if n >= 3 else 0,
    "201": lambda n: (n - 2) * 3 ** (n - 3) if n >= 3 else 0,
    "120": lambda n: sum(k * binomial(n + k - 2, 2 * k) for k in range(1, n - 1)),
    "101": lambda n: sum(k * binomial(n + k - 2, 2 * k) for k in range(1, n - 1)),
    "011": lambda n: (n - 1) * (n - 2) // 2,
    "000": lambda n: eval_recurrence(recurrence("000", "popularity"), n),
    "100": lambda n: eval_recurrence(recurrence("100", "popularity"), n),
    "110": lambda n: eval_recurrence(recurrence("110", "popularity"), n),
    "210": lambda n: eval_recurrence(recurrence("210", "popularity"), n),
}

# keys evaluated through a recurrence rather than an explicit formula
NO_CLOSED_COUNT = frozenset({"000", "210", "100"})
NO_CLOSED_POPULARITY = frozenset({"000", "100", "110", "210"})


def _lookup(table: dict[str, Callable[[int], int]], key: str) -> Callable[[int], int]:
    try:
        return table[key]
    except KeyError:
        raise KeyError(f"unknown class {key!r}") from None


def sequence_spec(key: str, facet: str) -> SequenceSpec:
    table, rec_keys = (_COUNT, NO_CLOSED_COUNT) if facet == "count" else (_POPULARITY, NO_CLOSED_POPULARITY)
    if key in rec_keys:
        return recurrence(key, facet)
    return SequenceSpec(key, facet, "closed", closed=_lookup(table, key))


def count_closed_form(key: str, n: int) -> int:
    """Size of the class at length ``n``.  ``n = 0`` gives 1 (the empty word)."""
    f = _lookup(_COUNT, key)
    if n < 0:
        raise ValueError("n must be non-negative")
    return 1 if n == 0 else f(n)


def popularity_closed_form(key: str, n: int) -> int:
    f = _lookup(_POPULARITY, key)
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0 if n == 0 else f(n)


def closed_form(key: str, facet: str, n: int) -> int:
    if facet == "count":
        return count_closed_form(key, n)
    if facet == "popularity":
        return popularity_closed_form(key, n)
    raise ValueError(f"unknown facet {facet!r}")


def catalan_diagonal(n: int) -> int:
    """Words of length ``2n+1`` with ``n`` descents."""
    return catalan_number(n)


# --- b-files -----------------------------------------------------------------

class BFileError(ValueError):
    pass


@dataclass
class BFile:
    entries: list[tuple[int, int]]
    source: str = ""

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(stream: TextIO | str, source: str = "") -> BFile:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    entries: list[tuple[int, int]] = []
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise BFileError(f"{source or 'b-file'} line {lineno}: expected 'index value', got {text!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"{source or 'b-file'} line {lineno}: non-integer token in {text!r}") from None
        if entries and idx != entries[-1][0] + 1:
            prev = entries[-1][0]
            if idx <= prev:
                raise BFileError(f"{source or 'b-file'} line {lineno}: index {idx} does not increase")
            raise BFileError(f"{source or 'b-file'} line {lineno}: gap at index {prev + 1}")
        entries.append((idx, val))
    return BFile(entries, source)


def read_bfile(path: str | Path) -> BFile:
    path = Path(path)
    with path.open() as fh:
        return parse_bfile(fh, source=path.stem.replace("b", "A", 1))


@dataclass
class Comparison:
    source: str
    first: int
    last: int
    mismatch: int | None = None
    expected: int | None = None
    got: int | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def __str__(self) -> str:
        if self.ok:
            return f"{self.source}: match over indices {self.first}..{self.last}"
        return f"{self.source}: mismatch at index {self.mismatch}: expected {self.expected}, got {self.got}"


def compare_with_bfile(computed: Sequence[int], offset: int, b: BFile) -> Comparison:
    """Compare ``computed[i]`` with the b-file entry at index ``offset + i``."""
    ref = b.as_dict()
    idxs = [offset + i for i in range(len(computed)) if offset + i in ref]
    if not idxs:
        raise ValueError(f"no overlap between computed terms and {b.source or 'b-file'}")
    for m in idxs:
        if computed[m - offset] != ref[m]:
            return Comparison(b.source, idxs[0], idxs[-1], m, ref[m], computed[m - offset])
    return Comparison(b.source, idxs[0], idxs[-1])


@dataclass(frozen=True)
class OeisRef:
    """Word length ``n`` sits at b-file index ``n - shift``."""

    a_number: str
    key: str
    facet: str
    shift: int

    @property
    def filename(self) -> str:
        return "b" + self.a_number[1:] + ".txt"


OEIS_REFS: tuple[OeisRef, ...] = (
    OeisRef("A000108", "unrestricted", "count", 0),
    OeisRef("A002694", "unrestricted", "popularity", 1),
    OeisRef("A011782", "012", "count", 0),
    OeisRef("A001787", "012", "popularity", 2),
    OeisRef("A005183", "021", "count", 1),
    OeisRef("A001793", "021", "popularity", 2),
    OeisRef("A007051", "102", "count", 1),
    OeisRef("A027471", "102", "popularity", 1),
    OeisRef("A001519", "120", "count", 0),
    OeisRef("A001870", "120", "popularity", 3),
    OeisRef("A000124", "011", "count", 1),
    OeisRef("A000217", "011", "popularity", 2),
    OeisRef("A057960", "100", "count", 0),
)


def default_snapshot_dir() -> Path:
    return Path(__file__).parent / "data" / "bfiles"


def check_oeis(
    ref: OeisRef, terms: Iterable[int] | None = None, snapshots: str | Path | None = None
) -> Comparison:
    """Compare a computed sequence (defaults to the closed form) with its snapshot."""
    b = read_bfile(Path(snapshots or default_snapshot_dir()) / ref.filename)
    if terms is None:
        last = b.entries[-1][0] + ref.shift
        terms = [closed_form(ref.key, ref.facet, n) for n in range(last + 1)]
    return compare_with_bfile(list(terms), -ref.shift, b)
