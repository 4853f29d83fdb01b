"""Exact bivariate power series and the table of generating functions.

``x`` marks word length and ``y`` marks descents.  A truncated series is kept
as one row per power of ``x``; each row is a list of integer coefficients in
``y``.  All arithmetic is on Python ints, so nothing is ever rounded.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .core import max_descents

YPoly = list[int]

_TERM = re.compile(r"([+-])?\s*(\d*)\s*(x(?:\^(\d+))?)?\s*(y(?:\^(\d+))?)?\s*")


class SeriesError(ValueError):
    pass


class Poly2:
    """Polynomial in ``x`` and ``y`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            k: v for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def parse(cls, text: str) -> "Poly2":
        """Read a sum of monomials such as ``"1-2x+2x^2-x^3+x^3y"``."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial")
        terms: dict[tuple[int, int], int] = {}
        pos = 0
        while pos < len(src):
            m = _TERM.match(src, pos)
            if m is None or m.end() == pos or not (m.group(2) or m.group(3) or m.group(5)):
                raise ValueError(f"cannot parse polynomial {text!r} at {src[pos:]!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign in {text!r} at {src[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            i = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
            j = (int(m.group(6)) if m.group(6) else 1) if m.group(5) else 0
            terms[(i, j)] = terms.get((i, j), 0) + sign * coef
            pos = m.end()
        return cls(terms)

    @classmethod
    def const(cls, c: int) -> "Poly2":
        return cls({(0, 0): c})

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly2(out)

    def __neg__(self) -> "Poly2":
        return Poly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __mul__(self, other: "Poly2") -> "Poly2":
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return Poly2(out)

    def __pow__(self, e: int) -> "Poly2":
        out = Poly2.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def x_valuation(self) -> int | None:
        return min((i for i, _ in self.terms), default=None)

    def x_slice(self, i: int) -> YPoly:
        """Coefficient of ``x**i`` as a polynomial in ``y``."""
        js = {j: c for (a, j), c in self.terms.items() if a == i}
        if not js:
            return []
        row = [0] * (max(js) + 1)
        for j, c in js.items():
            row[j] = c
        return row

    def at_y(self, y: int) -> list[int]:
        """Univariate coefficient list after substituting ``y``."""
        out = [0] * (self.x_degree + 1)
        for (i, j), c in self.terms.items():
            out[i] += c * y**j
        return _trim(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = ("x" if i == 1 else f"x^{i}" if i else "") + ("y" if j == 1 else f"y^{j}" if j else "")
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            parts.append(("-" if c < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __repr__(self) -> str:
        return f"Poly2({str(self)!r})"


def poly(text: str) -> Poly2:
    return Poly2.parse(text)


@dataclass(frozen=True)
class Rational:
    num: Poly2
    den: Poly2

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"


@dataclass(frozen=True)
class Quadratic:
    """The root ``F`` of ``a F^2 + b F + c = 0`` with ``F(0, 0) = 1``."""

    a: Poly2
    b: Poly2
    c: Poly2

    def __str__(self) -> str:
        return f"({self.a})F^2 + ({self.b})F + ({self.c}) = 0"


GFSpec = Union[Rational, Quadratic]


# y-polynomial helpers ------------------------------------------------------

def _yadd(acc: YPoly, p: YPoly, scale: int = 1) -> None:
    if len(acc) < len(p):
        acc.extend([0] * (len(p) - len(acc)))
    for j, c in enumerate(p):
        acc[j] += scale * c


def _ymul(p: YPoly, q: YPoly) -> YPoly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _trim(p: YPoly) -> YPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


@dataclass
class TruncatedSeries2:
    """``coeffs[n][k]`` is the coefficient of ``x**n y**k`` for ``n <= order``."""

    order: int
    coeffs: list[list[int]]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.coeffs[n]
        return row[k] if 0 <= k < len(row) else 0

    def row(self, n: int) -> dict[int, int]:
        """Non-zero entries of the ``x**n`` row, keyed by ``y`` degree."""
        return {k: c for k, c in enumerate(self.coeffs[n]) if c}


def _rows(order: int, raw: list[YPoly]) -> TruncatedSeries2:
    coeffs = []
    for n in range(order + 1):
        row = _trim(list(raw[n]))
        width = max(len(row), max_descents(n) + 1)
        coeffs.append(row + [0] * (width - len(row)))
    return TruncatedSeries2(order, coeffs)


def _unit(p: Poly2, what: str) -> int:
    """The constant ``x**0`` part of ``p``, which must be +1 or -1."""
    head = _trim(p.x_slice(0))
    if len(head) != 1 or head[0] not in (1, -1):
        raise SeriesError(f"{what} has no invertible constant term: {p}")
    return head[0]


def expand(spec: GFSpec, order: int) -> TruncatedSeries2:
    """Expand ``spec`` through ``x**order`` exactly."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if isinstance(spec, Rational):
        return _expand_rational(spec, order)
    if isinstance(spec, Quadratic):
        return _expand_quadratic(spec, order)
    raise TypeError(f"not a generating function spec: {spec!r}")


def _expand_rational(spec: Rational, order: int) -> TruncatedSeries2:
    unit = _unit(spec.den, "denominator")
    num = [spec.num.x_slice(i) for i in range(order + 1)]
    den = [spec.den.x_slice(i) for i in range(spec.den.x_degree + 1)]
    # den * F = num, solved row by row: F_n = unit * (num_n - sum_{k>=1} den_k F_{n-k})
    f: list[YPoly] = []
    for n in range(order + 1):
        acc = list(num[n])
        for k in range(1, min(n, len(den) - 1) + 1):
            if den[k]:
                _yadd(acc, _ymul(den[k], f[n - k]), -1)
        f.append(_trim([unit * c for c in acc]))
    return _rows(order, f)


def _expand_quadratic(spec: Quadratic, order: int) -> TruncatedSeries2:
    unit = _unit(spec.b, "linear coefficient")
    val = spec.a.x_valuation()
    if val is not None and val < 1:
        raise SeriesError("quadratic term must carry a positive power of x for the iteration to converge")
    a = [spec.a.x_slice(i) for i in range(order + 1)]
    b = [spec.b.x_slice(i) for i in range(order + 1)]
    c = [spec.c.x_slice(i) for i in range(order + 1)]
    f: list[YPoly] = []
    sq: list[YPoly] = []  # sq[m] = [x^m] F^2, filled once F_0..F_m are known
    for n in range(order + 1):
        # b_0 F_n = -(c_n + sum_{k>=1} b_k F_{n-k} + [x^n] a F^2); a has no x^0 part
        acc = list(c[n])
        for k in range(1, n + 1):
            if b[k]:
                _yadd(acc, _ymul(b[k], f[n - k]))
        for p in range(1, n + 1):
            if a[p]:
                _yadd(acc, _ymul(a[p], sq[n - p]))
        f.append(_trim([-unit * v for v in acc]))
        s: YPoly = []
        for q in range(n + 1):
            _yadd(s, _ymul(f[q], f[n - q]))
        sq.append(_trim(s))
    return _rows(order, f)


def series_product(p: Poly2, s: TruncatedSeries2) -> list[YPoly]:
    """Rows of ``p * s`` through the order of ``s``."""
    out: list[YPoly] = [[] for _ in range(s.order + 1)]
    for n in range(s.order + 1):
        for i in range(min(n, p.x_degree) + 1):
            sl = p.x_slice(i)
            if sl:
                _yadd(out[n], _ymul(sl, s.coeffs[n - i]))
    return [_trim(r) for r in out]


def residual(spec: GFSpec, s: TruncatedSeries2) -> list[YPoly]:
    """Rows of the defining equation evaluated at ``s``; all empty when ``s`` is right."""
    if isinstance(spec, Rational):
        lhs = series_product(spec.den, s)
        return [_trim(_sub(lhs[n], spec.num.x_slice(n))) for n in range(s.order + 1)]
    sq = [[] for _ in range(s.order + 1)]
    for n in range(s.order + 1):
        for q in range(n + 1):
            _yadd(sq[n], _ymul(s.coeffs[q], s.coeffs[n - q]))
    square = TruncatedSeries2(s.order, sq)
    out = series_product(spec.a, square)
    for n, r in enumerate(series_product(spec.b, s)):
        _yadd(out[n], r)
    for n in range(s.order + 1):
        _yadd(out[n], spec.c.x_slice(n))
    return [_trim(r) for r in out]


def _sub(p: YPoly, q: YPoly) -> YPoly:
    out = list(p)
    _yadd(out, q, -1)
    return out


def counting_series(s: TruncatedSeries2) -> list[int]:
    return [sum(row) for row in s.coeffs]


def popularity_series(s: TruncatedSeries2) -> list[int]:
    return [sum(k * c for k, c in enumerate(row)) for row in s.coeffs]


def _r(num: str | Poly2, den: str | Poly2) -> Rational:
    return Rational(poly(num) if isinstance(num, str) else num, poly(den) if isinstance(den, str) else den)


REGISTRY: dict[str, GFSpec] = {
    # radical cleared: x y F^2 - (1 - 2x + 2xy) F + (1 - x + xy) = 0
    "unrestricted": Quadratic(poly("xy"), -poly("1-2x+2xy"), poly("1-x+xy")),
    "00": _r("1", "1-x"),
    "01": _r("1", "1-x"),
    "10": _r("1-x", "1-2x"),
    "012": _r("1-x+x^2-x^2y", "1-2x+x^2-x^2y"),
    "001": _r("1-x+x^2-x^2y", "1-2x+x^2-x^2y"),
    "010": _r("1-x", "1-2x"),
    "021": _r(
        "1-4x+6x^2-x^2y-4x^3+3x^3y+x^4-x^4y",
        poly("1-x") * poly("1-2x") * poly("1-2x+x^2-x^2y"),
    ),
    "102": _r("1-3x+3x^2-2x^2y-x^3+x^3y", poly("1-x") * poly("1-3x+2x^2-2x^2y")),
    "201": _r("1-3x+3x^2-2x^2y-x^3+x^3y", poly("1-x") * poly("1-3x+2x^2-2x^2y")),
    "120": _r("1-2x+x^2-x^2y", "1-3x+2x^2-x^2y"),
    "101": _r("1-2x+x^2-x^2y", "1-3x+2x^2-x^2y"),
    "011": _r("1-2x+2x^2-x^3+x^3y", poly("1-x") ** 3),
    "000": _r("1-x^2-x^2y", "1-x-2x^2-x^2y+x^3+x^4-x^4y"),
    "100": _r("1-2x-x^2y+x^3", "1-3x+x^2-x^2y+2x^3"),
    "110": _r("1-3x+2x^2+x^3-x^4+x^4y", poly("1-x") * poly("1-3x+x^2+2x^3-x^3y")),
    "210": _r("1-5x+8x^2-x^2y-4x^3+3x^3y-x^4y", poly("1-2x") * poly("1-4x+4x^2-x^2y+x^3y")),
}

KEYS = tuple(REGISTRY)


def registry(key: str) -> GFSpec:
    try:
        return REGISTRY[key]
    except KeyError:
        raise KeyError(f"unknown class {key!r}; expected one of {', '.join(KEYS)}") from None
