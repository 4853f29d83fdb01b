"""Write the vendored b-file snapshots under src/catwords/data/bfiles.

The sandbox these were produced in had no route to oeis.org, so each file is
rebuilt from the defining formula and offset of its OEIS entry rather than
downloaded.  Formulas are written in the entry's own indexing, not in terms
of word length.
"""
from math import comb
from pathlib import Path

import mpmath

TERMS = 41
OUT = Path(__file__).resolve().parents[1] / "src" / "catwords" / "data" / "bfiles"


def fib(m):
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def a057960(n):
    mpmath.mp.dps = 80
    return int(mpmath.ceil((1 + mpmath.sqrt(3)) ** (n + 1) / 12))


def a001870(n):
    # expansion of (1-x)/(1-3x+x^2)^2
    num, den = [1, -1], [1, -6, 11, -6, 1]
    out = []
    for m in range(n + 1):
        acc = num[m] if m < len(num) else 0
        acc -= sum(den[k] * out[m - k] for k in range(1, min(m, 4) + 1))
        out.append(acc)
    return out[n]


SEQUENCES = {
    # a-number: (offset, formula, description)
    "A000108": (0, lambda n: comb(2 * n, n) // (n + 1), "Catalan numbers C(2n,n)/(n+1)"),
    "A002694": (2, lambda n: comb(2 * n, n - 2), "binomial(2n, n-2)"),
    "A011782": (0, lambda n: 1 if n == 0 else 2 ** (n - 1), "1, then 2^(n-1)"),
    "A001787": (0, lambda n: n * 2 ** n // 2, "n*2^(n-1)"),
    "A005183": (0, lambda n: n * 2 ** n // 2 + 1, "n*2^(n-1) + 1"),
    "A001793": (1, lambda n: n * (n + 3) * 2 ** n // 8, "n*(n+3)*2^(n-3)"),
    "A007051": (0, lambda n: (3 ** n + 1) // 2, "(3^n + 1)/2"),
    "A027471": (1, lambda n: (n - 1) * 3 ** n // 9, "(n-1)*3^(n-2)"),
    "A001519": (0, lambda n: 1 if n == 0 else fib(2 * n - 1), "a(0)=1, a(n)=F(2n-1)"),
    "A001870": (0, a001870, "expansion of (1-x)/(1-3x+x^2)^2"),
    "A000124": (0, lambda n: n * (n + 1) // 2 + 1, "n(n+1)/2 + 1"),
    "A000217": (0, lambda n: n * (n + 1) // 2, "n(n+1)/2"),
    "A057960": (0, a057960, "ceiling((1+sqrt(3))^(n+1)/12)"),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for a_number, (offset, f, desc) in SEQUENCES.items():
        lines = [
            f"# {a_number}: {desc}",
            f"# offset {offset}; {TERMS} terms regenerated offline from the defining formula",
        ]
        lines += [f"{n} {f(n)}" for n in range(offset, offset + TERMS)]
        (OUT / f"b{a_number[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
