"""Command line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 some checks were skipped (e.g. missing b-file snapshots).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Callable, Iterable

from . import genfunc, sequences
from .bijections import (
    catalan_to_dyck,
    catalan_to_tree,
    count_ddu,
    count_marked_nodes,
    dyck_to_catalan,
    node_count,
    tree_to_catalan,
    tree_to_string,
)
from .core import descent_count, enumerate_words, format_word, parse_word, validate
from .patterns import InvalidPattern, descent_distribution, pattern_key, words_in_class

BRUTE_LIMIT = 16

Table = dict[int, dict[int, int]]


class UsageError(Exception):
    pass


def _key(p: str | None) -> str:
    if p is None or p == "unrestricted":
        return "unrestricted"
    try:
        key = pattern_key(p)
    except InvalidPattern as exc:
        raise UsageError(str(exc)) from None
    return key


def _class_key(p: str | None) -> str:
    key = _key(p)
    if key not in genfunc.REGISTRY:
        raise UsageError(f"no generating function for pattern {key}; known: {', '.join(genfunc.KEYS)}")
    return key


def _check_bound(n: int, force: bool) -> None:
    if n < 0:
        raise UsageError("bounds must be non-negative")
    if n > BRUTE_LIMIT:
        if not force:
            raise UsageError(f"brute force above n={BRUTE_LIMIT} is slow; pass --force to run anyway")
        print(f"warning: brute force at n={n} may take a long time", file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- tables ------------------------------------------------------------------

def brute_table(key: str, bound: int) -> Table:
    pat = None if key == "unrestricted" else key
    return {n: descent_distribution(n, pat).counts for n in range(1, bound + 1)}


def gf_table(key: str, bound: int) -> Table:
    s = genfunc.expand(genfunc.registry(key), bound)
    return {n: s.row(n) for n in range(1, bound + 1)}


def render_table(table: Table, fmt: str) -> str:
    if fmt == "json":
        obj = {str(n): {str(k): str(c) for k, c in row.items()} for n, row in table.items()}
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "count"])
        for n, row in table.items():
            for k, c in row.items():
                writer.writerow([n, k, c])
        return buf.getvalue()
    ns = list(table)
    kmax = max((k for row in table.values() for k in row), default=0)
    cells = [["k\\n"] + [str(n) for n in ns]]
    for k in range(kmax + 1):
        cells.append([str(k)] + [str(table[n].get(k, "")) for n in ns])
    cells.append(["sum"] + [str(sum(table[n].values())) for n in ns])
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def parse_table(text: str, fmt: str) -> Table:
    """Inverse of :func:`render_table` for the json and csv formats."""
    if fmt == "json":
        return {int(n): {int(k): int(c) for k, c in row.items()} for n, row in json.loads(text).items()}
    if fmt == "csv":
        table: Table = {}
        for rec in csv.DictReader(io.StringIO(text)):
            table.setdefault(int(rec["n"]), {})[int(rec["k"])] = int(rec["count"])
        return table
    raise ValueError(f"cannot parse {fmt} tables")


# --- commands ----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    _check_bound(args.n, args.force)
    pat = None if args.pattern is None else _key(args.pattern)
    words = [format_word(w) for w in words_in_class(args.n, None if pat in (None, "unrestricted") else pat)]
    if args.format == "json":
        text = json.dumps(words) + "\n"
    else:
        text = "".join(w + "\n" for w in words)
    _emit(text, args.out)
    return 0


def cmd_table(args) -> int:
    key = _key(args.pattern)
    if args.source == "gf":
        key = _class_key(args.pattern)
    elif args.source != "brute":
        raise UsageError("tables come from --source brute or gf")
    else:
        _check_bound(args.N, args.force)
    if args.N < 1:
        raise UsageError("table bound must be at least 1")
    table = None
    cache = None
    if args.cache_dir:
        cache = Path(args.cache_dir) / f"table-{key}-{args.N}-{args.source}.json"
        if cache.exists():
            table = parse_table(cache.read_text(), "json")
    if table is None:
        table = brute_table(key, args.N) if args.source == "brute" else gf_table(key, args.N)
        if cache is not None:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_text(render_table(table, "json"))
    _emit(render_table(table, args.format), args.out)
    return 0


def sequence_terms(key: str, facet: str, bound: int, source: str) -> list[int]:
    if source == "closed":
        return [sequences.closed_form(key, facet, n) for n in range(bound + 1)]
    if source == "gf":
        s = genfunc.expand(genfunc.registry(key), bound)
        return genfunc.counting_series(s) if facet == "count" else genfunc.popularity_series(s)
    pat = None if key == "unrestricted" else key
    tables = [descent_distribution(n, pat) for n in range(bound + 1)]
    return [t.total if facet == "count" else t.popularity for t in tables]


def cmd_sequence(args) -> int:
    key = _class_key(args.pattern)
    if args.N < 0:
        raise UsageError("bounds must be non-negative")
    if args.source == "brute":
        _check_bound(args.N, args.force)
    terms = sequence_terms(key, args.facet, args.N, args.source)
    if args.format == "csv":
        text = ",".join(str(t) for t in terms) + "\n"
    elif args.format == "json":
        text = json.dumps([str(t) for t in terms]) + "\n"
    else:
        text = "".join(f"{t}\n" for t in terms)
    _emit(text, args.out)
    return 0


def cmd_gf(args) -> int:
    key = _class_key(args.pattern)
    if args.N < 1:
        raise UsageError("order must be at least 1")
    spec = genfunc.registry(key)
    table = gf_table(key, args.N)
    if args.format == "plain":
        text = f"{key}: {spec}\n" + render_table(table, "plain")
    else:
        text = render_table(table, args.format)
    _emit(text, args.out)
    return 0


def cmd_bijection(args) -> int:
    if args.dyck:
        try:
            w = dyck_to_catalan(args.dyck)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            w = parse_word(args.word)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not validate(w):
            raise UsageError(f"not a Catalan word: {args.word}")
    d = catalan_to_dyck(w)
    t = catalan_to_tree(w)
    info = {
        "word": format_word(w),
        "descents": descent_count(w),
        "dyck": d,
        "ddu": count_ddu(d),
        "tree": tree_to_string(t),
        "marked_nodes": count_marked_nodes(t),
    }
    if args.format == "json":
        text = json.dumps(info, indent=2) + "\n"
    else:
        text = "".join(f"{k}: {v}\n" for k, v in info.items())
    _emit(text, args.out)
    return 0


class Report:
    def __init__(self, out=None):
        self.out = out or sys.stdout
        self.failed = 0
        self.skipped = 0
        self.passed = 0

    def check(self, name: str, problem: str | None) -> None:
        if problem is None:
            self.passed += 1
            print(f"PASS {name}", file=self.out)
        else:
            self.failed += 1
            print(f"FAIL {name}: {problem}", file=self.out)

    def skip(self, name: str, why: str) -> None:
        self.skipped += 1
        print(f"SKIP {name}: {why}", file=self.out)

    @property
    def status(self) -> int:
        if self.failed:
            return 1
        return 3 if self.skipped else 0


def _first_table_mismatch(a: Table, b: Table) -> str | None:
    for n in sorted(set(a) | set(b)):
        ra, rb = a.get(n, {}), b.get(n, {})
        for k in sorted(set(ra) | set(rb)):
            if ra.get(k, 0) != rb.get(k, 0):
                return f"first mismatch at (n,k)=({n},{k}): brute {ra.get(k, 0)} vs gf {rb.get(k, 0)}"
    return None


def _first_seq_mismatch(label: str, a: list[int], b: list[int]) -> str | None:
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return f"first mismatch at n={n}: brute {x} vs {label} {y}"
    return None


def _first_failure(items: Iterable, pred: Callable) -> str | None:
    for item in items:
        msg = pred(item)
        if msg:
            return msg
    return None


def run_verify(bound: int, snapshots: str | None, out=None) -> int:
    rep = Report(out)
    for key in genfunc.KEYS:
        pat = None if key == "unrestricted" else key
        dists = [descent_distribution(n, pat) for n in range(bound + 1)]
        brute = {n: d.counts for n, d in enumerate(dists)}
        try:
            series = genfunc.expand(genfunc.registry(key), bound)
        except (ValueError, TypeError) as exc:
            rep.check(f"[{key}] brute force = generating function, n<={bound}", f"expansion failed: {exc}")
            continue
        gf = {n: series.row(n) for n in range(bound + 1)}
        rep.check(f"[{key}] brute force = generating function, n<={bound}", _first_table_mismatch(brute, gf))
        for facet in sequences.FACETS:
            bf = [d.total if facet == "count" else d.popularity for d in dists]
            gs = genfunc.counting_series(series) if facet == "count" else genfunc.popularity_series(series)
            cf = [sequences.closed_form(key, facet, n) for n in range(bound + 1)]
            kind = sequences.sequence_spec(key, facet).kind
            rep.check(
                f"[{key}] {facet}: brute = gf = {kind}, n<={bound}",
                _first_seq_mismatch("gf", bf, gs) or _first_seq_mismatch(kind, bf, cf),
            )

    rep.check(
        "count 100: ceiling form = recurrence, n<=20",
        _first_failure(
            range(1, 21),
            lambda n: None if sequences.count_100_ceiling(n) == sequences.count_closed_form("100", n)
            else f"n={n}",
        ),
    )
    try:
        [sequences.count_110_halfsum(n) for n in range(1, 21)]
        rep.check("count 110: half-sum is integral, n<=20", None)
    except ArithmeticError as exc:
        rep.check("count 110: half-sum is integral, n<=20", str(exc))

    diag = []
    for m in range((bound - 1) // 2 + 1):
        c = sum(1 for w in enumerate_words(2 * m + 1) if descent_count(w) == m)
        if c != sequences.catalan_diagonal(m):
            diag.append(f"m={m}: {c} words vs {sequences.catalan_diagonal(m)}")
    rep.check(f"length 2m+1 with m descents = Catalan(m), 2m+1<={bound}", diag[0] if diag else None)

    nb = min(bound, 10)

    def bijection_problem(w):
        d = catalan_to_dyck(w)
        t = catalan_to_tree(w)
        if dyck_to_catalan(d) != w:
            return f"dyck round trip fails on {format_word(w)}"
        if tree_to_catalan(t) != w or node_count(t) != len(w):
            return f"tree round trip fails on {format_word(w)}"
        if not (count_ddu(d) == count_marked_nodes(t) == descent_count(w)):
            return f"statistics disagree on {format_word(w)}"
        return None

    rep.check(
        f"bijections: round trips and descent transport, n<={nb}",
        _first_failure((w for n in range(nb + 1) for w in enumerate_words(n)), bijection_problem),
    )

    snap = Path(snapshots) if snapshots else sequences.default_snapshot_dir()
    for ref in sequences.OEIS_REFS:
        name = f"OEIS {ref.a_number} vs {ref.key} {ref.facet}"
        if not (snap / ref.filename).exists():
            rep.skip(name, f"no snapshot {ref.filename} in {snap}")
            continue
        comp = _oeis_compare(ref, snap, None, "gf")
        rep.check(name, None if comp.ok else str(comp))

    print(f"{rep.passed} passed, {rep.failed} failed, {rep.skipped} skipped", file=rep.out)
    return rep.status


def _oeis_compare(ref, snap: Path, terms: int | None, source: str):
    b = sequences.read_bfile(snap / ref.filename)
    last = b.entries[-1][0] + ref.shift
    if terms is not None:
        last = min(last, b.offset + ref.shift + terms - 1)
    return sequences.compare_with_bfile(sequence_terms(ref.key, ref.facet, last, source), -ref.shift, b)


def cmd_verify(args) -> int:
    if args.N < 1:
        raise UsageError("verify bound must be at least 1")
    _check_bound(args.N, args.force)
    if args.snapshots and not Path(args.snapshots).is_dir():
        print(f"warning: snapshot directory {args.snapshots} not found; OEIS checks skipped", file=sys.stderr)
    return run_verify(args.N, args.snapshots)


def cmd_oeis_check(args) -> int:
    snap = Path(args.snapshots) if args.snapshots else sequences.default_snapshot_dir()
    rep = Report()
    for ref in sequences.OEIS_REFS:
        name = f"{ref.a_number} ({ref.key} {ref.facet}, word length n at index n-{ref.shift})"
        if not (snap / ref.filename).exists():
            rep.skip(name, f"no snapshot in {snap}")
            continue
        comp = _oeis_compare(ref, snap, args.N, args.source)
        rep.check(name, None if comp.ok else str(comp))
        if comp.ok:
            print(f"     {comp}")
    return rep.status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catwords", description="Descents on pattern-avoiding Catalan words")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmts=("plain", "json", "csv")):
        p.add_argument("--format", choices=fmts, default="plain")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("enumerate", help="list Catalan words, optionally avoiding a pattern")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", "--pattern")
    p.add_argument("--force", action="store_true", help=f"allow n > {BRUTE_LIMIT}")
    common(p, ("plain", "json"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="descent distribution c(n,k) for 1 <= n <= N")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-p", "--pattern")
    p.add_argument("--source", choices=("brute", "gf"), default="brute")
    p.add_argument("--cache-dir")
    p.add_argument("--force", action="store_true")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sequence", help="count or popularity sequence a_0..a_N")
    p.add_argument("facet", choices=sequences.FACETS)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-p", "--pattern")
    p.add_argument("--source", choices=("closed", "gf", "brute"), default="closed")
    p.add_argument("--force", action="store_true")
    common(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("gf", help="show a generating function and its expansion")
    p.add_argument("-N", type=int, default=10)
    p.add_argument("-p", "--pattern")
    common(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("bijection", help="Dyck word and binary tree of a Catalan word")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-w", "--word")
    g.add_argument("--dyck")
    common(p, ("plain", "json"))
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="cross-check brute force, generating functions and closed forms")
    p.add_argument("-N", type=int, default=10)
    p.add_argument("--snapshots")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis-check", help="compare sequences with vendored b-files")
    p.add_argument("-N", type=int, help="compare at most this many terms")
    p.add_argument("--snapshots")
    p.add_argument("--source", choices=("closed", "gf"), default="gf")
    p.set_defaults(func=cmd_oeis_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
