"""Command-line front end.

Subcommands: build, verify, props, halo, aut, dual, iso, classify, suite.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 success or a true
analytical outcome, 1 a false analytical outcome (not isomorphic, axioms fail,
shape mismatch, suite failures), 2 usage errors, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Union

from .catalog import classify, dumps_catalog, run_theorem_suite
from .dimonoid import DiTable, di_flags, dual_dimonoid, halo, naive_flip
from .errors import DimonoidError
from .families import FamilyParams, build
from .morphisms import (
    SymmetricProductSpec,
    are_isomorphic,
    automorphisms,
    as_ditable,
    matches_symmetric_product,
)
from .tables import OpTable

Structure = Union[OpTable, DiTable]


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dimonoids",
        description="construct, verify, analyze and classify finite dimonoids",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("build", help="build a family table")
    p.add_argument("--family", help="family name, e.g. LO, LOB, O_A, LO_arrow")
    p.add_argument("--n", type=int)
    p.add_argument("--A", help="comma-separated indices, e.g. 0,1")
    p.add_argument("--a", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--zero", type=int)
    p.add_argument("--json", dest="inline", help="inline FamilyParams document")
    add_format(p)

    for name, help_ in (
        ("verify", "check the axioms of a table pair"),
        ("props", "predicate flags of a dimonoid"),
        ("halo", "bar-units of a dimonoid"),
        ("dual", "dual dimonoid (or naive two-sided flip)"),
        ("aut", "automorphism group"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", help="JSON file; omit when using --json")
        p.add_argument("--json", dest="inline", help="inline JSON document")
        if name == "dual":
            p.add_argument("--naive", action="store_true",
                           help="transpose both tables instead of dualizing")
        if name == "aut":
            p.add_argument("--spec", help="expected shape, e.g. 'fixed=0,1;blocks=2,3|4'")
        add_format(p)

    p = sub.add_parser("iso", help="isomorphism test for two structures")
    p.add_argument("file_a", help="JSON file, or an inline document starting with '{'")
    p.add_argument("file_b", help="JSON file, or an inline document starting with '{'")
    add_format(p)

    p = sub.add_parser("classify", help="catalog of isomorphism classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quotient", choices=("iso", "iso-dual"), default="iso")
    p.add_argument("--out", help="write the catalog here instead of stdout")

    p = sub.add_parser("suite", help="run the structural-theorem verification sweep")
    p.add_argument("--n-max", type=int, required=True)
    add_format(p)

    return top


def _emit(doc: dict, fmt: str, table_text: Optional[str] = None) -> None:
    if fmt == "json" or table_text is None:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(table_text)


def _fail(code: str, message: str) -> None:
    print(json.dumps({"error": {"code": code, "message": message}}),
          file=sys.stderr)


def _load_structure(path: Optional[str], inline: Optional[str]) -> Structure:
    if inline is None and path is None:
        raise DimonoidError("no input: pass a file or --json")
    if inline is not None:
        text = inline
    elif path.lstrip().startswith("{"):
        text = path
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if isinstance(doc, dict) and "table" in doc:
        return OpTable.from_json(doc)
    return DiTable.from_json(doc)


def _grid(title: str, rows: list[list[int]]) -> list[str]:
    n = len(rows)
    width = max(1, len(str(n - 1)))
    head = f"{title:>{width}} | " + " ".join(f"{y:>{width}}" for y in range(n))
    sep = "-" * len(head)
    body = [f"{x:>{width}} | " + " ".join(f"{v:>{width}}" for v in rows[x])
            for x in range(n)]
    return [head, sep, *body]


def _render_ditable(d: DiTable) -> str:
    left = _grid("⊣", d.left.rows())
    right = _grid("⊢", d.right.rows())
    gap = "    "
    return "\n".join(a + gap + b for a, b in zip(left, right))


def _render_optable(t: OpTable) -> str:
    return "\n".join(_grid("*", t.rows()))


def _parse_index_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(v) for v in text.split(","))


def _parse_spec(text: str) -> SymmetricProductSpec:
    fixed: frozenset[int] = frozenset()
    blocks: list[frozenset[int]] = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        if key.strip() == "fixed":
            fixed = _parse_index_set(value)
        elif key.strip() == "blocks":
            blocks = [_parse_index_set(b) for b in value.split("|") if b.strip()]
        else:
            raise DimonoidError(f"bad spec fragment {part!r}")
    return SymmetricProductSpec.of(fixed, blocks)


def _workers() -> int:
    env = os.environ.get("DIMONOID_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _cmd_build(args) -> int:
    if args.inline is not None:
        params = FamilyParams.from_json(json.loads(args.inline))
    else:
        if args.family is None or args.n is None:
            raise DimonoidError("build needs --family and --n (or --json)")
        params = FamilyParams(
            family=args.family,
            n=args.n,
            A=None if args.A is None else _parse_index_set(args.A),
            a=args.a,
            c=args.c,
            zero=args.zero,
        )
    table = build(params)
    _emit(table.to_json(), args.format, _render_optable(table))
    return 0


def _cmd_verify(args) -> int:
    d = as_ditable(_load_structure(args.file, args.inline))
    report = d.axiom_status
    text = _render_ditable(d) + "\n" + "\n".join(
        f"{name}: " + ("ok" if w is None else f"witness {w}")
        for name, w in ((k, getattr(report, k)) for k in
                        ("assoc_left", "assoc_right", "d1", "d2", "d3")))
    _emit(report.to_json(), args.format, text)
    return 0 if report.all_ok else 1


def _cmd_props(args) -> int:
    d = as_ditable(_load_structure(args.file, args.inline))
    flags = di_flags(d)
    text = "\n".join(f"{k}: {v}" for k, v in flags.to_json().items())
    _emit(flags.to_json(), args.format, text)
    return 0


def _cmd_halo(args) -> int:
    d = as_ditable(_load_structure(args.file, args.inline))
    h = sorted(halo(d))
    _emit({"halo": h}, args.format, "halo: {" + ", ".join(map(str, h)) + "}")
    return 0


def _cmd_dual(args) -> int:
    d = as_ditable(_load_structure(args.file, args.inline))
    out = naive_flip(d) if args.naive else dual_dimonoid(d)
    _emit(out.to_json(), args.format, _render_ditable(out))
    return 0


def _cmd_aut(args) -> int:
    d = as_ditable(_load_structure(args.file, args.inline))
    auts = automorphisms(d)
    doc = auts.to_json()
    code = 0
    if args.spec:
        spec = _parse_spec(args.spec)
        ok = matches_symmetric_product(auts, spec)
        doc["matches_spec"] = ok
        code = 0 if ok else 1
    text = f"order: {doc['order']}"
    if "matches_spec" in doc:
        text += f"\nmatches_spec: {doc['matches_spec']}"
    _emit(doc, args.format, text)
    return code


def _cmd_iso(args) -> int:
    a = _load_structure(args.file_a, None)
    b = _load_structure(args.file_b, None)
    ok = are_isomorphic(a, b)
    _emit({"isomorphic": ok}, args.format, "true" if ok else "false")
    return 0 if ok else 1


def _cmd_classify(args) -> int:
    quotient = "iso" if args.quotient == "iso" else "iso_and_duality"
    entries = classify(args.n, quotient=quotient, workers=_workers())
    text = dumps_catalog(entries)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"classes: {len(entries)}, labeled: "
          f"{sum(e.labeled_count for e in entries)}", file=sys.stderr)
    return 0


def _cmd_suite(args) -> int:
    report = run_theorem_suite(args.n_max)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for line in report.lines():
            print(line)
    return 0 if report.passed else 1


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "props": _cmd_props,
    "halo": _cmd_halo,
    "dual": _cmd_dual,
    "aut": _cmd_aut,
    "iso": _cmd_iso,
    "classify": _cmd_classify,
    "suite": _cmd_suite,
}


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage to the error stream
        return int(exc.code) if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except DimonoidError as exc:
        _fail(type(exc).__name__, str(exc))
        return 3
    except (json.JSONDecodeError, OSError, KeyError, TypeError, ValueError) as exc:
        _fail(type(exc).__name__, str(exc))
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
