"""Command-line front end.

Exit codes: 0 success (including "not isomorphic" answers), 1 verification
failure, 2 usage or parse errors.  Any argument of the form ``@path`` is
replaced by the contents of that file before parsing.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .rj4 import cut_types, end_data, gap_profile, spectrum
from .seqs import flatten_check, label, parse_seq, tail_equiv, tail_equiv2
from .terms import (ParseError, Rj4Ref, ZSumRef, iso_check, normalize, parse,
                    render)
from .verify import Config, verify_all


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lexorder",
        description="symbolic calculator and verifier for order types under "
                    "the lexicographic product")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", help="parse an expression and print its AST rendering")
    sp.add_argument("expr")

    sp = sub.add_parser("normalize", help="print the rewrite normal form of an expression")
    sp.add_argument("expr")

    sp = sub.add_parser("iso", help="decide isomorphism of two expressions")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = sub.add_parser("spectrum", help="ladder spectrum of an Rj4 order, e.g. L(0)")
    sp.add_argument("expr")
    sp.add_argument("--length", type=int, default=24)

    sp = sub.add_parser("cuts", help="cut/gap classification of an expression")
    sp.add_argument("expr")

    sp = sub.add_parser("tail-equiv", help="tail-equivalence of two sequence literals")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--mod2", action="store_true",
                    help="require deleted prefixes of equal parity")

    sp = sub.add_parser("label", help="even/odd/full label of a sequence literal")
    sp.add_argument("seq")

    sp = sub.add_parser("flatten-demo", help="run the flattening-map checks")
    sp.add_argument("--alphabet", type=int, default=5)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=7)

    sp = sub.add_parser("verify", help="replay every check of the construction")
    sp.add_argument("--range", nargs=2, type=int, metavar=("A", "B"),
                    default=None, help="index range for the product law")
    sp.add_argument("--pairs", nargs=2, type=int, metavar=("A", "B"),
                    default=None, help="index range for pairwise checks")
    sp.add_argument("--depth", type=int, default=100, help="ladder depth")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--json", action="store_true", help="emit the report as JSON")
    return p


def _substitute_files(argv: Sequence[str]) -> list[str]:
    out = []
    for arg in argv:
        if arg.startswith("@") and len(arg) > 1:
            out.append(Path(arg[1:]).read_text().strip())
        else:
            out.append(arg)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    try:
        raw = _substitute_files(raw)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(raw)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "parse":
        print(render(parse(args.expr)))
        return 0

    if args.command == "normalize":
        print(render(normalize(parse(args.expr))))
        return 0

    if args.command == "iso":
        print(iso_check(parse(args.left), parse(args.right)))
        return 0

    if args.command == "spectrum":
        t = normalize(parse(args.expr))
        if not isinstance(t, Rj4Ref):
            print("error: spectrum needs an expression denoting an Rj4 order",
                  file=sys.stderr)
            return 2
        spec = spectrum(t.schema)
        runs = t.schema.seq
        print(f"runs: {runs}")
        print("expansion:", ", ".join(map(str, spec.expand(args.length))), "...")
        return 0

    if args.command == "cuts":
        t = normalize(parse(args.expr))
        if isinstance(t, Rj4Ref):
            kinds = ", ".join(sorted(str(k) for k in cut_types(t.schema)))
            coin, cof = end_data(t.schema)
            print(f"cut types: {{{kinds}}}")
            print(f"ends: coinitiality {coin}, cofinality {cof}")
            return 0
        if isinstance(t, ZSumRef):
            print(gap_profile(t.schema))
            return 0
        print("error: cuts supports Rj4 orders and Z-block sums", file=sys.stderr)
        return 2

    if args.command == "tail-equiv":
        u, v = parse_seq(args.left), parse_seq(args.right)
        verdict = tail_equiv2(u, v) if args.mod2 else tail_equiv(u, v)
        print("equivalent" if verdict else "not_equivalent")
        return 0

    if args.command == "label":
        print(label(parse_seq(args.seq)))
        return 0

    if args.command == "flatten-demo":
        report = flatten_check(args.alphabet, args.samples, args.seed)
        print(f"checked: {report.checked_order} order samples, "
              f"{report.checked_density} density constructions")
        print(f"violations: {len(report.violations)}")
        if not report.passed:
            print(f"first witness: {report.first_witness()}")
            return 1
        return 0

    if args.command == "verify":
        cfg = Config(
            range_i=tuple(args.range) if args.range else Config.range_i,
            pair_range=tuple(args.pairs) if args.pairs else Config.pair_range,
            ladder_depth=args.depth,
            flatten_samples=args.samples,
            law_samples=args.samples,
            seed=args.seed,
        )
        report = verify_all(cfg)
        print(report.to_json() if args.json else report.to_text())
        return 0 if report.passed else 1

    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
