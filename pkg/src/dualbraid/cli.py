"""Command-line front end.

Exit codes: 0 success, 1 usage or parse failure, 2 contract violation,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import enumeration, garside, oracle, ordering, parser, rotating
from .ordering import OrderResult
from .words import ArtinWord, BandWord

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRACT = 2
EXIT_MISMATCH = 3

_VERDICT = {OrderResult.LESS: "LT", OrderResult.EQUAL: "EQ", OrderResult.GREATER: "GT"}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dualbraid",
        description="Dual braid monoid engine: rotating normal form and ordering.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--strands", "-n", type=int, required=True)
        return p

    add("normalize", "print the rotating normal form of a band word").add_argument("word")
    add("compare", "compare two band words in both orderings").add_argument(
        "words", nargs=2
    )
    add("split", "print the rotation splitting of a band word").add_argument("word")
    add("tree", "print the iterated splitting tree as nested arrays").add_argument("word")
    add("oracle", "print the sigma-classification of an Artin word").add_argument("word")
    verify = add("enum-verify", "exhaustively cross-check both orderings")
    verify.add_argument("--max-length", type=int, default=3)
    return top


def _tree_to_json(tree) -> list:
    # Leaf exponents are emitted as singleton arrays so that the nesting
    # depth of the document is uniform for a fixed strand count.
    if isinstance(tree, int):
        return [tree]
    return [_tree_to_json(child) for child in tree]


def _cmd_normalize(args) -> int:
    w = parser.parse_band_word(args.word, args.strands)
    print(parser.format_band(rotating.rnf(w)))
    return EXIT_OK


def _cmd_compare(args) -> int:
    u = parser.parse_band_word(args.words[0], args.strands)
    v = parser.parse_band_word(args.words[1], args.strands)
    rot = ordering.cmp_rotating(u, v)
    deh = oracle.cmp_dehornoy(u, v)
    mismatch = rot is not deh
    print(f"rotating: {_VERDICT[rot]}")
    print(f"oracle:   {_VERDICT[deh]}")
    print(f"mismatch: {'yes' if mismatch else 'no'}")
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _cmd_split(args) -> int:
    w = parser.parse_band_word(args.word, args.strands)
    split = rotating.splitting(w)
    for entry in split.entries:
        print(parser.format_band(rotating.rnf(entry)))
    return EXIT_OK


def _cmd_tree(args) -> int:
    w = parser.parse_band_word(args.word, args.strands)
    print(json.dumps(_tree_to_json(rotating.splitting_tree(w))))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    w = parser.parse_artin_word(args.word, args.strands)
    print(str(oracle.sigma_class(w)))
    return EXIT_OK


def _cmd_enum_verify(args) -> int:
    n, max_length = args.strands, args.max_length
    elements = enumeration.enumerate_elements(n, max_length)
    print(f"{len(elements)} elements of length <= {max_length} at n={n}")
    checked = failed = 0
    for u, v in combinations(elements, 2):
        checked += 1
        if ordering.cmp_rotating(u, v) is not oracle.cmp_dehornoy(u, v):
            failed += 1
            print(f"MISMATCH: {u} vs {v}")
    print(f"ordering agreement: {checked - failed}/{checked} pairs")
    for w in elements:
        if w.is_trivial_word():
            continue
        checked += 1
        split = rotating.splitting(w)
        if not garside.equal(rotating.rnf(w), w):
            failed += 1
            print(f"NORMAL FORM MISMATCH: {w}")
        if split.breadth >= 2 and split.entries[0].is_trivial_word():
            failed += 1
            print(f"SPLITTING HEAD TRIVIAL: {w}")
    print(f"total: {checked - failed}/{checked} checks passed")
    return EXIT_MISMATCH if failed else EXIT_OK


_COMMANDS = {
    "normalize": _cmd_normalize,
    "compare": _cmd_compare,
    "split": _cmd_split,
    "tree": _cmd_tree,
    "oracle": _cmd_oracle,
    "enum-verify": _cmd_enum_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except parser.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
