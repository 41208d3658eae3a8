"""Command-line interface: ``atomlab <verb> [input] [options]``.

Exit status: 0 success, 1 input error, 2 capacity error, 3 internal
inconsistency (a computed result contradicting a theorem).
"""

from __future__ import annotations

import argparse
import json
import sys

from atomlab.atoms import atom_complexity, atoms_of, classify, psi
from atomlab.automata import Dfa, is_minimal, minimize, transition_semigroup
from atomlab.census import FLAG_NAMES, run_census, run_random_census
from atomlab.errors import AtomlabError, InvalidArgument
from atomlab.ingest import load_dfa, regex_to_dfa, render_dfa, witness
from atomlab.report import (
    analyze,
    atomaton_rows,
    atomaton_table,
    psi_row,
    render_complexities,
    render_flags,
    render_report,
    render_semigroup,
    require_semigroup_size,
)
from atomlab.semigroup import default_cap, semigroup_stats
from atomlab.transform import format_set, size, stateset

INPUT_VERBS = ("atoms", "atomaton", "atom-complexity", "semigroup", "classify", "analyze")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=None,
                        help="closure cap (default: $ATOMLAB_CAP or 2000000)")
    common.add_argument("--quiet", action="store_true", help="suppress notices")

    parser = _Parser(prog="atomlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb in INPUT_VERBS:
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("input", nargs="?", help="DFA file (.dfa text or .json)")
        p.add_argument("--regex", help="build the input from a regular expression")
        if verb == "atom-complexity":
            p.add_argument("--subset", help="atom as comma-separated states, e.g. 1,2 ('' for ∅)")

    p = sub.add_parser("psi", parents=[common])
    p.add_argument("N", type=int)

    p = sub.add_parser("witness", parents=[common])
    p.add_argument("N", type=int)

    p = sub.add_parser("census", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--samples", type=int, default=None,
                   help="sample this many random minimal DFAs instead of enumerating")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _note(args, message: str) -> None:
    if not args.quiet:
        print(f"note: {message}", file=sys.stderr)


def _load(args) -> Dfa:
    if (args.input is None) == (args.regex is None):
        raise InvalidArgument("give exactly one of an input file or --regex")
    if args.regex is not None:
        return regex_to_dfa(args.regex)
    try:
        dfa = load_dfa(args.input)
    except OSError as exc:
        raise InvalidArgument(f"cannot read {args.input}: {exc.strerror}") from None
    if not is_minimal(dfa):
        dfa = minimize(dfa)
        _note(args, f"input is not minimal; using its minimal DFA ({dfa.n} states)")
    return dfa


def _parse_subset(text: str | None, n: int) -> int:
    if text is None:
        raise InvalidArgument("--subset is required")
    text = text.strip().strip("{}")
    if text in ("", "∅"):
        return 0
    try:
        return stateset((int(x) for x in text.split(",")), n)
    except ValueError:
        raise InvalidArgument(f"bad --subset {text!r}") from None


def _emit(args, table: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(table)


def run(args) -> int:
    cap = args.cap if args.cap is not None else default_cap()
    verb = args.verb

    if verb == "psi":
        row = psi_row(args.N)
        _emit(args, " ".join(map(str, row)), {"n": args.N, "psi": row})
        return 0

    if verb == "witness":
        dfa = witness(args.N)
        if args.format == "json":
            from atomlab.ingest import dfa_to_json

            print(json.dumps(dfa_to_json(dfa), indent=2))
        else:
            print(render_dfa(dfa), end="")
        return 0

    if verb == "census":
        if args.samples is None:
            result = run_census(args.n, args.sigma, cap)
        else:
            result = run_random_census(args.n, args.sigma, args.samples, args.seed, cap=cap)
        data = result.as_dict()
        lines = [
            f"n={result.n} sigma={result.sigma}",
            f"DFAs visited: {result.raw}",
            f"minimal, up to isomorphism: {result.unique}",
            " ".join(f"{k}={result.counts[k]}" for k in FLAG_NAMES),
            f"decider disagreements: {len(result.disagreements)}",
        ]
        _emit(args, "\n".join(lines), data)
        return 0 if not result.disagreements else 3

    dfa = _load(args)

    if verb == "atoms":
        poset = atoms_of(dfa)
        _emit(args, str(poset), {"atoms": [format_set(s) for s in poset.atoms]})
    elif verb == "atomaton":
        rows = atomaton_rows(dfa)
        data = {
            "alphabet": list(dfa.alphabet),
            "rows": [{"marker": m, "atom": a, "eta": dict(zip(dfa.alphabet, c))}
                     for m, a, c in rows],
        }
        _emit(args, atomaton_table(dfa), data)
    elif verb == "atom-complexity":
        s = _parse_subset(args.subset, dfa.n)
        achieved = atom_complexity(dfa, s)
        target = psi(dfa.n, size(s))
        table = {format_set(s): {"achieved": achieved, "target": target}}
        _emit(args, render_complexities(table), {"atom": format_set(s), "achieved": achieved,
                                                 "target": target})
    elif verb == "semigroup":
        require_semigroup_size(dfa)
        stats = semigroup_stats(transition_semigroup(dfa, cap))
        data = dict(stats)
        data["set_transitive_by_k"] = {str(k): v for k, v in stats["set_transitive_by_k"].items()}
        data["rank_histogram"] = {str(k): v for k, v in stats["rank_histogram"].items()}
        _emit(args, render_semigroup(data), data)
    elif verb == "classify":
        require_semigroup_size(dfa)
        flags = classify(dfa, cap)
        data = {"flags": flags.as_dict(), "deciders_agree": flags.deciders_agree}
        _emit(args, render_flags(data["flags"], flags.deciders_agree), data)
    elif verb == "analyze":
        report = analyze(dfa, cap)
        _emit(args, render_report(report, dfa), report)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except AtomlabError as exc:
        print(f"atomlab: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
