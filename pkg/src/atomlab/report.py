"""Analysis reports and their table/JSON renderings."""

from __future__ import annotations

from atomlab.atoms import (
    AtomicPoset,
    atomaton,
    atoms_of,
    classify,
    is_maximally_atomic_algebraic,
    is_maximally_atomic_semantic,
    psi,
)
from atomlab.automata import Dfa, determinize, reverse, transition_semigroup
from atomlab.errors import InvalidArgument
from atomlab.semigroup import semigroup_stats
from atomlab.transform import format_set, stateset

FULL_SEMIGROUP_MAX_N = 10


def atoms_in_reverse_order(dfa: Dfa) -> list[int]:
    """Atoms in the BFS order of the reversed, determinized DFA."""
    return [stateset(label) for label in determinize(reverse(dfa)).labels]


def atomaton_rows(dfa: Dfa, poset: AtomicPoset | None = None) -> list[tuple[str, str, list[str]]]:
    """Rows ``(marker, atom, cells)``; markers are → initial, ← final, ↔ both."""
    nfa = atomaton(dfa, poset)
    rows = []
    for s in atoms_in_reverse_order(dfa):
        init, fin = s in nfa.initials, s in nfa.finals
        marker = "↔" if init and fin else "→" if init else "←" if fin else ""
        cells = []
        for a in dfa.alphabet:
            targets = sorted(nfa.successors(s, a), key=lambda x: (bin(x).count("1"), x))
            cells.append("{" + ",".join(format_set(t) for t in targets) + "}" if targets else "")
        rows.append((marker, format_set(s), cells))
    return rows


def atomaton_table(dfa: Dfa, poset: AtomicPoset | None = None) -> str:
    rows = atomaton_rows(dfa, poset)
    header = ("", "η", list(dfa.alphabet))
    table = [header] + rows
    w0 = max(len(r[0]) for r in table)
    w1 = max(len(r[1]) for r in table)
    widths = [max(len(r[2][k]) for r in table) for k in range(len(dfa.alphabet))]
    lines = []
    for marker, atom, cells in table:
        parts = [marker.ljust(w0), atom.ljust(w1)] + [c.ljust(w) for c, w in zip(cells, widths)]
        lines.append("  ".join(parts).rstrip())
    return "\n".join(lines)


def complexity_table(dfa: Dfa, poset: AtomicPoset | None = None) -> dict:
    verdict = is_maximally_atomic_semantic(dfa, poset)
    return {format_set(s): {"achieved": a, "target": t} for s, a, t in verdict.table}


def analyze(dfa: Dfa, cap: int | None = None) -> dict:
    """Everything the tool knows about one minimal DFA, as a JSON-ready dict."""
    require_semigroup_size(dfa)
    poset = atoms_of(dfa)
    semantic = is_maximally_atomic_semantic(dfa, poset)
    report = {
        "n": dfa.n,
        "alphabet": list(dfa.alphabet),
        "atoms": [format_set(s) for s in poset.atoms],
        "atom_complexities": {
            format_set(s): {"achieved": a, "target": t} for s, a, t in semantic.table
        },
        "semigroup": None,
        "flags": None,
        "deciders_agree": None,
    }
    semigroup = transition_semigroup(dfa, cap)
    stats = semigroup_stats(semigroup)
    stats["set_transitive_by_k"] = {str(k): v for k, v in stats["set_transitive_by_k"].items()}
    stats["rank_histogram"] = {str(k): v for k, v in stats["rank_histogram"].items()}
    report["semigroup"] = stats
    algebraic = is_maximally_atomic_algebraic(dfa, semigroup=semigroup)
    report["deciders_agree"] = semantic.result == algebraic.result
    report["maximally_atomic"] = semantic.result
    if dfa.n >= 2:
        flags = classify(dfa, semigroup=semigroup, poset=poset, semantic=semantic)
        report["flags"] = flags.as_dict()
    return report


def require_semigroup_size(dfa: Dfa) -> None:
    if dfa.n > FULL_SEMIGROUP_MAX_N:
        raise InvalidArgument(
            f"full-semigroup analysis needs n <= {FULL_SEMIGROUP_MAX_N} (got n = {dfa.n}); "
            "atom-only commands accept larger DFAs"
        )


def psi_row(n: int) -> list[int]:
    return [psi(n, k) for k in range(n + 1)]


def render_semigroup(stats: dict) -> str:
    lines = [
        f"size: {stats['size']}",
        "rank histogram: " + " ".join(f"{k}:{v}" for k, v in stats["rank_histogram"].items()),
        f"permutation subgroup order: {stats['subgroup_order']}",
        "set-transitive by k: " + " ".join(
            f"{k}:{'yes' if v else 'no'}" for k, v in stats["set_transitive_by_k"].items()
        ),
        f"set-transitive: {'yes' if stats['set_transitive'] else 'no'}",
        f"recognition: {stats['recognition'] or '-'}",
        f"rank n-1 present: {'yes' if stats['has_rank_n_minus_1'] else 'no'}",
    ]
    return "\n".join(lines)


def render_complexities(table: dict) -> str:
    width = max(len(k) for k in table)
    lines = [f"{'atom'.ljust(width)}  achieved  target"]
    for atom, row in table.items():
        mark = "" if row["achieved"] == row["target"] else "  *"
        lines.append(f"{atom.ljust(width)}  {row['achieved']:>8}  {row['target']:>6}{mark}")
    return "\n".join(lines)


def render_flags(flags: dict | None, agree) -> str:
    if flags is None:
        text = "flags: n/a (defined for n >= 2)"
    else:
        text = " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items())
    if agree is not None:
        text += f"\ndeciders agree: {'yes' if agree else 'no'}"
    return text


def render_report(report: dict, dfa: Dfa) -> str:
    parts = [
        f"states: {report['n']}   alphabet: {' '.join(report['alphabet'])}",
        "atoms: " + " ".join(report["atoms"]),
        "",
        atomaton_table(dfa),
        "",
        render_complexities(report["atom_complexities"]),
    ]
    parts += ["", render_semigroup(report["semigroup"])]
    parts += ["", render_flags(report["flags"], report["deciders_agree"])]
    return "\n".join(parts)
