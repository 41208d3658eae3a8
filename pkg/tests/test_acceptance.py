"""Acceptance criteria, one test each.

Every test records a ``PASS`` or ``FAIL`` line (also printed at the end of
the pytest run) before asserting, so a failing criterion still reports.
"""

import random
import time

import pytest

from atomlab.atoms import (
    atom_complexity,
    atomaton,
    atoms_of,
    classify,
    eta_on_interval,
    is_maximally_atomic_semantic,
    psi,
)
from atomlab.automata import Dfa, determinize, minimize, reverse
from atomlab.census import (
    CensusResult,
    enumerate_minimal_dfas,
    random_minimal_dfa,
    tally,
)
from atomlab.groups import ORDERS, exceptional_group
from atomlab.ingest import regex_to_dfa, witness
from atomlab.report import atomaton_rows
from atomlab.semigroup import (
    AGL_1_5,
    ALTERNATING,
    PGAMMAL_2_8,
    PGL_2_5,
    PSL_2_8,
    SYMMETRIC,
    PermGroup,
    alternating_group,
    closure,
    contains_all_singular,
    is_k_set_transitive,
    orbit_count,
    permutation_subgroup,
    recognize_set_transitive,
    symmetric_group,
)
from atomlab.transform import (
    Transformation,
    from_cycles,
    make_unitary,
    rank,
    size,
    stateset,
)

from helpers import random_perm_group

# Every DFA touched by the suite, for the atom-count cross-check.
SEEN_DFAS = []


def report(log, number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    log.append(line)
    print(line)
    return ok


def fmt(s):
    return "{" + ",".join(str(i) for i in range(1, 17) if s >> (i - 1) & 1) + "}" if s else "∅"


@pytest.fixture(scope="module")
def censuses():
    start = time.perf_counter()
    exhaustive = CensusResult(3, 2, raw=3 * 2**3 * 3 ** 6)
    for dfa in enumerate_minimal_dfas(3, 2):
        tally(exhaustive, dfa)
        SEEN_DFAS.append(dfa)
    randoms = []
    for n, count, seed in ((4, 500, 1), (5, 200, 2)):
        rng = random.Random(seed)
        result = CensusResult(n, 3, raw=count)
        for _ in range(count):
            dfa = random_minimal_dfa(rng, n, 3)
            tally(result, dfa)
            SEEN_DFAS.append(dfa)
        randoms.append(result)
    return [exhaustive] + randoms, time.perf_counter() - start


def a4_dfa():
    delta = (from_cycles(4, [(1, 2, 3)]), from_cycles(4, [(2, 3, 4)]), make_unitary(4, 4, 1))
    return Dfa(4, ("a", "b", "c"), delta, 1, stateset([1]))


def test_criterion_1_example_tables(acceptance_log):
    start = time.perf_counter()
    d = regex_to_dfa("a|aa")
    SEEN_DFAS.append(d)
    atoms = [fmt(s) for s in atoms_of(d)]
    rows = atomaton_rows(d)
    expected = [
        ("←", "{2,3}", [""]),
        ("→", "{1,2}", ["{{2,3}}"]),
        ("→", "{1}", ["{{1,2}}"]),
        ("", "∅", ["{∅,{1}}"]),
    ]
    nfa = atomaton(d)
    ok = (
        atoms == ["∅", "{1}", "{1,2}", "{2,3}"]
        and rows == expected
        and nfa.initials == {stateset([1]), stateset([1, 2])}
        and nfa.finals == {stateset([2, 3])}
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    assert report(acceptance_log, 1, ok, f"atoms {' '.join(atoms)}; atomaton rows match; {elapsed:.2f}s")


def test_criterion_2_eta_on_interval(acceptance_log):
    d = regex_to_dfa("a|aa")
    r = eta_on_interval(d, 0, stateset([1, 2]), "a")
    got = [fmt(s) for s in sorted(r.members, key=lambda s: (size(s), s))]
    ok = (set(r.members) == {0, stateset([1]), stateset([1, 2]), stateset([2, 3])}
          and r.lower == 0 and r.upper == stateset([1, 2, 3]))
    assert report(acceptance_log, 2, ok, f"eta_a([[∅,{{1,2}}]]) = {{{', '.join(got)}}} = [[∅,{{1,2,3}}]]")


def test_criterion_3_psi_attainment(acceptance_log):
    start = time.perf_counter()
    # frozen from the brute-force interval count (see test_atoms.PSI_ROWS)
    targets = {3: [7, 10, 10, 7], 4: [15, 29, 43, 29, 15]}
    ok = True
    details = []
    for n, row in targets.items():
        w = witness(n)
        SEEN_DFAS.append(w)
        verdict = is_maximally_atomic_semantic(w)
        by_size = {}
        for s in atoms_of(w):
            by_size.setdefault(size(s), set()).add(atom_complexity(w, s))
        got = [sorted(by_size[k]) for k in range(n + 1)]
        ok &= verdict.result and got == [[x] for x in row] and row == [psi(n, k) for k in range(n + 1)]
        details.append(f"n={n}: {[g[0] for g in got]}")
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10
    assert report(acceptance_log, 3, ok, "; ".join(details) + f"; {elapsed:.2f}s")


def test_criterion_4_decider_equivalence(acceptance_log, censuses):
    results, elapsed = censuses
    dis = sum(len(r.disagreements) for r in results)
    sizes = ", ".join(f"n={r.n}: {r.unique}" for r in results)
    ok = dis == 0 and elapsed < 120 and results[0].unique > 0
    assert report(acceptance_log, 4, ok,
                  f"{sizes} DFAs; {dis} disagreements; {elapsed:.1f}s")


def test_criterion_5_unitary_atoms(acceptance_log):
    start = time.perf_counter()
    rng = random.Random(55)
    failures = 0
    for n in (3, 4, 5, 6):
        unitaries = tuple(make_unitary(n, i, j) for i in range(1, n + 1)
                          for j in range(1, n + 1) if i != j)
        for _ in range(100):
            dfa = random_minimal_dfa(rng, n, rng.randint(0, 2), extra=unitaries)
            SEEN_DFAS.append(dfa)
            failures += len(atoms_of(dfa)) != 2**n
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    assert report(acceptance_log, 5, ok, f"400 DFAs, {failures} without 2^n atoms; {elapsed:.1f}s")


def test_criterion_6_class_chain(acceptance_log, censuses):
    results, _ = censuses
    # classify raises on any chain violation, so reaching here means none
    mal_mna = next((r.strict_witnesses["MAL<MNA"] for r in results
                    if "MAL<MNA" in r.strict_witnesses), None)
    d = a4_dfa()
    SEEN_DFAS.append(d)
    flags = classify(d)
    a4_ok = not flags.FTS and flags.STS
    counts_ok = all(
        r.counts["FTS"] <= r.counts["STS"] == r.counts["MAL"] <= r.counts["MNA"] == r.counts["MCR"]
        for r in results
    )
    ok = a4_ok and mal_mna is not None and counts_ok
    detail = f"A_4 DFA: FTS={flags.FTS} STS={flags.STS}; MAL<MNA witness "
    detail += f"at n={mal_mna.n}" if mal_mna is not None else "missing"
    assert report(acceptance_log, 6, ok, detail)


def test_criterion_7_group_properties(acceptance_log):
    start = time.perf_counter()
    rng = random.Random(77)
    violations = 0
    for n in range(4, 8):
        for _ in range(100):
            g = random_perm_group(rng, n)
            trans = {k: is_k_set_transitive(g, k) for k in range(n + 1)}
            counts = {k: orbit_count(g, k) for k in range(n // 2 + 1)}
            for k in range(2, n // 2 + 1):
                if trans[k]:
                    violations += not trans[n - k]
                    violations += not all(trans[l] for l in range(k + 1))
                violations += counts[k] < counts[k - 1]
    pairs = 0
    for n in (3, 4, 5):
        found = 0
        while found < 50:
            gens = [Transformation(rng.sample(range(1, n + 1), n)) for _ in range(2)]
            g = PermGroup.generate(gens)
            if not is_k_set_transitive(g, 2):
                continue
            t = Transformation([rng.randint(1, n) for _ in range(n)])
            if rank(t) != n - 1:
                continue
            s = closure(gens + [t])
            if not is_k_set_transitive(permutation_subgroup(s), 2):
                continue
            found += 1
            violations += not contains_all_singular(s)
        pairs += found
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 120
    assert report(acceptance_log, 7, ok,
                  f"400 groups, {pairs} (G,t) pairs, {violations} violations; {elapsed:.1f}s")


def test_criterion_8_recognition(acceptance_log):
    start = time.perf_counter()
    cases = [(symmetric_group(n), SYMMETRIC) for n in range(2, 7)]
    cases += [(alternating_group(n), ALTERNATING) for n in range(3, 7)]
    ok = True
    details = []
    for tag in (AGL_1_5, PGL_2_5, PSL_2_8, PGAMMAL_2_8):
        g = exceptional_group(tag)
        ok &= g.order == ORDERS[tag]
        details.append(f"{tag}={g.order}")
        cases.append((g, tag))
    for g, tag in cases:
        ok &= recognize_set_transitive(g) == tag
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    assert report(acceptance_log, 8, ok,
                  f"{len(cases)} groups tagged; orders {' '.join(details)}; {elapsed:.1f}s")


def test_criterion_9_atom_count_cross_check(acceptance_log, censuses, test_dfas):
    dfas = SEEN_DFAS + list(test_dfas)
    bad = sum(len(atoms_of(d)) != minimize(determinize(reverse(d))).n for d in dfas)
    assert report(acceptance_log, 9, bad == 0 and len(dfas) > 1700,
                  f"{len(dfas)} DFAs, {bad} mismatches")
