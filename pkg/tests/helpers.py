"""Shared fixtures data and brute-force oracles for the test suite."""

import random
from itertools import combinations

from atomlab.automata import Dfa
from atomlab.census import random_minimal_dfa
from atomlab.ingest import regex_to_dfa, witness
from atomlab.semigroup import PermGroup
from atomlab.transform import Transformation, from_cycles, stateset

EXAMPLE1_TEXT = """\
# accepts {a, aa}
n: 4
alphabet: a
initial: 1
final: 2 3
a: 2 3 4 4
"""


def example1() -> Dfa:
    return Dfa(4, ("a",), (Transformation([2, 3, 4, 4]),), 1, stateset([2, 3]))


def sample_dfas(seed=1234, per_size=6):
    """A mixed bag of small minimal DFAs used by the property tests."""
    rng = random.Random(seed)
    dfas = [example1(), witness(1), witness(2), witness(3), witness(4)]
    dfas += [regex_to_dfa(p) for p in ("a|aa", "(ab)*", "a*b|ba*", "(a|b)*abb", "ab*|b")]
    for n in (2, 3, 4):
        for sigma in (1, 2, 3):
            dfas += [random_minimal_dfa(rng, n, sigma) for _ in range(per_size)]
    return dfas


def random_permutation_generator(rng, n):
    """A random permutation of one of several shapes, to get varied subgroups."""
    shape = rng.choice(("any", "cycle", "involution", "fixed"))
    points = list(range(1, n + 1))
    rng.shuffle(points)
    if shape == "any":
        return Transformation(points)
    if shape == "cycle":
        return from_cycles(n, [points[: rng.randint(2, n)]])
    if shape == "involution":
        pairs = rng.randint(1, n // 2)
        return from_cycles(n, [points[2 * i: 2 * i + 2] for i in range(pairs)])
    # permutation of a random proper block, fixing the rest
    k = rng.randint(2, n - 1)
    block = points[:k]
    image = block[:]
    rng.shuffle(image)
    row = list(range(1, n + 1))
    for a, b in zip(block, image):
        row[a - 1] = b
    return Transformation(row)


def random_perm_group(rng, n):
    gens = [random_permutation_generator(rng, n) for _ in range(rng.randint(1, 3))]
    return PermGroup.generate(gens)


def naive_closure(gens):
    """Fixpoint of all pairwise products; independent of the worklist closure."""
    els = {g.images for g in gens}
    while True:
        new = {tuple(b[i - 1] for i in a) for a in els for b in els} | els
        if new == els:
            return {Transformation(r) for r in els}
        els = new


def k_subsets(n, k):
    return [stateset(c) for c in combinations(range(1, n + 1), k)]
