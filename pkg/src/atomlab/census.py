"""Exhaustive and random populations of minimal DFAs, with class counts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from atomlab.atoms import (
    atoms_of,
    classify,
    is_maximally_atomic_algebraic,
    is_maximally_atomic_semantic,
)
from atomlab.automata import Dfa, canonical, is_minimal, transition_semigroup
from atomlab.errors import CapacityError, InvalidArgument
from atomlab.semigroup import default_cap
from atomlab.transform import Transformation, check_degree_cap

FLAG_NAMES = ("FTS", "STS", "MAL", "MNA", "MCR")


def symbols(sigma: int) -> tuple[str, ...]:
    if not 1 <= sigma <= 26:
        raise InvalidArgument(f"alphabet size must lie in 1..26, got {sigma}")
    return tuple("abcdefghijklmnopqrstuvwxyz"[:sigma])


def all_transformations(n: int) -> list[Transformation]:
    return [Transformation(row) for row in product(range(1, n + 1), repeat=n)]


def enumerate_minimal_dfas(n: int, sigma: int, cap: int | None = None):
    """Yield ``(raw_count, dfa)`` for every minimal DFA, one per isomorphism class.

    All initial states, final sets and transition tables are visited; each
    minimal DFA is canonicalized by BFS numbering from its initial state and
    yielded the first time its canonical form is seen.  The empty language
    is skipped.
    """
    check_degree_cap(n)
    alphabet = symbols(sigma)
    raw_total = n * 2**n * n ** (n * sigma)
    if cap is None:
        cap = default_cap()
    if raw_total > cap:
        raise CapacityError(f"census would visit {raw_total} DFAs, over the cap of {cap}", cap)
    letters = all_transformations(n)
    seen = set()
    for delta in product(letters, repeat=sigma):
        for initial in range(1, n + 1):
            for finals in range(1, 2**n):
                dfa = Dfa(n, alphabet, delta, initial, finals)
                if not is_minimal(dfa):
                    continue
                c = canonical(dfa)
                if c in seen:
                    continue
                seen.add(c)
                yield c


def random_transformation(rng: random.Random, n: int, perm_bias: float = 0.5) -> Transformation:
    if rng.random() < perm_bias:
        row = list(range(1, n + 1))
        rng.shuffle(row)
        return Transformation(row)
    return Transformation([rng.randint(1, n) for _ in range(n)])


def random_minimal_dfa(rng: random.Random, n: int, sigma: int, perm_bias: float = 0.5,
                       extra: tuple[Transformation, ...] = (), max_tries: int = 10_000) -> Dfa:
    """Draw random DFAs until one is minimal.

    Each of the ``sigma`` random letters is a uniformly random permutation
    with probability ``perm_bias`` and a uniformly random transformation
    otherwise; ``extra`` letters are appended after them.
    """
    check_degree_cap(n)
    alphabet = symbols(sigma + len(extra)) if sigma + len(extra) <= 26 else tuple(
        f"x{i}" for i in range(sigma + len(extra))
    )
    for _ in range(max_tries):
        delta = tuple(random_transformation(rng, n, perm_bias) for _ in range(sigma)) + extra
        finals = rng.randint(1, 2**n - 1) if n > 1 else 1
        dfa = Dfa(n, alphabet, delta, 1, finals)
        if is_minimal(dfa):
            return dfa
    raise CapacityError(f"no minimal DFA found in {max_tries} draws", max_tries)


@dataclass
class CensusResult:
    n: int
    sigma: int
    raw: int = 0
    unique: int = 0
    counts: dict = field(default_factory=lambda: {k: 0 for k in FLAG_NAMES})
    disagreements: list = field(default_factory=list)
    strict_witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "sigma": self.sigma,
            "raw_dfas": self.raw,
            "minimal_up_to_isomorphism": self.unique,
            "counts": dict(self.counts),
            "disagreements": len(self.disagreements),
        }


def tally(result: CensusResult, dfa: Dfa, cap: int | None = None) -> None:
    """Classify one DFA into ``result``; class-chain violations raise."""
    semigroup = transition_semigroup(dfa, cap)
    poset = atoms_of(dfa)
    semantic = is_maximally_atomic_semantic(dfa, poset)
    algebraic = is_maximally_atomic_algebraic(dfa, semigroup=semigroup)
    if semantic.result != algebraic.result:
        result.disagreements.append(dfa)
    flags = classify(dfa, semigroup=semigroup, poset=poset, semantic=semantic)
    result.unique += 1
    for name in FLAG_NAMES:
        result.counts[name] += getattr(flags, name)
    if flags.STS and not flags.FTS:
        result.strict_witnesses.setdefault("FTS<STS", dfa)
    if flags.MNA and not flags.MAL:
        result.strict_witnesses.setdefault("MAL<MNA", dfa)


def run_census(n: int, sigma: int, cap: int | None = None) -> CensusResult:
    if n < 2:
        raise InvalidArgument("census needs n >= 2")
    result = CensusResult(n, sigma, raw=n * 2**n * n ** (n * sigma))
    for dfa in enumerate_minimal_dfas(n, sigma, cap):
        tally(result, dfa, cap)
    return result


def run_random_census(n: int, sigma: int, count: int, seed: int = 0,
                      perm_bias: float = 0.5, cap: int | None = None) -> CensusResult:
    rng = random.Random(seed)
    result = CensusResult(n, sigma, raw=count)
    for _ in range(count):
        tally(result, random_minimal_dfa(rng, n, sigma, perm_bias), cap)
    return result
