from itertools import product

import pytest

from atomlab.automata import Dfa, is_minimal, words
from atomlab.census import (
    all_transformations,
    enumerate_minimal_dfas,
    random_minimal_dfa,
    run_census,
    run_random_census,
    symbols,
)
from atomlab.errors import CapacityError, InvalidArgument
from atomlab.transform import Transformation


def language_signature(dfa, max_len):
    return frozenset("".join(w) for w in words(dfa.alphabet, max_len) if dfa.accepts(w))


def brute_force_minimal_languages(n, sigma):
    """Distinct languages of minimal n-state DFAs, identified by short words."""
    alphabet = symbols(sigma)
    rows = list(product(range(1, n + 1), repeat=n))
    found = set()
    for delta in product(rows, repeat=sigma):
        for finals in range(1, 2**n):
            for initial in range(1, n + 1):
                d = Dfa(n, alphabet, tuple(Transformation(r) for r in delta), initial, finals)
                if is_minimal(d):
                    # words of length < 2n separate distinct n-state languages
                    found.add(language_signature(d, 2 * n))
    return found


@pytest.mark.parametrize("n, sigma", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
def test_enumeration_matches_brute_force(n, sigma):
    dfas = list(enumerate_minimal_dfas(n, sigma))
    sigs = {language_signature(d, 2 * n) for d in dfas}
    assert len(sigs) == len(dfas)
    assert sigs == brute_force_minimal_languages(n, sigma)


def test_all_transformations():
    assert len(all_transformations(3)) == 27


def test_symbols():
    assert symbols(3) == ("a", "b", "c")
    with pytest.raises(InvalidArgument):
        symbols(0)


def test_capacity():
    with pytest.raises(CapacityError):
        list(enumerate_minimal_dfas(3, 2, cap=10))


def test_census_n2():
    result = run_census(2, 2)
    assert not result.disagreements
    c = result.counts
    assert c["FTS"] <= c["STS"] == c["MAL"] <= c["MNA"] == c["MCR"]
    # n = 2 maximal atomicity means the semigroup is all of T_2
    assert c["STS"] > 0
    with pytest.raises(InvalidArgument):
        run_census(1, 1)


def test_random_minimal_dfa_is_minimal():
    import random

    rng = random.Random(8)
    for _ in range(50):
        d = random_minimal_dfa(rng, 4, 2)
        assert is_minimal(d) and d.initial == 1


def test_random_census_reproducible():
    a = run_random_census(3, 2, 30, seed=4)
    b = run_random_census(3, 2, 30, seed=4)
    assert a.as_dict() == b.as_dict()
    assert a.as_dict()["disagreements"] == 0
