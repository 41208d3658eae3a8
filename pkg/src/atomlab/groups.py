"""Generator sets for the exceptional set-transitive permutation groups.

Points of the projective lines are labelled field elements first (0, 1, ...
in order, with F_8 elements as bit-polynomials in a root of x^3 + x + 1) and
the point at infinity last.
"""

from __future__ import annotations

from atomlab.semigroup import (
    AGL_1_5,
    PGAMMAL_2_8,
    PGL_2_5,
    PSL_2_8,
    PermGroup,
)
from atomlab.transform import from_cycles

GENERATORS: dict[str, tuple[int, list[list[tuple[int, ...]]]]] = {
    # x -> x + 1 and x -> 2x on F_5, with 0 labelled 5
    AGL_1_5: (5, [[(1, 2, 3, 4, 5)], [(1, 2, 4, 3)]]),
    # x -> x + 1, x -> 2x, x -> -1/x on F_5 ∪ {∞}
    PGL_2_5: (6, [[(1, 2, 3, 4, 5)], [(2, 3, 5, 4)], [(1, 6), (2, 5)]]),
    # x -> x + 1, x -> αx, x -> 1/x on F_8 ∪ {∞}
    PSL_2_8: (9, [
        [(1, 2), (3, 4), (5, 6), (7, 8)],
        [(2, 3, 5, 4, 7, 8, 6)],
        [(1, 9), (3, 6), (4, 7), (5, 8)],
    ]),
    # the above plus the Frobenius map x -> x^2
    PGAMMAL_2_8: (9, [
        [(1, 2), (3, 4), (5, 6), (7, 8)],
        [(2, 3, 5, 4, 7, 8, 6)],
        [(1, 9), (3, 6), (4, 7), (5, 8)],
        [(3, 5, 7), (4, 6, 8)],
    ]),
}

ORDERS = {AGL_1_5: 20, PGL_2_5: 120, PSL_2_8: 504, PGAMMAL_2_8: 1512}


def generators(tag: str):
    n, gens = GENERATORS[tag]
    return [from_cycles(n, cycles) for cycles in gens]


def exceptional_group(tag: str) -> PermGroup:
    return PermGroup.generate(generators(tag))
