"""Transformations of Q_n = {1, ..., n} and subsets of Q_n.

A subset of Q_n (a "state set") is a plain ``int`` used as a bit word:
state ``i`` is present iff bit ``i - 1`` is set.  Keeping state sets as
ints makes them hashable, cheap to compare and trivially ordered, which
matters because the atom computations juggle thousands of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from atomlab.errors import CapacityError, InvalidArgument

MAX_DEGREE = 16

StateSet = int

EMPTY: StateSet = 0


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"degree must be a positive integer, got {n!r}")


def check_degree_cap(n: int) -> None:
    """Reject language DFAs with more than ``MAX_DEGREE`` states.

    Derived automata (subset constructions, atom DFAs) are exempt; their
    state counts are bounded by functions of a capped n.
    """
    _check_degree(n)
    if n > MAX_DEGREE:
        raise CapacityError(f"degree {n} exceeds the cap of {MAX_DEGREE}", MAX_DEGREE)


def full_set(n: int) -> StateSet:
    return (1 << n) - 1


def stateset(members: Iterable[int], n: int | None = None) -> StateSet:
    """Build a state set from 1-based labels, range-checked against ``n``."""
    if n is not None:
        check_degree_cap(n)
    mask = 0
    for i in members:
        if i < 1 or (n is not None and i > n):
            raise InvalidArgument(f"state {i} is outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def members(mask: StateSet) -> tuple[int, ...]:
    return tuple(_bits(mask))


def _bits(mask: int) -> Iterator[int]:
    i = 1
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def size(mask: StateSet) -> int:
    return bin(mask).count("1")


def complement(mask: StateSet, n: int) -> StateSet:
    return full_set(n) & ~mask


def is_subset(a: StateSet, b: StateSet) -> bool:
    return a & ~b == 0


def format_set(mask: StateSet) -> str:
    if not mask:
        return "∅"
    return "{" + ",".join(str(i) for i in _bits(mask)) + "}"


def subsets_of_size(n: int, k: int) -> list[StateSet]:
    from itertools import combinations

    return [stateset(c) for c in combinations(range(1, n + 1), k)]


@dataclass(frozen=True, order=True)
class Transformation:
    """A total map t: Q_n -> Q_n stored as its image row ``(t(1), ..., t(n))``.

    Instances are immutable and ordered lexicographically by image row, so
    sets of transformations can be sorted canonically.
    """

    images: tuple[int, ...]

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        _check_degree(n)
        for x in images:
            if not 1 <= x <= n:
                raise InvalidArgument(f"image {x} is outside 1..{n}")
        object.__setattr__(self, "images", images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Transformation":
        # Skips validation; only for tuples built from already-valid maps.
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"

    @property
    def rank(self) -> int:
        return len(set(self.images))

    @property
    def is_permutation(self) -> bool:
        return self.rank == self.n

    def inverse(self) -> "Transformation":
        if not self.is_permutation:
            raise InvalidArgument(f"{self} is not a permutation")
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Transformation._trusted(tuple(inv))

    def cycle_notation(self) -> str:
        """Cycle notation for permutations, e.g. ``(1 2 3)(4 5)``; ``()`` for the identity."""
        if not self.is_permutation:
            raise InvalidArgument(f"{self} is not a permutation")
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                cycles.append("(" + " ".join(map(str, cycle)) + ")")
        return "".join(cycles) or "()"


def identity(n: int) -> Transformation:
    _check_degree(n)
    return Transformation._trusted(tuple(range(1, n + 1)))


def compose(s: Transformation, t: Transformation) -> Transformation:
    """Return ``s ∘ t``, i.e. the map ``i ↦ s(t(i))`` (t applied first)."""
    if s.n != t.n:
        raise InvalidArgument(f"degree mismatch: {s.n} vs {t.n}")
    si = s.images
    return Transformation._trusted(tuple(si[x - 1] for x in t.images))


def rank(t: Transformation) -> int:
    return t.rank


def image(t: Transformation, s: StateSet) -> StateSet:
    out = 0
    imgs = t.images
    i = 0
    while s:
        if s & 1:
            out |= 1 << (imgs[i] - 1)
        s >>= 1
        i += 1
    return out


def preimage(t: Transformation, s: StateSet) -> StateSet:
    out = 0
    for i, x in enumerate(t.images):
        if s >> (x - 1) & 1:
            out |= 1 << i
    return out


def coimage(t: Transformation) -> StateSet:
    return complement(image(t, full_set(t.n)), t.n)


def dual_image(t: Transformation, s: StateSet) -> StateSet:
    """``Q_n \\ t(Q_n \\ s)``: the largest set whose complement maps outside it."""
    n = t.n
    return complement(image(t, complement(s, n)), n)


def _check_pair(n: int, i: int, j: int) -> None:
    _check_degree(n)
    for x in (i, j):
        if not 1 <= x <= n:
            raise InvalidArgument(f"state {x} is outside 1..{n}")
    if i == j:
        raise InvalidArgument(f"need two distinct states, got {i} and {j}")


def make_unitary(n: int, i: int, j: int) -> Transformation:
    """The unitary transformation (i → j): sends i to j and fixes everything else."""
    _check_pair(n, i, j)
    row = list(range(1, n + 1))
    row[i - 1] = j
    return Transformation._trusted(tuple(row))


def make_transposition(n: int, i: int, j: int) -> Transformation:
    _check_pair(n, i, j)
    row = list(range(1, n + 1))
    row[i - 1], row[j - 1] = j, i
    return Transformation._trusted(tuple(row))


def make_cycle(n: int) -> Transformation:
    """The cycle (1 2 ... n)."""
    _check_degree(n)
    return Transformation._trusted(tuple(range(2, n + 1)) + (1,))


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Transformation:
    """Build a permutation from disjoint cycles given with 1-based labels."""
    _check_degree(n)
    row = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for x in cycle:
            if not 1 <= x <= n or x in seen:
                raise InvalidArgument(f"bad cycle entry {x} for degree {n}")
            seen.add(x)
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            row[a - 1] = b
    return Transformation._trusted(tuple(row))
