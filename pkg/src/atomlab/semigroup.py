"""Transformation semigroups, their permutation subgroups, and set-transitivity."""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, factorial
from typing import Iterable, Sequence

from atomlab.errors import CapacityError, InconsistencyError, InvalidArgument
from atomlab.transform import (
    StateSet,
    Transformation,
    compose,
    identity,
    image,
    make_unitary,
    subsets_of_size,
)

DEFAULT_CAP = 2_000_000


def default_cap() -> int:
    """Closure cap, overridable through the ``ATOMLAB_CAP`` environment variable."""
    raw = os.environ.get("ATOMLAB_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidArgument(f"ATOMLAB_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidArgument(f"ATOMLAB_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class Semigroup:
    n: int
    elements: tuple[Transformation, ...]
    generators: tuple[Transformation, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, t) -> bool:
        return t in self._members

    def __iter__(self):
        return iter(self.elements)

    def rank_histogram(self) -> dict[int, int]:
        counts = Counter(t.rank for t in self.elements)
        return {r: counts[r] for r in sorted(counts)}


def closure(generators: Iterable[Transformation], cap: int | None = None) -> Semigroup:
    """Smallest set containing ``generators`` and closed under composition.

    Worklist closure: every product of generators is reached by right
    multiplication of a shorter product by one generator.
    """
    gens = tuple(dict.fromkeys(generators))
    if not gens:
        raise InvalidArgument("closure needs at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise InvalidArgument(f"degree mismatch among generators: {g.n} vs {n}")
    if cap is None:
        cap = default_cap()
    if cap < 1:
        raise InvalidArgument(f"cap must be positive, got {cap}")

    rows = [g.images for g in gens]
    seen = set(rows)
    if len(seen) > cap:
        raise CapacityError(f"semigroup closure exceeds cap of {cap} elements", cap)
    queue = deque(rows)
    while queue:
        x = queue.popleft()
        for g in rows:
            # x then g as maps: (g ∘ x)(i) = g(x(i))
            y = tuple(g[i - 1] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapacityError(
                        f"semigroup closure exceeds cap of {cap} elements", cap
                    )
                queue.append(y)
    elements = tuple(sorted(Transformation._trusted(r) for r in seen))
    return Semigroup(n, elements, gens)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group of degree ``n``.

    ``order == 0`` marks the empty group: a transition semigroup without any
    permutation has no permutation subgroup at all.
    """

    n: int
    elements: tuple[Transformation, ...]
    generators: tuple[Transformation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_empty(self) -> bool:
        return not self.elements

    @classmethod
    def generate(cls, generators: Sequence[Transformation], n: int | None = None,
                 cap: int | None = None) -> "PermGroup":
        gens = tuple(generators)
        if not gens:
            if n is None:
                raise InvalidArgument("degree required for the trivial group")
            e = identity(n)
            return cls(n, (e,), (e,))
        for g in gens:
            if not g.is_permutation:
                raise InvalidArgument(f"{g} is not a permutation")
        sg = closure(gens, cap)
        return cls(sg.n, sg.elements, sg.generators)

    @classmethod
    def empty(cls, n: int) -> "PermGroup":
        return cls(n, (), ())

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, t) -> bool:
        return t in self._members


def symmetric_group(n: int) -> PermGroup:
    from atomlab.transform import make_cycle, make_transposition

    if n == 1:
        return PermGroup.generate([], n=1)
    return PermGroup.generate([make_cycle(n), make_transposition(n, 1, 2)])


def alternating_group(n: int) -> PermGroup:
    from atomlab.transform import from_cycles

    if n < 3:
        return PermGroup.generate([], n=n)
    return PermGroup.generate([from_cycles(n, [(1, 2, i)]) for i in range(3, n + 1)])


def permutation_subgroup(semigroup: Semigroup) -> PermGroup:
    n = semigroup.n
    perms = tuple(t for t in semigroup.elements if t.is_permutation)
    if not perms:
        return PermGroup.empty(n)
    e = identity(n)
    # A finite nonempty set of permutations closed under composition holds
    # the identity (some power of any element); check instead of assuming.
    if e not in semigroup:
        raise InconsistencyError("permutations present but identity missing from closure")
    return PermGroup(n, perms, perms)


def orbit(group: PermGroup, s: StateSet, use_generators: bool = True) -> set[StateSet]:
    """Orbit of the state set ``s`` under ``group``.

    By default this is a BFS applying generators only; ``use_generators=False``
    applies every element once instead.
    """
    if group.is_empty:
        raise InvalidArgument("orbit of the empty group is undefined")
    if not use_generators:
        return {image(g, s) for g in group.elements}
    found = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = image(g, x)
            if y not in found:
                found.add(y)
                queue.append(y)
    return found


def _check_k(group: PermGroup, k: int) -> None:
    if not 0 <= k <= group.n:
        raise InvalidArgument(f"k must lie in 0..{group.n}, got {k}")


def orbits(group: PermGroup, k: int) -> list[set[StateSet]]:
    """The orbits partitioning the k-subsets of Q_n, in order of least member."""
    _check_k(group, k)
    remaining = set(subsets_of_size(group.n, k))
    result = []
    for s in subsets_of_size(group.n, k):
        if s in remaining:
            o = orbit(group, s)
            remaining -= o
            result.append(o)
    return result


def orbit_count(group: PermGroup, k: int) -> int:
    return len(orbits(group, k))


def is_k_set_transitive(group: PermGroup, k: int) -> bool:
    _check_k(group, k)
    if group.is_empty:
        return False
    n = group.n
    if k in (0, n):
        return True
    first = (1 << k) - 1
    return len(orbit(group, first)) == comb(n, k)


def is_set_transitive(group: PermGroup, exhaustive: bool = False) -> bool:
    """Transitivity on k-subsets for every 0 <= k <= n.

    The fast path checks a single k: for n >= 4, k = n // 2 implies every
    other k (orbit counts on k-subsets never decrease up to n/2, and
    complements swap k with n - k); for n <= 3 transitivity on points is
    enough.
    """
    if group.is_empty:
        return False
    n = group.n
    if exhaustive:
        return all(is_k_set_transitive(group, k) for k in range(n + 1))
    if n == 1:
        return True
    if n <= 3:
        return is_k_set_transitive(group, 1)
    return is_k_set_transitive(group, n // 2)


SYMMETRIC = "SYMMETRIC"
ALTERNATING = "ALTERNATING"
AGL_1_5 = "AGL_1_5"
PGL_2_5 = "PGL_2_5"
PSL_2_8 = "PSL_2_8"
PGAMMAL_2_8 = "PGammaL_2_8"

_EXCEPTIONAL = {
    (5, 20): AGL_1_5,
    (6, 120): PGL_2_5,
    (9, 504): PSL_2_8,
    (9, 1512): PGAMMAL_2_8,
}


def recognize_set_transitive(group: PermGroup) -> str:
    """Name a set-transitive group (up to conjugacy) from its degree and order."""
    if not is_set_transitive(group):
        raise InvalidArgument("group is not set-transitive")
    n, order = group.n, group.order
    if order == factorial(n):
        return SYMMETRIC
    if order * 2 == factorial(n):
        return ALTERNATING
    try:
        return _EXCEPTIONAL[(n, order)]
    except KeyError:
        raise InconsistencyError(
            f"set-transitive group of degree {n} and order {order} "
            "matches no known set-transitive group"
        ) from None


def contains_rank(semigroup: Semigroup, r: int) -> bool:
    if not 1 <= r <= semigroup.n:
        raise InvalidArgument(f"rank must lie in 1..{semigroup.n}, got {r}")
    return any(t.rank == r for t in semigroup.elements)


def contains_all_unitary(semigroup: Semigroup) -> bool:
    n = semigroup.n
    return all(
        make_unitary(n, i, j) in semigroup
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    )


def contains_all_singular(semigroup: Semigroup) -> bool:
    n = semigroup.n
    singular = sum(1 for t in semigroup.elements if t.rank < n)
    return singular == n**n - factorial(n)


def is_full(semigroup: Semigroup) -> bool:
    return len(semigroup) == semigroup.n ** semigroup.n


def semigroup_stats(semigroup: Semigroup) -> dict:
    """Summary used by reports: size, ranks, subgroup order and set-transitivity."""
    g = permutation_subgroup(semigroup)
    per_k = {k: is_k_set_transitive(g, k) for k in range(semigroup.n + 1)}
    set_transitive = all(per_k.values())
    return {
        "size": len(semigroup),
        "rank_histogram": semigroup.rank_histogram(),
        "subgroup_order": g.order,
        "set_transitive_by_k": per_k,
        "set_transitive": set_transitive,
        "recognition": recognize_set_transitive(g) if set_transitive else None,
        "has_rank_n_minus_1": semigroup.n > 1 and contains_rank(semigroup, semigroup.n - 1),
    }


def product(*ts: Transformation) -> Transformation:
    """Left-to-right product: ``product(a, b)`` applies ``a`` first, then ``b``."""
    result = ts[0]
    for t in ts[1:]:
        result = compose(t, result)
    return result
