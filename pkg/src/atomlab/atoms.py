"""Atoms of a regular language, its atomaton, and maximal atomicity.

An atom is identified with the subset S of Q_n naming the quotients it lies
in (all others complemented), so atoms, atomaton states and atomic-interval
endpoints are all plain state sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from atomlab.automata import (
    Dfa,
    Nfa,
    Word,
    determinize,
    induced,
    minimize,
    require_minimal,
    reverse,
    transition_semigroup,
)
from atomlab.errors import InconsistencyError, InvalidArgument
from atomlab.semigroup import (
    contains_rank,
    is_full,
    is_set_transitive,
    permutation_subgroup,
)
from atomlab.transform import (
    StateSet,
    Transformation,
    dual_image,
    format_set,
    image,
    is_subset,
    members,
    preimage,
    size,
    stateset,
)


def _sort_key(s: StateSet):
    return size(s), members(s)


@dataclass(frozen=True)
class AtomicInterval:
    """The atoms S with ``lower ⊆ S ⊆ upper``.

    Different endpoint pairs can describe the same member set; equality and
    hashing use the members only.
    """

    lower: StateSet = field(compare=False)
    upper: StateSet = field(compare=False)
    members: tuple[StateSet, ...]

    @property
    def type(self) -> tuple[int, int]:
        if not self.members:
            return (-1, -1)
        meet, join = self.members[0], 0
        for s in self.members:
            meet &= s
            join |= s
        return size(meet), size(join)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s) -> bool:
        return s in self.members

    def __str__(self) -> str:
        return "{" + ", ".join(format_set(s) for s in self.members) + "}"


@dataclass(frozen=True)
class AtomicPoset:
    """The subsets S of Q_n for which the atom A_S is non-empty."""

    n: int
    atoms: tuple[StateSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(sorted(set(self.atoms), key=_sort_key)))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.atoms)

    def __contains__(self, s) -> bool:
        return s in self._members

    def interval_members(self, lower: StateSet, upper: StateSet) -> tuple[StateSet, ...]:
        if not is_subset(lower, upper):
            return ()
        return tuple(s for s in self.atoms if s & lower == lower and s & ~upper == 0)

    def interval(self, lower: StateSet, upper: StateSet) -> AtomicInterval:
        return AtomicInterval(lower, upper, self.interval_members(lower, upper))

    def __str__(self) -> str:
        return " ".join(format_set(s) for s in self.atoms)


def atoms_of(dfa: Dfa) -> AtomicPoset:
    """A_S is an atom iff S is reachable in the reversed DFA from the final set."""
    require_minimal(dfa)
    rd = determinize(reverse(dfa))
    return AtomicPoset(dfa.n, tuple(stateset(label) for label in rd.labels))


def atom_witnesses(dfa: Dfa) -> dict[StateSet, tuple[str, ...]]:
    """A shortest word in each atom.

    A path u from F to S in the reversed DFA spells a word whose reversal w
    satisfies {i : δ_w(i) ∈ F} = S.
    """
    require_minimal(dfa)
    paths: dict[StateSet, tuple[str, ...]] = {dfa.finals: ()}
    queue = deque([dfa.finals])
    while queue:
        s = queue.popleft()
        for a, t in zip(dfa.alphabet, dfa.delta):
            r = preimage(t, s)
            if r not in paths:
                paths[r] = paths[s] + (a,)
                queue.append(r)
    return {s: tuple(reversed(path)) for s, path in paths.items()}


def atom_of_word(dfa: Dfa, word: Word) -> StateSet:
    """The S with w in A_S: the states from which reading w ends in F."""
    return preimage(induced(dfa, word), dfa.finals)


def atomaton(dfa: Dfa, poset: AtomicPoset | None = None) -> Nfa:
    """NFA on the atoms with η_a(S) = [[δ_a(S), Δ_a(S)]].

    Here Δ_a(S) = Q_n \\ δ_a(Q_n \\ S).  Initial atoms contain the initial
    state; the only final atom is F itself.
    """
    if poset is None:
        poset = atoms_of(dfa)
    eta = {}
    for s in poset.atoms:
        for a, t in zip(dfa.alphabet, dfa.delta):
            targets = poset.interval_members(image(t, s), dual_image(t, s))
            if targets:
                eta[(s, a)] = frozenset(targets)
    q1 = 1 << (dfa.initial - 1)
    return Nfa(
        states=poset.atoms,
        alphabet=dfa.alphabet,
        eta=eta,
        initials=frozenset(s for s in poset.atoms if s & q1),
        finals=frozenset([dfa.finals]),
    )


def eta_on_interval(dfa: Dfa, lower: StateSet, upper: StateSet, word: Word,
                    poset: AtomicPoset | None = None) -> AtomicInterval:
    """Image of the atomic interval [[lower, upper]] under the atomaton on ``word``."""
    if poset is None:
        poset = atoms_of(dfa)
    t = induced(dfa, word)
    return poset.interval(image(t, lower), dual_image(t, upper))


def psi(n: int, k: int) -> int:
    """Maximal quotient complexity of an atom A_S with |S| = k, n quotients."""
    if n < 1 or not 0 <= k <= n:
        raise InvalidArgument(f"psi needs n >= 1 and 0 <= k <= n, got ({n}, {k})")
    if k in (0, n):
        return 2**n - 1
    return 1 + sum(
        comb(n, u) * comb(u, v) for v in range(1, k + 1) for u in range(k, n)
    )


def s_type_check(n: int, s: StateSet, v: int, u: int) -> bool:
    """Whether (v, u) is an admissible interval type for states of the DFA of A_S."""
    k = size(s)
    if (v, u) == (-1, -1):
        return 1 <= k <= n - 1
    if k == 0:
        return v == 0 and 0 <= u <= n - 1
    if k == n:
        return 1 <= v <= n and u == n
    return 1 <= v <= k and k <= u <= n - 1


@dataclass
class AtomDfa:
    """Subset construction of the atomaton started at one atom."""

    atom: StateSet
    states: list[AtomicInterval]
    dfa: Dfa


def atom_dfa(dfa: Dfa, s: StateSet, poset: AtomicPoset | None = None) -> AtomDfa:
    """Determinize the atomaton from {S}, tracking states as atomic intervals.

    Each state is kept as an endpoint pair (V, U) = (δ_w(S), Δ_w(S)) but
    identified by its member set, since several endpoint pairs can denote
    the same interval.
    """
    if poset is None:
        poset = atoms_of(dfa)
    if s not in poset:
        raise InvalidArgument(f"{format_set(s)} is not an atom")
    start = poset.interval(s, s)
    index = {start.members: 0}
    states = [start]
    rows: list[list[int]] = [[] for _ in dfa.delta]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for k, t in enumerate(dfa.delta):
            nxt = poset.interval(image(t, cur.lower), dual_image(t, cur.upper))
            j = index.get(nxt.members)
            if j is None:
                j = index[nxt.members] = len(states)
                states.append(nxt)
                queue.append(nxt)
            rows[k].append(j + 1)
    finals = stateset(i for i, st in enumerate(states, start=1) if dfa.finals in st.members)
    d = Dfa(len(states), dfa.alphabet, tuple(Transformation(r) for r in rows), 1, finals,
            labels=tuple(states))
    return AtomDfa(s, states, d)


def atom_complexity(dfa: Dfa, s: StateSet, poset: AtomicPoset | None = None,
                    check: bool = True) -> int:
    """Quotient complexity of the atom A_S.

    With ``check`` the subset construction is also minimized; the atom DFA
    built this way is known to be minimal, so a merge means a bug.
    """
    if poset is None:
        poset = atoms_of(dfa)
    result = atom_dfa(dfa, s, poset)
    count = result.dfa.n
    if check:
        if minimize(result.dfa).n != count:
            raise InconsistencyError(
                f"atom DFA for {format_set(s)} is not minimal ({count} states)"
            )
        if count > psi(dfa.n, size(s)):
            raise InconsistencyError(f"atom {format_set(s)} exceeds its complexity bound")
    return count


@dataclass
class SemanticVerdict:
    n: int
    atom_count: int
    max_atoms: int
    table: list[tuple[StateSet, int, int]]

    @property
    def result(self) -> bool:
        return self.atom_count == self.max_atoms and all(a == t for _, a, t in self.table)

    def __bool__(self) -> bool:
        return self.result


def is_maximally_atomic_semantic(dfa: Dfa, poset: AtomicPoset | None = None) -> SemanticVerdict:
    """Count atoms and compare each atom's complexity with its bound.

    The verdict's ``table`` rows are ``(S, achieved, target)``.
    """
    if poset is None:
        poset = atoms_of(dfa)
    n = dfa.n
    table = [(s, atom_complexity(dfa, s, poset), psi(n, size(s))) for s in poset.atoms]
    return SemanticVerdict(n, len(poset), 1 if n == 1 else 2**n, table)


@dataclass
class AlgebraicVerdict:
    n: int
    result: bool
    semigroup_size: int
    subgroup_order: int
    set_transitive: bool | None
    has_rank_n_minus_1: bool | None

    def __bool__(self) -> bool:
        return self.result


def is_maximally_atomic_algebraic(dfa: Dfa, cap: int | None = None,
                                  semigroup=None) -> AlgebraicVerdict:
    """Decide maximal atomicity from the transition semigroup alone.

    n = 1 always holds; n = 2 needs all four transformations of Q_2; for
    n >= 3 the permutation subgroup must be set-transitive and some element
    must have rank n - 1.
    """
    require_minimal(dfa)
    n = dfa.n
    if semigroup is None:
        semigroup = transition_semigroup(dfa, cap)
    group = permutation_subgroup(semigroup)
    if n == 1:
        return AlgebraicVerdict(n, True, len(semigroup), group.order, None, None)
    if n == 2:
        return AlgebraicVerdict(n, len(semigroup) == 4, len(semigroup), group.order, None, None)
    st = is_set_transitive(group)
    rk = contains_rank(semigroup, n - 1)
    return AlgebraicVerdict(n, st and rk, len(semigroup), group.order, st, rk)


@dataclass
class ClassFlags:
    FTS: bool
    STS: bool
    MAL: bool
    MNA: bool
    MCR: bool
    deciders_agree: bool

    def as_dict(self) -> dict:
        return {
            "FTS": self.FTS,
            "STS": self.STS,
            "MAL": self.MAL,
            "MNA": self.MNA,
            "MCR": self.MCR,
        }


def sts_condition(semigroup) -> bool:
    n = semigroup.n
    return is_set_transitive(permutation_subgroup(semigroup)) and contains_rank(semigroup, n - 1)


def reverse_complexity(dfa: Dfa) -> int:
    return minimize(determinize(reverse(dfa))).n


def classify(dfa: Dfa, cap: int | None = None, semigroup=None,
             poset: AtomicPoset | None = None,
             semantic: SemanticVerdict | None = None) -> ClassFlags:
    """Compute the five class flags independently and check the known chain.

    FTS ⊂ STS = MAL ⊂ MNA = MCR; any violation raises InconsistencyError.
    """
    require_minimal(dfa)
    n = dfa.n
    if n < 2:
        raise InvalidArgument("class flags are defined for n >= 2")
    if semigroup is None:
        semigroup = transition_semigroup(dfa, cap)
    if poset is None:
        poset = atoms_of(dfa)
    if semantic is None:
        semantic = is_maximally_atomic_semantic(dfa, poset)
    algebraic = is_maximally_atomic_algebraic(dfa, semigroup=semigroup)
    flags = ClassFlags(
        FTS=is_full(semigroup),
        STS=sts_condition(semigroup),
        MAL=semantic.result,
        MNA=len(poset) == 2**n,
        MCR=reverse_complexity(dfa) == 2**n,
        deciders_agree=semantic.result == algebraic.result,
    )
    problems = []
    if not flags.deciders_agree:
        problems.append("semantic and algebraic deciders disagree")
    if flags.STS != flags.MAL:
        problems.append("STS != MAL")
    if flags.MNA != flags.MCR:
        problems.append("MNA != MCR")
    if flags.FTS and not flags.STS:
        problems.append("FTS without STS")
    if flags.STS and not flags.MNA:
        problems.append("STS without MNA")
    if problems:
        raise InconsistencyError("; ".join(problems))
    return flags
