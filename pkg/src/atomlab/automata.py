"""Deterministic and nondeterministic automata over Q_n.

Words are read left to right.  The transformation induced by a word w is
written δ_w and satisfies δ_{xa} = δ_a ∘ δ_x, so δ_w(i) is the state reached
from i after reading all of w.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Hashable, Iterable, Iterator, Sequence

from atomlab.errors import InvalidArgument
from atomlab.semigroup import Semigroup, closure
from atomlab.transform import (
    StateSet,
    Transformation,
    compose,
    identity,
    members,
    preimage,
    stateset,
)

Word = Sequence[str]


@dataclass(frozen=True)
class Dfa:
    """A complete DFA with states 1..n.

    ``delta[k]`` is the transformation of the k-th symbol of ``alphabet``.
    ``labels`` optionally names each state (subset-construction results keep
    the subset each state stands for); labels take no part in equality.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[Transformation, ...]
    initial: int
    finals: StateSet
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(self.delta))
        if not self.alphabet:
            raise InvalidArgument("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidArgument(f"duplicate symbols in alphabet {self.alphabet}")
        for a in self.alphabet:
            if not a or any(c.isspace() for c in a):
                raise InvalidArgument(f"invalid symbol {a!r}")
        if len(self.delta) != len(self.alphabet):
            raise InvalidArgument("one transformation per symbol required")
        for t in self.delta:
            if t.n != self.n:
                raise InvalidArgument(f"transformation {t} has degree {t.n}, expected {self.n}")
        if not 1 <= self.initial <= self.n:
            raise InvalidArgument(f"initial state {self.initial} outside 1..{self.n}")
        if self.finals >> self.n:
            raise InvalidArgument(f"final states outside 1..{self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidArgument("one label per state required")

    def letter(self, symbol: str) -> Transformation:
        try:
            return self.delta[self.alphabet.index(symbol)]
        except ValueError:
            raise InvalidArgument(f"unknown symbol {symbol!r}") from None

    def step(self, state: int, symbol: str) -> int:
        return self.letter(symbol)(state)

    def run(self, word: Word, start: int | None = None) -> int:
        q = self.initial if start is None else start
        for a in word:
            q = self.letter(a)(q)
        return q

    def accepts(self, word: Word) -> bool:
        return bool(self.finals >> (self.run(word) - 1) & 1)

    def is_final(self, state: int) -> bool:
        return bool(self.finals >> (state - 1) & 1)


@dataclass(frozen=True)
class Nfa:
    """An NFA over arbitrary hashable states.

    ``eta`` maps ``(state, symbol)`` to a frozenset of states; missing keys
    mean no transition.
    """

    states: tuple
    alphabet: tuple[str, ...]
    eta: dict = field(hash=False)
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        known = set(self.states)
        for (q, a), targets in self.eta.items():
            if q not in known or a not in self.alphabet:
                raise InvalidArgument(f"transition from unknown ({q!r}, {a!r})")
            if not set(targets) <= known:
                raise InvalidArgument(f"transition to unknown states from {q!r}")
        if not set(self.initials) <= known or not set(self.finals) <= known:
            raise InvalidArgument("initial/final states must be states")

    def successors(self, state: Hashable, symbol: str) -> frozenset:
        return self.eta.get((state, symbol), frozenset())

    def step(self, current: Iterable, symbol: str) -> frozenset:
        out: set = set()
        for q in current:
            out |= self.successors(q, symbol)
        return frozenset(out)

    def accepts(self, word: Word, initials: Iterable | None = None) -> bool:
        current = frozenset(self.initials if initials is None else initials)
        for a in word:
            current = self.step(current, a)
        return bool(current & self.finals)


def words(alphabet: Sequence[str], max_len: int) -> Iterator[tuple[str, ...]]:
    """All words up to ``max_len`` in length-lexicographic order."""
    for length in range(max_len + 1):
        yield from cartesian(alphabet, repeat=length)


def induced(dfa: Dfa, word: Word) -> Transformation:
    """δ_w: maps i to the state reached from i by reading ``word``."""
    t = identity(dfa.n)
    for a in word:
        t = compose(dfa.letter(a), t)
    return t


def transition_semigroup(dfa: Dfa, cap: int | None = None) -> Semigroup:
    return closure(dfa.delta, cap)


def reverse(dfa: Dfa) -> Nfa:
    states = tuple(range(1, dfa.n + 1))
    eta = {}
    for a, t in zip(dfa.alphabet, dfa.delta):
        for q in states:
            eta[(q, a)] = frozenset(members(preimage(t, 1 << (q - 1))))
    return Nfa(
        states=states,
        alphabet=dfa.alphabet,
        eta=eta,
        initials=frozenset(members(dfa.finals)),
        finals=frozenset([dfa.initial]),
    )


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction over the subsets reachable from the initial set.

    States are numbered in BFS order (alphabet order within a state); each
    state's label is the frozenset of NFA states it stands for.  The empty
    subset is an ordinary state when reachable.
    """
    start = frozenset(nfa.initials)
    index = {start: 1}
    order = [start]
    rows: list[list[int]] = [[] for _ in nfa.alphabet]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for k, a in enumerate(nfa.alphabet):
            nxt = nfa.step(current, a)
            if nxt not in index:
                index[nxt] = len(order) + 1
                order.append(nxt)
                queue.append(nxt)
            rows[k].append(index[nxt])
    finals = stateset(i for i, s in enumerate(order, start=1) if s & nfa.finals)
    return Dfa(
        n=len(order),
        alphabet=nfa.alphabet,
        delta=tuple(Transformation(r) for r in rows),
        initial=1,
        finals=finals,
        labels=tuple(order),
    )


def reachable_states(dfa: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS order."""
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.delta:
            r = t(q)
            if r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def _relabel(dfa: Dfa, blocks: dict[int, int], order: list[int]) -> Dfa:
    # order: representative states in BFS order; blocks: state -> block id
    block_order = {}
    for q in order:
        block_order.setdefault(blocks[q], len(block_order) + 1)
    reps = {}
    for q in order:
        reps.setdefault(blocks[q], q)
    m = len(block_order)
    rows = []
    for t in dfa.delta:
        row = [0] * m
        for b, q in reps.items():
            row[block_order[b] - 1] = block_order[blocks[t(q)]]
        rows.append(Transformation(row))
    finals = stateset(block_order[b] for b, q in reps.items() if dfa.is_final(q))
    return Dfa(m, dfa.alphabet, tuple(rows), block_order[blocks[dfa.initial]], finals)


def minimize(dfa: Dfa) -> Dfa:
    """Reachable part merged by Moore partition refinement.

    Dead states survive (the empty quotient counts as a state).  The result
    is numbered in BFS order from the initial state, so two minimal DFAs of
    the same language over the same ordered alphabet come out identical.
    """
    order = reachable_states(dfa)
    block = {q: int(dfa.is_final(q)) for q in order}
    count = len(set(block.values()))
    while True:
        signature = {q: (block[q],) + tuple(block[t(q)] for t in dfa.delta) for q in order}
        ids: dict[tuple, int] = {}
        new_block = {q: ids.setdefault(signature[q], len(ids)) for q in order}
        if len(ids) == count:
            break
        block, count = new_block, len(ids)
    return _relabel(dfa, new_block, order)


@lru_cache(maxsize=4096)
def is_minimal(dfa: Dfa) -> bool:
    return len(reachable_states(dfa)) == dfa.n and minimize(dfa).n == dfa.n


def canonical(dfa: Dfa) -> Dfa:
    """Renumber the states of an accessible DFA in BFS order from the initial state."""
    order = reachable_states(dfa)
    if len(order) != dfa.n:
        raise InvalidArgument("DFA has unreachable states")
    return _relabel(dfa, {q: q for q in order}, order)


def require_minimal(dfa: Dfa) -> None:
    if not is_minimal(dfa):
        raise InvalidArgument("DFA is not minimal; minimize it first")


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """True iff a state bijection preserves initial state, finals and transitions."""
    require_minimal(d1)
    require_minimal(d2)
    if d1.n != d2.n or set(d1.alphabet) != set(d2.alphabet):
        return False
    mapping = {d1.initial: d2.initial}
    queue = deque([d1.initial])
    while queue:
        p = queue.popleft()
        q = mapping[p]
        if d1.is_final(p) != d2.is_final(q):
            return False
        for a in d1.alphabet:
            p2, q2 = d1.step(p, a), d2.step(q, a)
            if p2 in mapping:
                if mapping[p2] != q2:
                    return False
            else:
                mapping[p2] = q2
                queue.append(p2)
    return len(set(mapping.values())) == d1.n
