"""Building DFAs: the text/JSON file formats, witness DFAs, and a regex front-end."""

from __future__ import annotations

import json
from collections import deque
from pathlib import Path

from atomlab.automata import Dfa, minimize, reachable_states
from atomlab.errors import CapacityError, InvalidArgument, ParseError
from atomlab.transform import (
    Transformation,
    check_degree_cap,
    from_cycles,
    identity,
    make_cycle,
    make_transposition,
    make_unitary,
    members,
    stateset,
)

HEADER_KEYS = ("n", "alphabet", "initial", "final")


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {text.strip()!r}", lineno) from None


def _expand_row(spec: str, n: int, lineno: int) -> Transformation:
    """Explicit image row, or one of the generator keywords."""
    words = spec.split()
    if not words:
        raise ParseError("empty transition row", lineno)
    head, args = words[0], words[1:]
    try:
        if head == "perm-cycle" and not args:
            return make_cycle(n)
        if head == "identity" and not args:
            return identity(n)
        if head == "swap":
            i, j = _ints(" ".join(args), lineno)
            return make_transposition(n, i, j)
        if head == "merge":
            i, j = _ints(" ".join(args), lineno)
            return make_unitary(n, i, j)
        if head == "cycle":
            return from_cycles(n, [_ints(" ".join(args), lineno)])
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad generator {spec.strip()!r}: {exc}", lineno) from None
    row = _ints(spec, lineno)
    if len(row) != n:
        raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
    for x in row:
        if not 1 <= x <= n:
            raise ParseError(f"entry {x} out of range 1..{n}", lineno)
    return Transformation(row)


def parse_dfa(text: str, allow_empty: bool = False) -> Dfa:
    """Parse the line-oriented DFA format.

    ::

        n: 4
        alphabet: a
        initial: 1
        final: 2 3
        a: 2 3 4 4

    ``#`` starts a comment.  Symbol rows may use the generator keywords
    ``perm-cycle``, ``identity``, ``swap i j``, ``merge i j`` (the unitary
    i → j) and ``cycle i j ...``.
    """
    fields: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not key or any(c.isspace() for c in key):
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        if key in fields:
            raise ParseError(f"duplicate key {key!r}", lineno)
        fields[key] = (value.strip(), lineno)

    for key in HEADER_KEYS:
        if key not in fields:
            raise ParseError(f"missing {key!r} line")
    n_text, n_line = fields["n"]
    n_vals = _ints(n_text, n_line)
    if len(n_vals) != 1 or n_vals[0] < 1:
        raise ParseError("n must be a single positive integer", n_line)
    n = n_vals[0]
    try:
        check_degree_cap(n)
    except CapacityError as exc:
        raise ParseError(str(exc), n_line) from None

    alphabet_text, alpha_line = fields["alphabet"]
    alphabet = tuple(alphabet_text.split())
    if not alphabet:
        raise ParseError("alphabet must be non-empty", alpha_line)
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("duplicate symbol in alphabet", alpha_line)
    for a in alphabet:
        if a in HEADER_KEYS:
            raise ParseError(f"symbol {a!r} clashes with a header key", alpha_line)

    init_text, init_line = fields["initial"]
    init = _ints(init_text, init_line)
    if len(init) != 1 or not 1 <= init[0] <= n:
        raise ParseError(f"initial must be one state in 1..{n}", init_line)

    fin_text, fin_line = fields["final"]
    fin = _ints(fin_text, fin_line)
    for x in fin:
        if not 1 <= x <= n:
            raise ParseError(f"final state {x} out of range 1..{n}", fin_line)

    extra = set(fields) - set(HEADER_KEYS) - set(alphabet)
    if extra:
        key = min(extra, key=lambda k: fields[k][1])
        raise ParseError(f"row for unknown symbol {key!r}", fields[key][1])
    delta = []
    for a in alphabet:
        if a not in fields:
            raise ParseError(f"missing row for symbol {a!r}")
        row_text, row_line = fields[a]
        delta.append(_expand_row(row_text, n, row_line))

    dfa = Dfa(n, alphabet, tuple(delta), init[0], stateset(fin))
    if not allow_empty:
        require_nonempty(dfa)
    return dfa


def require_nonempty(dfa: Dfa) -> None:
    if not any(dfa.is_final(q) for q in reachable_states(dfa)):
        raise InvalidArgument("the empty language is not supported")


def render_dfa(dfa: Dfa) -> str:
    lines = [
        f"n: {dfa.n}",
        "alphabet: " + " ".join(dfa.alphabet),
        f"initial: {dfa.initial}",
        ("final: " + " ".join(map(str, members(dfa.finals)))).rstrip(),
    ]
    for a, t in zip(dfa.alphabet, dfa.delta):
        lines.append(f"{a}: " + " ".join(map(str, t.images)))
    return "\n".join(lines) + "\n"


def dfa_to_json(dfa: Dfa) -> dict:
    return {
        "n": dfa.n,
        "alphabet": list(dfa.alphabet),
        "initial": dfa.initial,
        "final": list(members(dfa.finals)),
        "delta": {a: list(t.images) for a, t in zip(dfa.alphabet, dfa.delta)},
    }


def dfa_from_json(data: dict | str) -> Dfa:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    try:
        n = int(data["n"])
        try:
            check_degree_cap(n)
        except CapacityError as exc:
            raise ParseError(str(exc)) from None
        alphabet = tuple(data["alphabet"])
        delta = tuple(Transformation(data["delta"][a]) for a in alphabet)
        dfa = Dfa(n, alphabet, delta, int(data["initial"]), stateset(data["final"], n))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed DFA JSON: {exc!r}") from None
    require_nonempty(dfa)
    return dfa


def load_dfa(path: str | Path) -> Dfa:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        return dfa_from_json(text)
    return parse_dfa(text)


def witness(n: int) -> Dfa:
    """A DFA whose transition semigroup is the full T_n.

    Letters: a = (1 2 ... n), b = (1, 2), c = (n → 1); initial 1, final {n}.
    For n = 2 the letters are (1, 2) and (1 → 2); n = 1 gives the one-state
    acceptor of Σ*.
    """
    check_degree_cap(n)
    if n == 1:
        return Dfa(1, ("a",), (identity(1),), 1, 1)
    if n == 2:
        return Dfa(2, ("a", "b"), (make_transposition(2, 1, 2), make_unitary(2, 1, 2)), 1, 0b10)
    delta = (make_cycle(n), make_transposition(n, 1, 2), make_unitary(n, n, 1))
    return Dfa(n, ("a", "b", "c"), delta, 1, 1 << (n - 1))


# Regular expressions as hashable tuples, kept in a normal form so that the
# derivative construction reaches only finitely many distinct expressions.
EMPTY = ("empty",)
EPS = ("eps",)

SPECIAL = set("|*()~_")


def sym(a: str):
    return ("sym", a)


def alt(*items):
    flat = set()
    for r in items:
        if r[0] == "alt":
            flat.update(r[1])
        elif r != EMPTY:
            flat.add(r)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat.pop()
    return ("alt", tuple(sorted(flat, key=repr)))


def cat(*items):
    parts = []
    for r in items:
        if r == EMPTY:
            return EMPTY
        if r == EPS:
            continue
        parts.extend(r[1] if r[0] == "cat" else (r,))
    if not parts:
        return EPS
    if len(parts) == 1:
        return parts[0]
    return ("cat", tuple(parts))


def star(r):
    if r in (EMPTY, EPS):
        return EPS
    if r[0] == "star":
        return r
    return ("star", r)


def nullable(r) -> bool:
    kind = r[0]
    if kind in ("eps", "star"):
        return True
    if kind in ("empty", "sym"):
        return False
    if kind == "alt":
        return any(nullable(x) for x in r[1])
    return all(nullable(x) for x in r[1])


def derivative(r, a: str):
    """The quotient a⁻¹L(r) as a normalized expression."""
    kind = r[0]
    if kind in ("empty", "eps"):
        return EMPTY
    if kind == "sym":
        return EPS if r[1] == a else EMPTY
    if kind == "alt":
        return alt(*(derivative(x, a) for x in r[1]))
    if kind == "star":
        return cat(derivative(r[1], a), r)
    head, rest = r[1][0], cat(*r[1][1:])
    d = cat(derivative(head, a), rest)
    if nullable(head):
        return alt(d, derivative(rest, a))
    return d


class _Parser:
    def __init__(self, pattern: str):
        self.tokens = [(i, c) for i, c in enumerate(pattern) if not c.isspace()]
        self.pos = 0
        self.pattern = pattern

    def error(self, msg):
        where = self.tokens[self.pos][0] if self.pos < len(self.tokens) else len(self.pattern)
        return ParseError(f"position {where}: {msg}")

    def peek(self):
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def parse(self):
        r = self.union()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()!r}")
        return r

    def union(self):
        items = [self.concat()]
        while self.peek() == "|":
            self.pos += 1
            items.append(self.concat())
        return alt(*items)

    def concat(self):
        items = []
        while self.peek() is not None and self.peek() not in "|)":
            items.append(self.starred())
        if not items:
            raise self.error("empty expression (use _ for the empty word)")
        return cat(*items)

    def starred(self):
        r = self.atom()
        while self.peek() == "*":
            self.pos += 1
            r = star(r)
        return r

    def atom(self):
        c = self.peek()
        if c is None:
            raise self.error("unexpected end of pattern")
        if c == "(":
            self.pos += 1
            r = self.union()
            if self.peek() != ")":
                raise self.error("missing ')'")
            self.pos += 1
            return r
        if c == "~":
            self.pos += 1
            return EMPTY
        if c == "_":
            self.pos += 1
            return EPS
        if c in SPECIAL:
            raise self.error(f"unexpected {c!r}")
        self.pos += 1
        return sym(c)


def parse_regex(pattern: str):
    return _Parser(pattern).parse()


def regex_symbols(pattern: str) -> tuple[str, ...]:
    seen = dict.fromkeys(c for c in pattern if not c.isspace() and c not in SPECIAL)
    return tuple(seen)


def regex_to_dfa(pattern: str, alphabet: tuple[str, ...] | None = None) -> Dfa:
    """Minimal DFA of a regular expression, built from iterated quotients.

    Syntax: single-character literals, ``|``, concatenation, ``*``,
    parentheses, ``~`` (empty set) and ``_`` (empty word).  The alphabet
    defaults to the literals in order of first appearance.
    """
    r0 = parse_regex(pattern)
    if alphabet is None:
        alphabet = regex_symbols(pattern)
    if not alphabet:
        raise InvalidArgument("pattern uses no symbols; pass an alphabet explicitly")
    index = {r0: 1}
    order = [r0]
    rows: list[list[int]] = [[] for _ in alphabet]
    queue = deque([r0])
    while queue:
        r = queue.popleft()
        for k, a in enumerate(alphabet):
            d = derivative(r, a)
            if d not in index:
                index[d] = len(order) + 1
                order.append(d)
                queue.append(d)
            rows[k].append(index[d])
    finals = stateset(i for i, r in enumerate(order, start=1) if nullable(r))
    if not finals:
        raise InvalidArgument("the empty language is not supported")
    raw = Dfa(len(order), tuple(alphabet), tuple(Transformation(r) for r in rows), 1, finals)
    result = minimize(raw)
    check_degree_cap(result.n)
    return result
