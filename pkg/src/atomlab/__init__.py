"""Atoms, atomata and transition semigroups of regular languages."""

from atomlab.errors import (
    AtomlabError,
    CapacityError,
    InconsistencyError,
    InvalidArgument,
    ParseError,
)
from atomlab.transform import (
    Transformation,
    compose,
    coimage,
    identity,
    image,
    make_cycle,
    make_transposition,
    make_unitary,
    preimage,
    rank,
)
from atomlab.semigroup import PermGroup, Semigroup, closure, permutation_subgroup
from atomlab.automata import Dfa, Nfa, determinize, minimize, reverse
from atomlab.atoms import (
    AtomicInterval,
    AtomicPoset,
    atom_complexity,
    atom_of_word,
    atomaton,
    atoms_of,
    classify,
    eta_on_interval,
    is_maximally_atomic_algebraic,
    is_maximally_atomic_semantic,
    psi,
)
from atomlab.ingest import parse_dfa, regex_to_dfa, render_dfa, witness

__version__ = "0.1.0"
