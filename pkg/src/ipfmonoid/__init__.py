"""Computations in the inverse monoid IPF(N^n) of order isomorphisms between
principal filters of N^n, its zero extension, and related combinatorics."""

from .bicyclic import BicyclicElement, BicyclicWord, bicyclic_inv, bicyclic_mul, word_mul, word_to_pair
from .errors import DimensionError, DomainError, ParseError
from .monoid import (
    FiberSet,
    IpfElement,
    construct_left_translator,
    fiber_bijection,
    green_L,
    green_R,
    group_congruence_class,
    identity,
    ipf_inv,
    ipf_mul,
    is_idempotent,
    left_translate,
    natural_leq,
    parse_element,
    right_translate,
    shift_map,
)
from .permutation import Permutation, perm_act
from .poset import FilterIso, compose, leq, principal_filter_window
from .zero import ZERO, CofiniteNeighborhood, continuity_witness, solve_left, solve_right, translate_preimage, zero_mul

__version__ = "0.1.0"
