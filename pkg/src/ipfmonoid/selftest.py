"""Small randomized consistency checks behind ``ipf selftest``.

These are quick versions of the test-suite properties, meant as a smoke test
for an installed copy.  Each check returns True on success.
"""

from __future__ import annotations

import itertools
import random

from .bicyclic import BicyclicWord, bicyclic_mul, word_mul, word_to_pair
from .monoid import (
    from_filter_iso,
    ipf_inv,
    ipf_mul,
    random_element,
    to_filter_iso,
)
from .partition import find_shift_witness, random_partition, validate_witness
from .poset import compose, window_points
from .zero import solve_left, solve_right


def check_bicyclic(rng, window):
    for a, b, c, d in itertools.product(range(window + 1), repeat=4):
        u, v = BicyclicWord(a, b), BicyclicWord(c, d)
        if word_to_pair(word_mul(u, v)) != bicyclic_mul(word_to_pair(u), word_to_pair(v)):
            return False
    return True


def check_associativity(rng, window, trials=2000):
    for _ in range(trials):
        n = rng.randint(1, 4)
        a, b, c = (random_element(rng, n, 50) for _ in range(3))
        if ipf_mul(ipf_mul(a, b), c) != ipf_mul(a, ipf_mul(b, c)):
            return False
    return True


def check_inverse(rng, window, trials=1000):
    for _ in range(trials):
        a = random_element(rng, rng.randint(1, 4), 50)
        b = ipf_inv(a)
        if ipf_mul(ipf_mul(a, b), a) != a or ipf_mul(ipf_mul(b, a), b) != b:
            return False
    return True


def check_filter_oracle(rng, window, trials=100):
    for _ in range(trials):
        n = rng.randint(1, 3)
        a, b = random_element(rng, n, 10), random_element(rng, n, 10)
        f, g = to_filter_iso(a), to_filter_iso(b)
        h = compose(f, g)
        for t in window_points(h.dom_base, min(window, 4)):
            if not (f.in_domain(t) and g.in_domain(f(t)) and h(t) == g(f(t))):
                return False
        if from_filter_iso(h) != ipf_mul(a, b):
            return False
    return True


def check_solver(rng, window, trials=100):
    for _ in range(trials):
        n = rng.randint(1, 3)
        g, x = random_element(rng, n, 8), random_element(rng, n, 8)
        if x not in solve_left(g, ipf_mul(g, x)) or x not in solve_right(g, ipf_mul(x, g)):
            return False
    return True


def check_partition(rng, window, trials=20):
    for _ in range(trials):
        dims = (rng.randint(2, 10), rng.randint(2, 10))
        part = random_partition(dims, rng, rng.uniform(0.25, 0.75))
        if not part.a_points or len(part.a_points) == part.size():
            continue
        if not validate_witness(part, find_shift_witness(part)):
            return False
    return True


CHECKS = [
    ("bicyclic-equivalence", check_bicyclic),
    ("associativity", check_associativity),
    ("inverse-axioms", check_inverse),
    ("filter-composition-oracle", check_filter_oracle),
    ("solver-witness-membership", check_solver),
    ("partition-witness-soundness", check_partition),
]


def run_selftest(seed: int, window: int) -> list:
    """[(name, passed)] for every check, each with its own seeded generator."""
    return [(name, fn(random.Random(f"{seed}:{name}"), window)) for name, fn in CHECKS]
