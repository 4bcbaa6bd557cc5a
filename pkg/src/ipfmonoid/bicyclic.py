"""The bicyclic monoid C(p, q) in two concrete representations.

``BicyclicWord`` is the normal form p^a q^b with a, b >= 0 and the piecewise
product.  ``BicyclicElement`` is a pair (i, j) of positive integers with the
max-form product

    (i, j) * (k, l) = (i + max(j, k) - j, l + max(j, k) - k).

``word_to_pair`` shifts both exponents by one and is an isomorphism between
the two.  Everything else in the package works with the pair form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "BicyclicElement",
    "BicyclicWord",
    "bicyclic_mul",
    "word_mul",
    "word_to_pair",
    "pair_to_word",
    "bicyclic_inv",
    "parse_pair",
    "parse_word",
]


@dataclass(frozen=True, order=True)
class BicyclicElement:
    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)):
            raise TypeError("bicyclic coordinates must be integers")
        if self.i < 1 or self.j < 1:
            raise ValueError(f"bicyclic coordinates must be >= 1, got ({self.i},{self.j})")

    def __mul__(self, other: BicyclicElement) -> BicyclicElement:
        return bicyclic_mul(self, other)

    def inverse(self) -> BicyclicElement:
        return bicyclic_inv(self)

    def is_idempotent(self) -> bool:
        return self.i == self.j

    def __str__(self):
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class BicyclicWord:
    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("word exponents must be integers")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"word exponents must be >= 0, got p^{self.a} q^{self.b}")

    def __mul__(self, other: BicyclicWord) -> BicyclicWord:
        return word_mul(self, other)

    def __str__(self):
        return f"p^{self.a} q^{self.b}"


IDENTITY = BicyclicElement(1, 1)
IDENTITY_WORD = BicyclicWord(0, 0)


def bicyclic_mul(x: BicyclicElement, y: BicyclicElement) -> BicyclicElement:
    m = max(x.j, y.i)
    return BicyclicElement(x.i + m - x.j, y.j + m - y.i)


def word_mul(u: BicyclicWord, v: BicyclicWord) -> BicyclicWord:
    """Multiply normal-form words by cancelling q^j against p^k."""
    if u.b > v.a:
        return BicyclicWord(u.a, u.b - v.a + v.b)
    if u.b == v.a:
        return BicyclicWord(u.a, v.b)
    return BicyclicWord(u.a - u.b + v.a, v.b)


def word_to_pair(w: BicyclicWord) -> BicyclicElement:
    return BicyclicElement(w.a + 1, w.b + 1)


def pair_to_word(e: BicyclicElement) -> BicyclicWord:
    return BicyclicWord(e.i - 1, e.j - 1)


def bicyclic_inv(x: BicyclicElement) -> BicyclicElement:
    return BicyclicElement(x.j, x.i)


_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_WORD_RE = re.compile(r"p\^(\d+)\s*q\^(\d+)")


def parse_pair(text: str) -> BicyclicElement:
    m = _PAIR_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError("not a bicyclic pair", token=text)
    try:
        return BicyclicElement(int(m.group(1)), int(m.group(2)))
    except ValueError as exc:
        raise ParseError(str(exc), token=text) from None


def parse_word(text: str) -> BicyclicWord:
    m = _WORD_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError("not a bicyclic word", token=text)
    return BicyclicWord(int(m.group(1)), int(m.group(2)))
