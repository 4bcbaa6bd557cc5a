"""Permutations of {1..n}, written on the right.

A permutation is stored by its image list: ``images[i-1]`` is (i)sigma.
Composition is postfix, ``alpha * beta`` applies alpha first and then beta,
and a permutation acts on n-tuples by moving the entry at position i to
position (i)sigma:

    ((x)sigma)_i = x_{(i)sigma^-1}

With these conventions ((x)alpha)beta == (x)(alpha * beta).
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DimensionError, ParseError

__all__ = ["Permutation", "perm_act", "all_permutations", "parse_permutation"]


class Permutation:
    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise DimensionError(f"cannot compose permutations of degree {self.n} and {other.n}")
        return Permutation(other.images[k - 1] for k in self.images)

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, k in enumerate(self.images, start=1):
            inv[k - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(k == i for i, k in enumerate(self.images, start=1))

    def act(self, x: Sequence[int]) -> tuple:
        return perm_act(x, self)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def perm_act(x: Sequence[int], sigma: Permutation) -> tuple:
    """Return (x)sigma, the tuple whose i-th entry is x at (i)sigma^-1."""
    if len(x) != sigma.n:
        raise DimensionError(f"cannot act by a degree-{sigma.n} permutation on a {len(x)}-tuple")
    inv = sigma.inverse.images
    return tuple(x[inv[i] - 1] for i in range(sigma.n))


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


_PERM_RE = re.compile(r"\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]")


def parse_permutation(text: str) -> Permutation:
    m = _PERM_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError("not a permutation image list", token=text)
    try:
        return Permutation(int(t) for t in m.group(1).split(","))
    except ValueError as exc:
        raise ParseError(str(exc), token=text) from None
