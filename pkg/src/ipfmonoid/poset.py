"""The poset (N^n, <=) under the product order, and partial maps between its
principal filters.

Points are plain tuples of positive integers.  A ``FilterIso`` is the order
isomorphism

    t  |->  (t - dom)sigma + ran        for t >= dom

from the principal filter of ``dom`` onto the principal filter of ``ran``.
Maps compose left to right: ``compose(f, g)`` applies f first.

The semidirect-product element (sigma, [x, y]) corresponds to the map with
``dom = (x)sigma^-1`` and ``ran = y``, i.e. t |-> (t)sigma - x + y.  This
placement (sigma acting on the offset from the domain base, and the domain
base stored permuted) is the one that reproduces the monoid multiplication;
see ``ipfmonoid.monoid.to_filter_iso`` and the composition oracle tests.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, ParseError
from .permutation import Permutation, parse_permutation, perm_act

__all__ = [
    "point",
    "leq",
    "format_point",
    "parse_point",
    "principal_filter_window",
    "FilterIso",
    "compose",
]

Point = tuple


def point(coords: Iterable[int]) -> Point:
    """Validate coordinates and return them as a tuple."""
    p = tuple(coords)
    if not p:
        raise ValueError("a point needs at least one coordinate")
    for c in p:
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"coordinates must be positive integers, got {p}")
    return p


def _same_arity(a: Sequence[int], b: Sequence[int]):
    if len(a) != len(b):
        raise DimensionError(f"incompatible arities {len(a)} and {len(b)}")


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    _same_arity(a, b)
    return all(x <= y for x, y in zip(a, b))


def pmax(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_point(p: Sequence[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


_POINT_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def parse_point(text: str) -> Point:
    m = _POINT_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError("not a point", token=text)
    try:
        return point(int(t) for t in m.group(1).split(","))
    except ValueError as exc:
        raise ParseError(str(exc), token=text) from None


def principal_filter_window(base: Sequence[int], size: int) -> set:
    """Points t with base <= t <= base + size (coordinatewise)."""
    if size < 1:
        raise ValueError("window size must be >= 1")
    ranges = [range(b, b + size + 1) for b in base]
    return set(itertools.product(*ranges))


def window_points(base: Sequence[int], size: int):
    """Same points as ``principal_filter_window`` in lexicographic order."""
    return itertools.product(*[range(b, b + size + 1) for b in base])


@dataclass(frozen=True)
class FilterIso:
    sigma: Permutation
    dom_base: Point
    ran_base: Point

    def __post_init__(self):
        object.__setattr__(self, "dom_base", point(self.dom_base))
        object.__setattr__(self, "ran_base", point(self.ran_base))
        if not (self.sigma.n == len(self.dom_base) == len(self.ran_base)):
            raise DimensionError("permutation degree and base arities differ")

    @property
    def n(self) -> int:
        return self.sigma.n

    def in_domain(self, t: Sequence[int]) -> bool:
        return leq(self.dom_base, t)

    def in_range(self, t: Sequence[int]) -> bool:
        return leq(self.ran_base, t)

    def eval(self, t: Sequence[int]) -> Point:
        if not self.in_domain(t):
            raise DomainError(f"{format_point(t)} is not above {format_point(self.dom_base)}")
        offset = tuple(a - b for a, b in zip(t, self.dom_base))
        return tuple(o + r for o, r in zip(perm_act(offset, self.sigma), self.ran_base))

    __call__ = eval

    def preimage(self, s: Sequence[int]) -> Point:
        if not self.in_range(s):
            raise DomainError(f"{format_point(s)} is not above {format_point(self.ran_base)}")
        offset = tuple(a - b for a, b in zip(s, self.ran_base))
        return tuple(o + d for o, d in zip(perm_act(offset, self.sigma.inverse), self.dom_base))

    def inverse(self) -> FilterIso:
        return FilterIso(self.sigma.inverse, self.ran_base, self.dom_base)

    def __str__(self):
        return (
            f"iso{{sigma={self.sigma}; dom={format_point(self.dom_base)}; "
            f"ran={format_point(self.ran_base)}}}"
        )

    @classmethod
    def identity(cls, n: int) -> FilterIso:
        one = (1,) * n
        return cls(Permutation.identity(n), one, one)

    @classmethod
    def parse(cls, text: str) -> FilterIso:
        m = re.fullmatch(
            r"\s*iso\s*\{\s*sigma\s*=\s*(\[[^\]]*\])\s*;\s*dom\s*=\s*(\([^)]*\))\s*;"
            r"\s*ran\s*=\s*(\([^)]*\))\s*\}\s*",
            text,
        )
        if m is None:
            raise ParseError("not a filter isomorphism", token=text)
        try:
            return cls(parse_permutation(m.group(1)), parse_point(m.group(2)), parse_point(m.group(3)))
        except DimensionError as exc:
            raise ParseError(str(exc), token=text) from None


def compose(f: FilterIso, g: FilterIso) -> FilterIso:
    """The partial-map composite "f then g".

    Its domain is the preimage under f of (range of f) meet (domain of g),
    which is the principal filter over the preimage of max(ran_f, dom_g).
    """
    if f.n != g.n:
        raise DimensionError(f"cannot compose maps on N^{f.n} and N^{g.n}")
    meet = pmax(f.ran_base, g.dom_base)
    dom = f.preimage(meet)
    return FilterIso(f.sigma * g.sigma, dom, g.eval(meet))
