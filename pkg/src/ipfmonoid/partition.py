"""Finite-box version of the shift-witness construction for two-colourings of N^n.

Given a colouring of a box {1..d_1} x ... x {1..d_n} into classes A and B,
``find_shift_witness`` produces a set C of A-points, a coordinate k and a sign
s such that moving every point of C one step along coordinate k (direction s)
lands in B.

For n = 1 the witness is the boundary set {a in A : a + 1 in B}.  For n >= 2
the construction is iterative: pick the lexicographically smallest A-point
and B-point not below any marked point, join them by a shortest lattice path
that avoids the marked points, mark the first A -> B step on that path, and
repeat until no pick or no path is available.  The marked steps are grouped
by direction and the largest group is returned, so |C| >= ceil(steps / 2n).
On a finite box "infinite" becomes "grows with the box size".
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError, ParseError
from .monoid import shift_map
from .poset import format_point, parse_point

__all__ = [
    "BoxPartition",
    "LatticePath",
    "ShiftWitness",
    "down_set",
    "find_boundary_pair",
    "build_avoiding_path",
    "find_shift_witness",
    "validate_witness",
    "parse_partition",
    "random_partition",
]

A, B = "A", "B"


def box_points(dims: Sequence[int]):
    return itertools.product(*[range(1, d + 1) for d in dims])


def in_box(p: Sequence[int], dims: Sequence[int]) -> bool:
    return len(p) == len(dims) and all(1 <= c <= d for c, d in zip(p, dims))


@dataclass(frozen=True)
class BoxPartition:
    """Colouring of a finite box; the points not in ``a_points`` are coloured B."""

    dims: tuple
    a_points: frozenset

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "a_points", frozenset(tuple(p) for p in self.a_points))
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"box extents must be positive, got {self.dims}")
        for p in self.a_points:
            if not in_box(p, self.dims):
                raise ValueError(f"{format_point(p)} lies outside the box {self.dims}")

    @classmethod
    def from_function(cls, dims: Sequence[int], colour) -> BoxPartition:
        return cls(tuple(dims), frozenset(p for p in box_points(dims) if colour(p) == A))

    @property
    def n(self) -> int:
        return len(self.dims)

    def color(self, p: Sequence[int]) -> str:
        if not in_box(p, self.dims):
            raise DomainError(f"{format_point(p)} lies outside the box {self.dims}")
        return A if tuple(p) in self.a_points else B

    def points(self, colour: str) -> list:
        """Points of one colour in lexicographic order."""
        return [p for p in box_points(self.dims) if (p in self.a_points) == (colour == A)]

    def size(self) -> int:
        return math.prod(self.dims)

    def format(self) -> str:
        """Grid text for n = 2, ``point:colour`` lines otherwise."""
        if self.n == 2:
            rows = []
            for i in range(1, self.dims[0] + 1):
                rows.append("".join(self.color((i, j)) for j in range(1, self.dims[1] + 1)))
            return "\n".join(rows) + "\n"
        return "".join(f"{format_point(p)}:{self.color(p)}\n" for p in box_points(self.dims))


@dataclass(frozen=True)
class LatticePath:
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        if not self.points:
            raise ValueError("a path has at least one point")
        for p, q in zip(self.points, self.points[1:]):
            if step_direction(p, q) is None:
                raise ValueError(f"{format_point(p)} -> {format_point(q)} is not a unit step")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class ShiftWitness:
    C: tuple
    k: int
    s: int
    iterations: int = 0
    marked: tuple = field(default=(), compare=False, repr=False)

    def shifted(self) -> list:
        return [shift_map(c, self.k, self.s) for c in self.C]

    def format(self) -> str:
        lines = [f"k={self.k} s={self.s:+d} |C|={len(self.C)}"]
        lines += [f"{format_point(c)} -> {format_point(d)}" for c, d in zip(self.C, self.shifted())]
        return "\n".join(lines) + "\n"


def step_direction(p: Sequence[int], q: Sequence[int]):
    """(k, s) with q == shift_map(p, k, s), or None."""
    if len(p) != len(q):
        return None
    diff = [(i, b - a) for i, (a, b) in enumerate(zip(p, q), start=1) if a != b]
    if len(diff) == 1 and diff[0][1] in (1, -1):
        return diff[0]
    return None


def down_set(X: Iterable[Sequence[int]], dims: Sequence[int] | None = None) -> set:
    """All points below some point of X, cut down to the box when dims is given."""
    out = set()
    for x in X:
        top = x if dims is None else [min(c, d) for c, d in zip(x, dims)]
        out.update(itertools.product(*[range(1, c + 1) for c in top]))
    return out


def find_boundary_pair(path: LatticePath, partition: BoxPartition) -> tuple:
    """First consecutive pair (p, q) on the path with p in A and q in B."""
    pts = path.points
    for p, q in zip(pts, pts[1:]):
        if partition.color(p) == A and partition.color(q) == B:
            return p, q
    raise DomainError("path has no A -> B step")


def _neighbours(p, dims):
    out = []
    for k in range(len(p)):
        for s in (-1, 1):
            c = p[k] + s
            if 1 <= c <= dims[k]:
                out.append(p[:k] + (c,) + p[k + 1:])
    out.sort()
    return out


def build_avoiding_path(start, goal, forbidden, dims) -> LatticePath | None:
    """Shortest lattice path inside the box avoiding ``forbidden``, or None.

    Breadth-first search expanding neighbours in lexicographic order, so the
    result is deterministic.
    """
    start, goal, dims = tuple(start), tuple(goal), tuple(dims)
    for p in (start, goal):
        if not in_box(p, dims):
            raise DomainError(f"{format_point(p)} lies outside the box {dims}")
        if p in forbidden:
            raise DomainError(f"endpoint {format_point(p)} is forbidden")
    parent = {start: None}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if p == goal:
            path = []
            while p is not None:
                path.append(p)
                p = parent[p]
            return LatticePath(tuple(reversed(path)))
        for q in _neighbours(p, dims):
            if q not in parent and q not in forbidden:
                parent[q] = p
                queue.append(q)
    return None


def _first_outside(candidates, below):
    for p in candidates:
        if p not in below:
            return p
    return None


def find_shift_witness(partition: BoxPartition) -> ShiftWitness:
    a_pts = partition.points(A)
    b_pts = partition.points(B)
    if not a_pts:
        raise DomainError("colour class A is empty")
    if not b_pts:
        raise DomainError("colour class B is empty")
    dims = partition.dims

    if partition.n == 1:
        up = tuple(p for p in a_pts if p[0] < dims[0] and partition.color((p[0] + 1,)) == B)
        if up:
            return ShiftWitness(up, 1, 1, iterations=len(up))
        down = tuple(p for p in a_pts if p[0] > 1 and partition.color((p[0] - 1,)) == B)
        return ShiftWitness(down, 1, -1, iterations=len(down))

    marked = []
    forbidden = set()
    below = set()
    while True:
        a = _first_outside(a_pts, below)
        b = _first_outside(b_pts, below)
        if a is None or b is None:
            break
        path = build_avoiding_path(a, b, forbidden, dims)
        if path is None:
            break
        p, q = find_boundary_pair(path, partition)
        marked.append((p, q))
        forbidden.update((p, q))
        below |= down_set([p, q], dims)

    if not marked:
        raise DomainError("no admissible first step")

    classes = {}
    for p, q in marked:
        classes.setdefault(step_direction(p, q), []).append(p)
    (k, s), members = min(classes.items(), key=lambda kv: (-len(kv[1]), kv[0][0], -kv[0][1]))
    return ShiftWitness(tuple(sorted(members)), k, s, iterations=len(marked), marked=tuple(marked))


def validate_witness(partition: BoxPartition, witness: ShiftWitness) -> bool:
    """C inside A, and every shifted point inside the box and coloured B."""
    for c in witness.C:
        if not in_box(c, partition.dims) or partition.color(c) != A:
            return False
        try:
            d = shift_map(c, witness.k, witness.s)
        except DomainError:
            return False
        if not in_box(d, partition.dims) or partition.color(d) != B:
            return False
    return True


# -- text formats -------------------------------------------------------------

_COLOUR_LINE = re.compile(r"\s*(\([^)]*\))\s*:\s*([AB])\s*")


def parse_partition(text: str) -> BoxPartition:
    """Read a partition from grid text (n = 2) or ``point:colour`` lines.

    Blank lines and lines starting with ``#`` are ignored.  In grid form, the
    row number is the first coordinate and the column the second.
    """
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty partition file")
    if ":" in lines[0][1]:
        return _parse_point_list(lines)
    return _parse_grid(lines)


def _parse_grid(lines) -> BoxPartition:
    width = len(lines[0][1])
    a_points = set()
    for row, (lineno, ln) in enumerate(lines, start=1):
        if len(ln) != width:
            raise ParseError(f"row has {len(ln)} cells, expected {width}", token=ln, line=lineno)
        for col, ch in enumerate(ln, start=1):
            if ch not in "AB":
                raise ParseError("cell colour must be A or B", token=ch, line=lineno)
            if ch == A:
                a_points.add((row, col))
    return BoxPartition((len(lines), width), frozenset(a_points))


def _parse_point_list(lines) -> BoxPartition:
    colours = {}
    for lineno, ln in lines:
        m = _COLOUR_LINE.fullmatch(ln)
        if m is None:
            raise ParseError("expected 'point:colour'", token=ln, line=lineno)
        try:
            p = parse_point(m.group(1))
        except ParseError as exc:
            raise ParseError("bad point", token=m.group(1), line=lineno) from exc
        if colours and len(p) != len(next(iter(colours))):
            raise ParseError("point arity differs from earlier lines", token=m.group(1), line=lineno)
        if p in colours:
            raise ParseError("point listed twice", token=m.group(1), line=lineno)
        colours[p] = m.group(2)
    dims = tuple(max(c) for c in zip(*colours))
    for p in box_points(dims):
        if p not in colours:
            raise ParseError(f"point {format_point(p)} of the box {dims} has no colour")
    return BoxPartition(dims, frozenset(p for p, c in colours.items() if c == A))


def random_partition(dims: Sequence[int], rng, density: float = 0.5) -> BoxPartition:
    """Each point is coloured A independently with probability ``density``."""
    return BoxPartition.from_function(dims, lambda p: A if rng.random() < density else B)
