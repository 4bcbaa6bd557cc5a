"""IPF(N^n) with an adjoined zero, and the neighbourhoods of zero in the
one-point compactification topology.

Every non-zero element is isolated, so the topology is fully described by
its neighbourhoods of zero: the sets containing zero whose complement in
IPF(N^n) is finite.  ``CofiniteNeighborhood`` stores exactly that finite
complement.

Separate continuity at zero comes down to the fact that every equation
g.x = c and x.g = c has finitely many solutions.  ``solve_left`` and
``solve_right`` compute those solution sets, and ``translate_preimage``
uses them to produce the neighbourhood pulled back along a translation.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import DimensionError, ParseError
from .monoid import IpfElement, format_element, ipf_mul, parse_element
from .permutation import perm_act

__all__ = [
    "ZERO",
    "zero_mul",
    "parse_zero_element",
    "solve_left",
    "solve_right",
    "solution_bound",
    "CofiniteNeighborhood",
    "nbhd_intersect",
    "translate_preimage",
    "continuity_witness",
]


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __mul__(self, other):
        return zero_mul(self, other)

    def __rmul__(self, other):
        return zero_mul(other, self)

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def zero_mul(a, b):
    if a is ZERO or b is ZERO:
        return ZERO
    return ipf_mul(a, b)


def parse_zero_element(text: str):
    if text.strip() == "0":
        return ZERO
    return parse_element(text)


def format_zero_element(a) -> str:
    return "0" if a is ZERO else format_element(a)


# -- first-order equations --------------------------------------------------

def solution_bound(g: IpfElement, c: IpfElement) -> int:
    """Every coordinate of every solution of g.x = c or x.g = c is below this."""
    return max(g.x + g.y) + max(c.x + c.y)


def _coordinate_solutions(bx: int, by: int, cx: int, cy: int, bound: int, left: bool):
    """Pairs (u, v) in [1, bound]^2 solving one coordinate of the equation.

    Left  (g.x = c): cx = bx + max(by, u) - by,  cy = v + max(by, u) - u.
    Right (x.g = c): cx = u + max(v, bx) - v,    cy = by + max(v, bx) - bx,
    where (bx, by) is the matching coordinate pair of the known factor.
    """
    out = []
    for u in range(1, bound + 1):
        for v in range(1, bound + 1):
            if left:
                m = max(by, u)
                ok = bx + m - by == cx and v + m - u == cy
            else:
                m = max(v, bx)
                ok = u + m - v == cx and by + m - bx == cy
            if ok:
                out.append((u, v))
    return out


def _solve(g: IpfElement, c: IpfElement, bound: int, left: bool) -> list:
    n = g.n
    if left:
        beta = g.sigma.inverse * c.sigma
        gx, gy = perm_act(g.x, beta), perm_act(g.y, beta)
        # coordinate i of the product only involves coordinate i of x
        slot = list(range(n))
    else:
        beta = c.sigma * g.sigma.inverse
        gx, gy = g.x, g.y
        # coordinate i of the product involves coordinate (i)gamma^-1 of x
        slot = [k - 1 for k in g.sigma.inverse.images]
    per_coord = [None] * n
    for i in range(n):
        per_coord[slot[i]] = _coordinate_solutions(gx[i], gy[i], c.x[i], c.y[i], bound, left)
    solutions = []
    for choice in itertools.product(*per_coord):
        solutions.append(IpfElement(beta, tuple(u for u, _ in choice), tuple(v for _, v in choice)))
    return sorted(solutions)


def _solve_checked(g, c, bound, check, left):
    if g.n != c.n:
        raise DimensionError(f"cannot solve an equation mixing IPF(N^{g.n}) and IPF(N^{c.n})")
    if bound is None:
        bound = solution_bound(g, c)
    result = _solve(g, c, bound, left)
    if check and _solve(g, c, 2 * bound, left) != result:
        raise RuntimeError(f"solution set did not stabilize between bounds {bound} and {2 * bound}")
    return result


def solve_left(g: IpfElement, c: IpfElement, bound: int | None = None, check: bool = True) -> list:
    """All x with g.x == c, in canonical order.

    The permutation of x is forced to be sigma_g^-1 sigma_c.  The coordinates
    decouple, so each coordinate pair is scanned over [1, bound]^2 and the
    results combined.  With ``check`` the scan is repeated at twice the bound
    and must give the same set.
    """
    return _solve_checked(g, c, bound, check, left=True)


def solve_right(g: IpfElement, c: IpfElement, bound: int | None = None, check: bool = True) -> list:
    """All x with x.g == c, in canonical order (see ``solve_left``)."""
    return _solve_checked(g, c, bound, check, left=False)


# -- cofinite neighbourhoods of zero ----------------------------------------

class CofiniteNeighborhood:
    """A neighbourhood of zero, stored as the finite set of excluded elements.

    ``&`` with another neighbourhood gives a neighbourhood; ``&`` with a
    finite set gives a finite set.  Subtracting a neighbourhood leaves a finite
    set, subtracting a finite set of non-zero elements leaves a neighbourhood.
    """

    def __init__(self, complement: Iterable[IpfElement] = ()):
        complement = frozenset(complement)
        if ZERO in complement:
            raise ValueError("a neighbourhood of zero must contain zero")
        ns = {e.n for e in complement}
        if len(ns) > 1:
            raise DimensionError(f"excluded elements mix arities {sorted(ns)}")
        self.complement = complement

    @classmethod
    def full(cls) -> CofiniteNeighborhood:
        return cls()

    def __contains__(self, e) -> bool:
        return e is ZERO or e not in self.complement

    def __eq__(self, other):
        return isinstance(other, CofiniteNeighborhood) and self.complement == other.complement

    def __hash__(self):
        return hash(self.complement)

    def __and__(self, other):
        if isinstance(other, CofiniteNeighborhood):
            return CofiniteNeighborhood(self.complement | other.complement)
        return {e for e in other if e in self}

    __rand__ = __and__

    def __or__(self, other):
        if isinstance(other, CofiniteNeighborhood):
            return CofiniteNeighborhood(self.complement & other.complement)
        other = set(other)
        return CofiniteNeighborhood(e for e in self.complement if e not in other)

    __ror__ = __or__

    def __sub__(self, other):
        if isinstance(other, CofiniteNeighborhood):
            return set(other.complement - self.complement)
        other = set(other)
        if ZERO in other:
            raise ValueError("removing zero does not leave a neighbourhood of zero")
        return CofiniteNeighborhood(self.complement | other)

    def __rsub__(self, other):
        return {e for e in other if e not in self}

    def issubset(self, other: CofiniteNeighborhood) -> bool:
        return other.complement <= self.complement

    __le__ = issubset

    def excluded(self) -> list:
        return sorted(self.complement)

    def __bool__(self):
        return True

    def __len__(self):
        raise TypeError("a cofinite neighbourhood is infinite")

    def to_lines(self) -> list:
        return [format_element(e) for e in self.excluded()]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> CofiniteNeighborhood:
        out = []
        for lineno, line in enumerate(lines, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                out.append(parse_element(line))
            except ParseError as exc:
                raise ParseError("bad excluded element", token=line, line=lineno) from exc
        return cls(out)

    def __repr__(self):
        return f"CofiniteNeighborhood(excluding {len(self.complement)})"


def nbhd_intersect(u: CofiniteNeighborhood, v: CofiniteNeighborhood) -> CofiniteNeighborhood:
    return u & v


def translate_preimage(g, u: CofiniteNeighborhood, side: str = "left") -> CofiniteNeighborhood:
    """{x : g.x in u} for side "left", {x : x.g in u} for side "right".

    The excluded set is the union of the solution sets of g.x = c (resp.
    x.g = c) over the excluded elements c of u, which is finite.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if g is ZERO:
        return CofiniteNeighborhood.full()
    solve = solve_left if side == "left" else solve_right
    excluded = set()
    for c in u.complement:
        excluded.update(solve(g, c))
    return CofiniteNeighborhood(excluded)


def continuity_witness(g, u: CofiniteNeighborhood) -> CofiniteNeighborhood:
    """A neighbourhood V of zero with V.g and g.V both inside u."""
    return translate_preimage(g, u, "left") & translate_preimage(g, u, "right")
