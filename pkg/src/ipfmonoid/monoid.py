"""The monoid IPF(N^n) as the semidirect product S_n x| C(p,q)^n.

An element is a triple (sigma, [x, y]) with sigma a permutation and x, y
points of N^n.  The product is

    (a, [x, y]) . (b, [u, v])
        = (a*b, [(x)b + max((y)b, u) - (y)b,  v + max((y)b, u) - u])

with max and arithmetic taken coordinatewise.  For n = 1 this is the
bicyclic monoid on pairs.

As a partial map, (sigma, [x, y]) sends t >= (x)sigma^-1 to (t)sigma - x + y;
``to_filter_iso`` and ``from_filter_iso`` convert between the two views.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, DomainError, ParseError
from .permutation import Permutation, parse_permutation, perm_act
from .poset import FilterIso, format_point, parse_point, point, window_points

__all__ = [
    "IpfElement",
    "identity",
    "ones",
    "two",
    "ipf_mul",
    "ipf_inv",
    "is_idempotent",
    "green_R",
    "green_L",
    "natural_leq",
    "group_congruence_class",
    "congruent",
    "congruence_witness",
    "quotient_mul",
    "FiberSet",
    "fiber_bijection",
    "right_translate",
    "left_translate",
    "shift_map",
    "translator_offsets",
    "construct_left_translator",
    "to_filter_iso",
    "from_filter_iso",
    "parse_element",
    "format_element",
    "to_record",
    "from_record",
    "export_elements",
    "import_elements",
    "random_element",
]


@dataclass(frozen=True, order=True)
class IpfElement:
    sigma: Permutation
    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", point(self.x))
        object.__setattr__(self, "y", point(self.y))
        if not (self.sigma.n == len(self.x) == len(self.y)):
            raise DimensionError(
                f"permutation degree {self.sigma.n} does not match bases of arity "
                f"{len(self.x)} and {len(self.y)}"
            )

    @property
    def n(self) -> int:
        return self.sigma.n

    def __mul__(self, other: IpfElement) -> IpfElement:
        if not isinstance(other, IpfElement):
            return NotImplemented
        return ipf_mul(self, other)

    def inverse(self) -> IpfElement:
        return ipf_inv(self)

    def __str__(self):
        return format_element(self)


def ones(n: int) -> tuple:
    return (1,) * n


def two(n: int, k: int) -> tuple:
    """The point with 2 at coordinate k and 1 elsewhere."""
    if not 1 <= k <= n:
        raise ValueError(f"coordinate index {k} outside 1..{n}")
    return tuple(2 if i == k else 1 for i in range(1, n + 1))


def identity(n: int) -> IpfElement:
    return IpfElement(Permutation.identity(n), ones(n), ones(n))


def _check_same_n(a: IpfElement, b: IpfElement):
    if a.n != b.n:
        raise DimensionError(f"cannot combine elements of IPF(N^{a.n}) and IPF(N^{b.n})")


def ipf_mul(a: IpfElement, b: IpfElement) -> IpfElement:
    _check_same_n(a, b)
    beta = b.sigma
    xb = perm_act(a.x, beta)
    yb = perm_act(a.y, beta)
    m = tuple(max(p, q) for p, q in zip(yb, b.x))
    return IpfElement(
        a.sigma * beta,
        tuple(xi + mi - yi for xi, mi, yi in zip(xb, m, yb)),
        tuple(vi + mi - ui for vi, mi, ui in zip(b.y, m, b.x)),
    )


def ipf_inv(a: IpfElement) -> IpfElement:
    inv = a.sigma.inverse
    return IpfElement(inv, perm_act(a.y, inv), perm_act(a.x, inv))


def is_idempotent(a: IpfElement) -> bool:
    return ipf_mul(a, a) == a


def green_R(a: IpfElement, b: IpfElement) -> bool:
    """a R b, i.e. a a^-1 == b b^-1; both are (id, [d, d]) with d the domain base."""
    _check_same_n(a, b)
    return perm_act(a.x, a.sigma.inverse) == perm_act(b.x, b.sigma.inverse)


def green_L(a: IpfElement, b: IpfElement) -> bool:
    """a L b, i.e. a^-1 a == b^-1 b; both are (id, [y, y])."""
    _check_same_n(a, b)
    return a.y == b.y


def green_H(a: IpfElement, b: IpfElement) -> bool:
    return green_R(a, b) and green_L(a, b)


def natural_leq(a: IpfElement, b: IpfElement) -> bool:
    """a <= b in the natural partial order: a == (a a^-1) b."""
    _check_same_n(a, b)
    return ipf_mul(ipf_mul(a, ipf_inv(a)), b) == a


def group_congruence_class(a: IpfElement) -> tuple:
    """Invariant (sigma, y - x) of the least group congruence class of a."""
    return a.sigma, tuple(q - p for p, q in zip(a.x, a.y))


def congruent(a: IpfElement, b: IpfElement) -> bool:
    _check_same_n(a, b)
    return group_congruence_class(a) == group_congruence_class(b)


def congruence_witness(a: IpfElement, b: IpfElement) -> IpfElement:
    """Idempotent e = (id, [M, M]) with M above every coordinate of a and b.

    a and b are congruent exactly when e a == e b for this e.
    """
    _check_same_n(a, b)
    m = max(a.x + a.y + b.x + b.y) + 1
    return IpfElement(Permutation.identity(a.n), (m,) * a.n, (m,) * a.n)


def quotient_mul(c: tuple, d: tuple) -> tuple:
    """Group law of S_n x| Z^n on congruence classes (sigma, offset)."""
    alpha, s = c
    beta, t = d
    return alpha * beta, tuple(p + q for p, q in zip(perm_act(s, beta), t))


@dataclass(frozen=True)
class FiberSet:
    """The set L_sigma^a of elements (sigma, [a, x]) with x ranging over N^n."""

    sigma: Permutation
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", point(self.a))
        if len(self.a) != self.sigma.n:
            raise DimensionError("fiber base and permutation have different arity")

    def __contains__(self, e) -> bool:
        return isinstance(e, IpfElement) and e.sigma == self.sigma and e.x == self.a

    def element(self, x: Sequence[int]) -> IpfElement:
        """Inverse of the fiber bijection."""
        return IpfElement(self.sigma, self.a, x)

    def window(self, size: int, base: Sequence[int] | None = None) -> Iterator[IpfElement]:
        base = base or ones(self.sigma.n)
        for x in window_points(base, size):
            yield IpfElement(self.sigma, self.a, x)


def fiber_bijection(fiber: FiberSet, e: IpfElement) -> tuple:
    if e not in fiber:
        raise DomainError(f"{e} is not in the fiber over sigma={fiber.sigma}, a={format_point(fiber.a)}")
    return e.y


def right_translate(s: IpfElement, g: IpfElement) -> IpfElement:
    return ipf_mul(s, g)


def left_translate(g: IpfElement, s: IpfElement) -> IpfElement:
    return ipf_mul(g, s)


def shift_map(x: Sequence[int], k: int, s: int = 1) -> tuple:
    """Add s (= +1 or -1) to coordinate k of x."""
    if s not in (1, -1):
        raise ValueError("shift sign must be +1 or -1")
    if not 1 <= k <= len(x):
        raise ValueError(f"coordinate index {k} outside 1..{len(x)}")
    if x[k - 1] + s < 1:
        raise DomainError(f"cannot decrement coordinate {k} of {format_point(x)} below 1")
    return tuple(c + s if i == k else c for i, c in enumerate(x, start=1))


def translator_offsets(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Return (p, q) with q - p == a - b and max(p, b) == b, all entries >= 1."""
    if len(a) != len(b):
        raise DimensionError("fiber bases have different arity")
    p, q = [], []
    for ai, bi in zip(a, b):
        if bi >= ai:
            q.append(1)
            p.append(bi - ai + 1)
        else:
            p.append(1)
            q.append(ai - bi + 1)
    return tuple(p), tuple(q)


def construct_left_translator(a: Sequence[int], b: Sequence[int], sigma: Permutation) -> IpfElement:
    """Element g whose left translation carries (sigma, [b, x]) to (sigma, [a, x])."""
    p, q = translator_offsets(a, b)
    inv = sigma.inverse
    return IpfElement(Permutation.identity(sigma.n), perm_act(q, inv), perm_act(p, inv))


def to_filter_iso(a: IpfElement) -> FilterIso:
    return FilterIso(a.sigma, perm_act(a.x, a.sigma.inverse), a.y)


def from_filter_iso(f: FilterIso) -> IpfElement:
    return IpfElement(f.sigma, perm_act(f.dom_base, f.sigma), f.ran_base)


# -- text and record forms -------------------------------------------------

_ELEMENT_RE = re.compile(
    r"\s*\(\s*sigma\s*=\s*(\[[^\]]*\])\s*;\s*x\s*=\s*(\([^)]*\))\s*;\s*y\s*=\s*(\([^)]*\))\s*\)\s*"
)


def format_element(a: IpfElement) -> str:
    return f"(sigma={a.sigma}; x={format_point(a.x)}; y={format_point(a.y)})"


def parse_element(text: str) -> IpfElement:
    m = _ELEMENT_RE.fullmatch(text)
    if m is None:
        raise ParseError("not an element", token=text)
    sigma = parse_permutation(m.group(1))
    x = parse_point(m.group(2))
    y = parse_point(m.group(3))
    try:
        return IpfElement(sigma, x, y)
    except DimensionError as exc:
        raise DimensionError(f"{exc}: {text!r}") from None


def to_record(a: IpfElement) -> dict:
    return {"sigma": list(a.sigma.images), "x": list(a.x), "y": list(a.y)}


def from_record(rec: dict) -> IpfElement:
    try:
        return IpfElement(Permutation(rec["sigma"]), tuple(rec["x"]), tuple(rec["y"]))
    except DimensionError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed element record ({exc})", token=json.dumps(rec)) from None


def export_elements(elements: Iterable[IpfElement]) -> str:
    """One JSON object per line."""
    return "".join(json.dumps(to_record(a)) + "\n" for a in elements)


def import_elements(text: str) -> list:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            raise ParseError("invalid JSON record", token=line, line=lineno) from None
        out.append(from_record(rec))
    return out


def random_element(rng, n: int, max_coord: int) -> IpfElement:
    """Uniform permutation and coordinates uniform in 1..max_coord."""
    sigma = Permutation(rng.sample(range(1, n + 1), n))
    x = tuple(rng.randint(1, max_coord) for _ in range(n))
    y = tuple(rng.randint(1, max_coord) for _ in range(n))
    return IpfElement(sigma, x, y)
