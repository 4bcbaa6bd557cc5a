"""Independent reference computations used by the tests.

Nothing here calls into the code paths it is used to check: words are
reduced by literal cancellation of "qp", equations are solved by scanning
every candidate element in a window, and so on.
"""

import functools
import itertools

import numpy as np

from ipfmonoid.monoid import IpfElement
from ipfmonoid.permutation import Permutation, all_permutations


# -- bicyclic words as strings ---------------------------------------------------

def word_oracle_mul(a, b, c, d):
    """Exponents of p^a q^b . p^c q^d, computed by rewriting the string.

    The piecewise product on normal forms p^i q^j cancels an adjacent "qp";
    reduce the concatenated word that way until no "qp" is left.
    """
    out = []
    for ch in "p" * a + "q" * b + "p" * c + "q" * d:
        if ch == "p" and out and out[-1] == "q":
            out.pop()
        else:
            out.append(ch)
    s = "".join(out)
    ps = len(s) - len(s.lstrip("p"))
    assert s == "p" * ps + "q" * (len(s) - ps)
    return ps, len(s) - ps


# -- vectorized multiplication ----------------------------------------------------

def _act(arr, sigma: Permutation):
    """(x)sigma on the last axis: column i takes column (i)sigma^-1."""
    idx = [sigma.inverse(i) - 1 for i in range(1, sigma.n + 1)]
    return arr[..., idx]


def vec_mul(sa, xa, ya, sb, xb, yb):
    """The semidirect product on numpy arrays of bases (fixed permutations)."""
    xa_b, ya_b = _act(xa, sb), _act(ya, sb)
    m = np.maximum(ya_b, xb)
    return sa * sb, xa_b + m - ya_b, yb + m - xb


@functools.lru_cache(maxsize=8)
def candidate_grid(n: int, window: int):
    """All (u, v) with coordinates in 1..window, as two (N, n) arrays."""
    axis = np.arange(1, window + 1)
    mesh = np.stack(np.meshgrid(*([axis] * (2 * n)), indexing="ij"), axis=-1).reshape(-1, 2 * n)
    return mesh[:, :n], mesh[:, n:]


def _rows_to_elements(sigma, u, v, mask):
    return sorted(
        IpfElement(sigma, tuple(int(t) for t in uu), tuple(int(t) for t in vv))
        for uu, vv in zip(u[mask], v[mask])
    )


def brute_solve(g: IpfElement, c: IpfElement, side: str, window: int):
    """Every x with coordinates <= window and g.x == c (left) or x.g == c (right)."""
    n = g.n
    u, v = candidate_grid(n, window)
    gx, gy = np.array(g.x), np.array(g.y)
    cx, cy = np.array(c.x), np.array(c.y)
    found = []
    for beta in all_permutations(n):
        # every candidate with this permutation shares one first component
        if (g.sigma * beta if side == "left" else beta * g.sigma) != c.sigma:
            continue
        if side == "left":
            _, X, Y = vec_mul(g.sigma, gx, gy, beta, u, v)
        else:
            _, X, Y = vec_mul(beta, u, v, g.sigma, gx, gy)
        mask = np.all(X == cx, axis=1) & np.all(Y == cy, axis=1)
        found += _rows_to_elements(beta, u, v, mask)
    return sorted(found)


def brute_inverses(a: IpfElement, window: int):
    """Every b in the window with a b a == a and b a b == b."""
    n = a.n
    u, v = candidate_grid(n, window)
    ax, ay = np.array(a.x), np.array(a.y)
    found = []
    for beta in all_permutations(n):
        if a.sigma * beta * a.sigma != a.sigma or beta * a.sigma * beta != beta:
            continue
        s1, X1, Y1 = vec_mul(a.sigma, ax, ay, beta, u, v)           # a b
        _, X2, Y2 = vec_mul(s1, X1, Y1, a.sigma, ax, ay)             # (a b) a
        ok = np.all(X2 == ax, axis=1) & np.all(Y2 == ay, axis=1)
        s3, X3, Y3 = vec_mul(beta, u, v, a.sigma, ax, ay)            # b a
        _, X4, Y4 = vec_mul(s3, X3, Y3, beta, u, v)                  # (b a) b
        ok &= np.all(X4 == u, axis=1) & np.all(Y4 == v, axis=1)
        found += _rows_to_elements(beta, u, v, ok)
    return found


# -- breadth-first reachability in the bicyclic monoid ------------------------------

def bicyclic_reachable(generators, depth):
    """Pairs reachable from (1, 1) within depth steps of right multiplication,
    with the max-form product written out directly."""
    def mul(a, b):
        (i, j), (k, l) = a, b
        return (i - j + max(j, k), l - k + max(j, k))

    seen = {(1, 1)}
    frontier = [(1, 1)]
    edges = set()
    for _ in range(depth):
        nxt = []
        for a in frontier:
            for gi, g in enumerate(generators, start=1):
                b = mul(a, g)
                edges.add((a, b, gi))
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen, edges


def lex_window(base, size):
    return list(itertools.product(*[range(b, b + size + 1) for b in base]))


# -- composition of partial maps, read off pointwise ----------------------------------

def pointwise_composite(f, g):
    """Recover (sigma, dom, ran) of "f then g" using only pointwise evaluation.

    The composite's domain is an up-closed set; starting from a point inside
    it, lowering each coordinate while the point stays inside reaches the
    least element.  The permutation is read off the images of unit steps.
    """
    from ipfmonoid.permutation import Permutation

    n = f.n

    def defined(t):
        return f.in_domain(t) and g.in_domain(f.eval(t))

    def h(t):
        return g.eval(f.eval(t))

    m = max(g.dom_base)
    t = [c + m for c in f.dom_base]
    assert defined(t)
    for i in range(n):
        while t[i] > 1:
            t[i] -= 1
            if not defined(t):
                t[i] += 1
                break
    base = tuple(t)
    image = h(base)
    images = []
    for i in range(n):
        step = list(base)
        step[i] += 1
        diff = [a - b for a, b in zip(h(step), image)]
        assert sorted(diff) == [0] * (n - 1) + [1]
        images.append(diff.index(1) + 1)
    return Permutation(images), base, image, defined, h
