"""Finite fragments of right Cayley graphs, exported as Graphviz DOT."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError
from .monoid import IpfElement, format_element, identity, ipf_mul


@dataclass
class CayleyFragment:
    nodes: list          # elements in breadth-first discovery order
    edges: list          # (source index, target index, generator number from 1)

    def to_dot(self, name: str = "cayley") -> str:
        lines = [f"digraph {name} {{"]
        for i, e in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{format_element(e)}"];')
        for src, dst, gen in self.edges:
            lines.append(f'  n{src} -> n{dst} [label="{gen}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def cayley_fragment(generators: Sequence[IpfElement], depth: int) -> CayleyFragment:
    """Everything reachable from the identity by at most ``depth`` right
    multiplications by the generators, with one edge per multiplication
    performed from a node at distance < depth."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise DimensionError("generators live in different arities")

    start = identity(n)
    index = {start: 0}
    nodes = [start]
    edges = []
    queue = deque([(start, 0)])
    while queue:
        node, dist = queue.popleft()
        if dist == depth:
            continue
        for gen_no, g in enumerate(generators, start=1):
            target = ipf_mul(node, g)
            if target not in index:
                index[target] = len(nodes)
                nodes.append(target)
                queue.append((target, dist + 1))
            edges.append((index[node], index[target], gen_no))
    return CayleyFragment(nodes, edges)
