"""Partitions as complete multipartite graphs.

Addition of partitions is the Zykov join of their graphs and multiplication
is the Sabidussi product, the complement-conjugate of the strong product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from partring.partition import Partition


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> list[list[bool]]:
        n = self.vertex_count
        adj = [[False] * n for _ in range(n)]
        for u, v in self.edges:
            adj[u][v] = adj[v][u] = True
        return adj


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def graph_of(a: Partition) -> SimpleGraph:
    """K_{n_1,...,n_k}: blocks laid out in ascending part order, edges across blocks."""
    block = []
    for i, size in enumerate(a.parts):
        block.extend([i] * size)
    n = len(block)
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]
    )
    return SimpleGraph(n, edges)


def complement(g: SimpleGraph) -> SimpleGraph:
    n = g.vertex_count
    return SimpleGraph(
        n, frozenset(e for e in combinations(range(n), 2) if e not in g.edges)
    )


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    s = g.vertex_count
    shifted = ((u + s, v + s) for u, v in h.edges)
    return SimpleGraph(s + h.vertex_count, g.edges | frozenset(shifted))


def zykov_join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    s, t = g.vertex_count, h.vertex_count
    base = disjoint_union(g, h)
    cross = frozenset((u, s + v) for u in range(s) for v in range(t))
    return SimpleGraph(s + t, base.edges | cross)


def shannon_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Strong product; the pair (u, v) is vertex ``u * |V(h)| + v``."""
    t = h.vertex_count
    n = g.vertex_count * t
    ga, ha = g.adjacency(), h.adjacency()
    edges = set()
    for x in range(n):
        u1, v1 = divmod(x, t)
        for y in range(x + 1, n):
            u2, v2 = divmod(y, t)
            if (u1 == u2 or ga[u1][u2]) and (v1 == v2 or ha[v1][v2]):
                edges.add((x, y))
    return SimpleGraph(n, frozenset(edges))


def sabidussi_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    return complement(shannon_product(complement(g), complement(h)))


def _components(g: SimpleGraph) -> list[list[int]]:
    adj = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(comp)
    return comps


def recover(g: SimpleGraph) -> Partition | None:
    """Block sizes of a complete multipartite graph, or None if g is not one.

    The blocks are the components of the complement, each of which must be a clique.
    """
    co = complement(g)
    comps = _components(co)
    label = [0] * g.vertex_count
    for i, comp in enumerate(comps):
        for u in comp:
            label[u] = i
    inner = [0] * len(comps)
    for u, _ in co.edges:
        inner[label[u]] += 1
    sizes = []
    for comp, e in zip(comps, inner):
        k = len(comp)
        if e != k * (k - 1) // 2:
            return None
        sizes.append(k)
    return Partition(tuple(sizes))


def multipartite_iso(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Isomorphism test valid only on complete multipartite graphs."""
    a, b = recover(g), recover(h)
    if a is None or b is None:
        raise ValueError("isomorphism is only decided for complete multipartite graphs")
    return a == b


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
