"""
Simple undirected graph model.

Vertices are dense indices 0..n-1. Adjacency is kept as one int bitmask per
vertex; bit j of adjacency[i] is set iff (i, j) is an edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from sparing.config import DEFAULT_EXHAUSTIVE_CAP
from sparing.errors import CapExceededError, GraphFormatError


@dataclass(frozen=True, order=True)
class EdgeId:
    u: int
    v: int

    def __post_init__(self):
        if not (0 <= self.u < self.v):
            raise ValueError(f"Edge ids need 0 <= u < v, got ({self.u}, {self.v}).")

    @classmethod
    def of(cls, a: int, b: int) -> "EdgeId":
        return cls(min(a, b), max(a, b))

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[EdgeId, ...]
    adjacency: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """
        Build a validated graph. Raises GraphFormatError on loops, duplicate
        edges, out-of-range vertices, isolated vertices, n < 2 or no edges.
        """
        if n < 2:
            raise GraphFormatError(f"A graph needs at least 2 vertices, got {n}.", kind="header")

        seen: set[EdgeId] = set()
        adj = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphFormatError(f"Edge ({a}, {b}) names a vertex outside 0..{n - 1}.", kind="range")
            if a == b:
                raise GraphFormatError(f"Loop edge ({a}, {b}) is not allowed in a simple graph.", kind="loop")
            e = EdgeId.of(a, b)
            if e in seen:
                raise GraphFormatError(f"Duplicate edge {e}.", kind="duplicate")
            seen.add(e)
            adj[e.u] |= 1 << e.v
            adj[e.v] |= 1 << e.u

        if not seen:
            raise GraphFormatError("A graph needs at least one edge.", kind="header")

        isolated = [v for v in range(n) if adj[v] == 0]
        if isolated:
            raise GraphFormatError(
                f"Vertex {isolated[0]} is isolated; remove it and renumber the vertices.",
                kind="isolated",
            )

        return cls(n=n, edges=tuple(sorted(seen)), adjacency=tuple(adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and bool(self.adjacency[a] >> b & 1)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((e.u, e.v) for e in self.edges)
        return g


def bits(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.adjacency[v] & mask) for v in bits(mask))


def is_bipartite(g: Graph) -> tuple[bool, dict[int, int] | None]:
    """
    BFS 2-colouring. Returns (True, colouring) or (False, None).
    Colour 0 goes to the smallest vertex of every component.
    """
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def is_connected(g: Graph) -> bool:
    reached = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adjacency[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << g.n) - 1


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_eulerian(g: Graph) -> bool:
    """Connected with every degree even."""
    return nx.is_eulerian(g.to_networkx())


def independent_sets(g: Graph, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Iterator[int]:
    """
    Yield every independent vertex subset as a bitmask, in increasing numeric
    order. Higher vertices are decided first and "out" precedes "in", which
    is exactly ascending bitmask order.
    """
    if g.n > cap:
        raise CapExceededError(f"Independent-set enumeration is capped at n={cap}; graph has n={g.n}.")
    yield from _independent_below(g.adjacency, g.n - 1, 0, 0)


def _independent_below(adj: tuple[int, ...], v: int, mask: int, blocked: int) -> Iterator[int]:
    if v < 0:
        yield mask
        return
    yield from _independent_below(adj, v - 1, mask, blocked)
    if not blocked >> v & 1:
        yield from _independent_below(adj, v - 1, mask | 1 << v, blocked | adj[v])


def spanned_graph(edges: Iterable[EdgeId]) -> tuple[Graph, list[int]]:
    """
    Graph spanned by `edges`, renumbered densely. Returns the graph and the
    map new index -> original vertex.
    """
    chosen = sorted(set(edges))
    originals = sorted({v for e in chosen for v in e})
    index = {v: i for i, v in enumerate(originals)}
    sub = Graph.from_edges(len(originals), [(index[e.u], index[e.v]) for e in chosen])
    return sub, originals


def edge_subgraph(g: Graph, edges: Iterable[EdgeId]) -> tuple[Graph, list[int]]:
    chosen = list(edges)
    for e in chosen:
        if not g.has_edge(e.u, e.v):
            raise ValueError(f"{e} is not an edge of the graph.")
    return spanned_graph(chosen)


def intersection(a: Iterable[EdgeId], b: Iterable[EdgeId]) -> Graph | None:
    """
    G1 ∩ G2 for two edge sets on one vertex numbering, renumbered densely.
    None when it is not a valid graph: no common edge, or a common vertex
    that no common edge touches.
    """
    ea, eb = set(a), set(b)
    common = ea & eb
    if not common:
        return None
    shared = {v for e in ea for v in e} & {v for e in eb for v in e}
    touched = {v for e in common for v in e}
    if shared - touched:
        return None
    return spanned_graph(common)[0]
