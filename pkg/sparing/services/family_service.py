"""
Graph family generators and Eulerian cycle decomposition.

Vertex numbering is deterministic: the first cycle (or nucleus) takes
0..m1-1 in traversal order, every later cycle appends its new vertices in
traversal order.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from sparing.errors import FamilySpecError, NotEulerianError
from sparing.utils.family_spec import FamilyKind, FamilySpec
from sparing.utils.graph import EdgeId, Graph, is_eulerian
from sparing.utils.validation import consecutive_petals_meet, validate_family_spec

log = logging.getLogger(__name__)

Cycle = list[int]


@dataclass(frozen=True)
class FamilyGraph:
    spec: FamilySpec
    graph: Graph
    cycles: tuple[tuple[int, ...], ...]   # defining cycles, vertex sequences

    def cycle_edges(self, i: int) -> set[EdgeId]:
        return cycle_edge_set(list(self.cycles[i]))


def cycle_edge_set(cycle: Cycle) -> set[EdgeId]:
    return {EdgeId.of(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])}


class _Builder:
    def __init__(self, spec: FamilySpec):
        self.spec = spec
        self.n = 0
        self.edges: set[EdgeId] = set()
        self.cycles: list[Cycle] = []

    def fresh_vertices(self, count: int) -> list[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def add_fresh(self, a: int, b: int) -> None:
        e = EdgeId.of(a, b)
        if e in self.edges:
            raise FamilySpecError(
                f"Spec '{self.spec.to_text()}' would repeat edge {e}; choose other lengths or positions."
            )
        self.edges.add(e)

    def add_fresh_path(self, seq: list[int]) -> None:
        for a, b in zip(seq, seq[1:]):
            self.add_fresh(a, b)

    def close_cycle(self, cycle: Cycle) -> None:
        self.add_fresh(cycle[-1], cycle[0])
        self.cycles.append(cycle)

    def build(self) -> FamilyGraph:
        g = Graph.from_edges(self.n, [(e.u, e.v) for e in self.edges])
        return FamilyGraph(self.spec, g, tuple(tuple(c) for c in self.cycles))


def generate(spec: FamilySpec) -> Graph:
    return generate_family(spec).graph


def generate_family(spec: FamilySpec) -> FamilyGraph:
    errors = validate_family_spec(spec)
    if errors:
        raise FamilySpecError(f"Invalid {spec.kind.value} spec '{spec.to_text()}': {errors[0]}")

    b = _Builder(spec)
    kind = spec.kind
    if kind is FamilyKind.PATH:
        b.add_fresh_path(b.fresh_vertices(spec.order))
    elif kind is FamilyKind.CYCLE:
        _first_cycle(b, spec.order)
    elif kind is FamilyKind.COMPLETE:
        vs = b.fresh_vertices(spec.order)
        for i in vs:
            for j in vs[i + 1:]:
                b.add_fresh(i, j)
    elif kind is FamilyKind.CYCLE_UNION_VERTEX:
        first = _first_cycle(b, spec.cycles[0])
        second = [first[0]] + b.fresh_vertices(spec.cycles[1] - 1)
        b.add_fresh_path(second)
        b.close_cycle(second)
    elif kind is FamilyKind.CONJOINED:
        _conjoined(b, spec)
    elif kind is FamilyKind.ENTWINED:
        _entwined(b, spec)
    else:
        _floral(b, spec)

    fam = b.build()
    log.debug("generated %s: n=%d m=%d", spec.to_text(), fam.graph.n, fam.graph.edge_count)
    return fam


def _first_cycle(b: _Builder, m: int) -> Cycle:
    cycle = b.fresh_vertices(m)
    b.add_fresh_path(cycle)
    b.close_cycle(cycle)
    return cycle


def _conjoined(b: _Builder, spec: FamilySpec) -> None:
    p = spec.shared_path
    first = _first_cycle(b, spec.cycles[0])
    common = first[: p + 1]
    for m in spec.cycles[1:]:
        # from the end of the common path back to its start
        closing = [common[-1]] + b.fresh_vertices(m - p - 1)
        b.add_fresh_path(closing)
        b.close_cycle(common[:-1] + closing)


def _entwined(b: _Builder, spec: FamilySpec) -> None:
    prev = _first_cycle(b, spec.cycles[0])
    for m, p in zip(spec.cycles[1:], spec.shared):
        # shared path leaves prev[0] backwards: prev[0], prev[-1], ..., prev[-p]
        shared = [prev[0]] + prev[::-1][:p]
        tail = [shared[-1]] + b.fresh_vertices(m - p - 1)
        b.add_fresh_path(tail)
        cycle = shared + tail[1:]
        b.close_cycle(cycle)
        prev = cycle


def _floral(b: _Builder, spec: FamilySpec) -> None:
    k = spec.nucleus
    _first_cycle(b, k)
    previous = None
    handoff: int | None = None   # first new vertex of the previous petal
    for petal in spec.petals:
        segment = [(petal.start + i) % k for i in range(petal.shared + 1)]
        inner = petal.length - petal.shared - 1
        share_spoke = (
            spec.attached
            and previous is not None
            and handoff is not None
            and inner >= 1
            and consecutive_petals_meet(previous, petal, k)
        )
        new = b.fresh_vertices(inner - 1 if share_spoke else inner)
        if share_spoke:
            new = new + [handoff]
        path = [segment[-1]] + new
        b.add_fresh_path(path)
        cycle = segment + new
        if share_spoke:
            # spoke (handoff, start) already belongs to the previous petal
            b.cycles.append(cycle)
        else:
            b.close_cycle(cycle)
        handoff = new[0] if new else None
        previous = petal


# ----------------------------------------
# Eulerian decomposition
# ----------------------------------------

def eulerian_decomposition(g: Graph) -> list[Cycle]:
    """
    Split an Eulerian graph into edge-disjoint cycles, always removing a
    shortest remaining cycle, the lexicographically smallest one on ties.
    Cycles start at their smallest vertex, second vertex < last vertex.
    """
    if not is_eulerian(g):
        raise NotEulerianError("Graph is not Eulerian (needs to be connected with all degrees even).")

    adj = [set(g.neighbors(v)) for v in g.vertices]
    remaining = g.edge_count
    out: list[Cycle] = []
    while remaining:
        length = _shortest_cycle_length(adj)
        cycle = _smallest_cycle(adj, length)
        for a, c in zip(cycle, cycle[1:] + cycle[:1]):
            adj[a].discard(c)
            adj[c].discard(a)
        remaining -= len(cycle)
        log.debug("decomposition: removed %s", cycle)
        out.append(cycle)
    return out


def count_odd_cycles(decomposition: list[Cycle]) -> int:
    return sum(1 for c in decomposition if len(c) % 2 == 1)


def _shortest_cycle_length(adj: list[set[int]]) -> int:
    best = None
    for u in range(len(adj)):
        for v in adj[u]:
            if v < u:
                continue
            d = _distance_avoiding(adj, u, v)
            if d is not None and (best is None or d + 1 < best):
                best = d + 1
    if best is None:
        raise NotEulerianError("Remaining edges contain no cycle.")
    return best


def _distance_avoiding(adj: list[set[int]], u: int, v: int) -> int | None:
    """BFS distance u -> v without the edge (u, v)."""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if (x, y) in ((u, v), (v, u)) or y in dist:
                continue
            dist[y] = dist[x] + 1
            if y == v:
                return dist[y]
            queue.append(y)
    return None


def _smallest_cycle(adj: list[set[int]], length: int) -> Cycle:
    for s in range(len(adj)):
        if not adj[s]:
            continue
        to_s = _distances_to(adj, s)
        found = _extend([s], adj, length, to_s)
        if found:
            return found
    raise NotEulerianError(f"No cycle of length {length} left.")


def _distances_to(adj: list[set[int]], s: int) -> dict[int, int]:
    """BFS distances to s inside the vertices >= s."""
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y > s and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _extend(path: Cycle, adj: list[set[int]], length: int, to_s: dict[int, int]) -> Cycle | None:
    s, last = path[0], path[-1]
    if len(path) == length:
        return list(path) if s in adj[last] else None
    for y in sorted(adj[last]):
        if y <= s or y in path:
            continue
        if len(path) + to_s.get(y, length) > length:
            continue
        path.append(y)
        found = _extend(path, adj, length, to_s)
        path.pop()
        if found:
            return found
    return None
