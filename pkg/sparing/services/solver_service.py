"""
Exact sparing number.

A labeling is a weak IASI exactly when every edge has a singleton endpoint,
so the non-singleton vertices form an independent set I and the mono-indexed
edges are the edges missed by I. Hence

    phi(G) = |E| - max over independent I of cover(I),

where cover(I) = number of edges with an endpoint in I = sum of degrees over I.
"""

from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass, field
from enum import Enum

from sparing.config import Settings
from sparing.errors import CapExceededError, LabelingError, UnionFormulaError
from sparing.services.labeling_service import MonoAssignment
from sparing.utils.graph import EdgeId, Graph, bits, is_independent

log = logging.getLogger(__name__)


class Method(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch_and_bound"


@dataclass(frozen=True)
class SparingResult:
    value: int
    witness: MonoAssignment
    method: Method
    mono_edges: tuple[EdgeId, ...] = ()
    nodes: int = field(default=0, compare=False)


def coverage(g: Graph, nonmono: int) -> int:
    """Edges with at least one endpoint in the (independent) bitmask `nonmono`."""
    if not is_independent(g, nonmono):
        raise LabelingError("coverage needs an independent vertex set.")
    return sum(g.degree(v) for v in bits(nonmono))


def sparing_number_union(phi1: int, phi2: int, phi_intersection: int) -> int:
    value = phi1 + phi2 - phi_intersection
    if value < 0:
        raise UnionFormulaError(
            f"phi(G1)+phi(G2)-phi(G1∩G2) = {phi1}+{phi2}-{phi_intersection} is negative; inputs are inconsistent."
        )
    return value


def choose_method(g: Graph, method: str, settings: Settings) -> Method:
    if method == "exhaustive":
        cap, chosen = settings.exhaustive_cap, Method.EXHAUSTIVE
    elif method in ("bnb", "branch_and_bound"):
        cap, chosen = settings.bnb_cap, Method.BRANCH_AND_BOUND
    elif method == "auto":
        if g.n <= settings.exhaustive_cap:
            return Method.EXHAUSTIVE
        cap, chosen = settings.bnb_cap, Method.BRANCH_AND_BOUND
    else:
        raise ValueError(f"Unknown method '{method}'. Use auto, exhaustive or bnb.")
    if g.n > cap:
        raise CapExceededError(f"Graph has n={g.n}; the {chosen.value} solver is capped at n={cap}.")
    return chosen


def sparing_number_exact(g: Graph, method: str = "auto", settings: Settings | None = None) -> SparingResult:
    """
    Minimum number of mono-indexed edges over all weak IASIs of g. The
    witness is the optimal non-mono set with the smallest bitmask.
    """
    settings = settings or Settings()
    chosen = choose_method(g, method, settings)
    log.info("solving n=%d m=%d with %s", g.n, g.edge_count, chosen.value)

    if chosen is Method.EXHAUSTIVE:
        best, mask, nodes = _exhaustive(g, settings.workers)
    else:
        best, mask, nodes = _branch_and_bound(g)

    witness = MonoAssignment.from_nonmono_mask(g.n, mask)
    value = g.edge_count - best
    log.debug("optimum cover=%d nonmono=%s nodes=%d", best, bits(mask), nodes)
    return SparingResult(
        value=value,
        witness=witness,
        method=chosen,
        mono_edges=tuple(witness.mono_edges(g)),
        nodes=nodes,
    )


# ----------------------------------------
# Exhaustive scan
# ----------------------------------------

def _scan(adj: tuple[int, ...], deg: tuple[int, ...], top: int, mask: int, blocked: int, cover: int) -> tuple[int, int, int]:
    """
    Visit every independent extension of `mask` over vertices top..0 in
    ascending bitmask order. Returns (best cover, first mask reaching it, nodes).
    """
    best, best_mask, nodes = -1, 0, 0
    stack = [(top, mask, blocked, cover)]
    # Depth-first with "out" explored before "in": push "in" first.
    while stack:
        v, m, b, c = stack.pop()
        nodes += 1
        if v < 0:
            if c > best:
                best, best_mask = c, m
            continue
        if not b >> v & 1:
            stack.append((v - 1, m | 1 << v, b | adj[v], c + deg[v]))
        stack.append((v - 1, m, b, c))
    return best, best_mask, nodes


def _prefixes(adj: tuple[int, ...], n: int, depth: int) -> list[tuple[int, int]]:
    """Independent membership patterns of the top `depth` vertices, ascending."""
    out = [(0, 0)]
    for v in range(n - 1, n - 1 - depth, -1):
        nxt = []
        for m, b in out:
            nxt.append((m, b))
            if not b >> v & 1:
                nxt.append((m | 1 << v, b | adj[v]))
        out = nxt
    return sorted(out)


def _scan_task(args: tuple) -> tuple[int, int, int]:
    adj, deg, top, mask, blocked = args
    cover = sum(deg[v] for v in bits(mask))
    return _scan(adj, deg, top, mask, blocked, cover)


def _exhaustive(g: Graph, workers: int = 1) -> tuple[int, int, int]:
    adj = g.adjacency
    deg = tuple(g.degrees())
    if workers <= 1 or g.n < 12:
        return _scan(adj, deg, g.n - 1, 0, 0, 0)

    depth = min(g.n - 1, max(1, (workers * 4).bit_length()))
    tasks = [(adj, deg, g.n - 1 - depth, m, b) for m, b in _prefixes(adj, g.n, depth)]
    log.debug("exhaustive search split into %d parts over %d workers", len(tasks), workers)
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_scan_task, tasks)
    return _reduce_parts(parts)


def _reduce_parts(parts: list[tuple[int, int, int]]) -> tuple[int, int, int]:
    """Largest cover wins; ties go to the smallest mask, whatever the part order."""
    best, best_mask = -1, 0
    nodes = 0
    for c, m, k in parts:
        nodes += k
        if c > best or (c == best and m < best_mask):
            best, best_mask = c, m
    return best, best_mask, nodes


# ----------------------------------------
# Branch and bound
# ----------------------------------------

class _BranchAndBound:
    def __init__(self, g: Graph):
        self.adj = g.adjacency
        self.deg = tuple(g.degrees())
        self.nodes = 0
        self.best = -1
        # highest degree first, lowest index on ties
        self.order = sorted(range(g.n), key=lambda v: (-self.deg[v], v))

    def bound(self, cand: int) -> int:
        """
        Greedy clique cover of the candidates; an independent set takes at
        most one vertex per clique, the heaviest of which comes first.
        """
        total = 0
        cliques: list[int] = []
        for v in self.order:
            if not cand >> v & 1:
                continue
            for i, members in enumerate(cliques):
                if members & ~self.adj[v] == 0:
                    cliques[i] = members | 1 << v
                    break
            else:
                cliques.append(1 << v)
                total += self.deg[v]
        return total

    def pick(self, cand: int) -> int:
        return next(v for v in self.order if cand >> v & 1)

    def max_cover(self, cand: int, floor: int = -1) -> int:
        """Largest cover reachable from `cand`; `floor` is a known lower bound."""
        self.best = floor
        self._search(cand, 0)
        return self.best

    def _search(self, cand: int, cur: int) -> None:
        self.nodes += 1
        if cand == 0:
            if cur > self.best:
                self.best = cur
            return
        if cur + self.bound(cand) <= self.best:
            return
        v = self.pick(cand)
        self._search(cand & ~(1 << v) & ~self.adj[v], cur + self.deg[v])
        self._search(cand & ~(1 << v), cur)


def _branch_and_bound(g: Graph) -> tuple[int, int, int]:
    bb = _BranchAndBound(g)
    full = (1 << g.n) - 1
    target = bb.max_cover(full)

    # Fix bits from the highest vertex down, preferring "out" (smaller mask)
    # whenever the optimum stays reachable.
    cand, mask, acc = full, 0, 0
    for v in range(g.n - 1, -1, -1):
        if not cand >> v & 1:
            continue
        without = cand & ~(1 << v)
        if acc + bb.max_cover(without, target - acc - 1) >= target:
            cand = without
        else:
            mask |= 1 << v
            acc += bb.deg[v]
            cand = without & ~bb.adj[v]
    assert acc == target
    return target, mask, bb.nodes
