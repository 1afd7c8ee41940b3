"""
Weak IASI labelings: induced edge labels, verification, and the witness
constructor used to turn a mono-assignment into explicit set labels.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from sparing.errors import LabelingError, LabelOverflowError
from sparing.utils.graph import EdgeId, Graph, bits, is_cycle, is_independent, mask_of
from sparing.utils.sumsets import SetLabel, sumset

VertexLabeling = dict[int, SetLabel]

# 4**31 + 4**30 + 2 still fits in 63 bits; vertex 32 would not.
MAX_WITNESS_VERTEX = 31


@dataclass(frozen=True)
class MonoAssignment:
    mono: tuple[bool, ...]

    @classmethod
    def from_nonmono_mask(cls, n: int, mask: int) -> "MonoAssignment":
        return cls(tuple(not (mask >> v & 1) for v in range(n)))

    @classmethod
    def all_mono(cls, n: int) -> "MonoAssignment":
        return cls((True,) * n)

    @property
    def nonmono_mask(self) -> int:
        return mask_of(v for v, is_mono in enumerate(self.mono) if not is_mono)

    @property
    def mono_vertices(self) -> list[int]:
        return [v for v, is_mono in enumerate(self.mono) if is_mono]

    @property
    def nonmono_vertices(self) -> list[int]:
        return bits(self.nonmono_mask)

    def mono_edges(self, g: Graph) -> list[EdgeId]:
        return [e for e in g.edges if self.mono[e.u] and self.mono[e.v]]


@dataclass(frozen=True)
class Violation:
    element: str
    reason: str

    def __str__(self) -> str:
        return f"{self.element}: {self.reason}"


@dataclass(frozen=True)
class LabelingReport:
    is_iasi: bool
    is_weak: bool
    mono_edge_count: int
    violations: tuple[Violation, ...]


def require_total(g: Graph, f: VertexLabeling) -> None:
    """Raise LabelingError unless f labels exactly the vertices of g."""
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise LabelingError(f"Vertex {missing[0]} has no label ({len(missing)} unlabeled in total).")
    extra = sorted(v for v in f if not (0 <= v < g.n))
    if extra:
        raise LabelingError(f"Label given for vertex {extra[0]}, but the graph has vertices 0..{g.n - 1}.")


def induced_edge_labeling(g: Graph, f: VertexLabeling) -> dict[EdgeId, SetLabel]:
    """g_f(uv) = f(u) + f(v) for every edge."""
    require_total(g, f)
    return {e: sumset(f[e.u], f[e.v]) for e in g.edges}


def verify(g: Graph, f: VertexLabeling) -> LabelingReport:
    """
    Check the IASI and weak IASI conditions. Every failure is collected;
    nothing is raised for a labeling that merely fails the conditions.
    """
    require_total(g, f)
    violations: list[Violation] = []

    by_label: dict[SetLabel, list[int]] = defaultdict(list)
    for v in g.vertices:
        by_label[f[v]].append(v)
    vertex_collisions = [vs for vs in by_label.values() if len(vs) > 1]
    for vs in vertex_collisions:
        violations.append(Violation(",".join(f"v{v}" for v in vs), f"vertex labels collide ({f[vs[0]]})"))

    edge_labels: dict[EdgeId, SetLabel] = {}
    overflow = False
    for e in g.edges:
        try:
            edge_labels[e] = sumset(f[e.u], f[e.v])
        except LabelOverflowError:
            overflow = True
            violations.append(Violation(f"e{e}", "sumset overflow"))

    by_edge_label: dict[SetLabel, list[EdgeId]] = defaultdict(list)
    for e, lab in edge_labels.items():
        by_edge_label[lab].append(e)
    edge_collisions = [es for es in by_edge_label.values() if len(es) > 1]
    for es in edge_collisions:
        violations.append(Violation(",".join(f"e{e}" for e in es), f"edge labels collide ({edge_labels[es[0]]})"))

    weak_ok = not overflow
    for e, lab in edge_labels.items():
        bound = max(len(f[e.u]), len(f[e.v]))
        if len(lab) != bound:
            weak_ok = False
            violations.append(Violation(f"e{e}", f"not weak: |g(uv)|={len(lab)} > max={bound}"))

    is_iasi = not vertex_collisions and not edge_collisions and not overflow
    return LabelingReport(
        is_iasi=is_iasi,
        is_weak=is_iasi and weak_ok,
        mono_edge_count=sum(1 for lab in edge_labels.values() if lab.is_singleton),
        violations=tuple(violations),
    )


def construct_weak_iasi(g: Graph, a: MonoAssignment) -> VertexLabeling:
    """
    Witness labeling: mono vertex i gets {4^i}, non-mono vertex i gets
    {4^i, 4^i + 1}. Sums 4^i + 4^j are pairwise distinct, so edge labels are
    told apart by their minimum.
    """
    if len(a.mono) != g.n:
        raise LabelingError(f"Assignment covers {len(a.mono)} vertices, graph has {g.n}.")
    if not is_independent(g, a.nonmono_mask):
        bad = next(e for e in g.edges if not a.mono[e.u] and not a.mono[e.v])
        raise LabelingError(f"Non-mono vertices {bad.u} and {bad.v} are adjacent; no weak IASI realizes this.")
    if g.n - 1 > MAX_WITNESS_VERTEX:
        raise LabelOverflowError(
            f"Base-4 witness labels need 4^{g.n - 1}, beyond 2^63-1; use a graph with at most "
            f"{MAX_WITNESS_VERTEX + 1} vertices."
        )
    return {
        v: SetLabel((4**v,)) if is_mono else SetLabel((4**v, 4**v + 1))
        for v, is_mono in enumerate(a.mono)
    }


def mono_assignment_of(f: VertexLabeling, n: int) -> MonoAssignment:
    return MonoAssignment(tuple(f[v].is_singleton for v in range(n)))


def restrict_labeling(f: VertexLabeling, originals: list[int]) -> VertexLabeling:
    """Labels of a renumbered subgraph, given its new -> original vertex map."""
    return {i: f[v] for i, v in enumerate(originals)}


def cycle_mono_parity(g: Graph, f: VertexLabeling) -> bool:
    """True iff the number of mono-indexed edges has the parity of the cycle length."""
    if not is_cycle(g):
        raise LabelingError("cycle_mono_parity needs a cycle graph.")
    report = verify(g, f)
    if not report.is_weak:
        raise LabelingError("cycle_mono_parity needs a weak IASI.")
    return report.mono_edge_count % 2 == g.n % 2
