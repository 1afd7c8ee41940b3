"""
Closed-form sparing numbers claimed for each graph family.

Entries are evaluated from the FamilySpec (structure known by construction),
never by recognising a family in a bare graph. Every entry is reported; an
entry outside its family carries applies=False, and an entry inside its
family whose extra conditions fail carries applies=True with value None.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from sparing.services.family_service import (
    FamilyGraph,
    count_odd_cycles,
    eulerian_decomposition,
    generate_family,
)
from sparing.services.solver_service import sparing_number_exact, sparing_number_union
from sparing.utils.family_spec import FamilyKind, FamilySpec
from sparing.utils.graph import intersection, is_eulerian

K = FamilyKind


@dataclass(frozen=True)
class FormulaResult:
    theorem: str
    value: int | None
    assumptions: tuple[str, ...] = ()
    applies: bool = True

    @property
    def has_value(self) -> bool:
        return self.value is not None


def _na(theorem: str) -> FormulaResult:
    return FormulaResult(theorem, None, (), applies=False)


def _parity_counts(lengths: tuple[int, ...]) -> tuple[int, int]:
    odd = sum(1 for m in lengths if m % 2)
    return odd, len(lengths) - odd


def _all_even(fam: FamilyGraph) -> bool:
    spec = fam.spec
    if spec.kind is K.PATH:
        return True
    if spec.kind is K.COMPLETE:
        return spec.order <= 2
    return all(m % 2 == 0 for m in spec.cycle_lengths())


# ----------------------------------------
# Entries
# ----------------------------------------

def bipartite_zero(fam: FamilyGraph) -> FormulaResult:
    if not _all_even(fam):
        return _na("bipartite-zero")
    return FormulaResult("bipartite-zero", 0, ("every defining cycle is even",))


def odd_cycle(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.CYCLE or spec.order % 2 == 0:
        return _na("odd-cycle")
    return FormulaResult("odd-cycle", 1)


def complete_graph(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.COMPLETE:
        return _na("complete-graph")
    n = spec.order
    return FormulaResult("complete-graph", (n - 1) * (n - 2) // 2)


def path_union(fam: FamilyGraph) -> FormulaResult:
    if fam.spec.kind is not K.PATH:
        return _na("path-union")
    return FormulaResult("path-union", 0, ("two paths sharing one end vertex",))


def _two_cycle(spec: FamilySpec) -> bool:
    return spec.kind in (K.CONJOINED, K.ENTWINED) and len(spec.cycles) == 2


def _common_path(spec: FamilySpec) -> int:
    return spec.shared_path if spec.kind is K.CONJOINED else spec.shared[0]


def cycle_path_union(fam: FamilyGraph) -> FormulaResult:
    """C_n plus a path with both ends on it: 0 iff the three routes share a parity."""
    spec = fam.spec
    if not _two_cycle(spec):
        return _na("cycle-path-union")
    m1, m2 = spec.cycles
    p = _common_path(spec)
    routes = (p, m1 - p, m2 - p)
    value = 0 if len({r % 2 for r in routes}) == 1 else 1
    return FormulaResult("cycle-path-union", value, (f"cycle C_{m1} with a path of length {m2 - p}",))


def cycle_union(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is K.CYCLE_UNION_VERTEX:
        odd, _ = _parity_counts(spec.cycles)
        return FormulaResult("cycle-union", odd, ("cycles are edge disjoint",))
    if _two_cycle(spec):
        odd, _ = _parity_counts(spec.cycles)
        # two odd cycles with common edges: one mono edge on a non-common edge suffices
        return FormulaResult("cycle-union", min(odd, 1), ("cycles share edges",))
    return _na("cycle-union")


def union_formula(fam: FamilyGraph) -> FormulaResult:
    """phi(G1 ∪ G2) = phi(G1) + phi(G2) - phi(G1 ∩ G2), on the two defining cycles."""
    spec = fam.spec
    if spec.kind is not K.CYCLE_UNION_VERTEX and not (spec.kind is K.CONJOINED and len(spec.cycles) == 2):
        return _na("union-formula")
    common = intersection(fam.cycle_edges(0), fam.cycle_edges(1))
    if common is None:
        return FormulaResult("union-formula", None, ("formula inapplicable: G1 ∩ G2 is not a graph",))
    phi_common = sparing_number_exact(common).value
    phi1, phi2 = (m % 2 for m in spec.cycles)
    return FormulaResult(
        "union-formula",
        sparing_number_union(phi1, phi2, phi_common),
        (f"phi(C_{spec.cycles[0]})={phi1}", f"phi(C_{spec.cycles[1]})={phi2}", f"phi(G1∩G2)={phi_common}"),
    )


def eulerian_odd_cycles(fam: FamilyGraph) -> FormulaResult:
    if fam.spec.kind in (K.PATH, K.CYCLE):
        return _na("eulerian-odd-cycles")
    g = fam.graph
    if not is_eulerian(g):
        return _na("eulerian-odd-cycles")
    decomposition = eulerian_decomposition(g)
    r = count_odd_cycles(decomposition)
    return FormulaResult(
        "eulerian-odd-cycles",
        r,
        ("decomposition-dependent", f"{len(decomposition)} cycles, {r} odd"),
    )


def conjoined_parity(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.CONJOINED:
        return _na("conjoined-parity")
    odd, even = _parity_counts(spec.cycles)
    if even == 0:
        return FormulaResult("conjoined-parity", 1, ("odd-conjoined",))
    if odd == 0:
        return FormulaResult("conjoined-parity", 0, ("even-conjoined",))
    return _na("conjoined-parity")


def conjoined_mixed(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.CONJOINED:
        return _na("conjoined-mixed")
    r, l = _parity_counts(spec.cycles)
    if r == 0 or l == 0:
        return _na("conjoined-mixed")
    return FormulaResult("conjoined-mixed", r if r <= l else l + 1, (f"r={r} odd", f"l={l} even"))


def odd_entwined(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.ENTWINED or any(m % 2 == 0 for m in spec.cycles):
        return _na("odd-entwined")
    n = len(spec.cycles)
    return FormulaResult("odd-entwined", (n + 1) // 2, (f"{n} odd cycles",))


def entwined_disjoint_odd(fam: FamilyGraph) -> FormulaResult:
    spec = fam.spec
    if spec.kind is not K.ENTWINED:
        return _na("entwined-disjoint-odd")
    odd = [m % 2 == 1 for m in spec.cycles]
    r = sum(odd)
    if r == 0 or any(a and b for a, b in zip(odd, odd[1:])):
        return _na("entwined-disjoint-odd")
    return FormulaResult("entwined-disjoint-odd", r, ("odd cycles are edge disjoint",))


def _floral_case(fam: FamilyGraph) -> tuple[bool, bool, int, str] | None:
    """(odd nucleus, odd petals, l, mode) for like-petal floral specs."""
    spec = fam.spec
    if spec.kind is not K.FLORAL:
        return None
    parities = {p.length % 2 for p in spec.petals}
    if len(parities) != 1:
        return None
    mode = "attached" if spec.attached else "detached"
    return spec.nucleus % 2 == 1, parities.pop() == 1, len(spec.petals), mode


def floral_all_odd(fam: FamilyGraph) -> FormulaResult:
    case = _floral_case(fam)
    if case is None or not (case[0] and case[1]):
        return _na("floral-all-odd")
    _, _, l, mode = case
    if mode == "detached":
        value = l if l % 2 else l + 1
    else:
        value = (l + 1) // 2 if l % 2 else (l + 2) // 2
    return FormulaResult("floral-all-odd", value, ("like-petal", "connatural", mode, f"l={l}"))


def floral_even_nucleus(fam: FamilyGraph) -> FormulaResult:
    case = _floral_case(fam)
    if case is None or case[0] or not case[1]:
        return _na("floral-even-nucleus")
    _, _, l, mode = case
    value = (l + 1) // 2 if mode == "attached" else l
    return FormulaResult("floral-even-nucleus", value, ("like-petal", mode, f"l={l}"))


def floral_odd_nucleus(fam: FamilyGraph) -> FormulaResult:
    case = _floral_case(fam)
    if case is None or not case[0] or case[1]:
        return _na("floral-odd-nucleus")
    _, _, l, mode = case
    k = fam.spec.nucleus
    return FormulaResult("floral-odd-nucleus", 1 if l < k else 2, ("like-petal", mode, f"l={l}", f"k={k}"))


CATALOG: tuple[Callable[[FamilyGraph], FormulaResult], ...] = (
    bipartite_zero,
    odd_cycle,
    complete_graph,
    path_union,
    cycle_path_union,
    cycle_union,
    union_formula,
    eulerian_odd_cycles,
    conjoined_parity,
    conjoined_mixed,
    odd_entwined,
    entwined_disjoint_odd,
    floral_all_odd,
    floral_even_nucleus,
    floral_odd_nucleus,
)


def formula_catalog(spec: FamilySpec | FamilyGraph) -> list[FormulaResult]:
    fam = spec if isinstance(spec, FamilyGraph) else generate_family(spec)
    return [entry(fam) for entry in CATALOG]


def applicable_formulas(spec: FamilySpec | FamilyGraph) -> list[FormulaResult]:
    return [r for r in formula_catalog(spec) if r.applies]
