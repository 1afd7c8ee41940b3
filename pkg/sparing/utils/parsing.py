"""
Text formats: edge-list graphs, vertex labelings, family spec strings.

Edge-list:   first non-comment line "n m", then m lines "u v".
Labeling:    one line per vertex, "v: a,b,c".
Both accept '#' comment lines and blank lines.
"""

import re
from typing import Iterator

from sparing.errors import FamilySpecError, GraphFormatError, LabelingFormatError
from sparing.utils.family_spec import FamilyKind, FamilySpec, Petal
from sparing.utils.graph import Graph
from sparing.utils.sumsets import SetLabel
from sparing.utils.validation import validate_family_spec

_PAIR_RE = re.compile(r"^\s*(?P<a>\d+)\s+(?P<b>\d+)\s*$")
_LABEL_RE = re.compile(r"^\s*(?P<v>\d+)\s*:\s*(?P<els>\d+(?:\s*,\s*\d+)*)\s*$")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """(line number, stripped line) for every non-blank, non-comment line."""
    for idx, raw in enumerate((text or "").splitlines(), start=1):
        ln = raw.strip()
        if ln and not ln.startswith("#"):
            yield idx, ln


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("Missing header line 'n m'.", kind="header")

    header_no, header = lines[0]
    m = _PAIR_RE.match(header)
    if not m:
        raise GraphFormatError(f"Malformed header '{header}'; expected 'n m'.", line=header_no, kind="header")
    n, count = int(m.group("a")), int(m.group("b"))
    if n < 2:
        raise GraphFormatError(f"A graph needs at least 2 vertices, got {n}.", line=header_no, kind="header")
    if count < 1:
        raise GraphFormatError("A graph needs at least one edge.", line=header_no, kind="header")

    body = lines[1:]
    if len(body) != count:
        where = body[count][0] if len(body) > count else header_no
        raise GraphFormatError(
            f"Header announces {count} edges but {len(body)} edge lines follow.",
            line=where,
            kind="header",
        )

    seen: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    for idx, ln in body:
        pm = _PAIR_RE.match(ln)
        if not pm:
            raise GraphFormatError(f"Malformed edge '{ln}'; expected 'u v'.", line=idx)
        a, b = int(pm.group("a")), int(pm.group("b"))
        if a >= n or b >= n:
            raise GraphFormatError(f"Edge '{ln}' names a vertex >= n ({n}).", line=idx, kind="range")
        if a == b:
            raise GraphFormatError(f"Loop edge '{ln}' is not allowed in a simple graph.", line=idx, kind="loop")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(
                f"Duplicate edge '{ln}' (first given on line {seen[key]}).",
                line=idx,
                kind="duplicate",
            )
        seen[key] = idx
        edges.append(key)

    touched = {v for e in edges for v in e}
    if len(touched) < n:
        # the first gap is at most len(touched), whatever n the header claims
        first = next(v for v in range(n) if v not in touched)
        raise GraphFormatError(
            f"Vertex {first} is isolated; remove it and renumber the vertices (header says n={n}).",
            line=header_no,
            kind="isolated",
        )
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    out = [f"{g.n} {g.edge_count}"]
    out.extend(f"{e.u} {e.v}" for e in g.edges)
    return "\n".join(out) + "\n"


def parse_labeling(text: str) -> dict[int, SetLabel]:
    labels: dict[int, SetLabel] = {}
    for idx, ln in _content_lines(text):
        m = _LABEL_RE.match(ln)
        if not m:
            raise LabelingFormatError(f"Malformed labeling line '{ln}'; expected 'v: a,b,c'.", line=idx)
        v = int(m.group("v"))
        if v in labels:
            raise LabelingFormatError(f"Vertex {v} is labeled twice.", line=idx)
        try:
            labels[v] = SetLabel.parse(m.group("els"))
        except ValueError as e:
            raise LabelingFormatError(str(e), line=idx)
    if not labels:
        raise LabelingFormatError("The labeling file names no vertices.")
    return labels


def serialize_labeling(labels: dict[int, SetLabel]) -> str:
    return "".join(f"{v}: {labels[v]}\n" for v in sorted(labels))


# ----------------------------------------
# Family spec text
# ----------------------------------------

_INT = r"\d+"
_PLUS_LIST = r"\d+(?:\+\d+)*"
_SPEC_PATTERNS = {
    FamilyKind.PATH: re.compile(rf"^(?P<order>{_INT})$"),
    FamilyKind.CYCLE: re.compile(rf"^(?P<order>{_INT})$"),
    FamilyKind.COMPLETE: re.compile(rf"^(?P<order>{_INT})$"),
    FamilyKind.CYCLE_UNION_VERTEX: re.compile(rf"^(?:m=)?(?P<m>{_INT}),(?:n=)?(?P<n>{_INT})$"),
    FamilyKind.CONJOINED: re.compile(rf"^p=(?P<p>{_INT}),cycles=(?P<cycles>{_PLUS_LIST})$"),
    FamilyKind.ENTWINED: re.compile(rf"^cycles=(?P<cycles>{_PLUS_LIST}),shared=(?P<shared>{_PLUS_LIST})$"),
    FamilyKind.FLORAL: re.compile(
        r"^k=(?P<k>\d+),petals=(?P<petals>\(\d+,\d+,\d+\)(?:\+\(\d+,\d+,\d+\))*),"
        r"mode=(?P<mode>detached|attached)$"
    ),
}
_PETAL_RE = re.compile(r"\((\d+),(\d+),(\d+)\)")

FAMILY_GRAMMAR = """\
path:M                              path on M >= 2 vertices
cycle:N                             cycle C_N, N >= 3
complete:N                          complete graph K_N
cycle_union_vertex:M,N              C_M and C_N sharing one vertex
conjoined:p=P,cycles=A+B+...        cycles on one common path of P edges
entwined:cycles=A+B+...,shared=P+Q  chain of cycles, consecutive ones share a path
floral:k=K,petals=(S,P,M)+...,mode=detached|attached
                                    nucleus C_K; petal (S,P,M) shares P nucleus
                                    edges from vertex S and has length M"""


def parse_family_spec(text: str) -> FamilySpec:
    """
    Parse e.g. "cycle:5", "conjoined:p=2,cycles=5+5+4" and check the family
    invariants. Raises FamilySpecError naming the violated rule.
    """
    raw = re.sub(r"\s+", "", text or "")
    kind_text, sep, params = raw.partition(":")
    if not sep:
        raise FamilySpecError(f"Family spec '{text}' needs the form kind:parameters.")
    try:
        kind = FamilyKind(kind_text.lower())
    except ValueError:
        known = ", ".join(k.value for k in FamilyKind)
        raise FamilySpecError(f"Unknown family '{kind_text}'. Known families: {known}.")

    m = _SPEC_PATTERNS[kind].match(params)
    if not m:
        raise FamilySpecError(f"Invalid parameters '{params}' for {kind.value}.\nGrammar:\n{FAMILY_GRAMMAR}")

    spec = _spec_from_match(kind, m)
    errors = validate_family_spec(spec)
    if errors:
        raise FamilySpecError(f"Invalid {kind.value} spec '{raw}': {errors[0]}")
    return spec


def _ints(plus_list: str) -> tuple[int, ...]:
    return tuple(int(x) for x in plus_list.split("+"))


def _spec_from_match(kind: FamilyKind, m: re.Match) -> FamilySpec:
    if kind in (FamilyKind.PATH, FamilyKind.CYCLE, FamilyKind.COMPLETE):
        return FamilySpec(kind, order=int(m.group("order")))
    if kind is FamilyKind.CYCLE_UNION_VERTEX:
        return FamilySpec.cycle_union_vertex(int(m.group("m")), int(m.group("n")))
    if kind is FamilyKind.CONJOINED:
        return FamilySpec.conjoined(int(m.group("p")), _ints(m.group("cycles")))
    if kind is FamilyKind.ENTWINED:
        return FamilySpec.entwined(_ints(m.group("cycles")), _ints(m.group("shared")))
    petals = tuple(Petal(int(a), int(b), int(c)) for a, b, c in _PETAL_RE.findall(m.group("petals")))
    return FamilySpec(
        FamilyKind.FLORAL,
        nucleus=int(m.group("k")),
        petals=petals,
        attached=m.group("mode") == "attached",
    )
