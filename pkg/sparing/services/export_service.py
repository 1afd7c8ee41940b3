import csv
import io

from sparing.services.audit_service import AuditRow, summarize
from sparing.services.labeling_service import LabelingReport, VertexLabeling
from sparing.utils.graph import Graph

AUDIT_COLUMNS = ("instance", "theorem", "formula", "oracle", "status")


def to_dot(g: Graph, labels: VertexLabeling | None = None) -> str:
    """
    Undirected DOT, edges in lexicographic order. With a labeling, mono-indexed
    vertices are drawn as boxes and every vertex shows its set label.
    """
    lines = ["graph {"]
    if labels is not None:
        for v in g.vertices:
            attrs = [f'label="{v}: {{{labels[v]}}}"']
            if labels[v].is_singleton:
                attrs.append("shape=box")
            lines.append(f"  {v} [{', '.join(attrs)}];")
    lines.extend(f"  {e.u} -- {e.v};" for e in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _audit_records(rows: list[AuditRow]) -> list[tuple[str, ...]]:
    return [(r.instance, r.theorem, r.formula_text, str(r.oracle_value), r.status.value) for r in rows]


def audit_table(rows: list[AuditRow]) -> str:
    records = [AUDIT_COLUMNS] + _audit_records(rows)
    widths = [max(len(rec[i]) for rec in records) for i in range(len(AUDIT_COLUMNS))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(rec, widths)).rstrip() for rec in records]
    s = summarize(rows)
    out.append(
        f"rows: {s['rows']}  match: {s['match']}  mismatch: {s['mismatch']}  inapplicable: {s['inapplicable']}"
    )
    return "\n".join(out) + "\n"


def audit_csv(rows: list[AuditRow]) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(AUDIT_COLUMNS)
    writer.writerows(_audit_records(rows))
    return output.getvalue()


def report_text(report: LabelingReport) -> str:
    out = [
        f"is_iasi: {str(report.is_iasi).lower()}",
        f"is_weak: {str(report.is_weak).lower()}",
        f"mono_edge_count: {report.mono_edge_count}",
        f"violations: {len(report.violations)}",
    ]
    out.extend(f"  {v}" for v in report.violations)
    return "\n".join(out) + "\n"
