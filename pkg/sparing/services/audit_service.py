"""
Audit: compare every closed-form entry that applies to a family instance
against the exact solver. A mismatch is a finding, not an error.
"""

from __future__ import annotations

import itertools
import logging
import multiprocessing
import re
from dataclasses import dataclass, replace
from enum import Enum

from sparing.config import Settings
from sparing.errors import FamilySpecError
from sparing.services.family_service import generate_family
from sparing.services.formula_service import applicable_formulas
from sparing.services.solver_service import sparing_number_exact
from sparing.utils.parsing import parse_family_spec

log = logging.getLogger(__name__)

_RANGE_RE = re.compile(r"(\d+)\.\.(\d+)")
_ODD_CHAINS_RE = re.compile(r"^entwined:odd-chains,n=(?P<n>\d+(?:\.\.\d+)?)$")


class AuditStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class AuditRow:
    instance: str
    theorem: str
    formula_value: int | None
    oracle_value: int
    status: AuditStatus
    assumptions: tuple[str, ...] = ()

    @property
    def formula_text(self) -> str:
        return "n/a" if self.formula_value is None else str(self.formula_value)


def expand_range_spec(text: str) -> list[str]:
    """
    "cycle:3..5" -> ["cycle:3", "cycle:4", "cycle:5"]. Several ranges expand
    to their cartesian product, leftmost range varying slowest.
    "entwined:odd-chains,n=2..4" -> fans of 2, 3, 4 triangles.
    """
    raw = re.sub(r"\s+", "", text or "")
    preset = _ODD_CHAINS_RE.match(raw)
    if preset:
        counts = [int(x) for x in _expand_ranges(preset.group("n"))]
        if any(n < 2 for n in counts):
            raise FamilySpecError("odd-chains needs n >= 2 triangles.")
        return [
            "entwined:cycles=" + "+".join(["3"] * n) + ",shared=" + "+".join(["1"] * (n - 1))
            for n in counts
        ]
    return _expand_ranges(raw)


def _expand_ranges(raw: str) -> list[str]:
    ranges = list(_RANGE_RE.finditer(raw))
    if not ranges:
        return [raw]
    choices = []
    for m in ranges:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise FamilySpecError(f"Empty range '{m.group(0)}' in '{raw}'.")
        choices.append(range(lo, hi + 1))

    out = []
    for values in itertools.product(*choices):
        pieces, last = [], 0
        for m, v in zip(ranges, values):
            pieces.append(raw[last:m.start()])
            pieces.append(str(v))
            last = m.end()
        pieces.append(raw[last:])
        out.append("".join(pieces))
    return out


def audit_instance(spec_text: str, method: str = "auto", settings: Settings | None = None) -> list[AuditRow]:
    settings = settings or Settings()
    spec = parse_family_spec(spec_text)
    fam = generate_family(spec)
    formulas = applicable_formulas(fam)
    oracle = sparing_number_exact(fam.graph, method, settings).value
    instance = spec.to_text()

    rows = []
    for f in formulas:
        if f.value is None:
            status = AuditStatus.INAPPLICABLE
        elif f.value == oracle:
            status = AuditStatus.MATCH
        else:
            status = AuditStatus.MISMATCH
            log.warning("%s: %s claims %d, oracle finds %d", instance, f.theorem, f.value, oracle)
        rows.append(AuditRow(instance, f.theorem, f.value, oracle, status, f.assumptions))
    log.info("audited %s: %d rows, oracle=%d", instance, len(rows), oracle)
    return rows


def _audit_task(args: tuple[str, str, Settings]) -> list[AuditRow]:
    spec_text, method, settings = args
    return audit_instance(spec_text, method, settings)


def run_audit(spec_texts: list[str], method: str = "auto", settings: Settings | None = None) -> list[AuditRow]:
    """
    Audit each instance in the given order. With settings.workers > 1 the
    instances are solved in worker processes; rows keep the input order.
    """
    settings = settings or Settings()
    instances = [t for text in spec_texts for t in expand_range_spec(text)]
    # fail fast on bad specs before starting any worker
    for t in instances:
        parse_family_spec(t)

    if settings.workers > 1 and len(instances) > 1:
        # solve instances in parallel, each one sequentially
        inner = replace(settings, workers=1)
        with multiprocessing.Pool(settings.workers) as pool:
            chunks = pool.map(_audit_task, [(t, method, inner) for t in instances])
    else:
        chunks = [audit_instance(t, method, settings) for t in instances]
    return [row for chunk in chunks for row in chunk]


def summarize(rows: list[AuditRow]) -> dict[str, int]:
    out = {"rows": len(rows)}
    for status in AuditStatus:
        out[status.value] = sum(1 for r in rows if r.status is status)
    return out
