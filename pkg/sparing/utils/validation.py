from dataclasses import dataclass

from sparing.utils.family_spec import FamilyKind, FamilySpec, Petal


@dataclass(frozen=True)
class ValidationError:
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


def petal_segment(p: Petal, k: int) -> set[int]:
    """Nucleus edges covered by a petal, as indices i of edge (i, i+1 mod k)."""
    return {(p.start + i) % k for i in range(p.shared)}


def consecutive_petals_meet(a: Petal, b: Petal, k: int) -> bool:
    return (a.start + a.shared) % k == b.start % k


def validate_family_spec(spec: FamilySpec) -> list[ValidationError]:
    kind = spec.kind
    if kind is FamilyKind.PATH:
        return _min("order", spec.order, 2, "A path needs at least 2 vertices.")
    if kind is FamilyKind.CYCLE:
        return _min("order", spec.order, 3, "A cycle needs length >= 3.")
    if kind is FamilyKind.COMPLETE:
        return _min("order", spec.order, 2, "A complete graph needs at least 2 vertices.")
    if kind is FamilyKind.CYCLE_UNION_VERTEX:
        errors = []
        if len(spec.cycles) != 2:
            errors.append(ValidationError("cycles", "Exactly two cycle lengths are required."))
        errors.extend(_cycle_lengths(spec.cycles))
        return errors
    if kind is FamilyKind.CONJOINED:
        return _validate_conjoined(spec)
    if kind is FamilyKind.ENTWINED:
        return _validate_entwined(spec)
    return _validate_floral(spec)


def _min(field: str, value: int, minimum: int, message: str) -> list[ValidationError]:
    return [] if value >= minimum else [ValidationError(field, f"{message} (got {value})")]


def _cycle_lengths(lengths: tuple[int, ...]) -> list[ValidationError]:
    return [
        ValidationError("cycles", f"Cycle {i + 1} has length {m}; all cycle lengths must be >= 3.")
        for i, m in enumerate(lengths)
        if m < 3
    ]


def _validate_conjoined(spec: FamilySpec) -> list[ValidationError]:
    errors: list[ValidationError] = []
    p = spec.shared_path
    if len(spec.cycles) < 2:
        errors.append(ValidationError("cycles", "A conjoined graph needs at least 2 cycles."))
    errors.extend(_cycle_lengths(spec.cycles))
    if p < 1:
        errors.append(ValidationError("p", f"The common path needs length >= 1 (got {p})."))
    for i, m in enumerate(spec.cycles):
        if m <= p:
            errors.append(ValidationError("p", f"The common path ({p}) must be shorter than cycle {i + 1} ({m})."))
    if sum(1 for m in spec.cycles if m - p == 1) > 1:
        errors.append(ValidationError("cycles", "Two cycles would close with the same chord; lengths m = p+1 may appear once."))
    return errors


def _validate_entwined(spec: FamilySpec) -> list[ValidationError]:
    errors: list[ValidationError] = []
    cycles, shared = spec.cycles, spec.shared
    if len(cycles) < 2:
        errors.append(ValidationError("cycles", "An entwined graph needs at least 2 cycles."))
    errors.extend(_cycle_lengths(cycles))
    if len(shared) != max(len(cycles) - 1, 0):
        errors.append(ValidationError("shared", f"Expected {len(cycles) - 1} shared path lengths, got {len(shared)}."))
        return errors

    for i, p in enumerate(shared):
        if p < 1:
            errors.append(ValidationError("shared", f"Shared path {i + 1} needs length >= 1 (got {p})."))
        if p >= cycles[i] or p >= cycles[i + 1]:
            errors.append(ValidationError(
                "shared",
                f"Shared path {i + 1} ({p}) must be shorter than cycles {i + 1} and {i + 2}.",
            ))
    for i in range(1, len(cycles) - 1):
        if shared[i - 1] + shared[i] > cycles[i] - 1:
            errors.append(ValidationError(
                "shared",
                f"Cycle {i + 1} ({cycles[i]}) cannot hold shared paths {shared[i - 1]} and {shared[i]} "
                "and keep an edge of its own.",
            ))
    return errors


def _validate_floral(spec: FamilySpec) -> list[ValidationError]:
    errors: list[ValidationError] = []
    k = spec.nucleus
    if k < 3:
        return [ValidationError("k", f"The nucleus needs length >= 3 (got {k}).")]
    if not spec.petals:
        errors.append(ValidationError("petals", "A floral graph needs at least one petal."))

    covered: dict[int, int] = {}
    for i, p in enumerate(spec.petals, start=1):
        if not (0 <= p.start < k):
            errors.append(ValidationError("petals", f"Petal {i} starts at {p.start}, outside the nucleus 0..{k - 1}."))
            continue
        if not (1 <= p.shared < k):
            errors.append(ValidationError("petals", f"Petal {i} shares {p.shared} nucleus edges; need 1..{k - 1}."))
            continue
        if p.length < 3 or p.length <= p.shared:
            errors.append(ValidationError(
                "petals",
                f"Petal {i} has length {p.length}; it must be >= 3 and longer than its shared path ({p.shared}).",
            ))
        for edge in sorted(petal_segment(p, k)):
            if edge in covered:
                errors.append(ValidationError(
                    "petals",
                    f"Petals {covered[edge]} and {i} both use nucleus edge ({edge},{(edge + 1) % k}).",
                ))
            else:
                covered[edge] = i

    if spec.attached and not errors:
        meets = [
            consecutive_petals_meet(a, b, k) and a.length >= a.shared + 2 and b.length >= b.shared + 2
            for a, b in zip(spec.petals, spec.petals[1:])
        ]
        if not any(meets):
            errors.append(ValidationError(
                "mode",
                "Attached petals must meet: some petal must start where the previous one ends.",
            ))
    return errors
