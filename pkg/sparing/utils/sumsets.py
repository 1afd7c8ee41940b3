"""
Set labels (finite sets of non-negative integers) and sumset arithmetic.

A SetLabel is stored in canonical form: a strictly increasing tuple, so two
labels with the same elements are equal and hash alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from sparing.errors import LabelOverflowError

MAX_ELEMENT = 2**63 - 1


@dataclass(frozen=True, order=True)
class SetLabel:
    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if not els:
            raise ValueError("A set label must be nonempty.")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"Set label elements must be strictly increasing: {els}")
        if els[0] < 0:
            raise ValueError(f"Set label elements must be non-negative: {els}")
        if els[-1] > MAX_ELEMENT:
            raise LabelOverflowError(f"Set label element {els[-1]} exceeds 2^63-1.")

    @classmethod
    def of(cls, *elements: int) -> "SetLabel":
        return cls(tuple(sorted(set(int(x) for x in elements))))

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> "SetLabel":
        return cls.of(*elements)

    @classmethod
    def parse(cls, text: str) -> "SetLabel":
        """'0,7,9' -> SetLabel(0, 7, 9). Order and duplicates in the text are ignored."""
        parts = [p.strip() for p in (text or "").split(",")]
        if not parts or any(not p for p in parts):
            raise ValueError(f"Invalid set label '{text}'.")
        if any(not p.isdigit() for p in parts):
            raise ValueError(f"Set label elements must be non-negative integers: '{text}'.")
        return cls.of(*(int(p) for p in parts))

    @property
    def is_singleton(self) -> bool:
        return len(self.elements) == 1

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements)


def sumset(a: SetLabel, b: SetLabel) -> SetLabel:
    """A + B = {x + y : x in A, y in B}."""
    if a.max + b.max > MAX_ELEMENT:
        raise LabelOverflowError(f"Sumset of {{{a}}} and {{{b}}} exceeds 2^63-1.")
    return SetLabel(tuple(sorted({x + y for x in a for y in b})))


def sumset_of(labels: Iterable[SetLabel]) -> SetLabel:
    return reduce(sumset, labels)


def translate(a: SetLabel, t: int) -> SetLabel:
    return sumset(a, SetLabel((t,)))


def cardinality_bounds_hold(a: SetLabel, b: SetLabel) -> bool:
    size = len(sumset(a, b))
    return max(len(a), len(b)) <= size <= len(a) * len(b)


def is_weak_pair(a: SetLabel, b: SetLabel) -> bool:
    """True iff |A + B| = max(|A|, |B|)."""
    return len(sumset(a, b)) == max(len(a), len(b))
