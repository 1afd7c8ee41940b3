from __future__ import annotations


class SparingError(ValueError):
    """Base class for every error raised by the toolkit."""


class GraphFormatError(SparingError):
    def __init__(self, message: str, *, line: int | None = None, kind: str = "syntax"):
        self.line = line
        self.kind = kind
        prefix = f"[Line {line}] " if line is not None else ""
        super().__init__(prefix + message)


class LabelingFormatError(SparingError):
    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        prefix = f"[Line {line}] " if line is not None else ""
        super().__init__(prefix + message)


class FamilySpecError(SparingError):
    pass


class LabelingError(SparingError):
    pass


class LabelOverflowError(SparingError):
    pass


class CapExceededError(SparingError):
    pass


class NotEulerianError(SparingError):
    pass


class UnionFormulaError(SparingError):
    pass


class ConfigError(SparingError):
    pass
