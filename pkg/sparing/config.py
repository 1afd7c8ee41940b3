import os
from dataclasses import dataclass, replace

from sparing.errors import ConfigError

DEFAULT_EXHAUSTIVE_CAP = 26
DEFAULT_BNB_CAP = 40


@dataclass(frozen=True)
class Settings:
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
    bnb_cap: int = DEFAULT_BNB_CAP
    workers: int = 1
    log_level: str = "WARNING"
    corpus_path: str | None = None

    def with_cap(self, method: str, cap: int | None) -> "Settings":
        """Return a copy whose cap for `method` is replaced (auto replaces both)."""
        if cap is None:
            return self
        if cap < 1:
            raise ConfigError("--cap must be >= 1.")
        if method == "exhaustive":
            return replace(self, exhaustive_cap=cap)
        if method == "bnb":
            return replace(self, bnb_cap=cap)
        return replace(self, exhaustive_cap=min(cap, self.exhaustive_cap), bnb_cap=cap)


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got '{raw}'.")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}.")
    return value


def load_settings() -> Settings:
    """
    Read settings from the process environment.
    Call load_dotenv() first if a .env file should be honoured.
    """
    level = (os.getenv("SPARING_LOG_LEVEL") or "WARNING").strip().upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ConfigError(f"SPARING_LOG_LEVEL must be a logging level name, got '{level}'.")

    return Settings(
        exhaustive_cap=_int_env("SPARING_EXHAUSTIVE_CAP", DEFAULT_EXHAUSTIVE_CAP),
        bnb_cap=_int_env("SPARING_BNB_CAP", DEFAULT_BNB_CAP),
        workers=_int_env("SPARING_WORKERS", 1),
        log_level=level,
        corpus_path=(os.getenv("SPARING_CORPUS_PATH") or "").strip() or None,
    )
