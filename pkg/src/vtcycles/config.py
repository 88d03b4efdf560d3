"""Run configuration shared by the analysis pipeline and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "VTCYCLE_"


@dataclass(frozen=True)
class Config:
    cap_cycles: int = 100_000
    cap_group: int = 1_000_000
    time_limit: float | None = None
    aut_limit: int = 16
    workers: int = 1
    json: str | None = None
    quiet: bool = False

    def __post_init__(self):
        if self.cap_cycles < 1 or self.cap_group < 1:
            raise ValueError("caps must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "Config":
        """Defaults, then VTCYCLE_* variables, then explicit non-None overrides."""
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            if f.name in ("cap_cycles", "cap_group", "aut_limit", "workers"):
                values[f.name] = int(raw)
            elif f.name == "time_limit":
                values[f.name] = float(raw)
            elif f.name == "quiet":
                values[f.name] = raw.lower() in ("1", "true", "yes")
            else:
                values[f.name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_(self, **changes) -> "Config":
        return replace(self, **changes)
