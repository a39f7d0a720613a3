"""Runtime settings: one JSON config file, overridable by CLI flags."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path

CONFIG_KEYS = (
    "corpus_dir",
    "data_dir",
    "workers",
    "em_iterations",
    "min_share",
    "cache_capacity",
    "host",
    "port",
)


@dataclass
class Settings:
    corpus_dir: Path = Path("data/sample_corpus")
    data_dir: Path = Path("var/data")
    workers: int = 1
    em_iterations: int = 5
    min_share: float = 0.05
    cache_capacity: int = 100
    host: str = "127.0.0.1"
    port: int = 8000


def load_settings(config_path: str | Path | None = None, **overrides) -> Settings:
    """Defaults, then config file values, then non-None overrides."""
    values: dict = {}
    if config_path is not None:
        doc = json.loads(Path(config_path).read_text(encoding="utf-8"))
        unknown = set(doc) - set(CONFIG_KEYS)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update(doc)
    values.update({k: v for k, v in overrides.items() if v is not None})
    settings = Settings()
    for f in fields(Settings):
        if f.name in values:
            value = values[f.name]
            if f.name in ("corpus_dir", "data_dir"):
                value = Path(value)
            setattr(settings, f.name, value)
    return settings
