"""Engine configuration.

A single immutable snapshot travels with each session so that replays see
exactly the parameters the original run used. Values mirror the documented
defaults: brightness step 40, pre-inpaint dilation 5 px, blur sigma
max(3, longest bbox side / 16) with kernel radius ceil(3 sigma).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any


@dataclass(frozen=True)
class BackendConfig:
    """How to reach the vision-language backend."""

    type: str = "mock"              # "mock" | "remote"
    script_path: str | None = None  # mock: scripted responses
    endpoint: str | None = None     # remote: chat-completions URL
    model: str | None = None
    api_key_env: str = "EDITLOOP_API_KEY"
    timeout_s: float = 30.0
    retries: int = 2
    temperature: float = 0.0


@dataclass(frozen=True)
class InpaintConfig:
    strategy: str = "baseline"      # "baseline" | "remote"
    endpoint: str | None = None
    dilation_radius: int = 5


@dataclass(frozen=True)
class TextConfig:
    size_frac: float = 0.05         # initial glyph size, fraction of image height
    min_size_frac: float = 0.02     # shrink-to-fit floor
    margin_frac: float = 0.02       # anchor-cell inset, fraction of min dimension
    outline_px: int = 1


@dataclass(frozen=True)
class EngineConfig:
    brightness_step: int = 40
    blur_sigma_min: float = 3.0
    blur_sigma_divisor: float = 16.0
    inpaint: InpaintConfig = field(default_factory=InpaintConfig)
    text: TextConfig = field(default_factory=TextConfig)
    routing: str = "backend"        # "backend" (with rule fallback) | "rules"
    max_edits: int = 50
    prompt_queue_depth: int = 4
    backend: BackendConfig = field(default_factory=BackendConfig)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EngineConfig":
        data = dict(data)
        if "inpaint" in data:
            data["inpaint"] = InpaintConfig(**data["inpaint"])
        if "text" in data:
            data["text"] = TextConfig(**data["text"])
        if "backend" in data:
            data["backend"] = BackendConfig(**data["backend"])
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> "EngineConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def with_overrides(self, **kwargs: Any) -> "EngineConfig":
        return replace(self, **kwargs)
