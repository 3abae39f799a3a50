"""Session transcripts: a replayable, versioned JSON document.

The transcript carries everything needed to re-run the session against the
scripted mock backend and verify it bit-for-bit: the config snapshot, the
initial descriptions, every event in order (edits with their intents and
image digests, questions with their answers, undo/redo), and the full chat
dump. Field names are documented in docs/transcript-schema.md. Backend
credentials never enter transcripts (the config keeps only the env var
NAME for the API key).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from editloop.config import EngineConfig
from editloop.session import EditSession

TRANSCRIPT_VERSION = 1


def build_transcript(session: EditSession) -> dict[str, Any]:
    return {
        "version": TRANSCRIPT_VERSION,
        "session_id": session.session_id,
        "config": session.config.to_dict(),
        "image": {
            "width": session.original.width,
            "height": session.original.height,
            "digest": session.original.digest(),
        },
        "label_map_digest": session.initial_registry.label_map.digest(),
        "initial": {
            "general": session.initial_general,
            "objects": [
                [entry.index, entry.description]
                for entry in session.initial_registry.entries
            ],
        },
        "events": list(session.events),
        "chat": [entry.to_dict() for entry in session.chat],
        "cursor": session.cursor,
        "snapshot_digests": session.snapshot_digests(),
        "final_digest": session.current_image.digest(),
    }


def save_transcript(transcript: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(transcript, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )


def load_transcript(path: str | Path) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != TRANSCRIPT_VERSION:
        raise ValueError(f"unsupported transcript version: {data.get('version')}")
    return data


def config_from_transcript(transcript: dict[str, Any]) -> EngineConfig:
    return EngineConfig.from_dict(transcript["config"])
